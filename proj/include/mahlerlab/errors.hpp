#pragma once

#include <stdexcept>
#include <string>

namespace mahlerlab {

/// Argument outside the mathematical domain of an operation.
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// An iterative scheme ran out of budget before reaching its tolerance.
struct non_convergence : std::runtime_error {
    explicit non_convergence(const std::string& what) : std::runtime_error(what) {}
};

/// Input data is internally inconsistent (wrong curve model, bad config file).
struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

/// The leading y-coefficient vanished where a root computation was requested.
struct leading_coefficient_vanishes : std::runtime_error {
    explicit leading_coefficient_vanishes(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mahlerlab
