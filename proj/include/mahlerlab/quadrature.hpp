#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace mahlerlab {

/// Outcome of a one-dimensional integration.
struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
    bool converged = false;
};

/// Sorted interior points where the integrand is allowed to be singular
/// (square-root or logarithmic behaviour) or merely non-smooth.
struct Breakpoints {
    std::vector<double> points;

    Breakpoints() = default;
    Breakpoints(std::initializer_list<double> pts) : points(pts) {}
    explicit Breakpoints(std::vector<double> pts) : points(std::move(pts)) {}
};

using RealFunction = std::function<double(double)>;

constexpr double kDefaultQuadTol = 1e-10;
constexpr std::int64_t kQuadBudget = 2'000'000;

/// Adaptive integration of f over [a,b].
///
/// The interval is pre-split at the breakpoints; each sub-interval is run
/// through an endpoint-flattening change of variable (v = alpha +
/// (beta-alpha) sin^2(pi u / 2)), which turns inverse-square-root endpoint
/// singularities and sqrt-type kinks at the split points into analytic
/// integrands.  The transformed panels are refined by bisection with a
/// nested 15/7 Gauss-Kronrod rule, worst panel first, until the summed
/// error estimate drops below tol or the evaluation budget runs out.
///
/// A NaN or infinity from f aborts the computation: the result carries
/// converged = false and a NaN value rather than a silently wrong number.
QuadratureResult integrate_adaptive(const RealFunction& f, double a, double b,
                                    double tol = kDefaultQuadTol,
                                    const Breakpoints& breakpoints = {},
                                    std::int64_t budget = kQuadBudget);

/// Integral of f over the half line (-inf, c], mapped to (0,1] via
/// v = c - (1-u)/u.  Suitable for integrands decaying like |v|^{-3/2}.
QuadratureResult integrate_tail(const RealFunction& f, double c,
                                double tol = kDefaultQuadTol,
                                std::int64_t budget = kQuadBudget);

/// Scans n_scan+1 equispaced samples of f on [a,b] and bisects every
/// sign-change bracket down to width 1e-13.  Deterministic; tangential
/// (double) zeros are missed by design.  Brackets whose sample values are
/// both below 1e-10 in magnitude are treated as roundoff plateaus and
/// skipped.
Breakpoints find_sign_changes(const RealFunction& f, double a, double b,
                              int n_scan = 4096);

/// sqrt with a roundoff guard: s in [-1e-13, 0) evaluates as 0, more
/// negative arguments yield NaN.
inline double clamped_sqrt(double s) {
    if (s >= 0.0) return std::sqrt(s);
    if (s >= -1e-13) return 0.0;
    return std::numeric_limits<double>::quiet_NaN();
}

/// Richardson-extrapolated central difference, f'(x) from steps h and h/2.
double richardson_derivative(const RealFunction& f, double x, double h);

} // namespace mahlerlab
