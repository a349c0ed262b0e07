#pragma once

#include <complex>
#include <vector>

namespace mahlerlab {

using cdouble = std::complex<double>;

/// All complex roots (with multiplicity) of
///   c[0] + c[1] z + ... + c[d] z^d,   c[d] != 0,
/// by Aberth-Ehrlich simultaneous iteration.  Intended for the small
/// degrees (<= 8) that arise here; throws std::invalid_argument on a zero
/// leading coefficient.
std::vector<cdouble> polynomial_roots(const std::vector<cdouble>& coeffs);

} // namespace mahlerlab
