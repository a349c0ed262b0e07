#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mahlerlab/quadrature.hpp"

namespace mahlerlab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact constant-term coefficients a_n = sum_j C(n,j)^2 C(2j,j).
/// a_0 = 1, all entries positive, computed in exact integer arithmetic.
class CTSequence {
public:
    explicit CTSequence(int n_max);
    const BigInt& at(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    int size() const { return static_cast<int>(coeffs_.size()); }

private:
    std::vector<BigInt> coeffs_;
};

/// a_n = sum_{j=0}^n C(n,j)^2 C(2j,j), exactly.
BigInt ct_coeff(int n);

/// Verifies, in exact integer arithmetic, the three-term recurrence
///   (n+1)^2 a_{n+1} = (10n^2+10n+3) a_n - 9 n^2 a_{n-1}
/// obtained by substituting f = sum a_n z^n into
///   z(z-1)(9z-1) f'' + (27z^2-20z+1) f' + 3(3z-1) f = 0
/// and matching powers of z.  True iff every residual vanishes for n <= n_max.
bool pf_recurrence_check(int n_max);

/// f(z) = sum a_n z^n inside |z| < 1/9, via the recurrence above in doubles.
/// Terminates when the next term falls below 1e-17 of the partial sum.
double f_series(double z);

/// Analytic continuation of f for z < 0:
///   f(z) = 1/(1-3z) 2F1(1/3,2/3;1; 27 z^2 (1-z) / (1-3z)^3).
double f_continuation_neg(double z);

/// Analytic continuation of f for 0 < z < 1/9:
///   f(z) = 1/(1+3z) 2F1(1/3,2/3;1; 27 z (1-z)^2 / (1+3z)^3).
double f_continuation_pos(double z);

/// 2F1(1/3, 2/3; 1; w) for real w < 1.  Direct series for |w| <= 0.95;
/// for 0.95 < w < 1 the argument is inverted through Ramanujan's cubic
/// transformation onto the AGM form; for w < -0.95 a Pfaff transformation
/// maps the argument back into the series range.
double hyp2f1_13_23(double w);

/// 2F1(1/2, 1/2; 1; m) = (2/pi) K(sqrt(m)) by the arithmetic-geometric
/// mean, m in [0, 1).
double ellipK_agm(double m);

/// dg/dk for g(k) = m(P_{2-k}):
///  - k < -1: Ramanujan/AGM route (equivalent to the 2F1 form with
///    argument 27k/(k-2)^3, which tends to 1 as k -> -1);
///  - 0 < k < 8: (1/2pi) int_0^1 dt / sqrt(t(1-t)(k^2 t^2 + (4-k)k t + 4));
///  - k > 8: 1/(k+4) 2F1(1/3,2/3;1; 27k^2/(k+4)^3) by raw series while the
///    argument is <= 0.95, otherwise domain_error.
double dg_dk(double k);

/// dg/dk at k = -2/(p(1+p)) for 0 < p < 1, as the displayed integral
///   -(1/2pi) int_0^1 p(1+p) dt / sqrt(t(1-t)(1+2p-p^3(2+p)t)).
double dg_dk_lemma4(double p);

/// Closed AGM evaluation of the same quantity:
///   -(p(1+p)) / (2 sqrt(1+2p)) * 2F1(1/2,1/2;1; p^3(2+p)/(1+2p)).
double dg_dk_lemma4_agm(double p);

/// d(gtilde)/dk for gtilde(k) = m(Q_k), valid for k < -1 or k > 0:
///   sign(k)/pi * Re int_{-inf}^{k(3-k)} dv / sqrt(-(v+4)(v^2+k(k-4)v+4k^2)),
/// integrating over the sub-intervals where the radicand is positive.
double dgt_dk(double k);

/// The same derivative in the t-parameterisation
///   sign(k)/pi * Re int_{-1}^{1} dt / sqrt((1-t)(2t^2+kt+k)(2t+k-2)),
/// used as a cross-check of the v-form.
double dgt_dk_tform(double k);

/// dg/dk for 0 < k < 8 in the v-variable:
///   (1/2pi) int_{-inf}^{-4} dv / sqrt(-(v+4)(v^2+k(k-4)v+4k^2)).
double dg_dk_I1(double k);

/// Extension of the same integral to k > 8, where the radicand changes
/// sign below -4 and only the positive part contributes.
double dg_dk_I1_re(double k);

} // namespace mahlerlab
