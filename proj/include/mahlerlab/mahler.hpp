#pragma once

#include "mahlerlab/bivariate.hpp"
#include "mahlerlab/families.hpp"
#include "mahlerlab/quadrature.hpp"

namespace mahlerlab {

/// All degree_y roots in y of P(x, .) at a fixed x, with multiplicity.
/// Throws leading_coefficient_vanishes when the top y-coefficient is zero
/// at x; callers that integrate across such points must work with the
/// deflated limit instead (see JensenIntegrand).
std::vector<cdouble> roots_in_y(const BivariatePolynomial& p, cdouble x);

/// The inner Mahler integral at x = e^{i theta}:
///   log|lead(x)| + sum_i log+ |y_i(x)|.
/// Even in theta for real coefficients.  Near circle zeros of the leading
/// coefficient the escaping root is absorbed by deflation, which is the
/// continuous limit of the sum.
struct JensenIntegrand {
    BivariatePolynomial source;

    explicit JensenIntegrand(BivariatePolynomial p) : source(std::move(p)) {}
    double operator()(double theta) const;
};

/// Quadrature breakpoints for the Jensen integrand of p on [0, pi]:
/// circle zeros of the leading y-coefficient plus the points where some
/// root modulus crosses 1 (sign changes of prod_i (|y_i|-1)).
Breakpoints jensen_breakpoints(const BivariatePolynomial& p, int n_scan = 4096);

/// m(p) via the Jensen reduction: (1/pi) int_0^pi JensenIntegrand d theta.
QuadratureResult mahler_jensen(const BivariatePolynomial& p, double tol = kDefaultQuadTol);

/// Independent oracle: the average of log|p| over an n x n tensor grid on
/// the torus, offset by half a cell.  No error estimate; convergence is
/// checked by doubling n.
double mahler_2d_grid(const BivariatePolynomial& p, int n);

/// Closed-form integrand for the reduced Bosman family:
///   log((|B_k| + sqrt(Delta_k))/2) where Delta_k > 0, else 0.
/// Equals log|Y_1(e^{i theta})| for the root of larger modulus.
double q_integrand_closed(double k, double theta);

/// m(Q_k) through the closed-form integrand, with breakpoints at the sign
/// changes of Delta_k on [0, pi].  Fast path for the Bosman family; the
/// generic mahler_jensen on bosman_Q(k) serves as its oracle.
QuadratureResult mahler_bosman_closed(double k, double tol = kDefaultQuadTol);

/// Measure of a family member: closed form for BosmanQ, Jensen otherwise.
QuadratureResult measure_family(const FamilyPoint& fp, double tol = kDefaultQuadTol);

} // namespace mahlerlab
