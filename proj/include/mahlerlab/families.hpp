#pragma once

#include <string>

#include "mahlerlab/bivariate.hpp"

namespace mahlerlab {

/// The five polynomial families under study.
enum class Family { BoydP, BosmanQ, T3P, T3Q, T3R };

Family family_from_name(const std::string& name);
std::string family_name(Family f);

/// A named member of a family: the family tag, the real parameter k, and
/// whether (family, k) is one of the known degenerate members (lower genus
/// or reducible).  Degeneracy is tabulated data and only annotates output.
struct FamilyPoint {
    Family family;
    double k;
    bool degenerate;

    FamilyPoint(Family f, double k_);
};

/// Boyd's family: (x+1)y^2 + (x^2+kx+1)y + (x^2+x).
BivariatePolynomial boyd_P(double k);

/// Bosman's family: Y^2 + (X^4+kX^3+2kX^2+kX+1)Y + X^4.
BivariatePolynomial bosman_Q(double k);

/// X^2 * (Y^2 + B_k(X) Y + 1): the reduced Bosman polynomial cleared of
/// negative powers of X.  Same Mahler measure and the same y-roots as the
/// reduced form, since the prefactor is a monomial.
BivariatePolynomial bosman_Q_tilde(double k);

/// (x^2+x+1)y^2 + kx(x+1)y + x(x^2+x+1).
BivariatePolynomial thm3_P(double k);

/// (x^2+x+1)y^2 + (x^4+kx^3+(2k-4)x^2+kx+1)y + x^2(x^2+x+1).
BivariatePolynomial thm3_Q(double k);

/// y^3 - y + x^3 - x + kxy.
BivariatePolynomial thm3_R(double k);

BivariatePolynomial family_polynomial(Family f, double k);

/// B_k(e^{i theta}) = (2cos t)^2 + k(2cos t) + 2k - 2, real on the circle.
double B_of(double k, double theta);

/// Delta_k = B_k^2 - 4, computed from the expanded form.
double delta_of(double k, double theta);

/// Delta_k via its factorisation
/// ((2cos t)^2 + k(2cos t) + 2k)(2cos t + 2)(2cos t + k - 2).
double delta_of_factored(double k, double theta);

/// B_k(X) for complex X (coincides with B_of on the unit circle).
cdouble B_complex(double k, cdouble X);

/// The reduced Bosman polynomial Y^2 + B_k(X) Y + 1 at complex arguments.
cdouble q_tilde_eval(double k, cdouble X, cdouble Y);

} // namespace mahlerlab
