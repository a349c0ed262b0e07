#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mahlerlab {

/// An elliptic curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 together
/// with its conductor and the sign of the functional equation.
struct CurveSpec {
    long long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
    long long conductor = 0;
    int root_number = +1;
    std::string label;

    /// Discriminant of the Weierstrass model (must be nonzero).
    long long discriminant() const;

    /// Throws structural_error on an inconsistent record.
    void validate() const;
};

/// Loads a curve table from a JSON file: an array of records
/// {label, a1, a2, a3, a4, a6, conductor, root_number}.  Unknown keys are
/// rejected, integer fields must be exact.
std::vector<CurveSpec> load_curves(const std::string& path);

/// Resolution order: MAHLERLAB_CURVES env var, then ./curves.json, then
/// the build-time default path.
std::string default_curves_path();

CurveSpec curve_by_label(const std::vector<CurveSpec>& curves, const std::string& label);

/// a_p = p + 1 - #E(F_p) for good p, by point counting with a quadratic
/// residue table.
long long ap_good(const CurveSpec& curve, long long p);

/// a_p = p - #E_ns(F_p) for bad p; lands in {-1, 0, 1} or throws
/// structural_error (a value outside that set signals a wrong model or
/// conductor).
long long ap_bad(const CurveSpec& curve, long long p);

/// Dirichlet coefficients a_1..a_n_max: point counts at primes, the Hecke
/// recursion at prime powers, multiplicative elsewhere.
std::vector<long long> an_coeffs(const CurveSpec& curve, long long n_max);

/// Upper incomplete gamma for the two orders needed here:
/// Gamma(2,x) = (1+x) e^{-x}, Gamma(0,x) = E_1(x).
double inc_gamma_upper(int s, double x);

/// L(E,2) by the approximate functional equation
///   Lambda(2) = sum a_n [ N (2 pi n)^{-2} Gamma(2, 2 pi n c / sqrt(N))
///                         + eps Gamma(0, 2 pi n / (c sqrt(N))) ],
///   L(E,2)    = Lambda(2) (2 pi)^2 / N,
/// derived from Lambda(s) = N^{s/2} (2 pi)^{-s} Gamma(s) L(E,s) and
/// Lambda(s) = eps Lambda(2-s).  The result must not depend on the cutoff
/// c; a shifted re-evaluation guards against a wrong eps.
double L_E_2(const CurveSpec& curve, double cutoff = 1.0);

/// L'(E,0) = N L(E,2) / (4 pi^2); from Lambda(0) = eps Lambda(2), the pole
/// of Gamma at 0 and L(E,0) = 0.  Requires root number +1.
double Lprime_E_0(const CurveSpec& curve);

/// The odd real primitive character of conductor 3 or 4.
struct DirichletChar {
    int discriminant; // -3 or -4

    explicit DirichletChar(int disc);
    int conductor() const { return -discriminant; }
    int value(long long n) const;
};

/// L(chi, s) for s > 1: direct sum with an Euler-Maclaurin tail on each
/// residue class.
double dirichlet_L(const DirichletChar& chi, double s);

/// L'(chi,-1) = f^{3/2} L(chi,2) / (4 pi) by the functional equation.
double Lprime_chi_minus1(const DirichletChar& chi);

/// Hurwitz zeta by Euler-Maclaurin, a in (0,1], s != 1; absolute error
/// around 1e-12 for s in [-2, 3].
double hurwitz_zeta(double s, double a);

/// L(chi, s) through Hurwitz zeta: f^{-s} sum_r chi(r) zeta(s, r/f).
/// Valid for all s != 1; the oracle for L'(chi,-1).
double dirichlet_L_hurwitz(const DirichletChar& chi, double s);

} // namespace mahlerlab
