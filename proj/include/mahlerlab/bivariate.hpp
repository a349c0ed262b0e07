#pragma once

#include <complex>
#include <vector>

namespace mahlerlab {

using cdouble = std::complex<double>;

/// A monomial coefficient a * x^i * y^j with i, j >= 0.
struct Term {
    int i = 0;
    int j = 0;
    double coeff = 0.0;
};

/// Sparse bivariate polynomial P(x,y) = sum a_{ij} x^i y^j.
///
/// Zero coefficients are never stored and degree_y always matches the
/// largest j with a nonzero coefficient.
class BivariatePolynomial {
public:
    BivariatePolynomial() = default;
    explicit BivariatePolynomial(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    int degree_y() const { return degree_y_; }
    int degree_x() const { return degree_x_; }

    /// Coefficient of x^i y^j (0 if absent).
    double coefficient(int i, int j) const;

    /// P(x,y) by compensated summation over the stored terms.
    cdouble eval(cdouble x, cdouble y) const;

    /// Coefficients of y^0..y^degree_y as polynomials in x evaluated at x.
    std::vector<cdouble> y_coefficients(cdouble x) const;

    bool operator==(const BivariatePolynomial& other) const;

private:
    std::vector<Term> terms_;     // sorted by (j, i)
    int degree_y_ = 0;
    int degree_x_ = 0;
};

} // namespace mahlerlab
