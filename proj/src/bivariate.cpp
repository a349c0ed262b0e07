#include "mahlerlab/bivariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace mahlerlab {

BivariatePolynomial::BivariatePolynomial(std::vector<Term> terms) {
    for (const Term& t : terms) {
        if (t.i < 0 || t.j < 0)
            throw std::invalid_argument("BivariatePolynomial: negative exponent");
        if (t.coeff == 0.0) continue;
        terms_.push_back(t);
    }
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    });
    // merge duplicates
    std::vector<Term> merged;
    for (const Term& t : terms_) {
        if (!merged.empty() && merged.back().i == t.i && merged.back().j == t.j) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(t);
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return t.coeff == 0.0; }),
                 merged.end());
    terms_ = std::move(merged);
    degree_y_ = 0;
    degree_x_ = 0;
    for (const Term& t : terms_) {
        degree_y_ = std::max(degree_y_, t.j);
        degree_x_ = std::max(degree_x_, t.i);
    }
}

double BivariatePolynomial::coefficient(int i, int j) const {
    for (const Term& t : terms_)
        if (t.i == i && t.j == j) return t.coeff;
    return 0.0;
}

cdouble BivariatePolynomial::eval(cdouble x, cdouble y) const {
    // Kahan summation over terms; powers built incrementally per term group.
    cdouble sum = 0.0, comp = 0.0;
    for (const Term& t : terms_) {
        cdouble v = t.coeff;
        cdouble xp = 1.0;
        for (int n = 0; n < t.i; ++n) xp *= x;
        cdouble yp = 1.0;
        for (int n = 0; n < t.j; ++n) yp *= y;
        v *= xp * yp;
        const cdouble delta = v - comp;
        const cdouble s = sum + delta;
        comp = (s - sum) - delta;
        sum = s;
    }
    return sum;
}

std::vector<cdouble> BivariatePolynomial::y_coefficients(cdouble x) const {
    std::vector<cdouble> c(static_cast<std::size_t>(degree_y_) + 1, cdouble(0.0));
    for (const Term& t : terms_) {
        cdouble xp = 1.0;
        for (int n = 0; n < t.i; ++n) xp *= x;
        c[static_cast<std::size_t>(t.j)] += t.coeff * xp;
    }
    return c;
}

bool BivariatePolynomial::operator==(const BivariatePolynomial& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t n = 0; n < terms_.size(); ++n) {
        if (terms_[n].i != other.terms_[n].i || terms_[n].j != other.terms_[n].j ||
            terms_[n].coeff != other.terms_[n].coeff)
            return false;
    }
    return true;
}

} // namespace mahlerlab
