#include "mahlerlab/families.hpp"

#include <cmath>
#include <stdexcept>

namespace mahlerlab {

Family family_from_name(const std::string& name) {
    if (name == "boydP") return Family::BoydP;
    if (name == "bosmanQ") return Family::BosmanQ;
    if (name == "t3P") return Family::T3P;
    if (name == "t3Q") return Family::T3Q;
    if (name == "t3R") return Family::T3R;
    throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::BoydP: return "boydP";
        case Family::BosmanQ: return "bosmanQ";
        case Family::T3P: return "t3P";
        case Family::T3Q: return "t3Q";
        case Family::T3R: return "t3R";
    }
    return "?";
}

FamilyPoint::FamilyPoint(Family f, double k_) : family(f), k(k_), degenerate(false) {
    // Known degenerate members: genus drop or reducibility.
    auto is = [&](double v) { return k_ == v; };
    if (f == Family::BosmanQ) degenerate = is(-1) || is(0) || is(4) || is(8);
    if (f == Family::T3R) degenerate = is(0) || is(3) || is(-3);
}

BivariatePolynomial boyd_P(double k) {
    return BivariatePolynomial({{1, 2, 1}, {0, 2, 1},
                                {2, 1, 1}, {1, 1, k}, {0, 1, 1},
                                {2, 0, 1}, {1, 0, 1}});
}

BivariatePolynomial bosman_Q(double k) {
    return BivariatePolynomial({{0, 2, 1},
                                {4, 1, 1}, {3, 1, k}, {2, 1, 2 * k}, {1, 1, k}, {0, 1, 1},
                                {4, 0, 1}});
}

BivariatePolynomial bosman_Q_tilde(double k) {
    return BivariatePolynomial({{2, 2, 1},
                                {4, 1, 1}, {3, 1, k}, {2, 1, 2 * k}, {1, 1, k}, {0, 1, 1},
                                {2, 0, 1}});
}

BivariatePolynomial thm3_P(double k) {
    return BivariatePolynomial({{2, 2, 1}, {1, 2, 1}, {0, 2, 1},
                                {2, 1, k}, {1, 1, k},
                                {3, 0, 1}, {2, 0, 1}, {1, 0, 1}});
}

BivariatePolynomial thm3_Q(double k) {
    return BivariatePolynomial({{2, 2, 1}, {1, 2, 1}, {0, 2, 1},
                                {4, 1, 1}, {3, 1, k}, {2, 1, 2 * k - 4}, {1, 1, k}, {0, 1, 1},
                                {4, 0, 1}, {3, 0, 1}, {2, 0, 1}});
}

BivariatePolynomial thm3_R(double k) {
    return BivariatePolynomial({{0, 3, 1}, {0, 1, -1}, {3, 0, 1}, {1, 0, -1}, {1, 1, k}});
}

BivariatePolynomial family_polynomial(Family f, double k) {
    switch (f) {
        case Family::BoydP: return boyd_P(k);
        case Family::BosmanQ: return bosman_Q(k);
        case Family::T3P: return thm3_P(k);
        case Family::T3Q: return thm3_Q(k);
        case Family::T3R: return thm3_R(k);
    }
    throw std::invalid_argument("family_polynomial: bad family");
}

double B_of(double k, double theta) {
    const double u = 2.0 * std::cos(theta);
    return u * u + k * u + 2.0 * k - 2.0;
}

double delta_of(double k, double theta) {
    const double b = B_of(k, theta);
    return b * b - 4.0;
}

double delta_of_factored(double k, double theta) {
    const double u = 2.0 * std::cos(theta);
    return (u * u + k * u + 2.0 * k) * (u + 2.0) * (u + k - 2.0);
}

cdouble B_complex(double k, cdouble X) {
    const cdouble u = X + 1.0 / X;
    return u * u + k * u + 2.0 * k - 2.0;
}

cdouble q_tilde_eval(double k, cdouble X, cdouble Y) {
    return Y * Y + B_complex(k, X) * Y + 1.0;
}

} // namespace mahlerlab
