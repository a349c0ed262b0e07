#include "mahlerlab/polyroots.hpp"

#include <cmath>
#include <stdexcept>

namespace mahlerlab {

namespace {

// p(z) and p'(z) by Horner.
void eval_poly(const std::vector<cdouble>& c, cdouble z, cdouble& p, cdouble& dp) {
    const int d = static_cast<int>(c.size()) - 1;
    p = c[static_cast<std::size_t>(d)];
    dp = 0.0;
    for (int j = d - 1; j >= 0; --j) {
        dp = dp * z + p;
        p = p * z + c[static_cast<std::size_t>(j)];
    }
}

} // namespace

std::vector<cdouble> polynomial_roots(const std::vector<cdouble>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("polynomial_roots: empty coefficients");
    const int d = static_cast<int>(coeffs.size()) - 1;
    if (d == 0) return {};
    if (std::abs(coeffs.back()) == 0.0)
        throw std::invalid_argument("polynomial_roots: zero leading coefficient");
    if (d == 1) return {-coeffs[0] / coeffs[1]};

    // Cauchy bound for the root radius.
    double radius = 0.0;
    for (int j = 0; j < d; ++j)
        radius = std::max(radius, std::abs(coeffs[static_cast<std::size_t>(j)] / coeffs.back()));
    radius = 1.0 + radius;

    std::vector<cdouble> z(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const double ang = 2.0 * M_PI * i / d + 0.4;
        z[static_cast<std::size_t>(i)] = radius * cdouble(std::cos(ang), std::sin(ang));
    }

    for (int iter = 0; iter < 120; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < d; ++i) {
            cdouble p, dp;
            eval_poly(coeffs, z[static_cast<std::size_t>(i)], p, dp);
            if (std::abs(p) == 0.0) continue;
            cdouble newton = (std::abs(dp) == 0.0) ? cdouble(1e-12, 1e-12) : p / dp;
            cdouble sum = 0.0;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                cdouble diff = z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
                if (std::abs(diff) < 1e-300) diff = cdouble(1e-300, 0.0);
                sum += 1.0 / diff;
            }
            const cdouble denom = 1.0 - newton * sum;
            cdouble step = (std::abs(denom) < 1e-300) ? newton : newton / denom;
            z[static_cast<std::size_t>(i)] -= step;
            max_step = std::max(max_step,
                                std::abs(step) / (1.0 + std::abs(z[static_cast<std::size_t>(i)])));
        }
        if (max_step < 1e-15) break;
    }
    return z;
}

} // namespace mahlerlab
