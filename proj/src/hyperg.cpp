#include "mahlerlab/hyperg.hpp"

#include <algorithm>
#include <cmath>

#include "mahlerlab/errors.hpp"

namespace mahlerlab {

namespace {

constexpr double kSeriesRelTol = 1e-17;
constexpr int kSeriesCap = 100000;

// Generic Gauss series sum_m (a)_m (b)_m / ((c)_m m!) w^m, |w| < 1.
double hyp2f1_series(double a, double b, double c, double w) {
    double term = 1.0, sum = 1.0, comp = 0.0;
    for (int m = 0; m < kSeriesCap; ++m) {
        term *= (a + m) * (b + m) / ((c + m) * (1.0 + m)) * w;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) < kSeriesRelTol * std::abs(sum)) return sum;
    }
    throw non_convergence("hyp2f1_series: term cap reached");
}

// Positive-part reciprocal square root: 0 where the radicand is <= 0.
inline double inv_sqrt_pos(double r) { return r > 0.0 ? 1.0 / std::sqrt(r) : 0.0; }

// Stable real roots of a x^2 + b x + c (a != 0); returns count 0 or 2
// (a double root is reported twice).
int quadratic_roots(double a, double b, double c, double& r1, double& r2) {
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return 0;
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
    if (q != 0.0) {
        r1 = q / a;
        r2 = c / q;
    } else {
        r1 = r2 = 0.0;
    }
    if (r1 > r2) std::swap(r1, r2);
    return 2;
}

// One Newton polish of a root of the monic-ish quadratic v^2 + B v + C.
double polish_quadratic(double v, double B, double C) {
    for (int it = 0; it < 2; ++it) {
        const double f = (v + B) * v + C;
        const double df = 2.0 * v + B;
        if (df == 0.0) break;
        v -= f / df;
    }
    return v;
}

// Re int over [lo, hi] of 1/sqrt(radicand), radicand positive in the
// interior and vanishing like a simple zero at either end.  Assumes the
// interval has already been classified as a positive segment.
double segment_integral(const RealFunction& radicand, double lo, double hi, double tol) {
    auto f = [&](double v) { return inv_sqrt_pos(radicand(v)); };
    QuadratureResult q = integrate_adaptive(f, lo, hi, tol);
    if (!q.converged && !(q.error_estimate < 1e-8))
        throw non_convergence("segment_integral: quadrature failed");
    return q.value;
}

// sum of integrals of 1/sqrt(radicand) over the positive sub-intervals of
// (-inf, c], with `bounds` the candidate sign-change locations below c.
double positive_part_integral(const RealFunction& radicand, std::vector<double> bounds,
                              double c, double tol) {
    bounds.erase(std::remove_if(bounds.begin(), bounds.end(),
                                [&](double v) { return !(v < c - 1e-12); }),
                 bounds.end());
    bounds.push_back(c);
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end(),
                             [](double u, double v) { return std::abs(u - v) <= 1e-11; }),
                 bounds.end());

    double total = 0.0;

    // Semi-infinite part: the radicand of the cubics used here grows like
    // -v^3, so (-inf, bounds[0]) is always a positive segment.
    auto tail_f = [&](double v) { return inv_sqrt_pos(radicand(v)); };
    QuadratureResult tail = integrate_tail(tail_f, bounds.front(), tol);
    if (!tail.converged && !(tail.error_estimate < 1e-8))
        throw non_convergence("positive_part_integral: tail quadrature failed");
    total += tail.value;

    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        const double lo = bounds[i], hi = bounds[i + 1];
        const double mid = 0.5 * (lo + hi);
        if (radicand(mid) > 0.0) total += segment_integral(radicand, lo, hi, tol);
    }
    return total;
}

constexpr double kDerivTol = 1e-12;

} // namespace

CTSequence::CTSequence(int n_max) {
    coeffs_.reserve(static_cast<std::size_t>(n_max) + 1);
    // Per n: C(n,j) built by the ratio recurrence, C(2j,j) likewise.
    for (int n = 0; n <= n_max; ++n) {
        BigInt sum = 0;
        BigInt binom = 1;   // C(n,j)
        BigInt central = 1; // C(2j,j)
        for (int j = 0; j <= n; ++j) {
            sum += binom * binom * central;
            if (j < n) {
                binom = binom * (n - j) / (j + 1);
                central = central * (2 * (2 * j + 1)) / (j + 1);
            }
        }
        coeffs_.push_back(sum);
    }
}

BigInt ct_coeff(int n) {
    if (n < 0) throw domain_error("ct_coeff: n >= 0");
    BigInt sum = 0;
    BigInt binom = 1, central = 1;
    for (int j = 0; j <= n; ++j) {
        sum += binom * binom * central;
        if (j < n) {
            binom = binom * (n - j) / (j + 1);
            central = central * (2 * (2 * j + 1)) / (j + 1);
        }
    }
    return sum;
}

bool pf_recurrence_check(int n_max) {
    if (n_max < 2) throw domain_error("pf_recurrence_check: n_max >= 2");
    CTSequence seq(n_max);
    for (int n = 1; n + 1 <= n_max; ++n) {
        const BigInt nn(n);
        const BigInt lhs = (nn + 1) * (nn + 1) * seq.at(n + 1);
        const BigInt rhs = (10 * nn * nn + 10 * nn + 3) * seq.at(n) - 9 * nn * nn * seq.at(n - 1);
        if (lhs != rhs) return false;
    }
    return true;
}

double f_series(double z) {
    if (std::abs(z) >= 1.0 / 9.0 - 1e-6)
        throw domain_error("f_series: |z| too close to the radius 1/9");
    // u_n = a_n z^n carried through the coefficient recurrence.
    double u_prev = 1.0;       // n = 0
    double u = 3.0 * z;        // n = 1
    double sum = u_prev + u, comp = 0.0;
    if (z == 0.0) return 1.0;
    for (int n = 1; n < kSeriesCap; ++n) {
        const double nd = n;
        const double u_next =
            ((10.0 * nd * nd + 10.0 * nd + 3.0) * z * u - 9.0 * nd * nd * z * z * u_prev) /
            ((nd + 1.0) * (nd + 1.0));
        u_prev = u;
        u = u_next;
        const double y = u - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(u) < kSeriesRelTol * std::abs(sum)) return sum;
    }
    throw non_convergence("f_series: term cap reached");
}

double f_continuation_neg(double z) {
    if (!(z < 0.0)) throw domain_error("f_continuation_neg: requires z < 0");
    const double d = 1.0 - 3.0 * z;
    const double w = 27.0 * z * z * (1.0 - z) / (d * d * d);
    return hyp2f1_13_23(w) / d;
}

double f_continuation_pos(double z) {
    if (!(z > 0.0 && z < 1.0 / 9.0))
        throw domain_error("f_continuation_pos: requires 0 < z < 1/9");
    const double d = 1.0 + 3.0 * z;
    const double w = 27.0 * z * (1.0 - z) * (1.0 - z) / (d * d * d);
    return hyp2f1_13_23(w) / d;
}

double hyp2f1_13_23(double w) {
    if (w >= 1.0) throw domain_error("hyp2f1_13_23: requires w < 1");
    if (std::abs(w) <= 0.95) return hyp2f1_series(1.0 / 3.0, 2.0 / 3.0, 1.0, w);

    if (w > 0.95) {
        // Invert w = 27 p^2 (1+p)^2 / (4 (1+p+p^2)^3), monotone on (0,1),
        // then apply Ramanujan's cubic transformation onto the AGM form.
        auto wofp = [](double p) {
            const double s = 1.0 + p + p * p;
            return 27.0 * p * p * (1.0 + p) * (1.0 + p) / (4.0 * s * s * s);
        };
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (wofp(mid) < w)
                lo = mid;
            else
                hi = mid;
            if (hi - lo < 1e-16) break;
        }
        const double p = 0.5 * (lo + hi);
        const double m = p * p * p * (2.0 + p) / (1.0 + 2.0 * p);
        return (1.0 + p + p * p) / std::sqrt(1.0 + 2.0 * p) * ellipK_agm(m);
    }

    // w < -0.95: Pfaff, 2F1(a,b;c;w) = (1-w)^{-a} 2F1(a, c-b; c; w/(w-1)).
    const double u = w / (w - 1.0);
    return std::pow(1.0 - w, -1.0 / 3.0) * hyp2f1_series(1.0 / 3.0, 1.0 / 3.0, 1.0, u);
}

double ellipK_agm(double m) {
    if (!(m >= 0.0 && m < 1.0)) throw domain_error("ellipK_agm: requires 0 <= m < 1");
    double a = 1.0, b = std::sqrt(1.0 - m);
    for (int it = 0; it < 64; ++it) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        a = an;
        b = bn;
        if (std::abs(a - b) <= 1e-17 * a) break;
    }
    return 1.0 / a;
}

double dg_dk(double k) {
    if (k < -1.0) {
        const double p = 0.5 * (std::sqrt(1.0 - 8.0 / k) - 1.0);
        return dg_dk_lemma4_agm(p);
    }
    if (k > 0.0 && k < 8.0) {
        auto radicand = [k](double t) {
            return t * (1.0 - t) * (k * k * t * t + (4.0 - k) * k * t + 4.0);
        };
        const double v = segment_integral(radicand, 0.0, 1.0, kDerivTol);
        return v / (2.0 * M_PI);
    }
    if (k > 8.0) {
        const double w = 27.0 * k * k / ((k + 4.0) * (k + 4.0) * (k + 4.0));
        if (w > 0.95)
            throw domain_error("dg_dk: series argument exceeds 0.95 for this k > 8");
        return hyp2f1_series(1.0 / 3.0, 2.0 / 3.0, 1.0, w) / (k + 4.0);
    }
    throw domain_error("dg_dk: k must lie in (-inf,-1) U (0,8) U (8,inf)");
}

double dg_dk_lemma4(double p) {
    if (!(p > 0.0 && p < 1.0)) throw domain_error("dg_dk_lemma4: requires 0 < p < 1");
    const double scale = p * (1.0 + p);
    auto radicand = [p](double t) {
        return t * (1.0 - t) * (1.0 + 2.0 * p - p * p * p * (2.0 + p) * t);
    };
    const double v = segment_integral(radicand, 0.0, 1.0, kDerivTol);
    return -scale * v / (2.0 * M_PI);
}

double dg_dk_lemma4_agm(double p) {
    if (!(p > 0.0 && p < 1.0)) throw domain_error("dg_dk_lemma4_agm: requires 0 < p < 1");
    const double m = p * p * p * (2.0 + p) / (1.0 + 2.0 * p);
    return -p * (1.0 + p) / (2.0 * std::sqrt(1.0 + 2.0 * p)) * ellipK_agm(m);
}

double dgt_dk(double k) {
    if (!(k < -1.0 || k > 0.0))
        throw domain_error("dgt_dk: requires k < -1 or k > 0");
    const double c = k * (3.0 - k);
    auto radicand = [k](double v) {
        return -(v + 4.0) * (v * v + k * (k - 4.0) * v + 4.0 * k * k);
    };
    std::vector<double> bounds = {-4.0};
    double r1, r2;
    if (quadratic_roots(1.0, k * (k - 4.0), 4.0 * k * k, r1, r2) == 2) {
        bounds.push_back(polish_quadratic(r1, k * (k - 4.0), 4.0 * k * k));
        bounds.push_back(polish_quadratic(r2, k * (k - 4.0), 4.0 * k * k));
    }
    const double total = positive_part_integral(radicand, bounds, c, kDerivTol);
    return (k > 0 ? 1.0 : -1.0) * total / M_PI;
}

double dgt_dk_tform(double k) {
    if (!(k < -1.0 || k > 0.0))
        throw domain_error("dgt_dk_tform: requires k < -1 or k > 0");
    auto radicand = [k](double t) {
        return (1.0 - t) * (2.0 * t * t + k * t + k) * (2.0 * t + k - 2.0);
    };
    std::vector<double> bounds = {-1.0};
    const double lin = 0.5 * (2.0 - k);
    if (lin > -1.0 && lin < 1.0) bounds.push_back(lin);
    double r1, r2;
    if (quadratic_roots(2.0, k, k, r1, r2) == 2) {
        for (double r : {r1, r2})
            if (r > -1.0 && r < 1.0) bounds.push_back(r);
    }
    bounds.push_back(1.0);
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end(),
                             [](double u, double v) { return std::abs(u - v) <= 1e-11; }),
                 bounds.end());

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        const double mid = 0.5 * (bounds[i] + bounds[i + 1]);
        if (radicand(mid) > 0.0)
            total += segment_integral(radicand, bounds[i], bounds[i + 1], kDerivTol);
    }
    return (k > 0 ? 1.0 : -1.0) * total / M_PI;
}

double dg_dk_I1(double k) {
    if (!(k > 0.0 && k < 8.0)) throw domain_error("dg_dk_I1: requires 0 < k < 8");
    auto radicand = [k](double v) {
        return -(v + 4.0) * (v * v + k * (k - 4.0) * v + 4.0 * k * k);
    };
    QuadratureResult tail = integrate_tail(
        [&](double v) { return inv_sqrt_pos(radicand(v)); }, -4.0, kDerivTol);
    if (!tail.converged && !(tail.error_estimate < 1e-8))
        throw non_convergence("dg_dk_I1: tail quadrature failed");
    return tail.value / (2.0 * M_PI);
}

double dg_dk_I1_re(double k) {
    if (!(k > 8.0)) throw domain_error("dg_dk_I1_re: requires k > 8");
    auto radicand = [k](double v) {
        return -(v + 4.0) * (v * v + k * (k - 4.0) * v + 4.0 * k * k);
    };
    std::vector<double> bounds;
    double r1, r2;
    if (quadratic_roots(1.0, k * (k - 4.0), 4.0 * k * k, r1, r2) == 2) {
        bounds.push_back(polish_quadratic(r1, k * (k - 4.0), 4.0 * k * k));
        bounds.push_back(polish_quadratic(r2, k * (k - 4.0), 4.0 * k * k));
    }
    const double total = positive_part_integral(radicand, bounds, -4.0, kDerivTol);
    return total / (2.0 * M_PI);
}

} // namespace mahlerlab
