#include "mahlerlab/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "mahlerlab/errors.hpp"
#include "mahlerlab/polyroots.hpp"

namespace mahlerlab {

namespace {

// log+ with the unit-circle dead zone: moduli within 1e-12 of 1 are roots
// on the circle up to roundoff and contribute exactly 0.
double log_plus(double modulus) {
    if (modulus <= 1.0 + 1e-12) return 0.0;
    return std::log(modulus);
}

// Relative threshold below which the leading y-coefficient is treated as
// vanished and the polynomial deflated.
constexpr double kLeadEps = 1e-8;

double coeff_scale(const std::vector<cdouble>& c) {
    double s = 0.0;
    for (const cdouble& v : c) s = std::max(s, std::abs(v));
    return s;
}

} // namespace

std::vector<cdouble> roots_in_y(const BivariatePolynomial& p, cdouble x) {
    std::vector<cdouble> c = p.y_coefficients(x);
    const double scale = coeff_scale(c);
    if (scale == 0.0 || std::abs(c.back()) < 1e-300)
        throw leading_coefficient_vanishes("roots_in_y: leading y-coefficient vanishes");
    return polynomial_roots(c);
}

double JensenIntegrand::operator()(double theta) const {
    const cdouble x(std::cos(theta), std::sin(theta));
    std::vector<cdouble> c = source.y_coefficients(x);
    const double scale = coeff_scale(c);
    if (scale < 1e-300) return 0.0;

    // Deflate while the top coefficient is negligible: the escaping root
    // contributes log|c_{d-1}| - log|c_d|, which cancels the leading term.
    while (c.size() > 1 && std::abs(c.back()) < kLeadEps * scale) c.pop_back();

    double val = std::log(std::abs(c.back()));
    if (c.size() > 1) {
        for (const cdouble& r : polynomial_roots(c)) val += log_plus(std::abs(r));
    }
    return val;
}

Breakpoints jensen_breakpoints(const BivariatePolynomial& p, int n_scan) {
    std::vector<double> pts;

    // Circle zeros of the leading y-coefficient lead(x).
    const int dy = p.degree_y();
    std::vector<cdouble> lead(static_cast<std::size_t>(p.degree_x()) + 1, cdouble(0.0));
    for (const Term& t : p.terms())
        if (t.j == dy) lead[static_cast<std::size_t>(t.i)] += t.coeff;
    while (lead.size() > 1 && std::abs(lead.back()) == 0.0) lead.pop_back();
    if (lead.size() > 1) {
        for (const cdouble& r : polynomial_roots(lead)) {
            if (std::abs(std::abs(r) - 1.0) < 1e-9) {
                const double th = std::abs(std::arg(r));
                if (th > 1e-12 && th < M_PI - 1e-12) pts.push_back(th);
            }
        }
    }

    // Crossings of the unit circle by the y-roots.
    auto cross = [&p](double theta) {
        const cdouble x(std::cos(theta), std::sin(theta));
        std::vector<cdouble> c = p.y_coefficients(x);
        const double scale = coeff_scale(c);
        if (scale < 1e-300) return 0.0;
        while (c.size() > 1 && std::abs(c.back()) < kLeadEps * scale) c.pop_back();
        if (c.size() <= 1) return 1.0;
        double prod = 1.0;
        for (const cdouble& r : polynomial_roots(c)) prod *= std::abs(r) - 1.0;
        return prod;
    };
    Breakpoints sc = find_sign_changes(cross, 0.0, M_PI, n_scan);
    pts.insert(pts.end(), sc.points.begin(), sc.points.end());

    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](double u, double v) { return std::abs(u - v) <= 1e-12; }),
              pts.end());
    return Breakpoints{std::move(pts)};
}

QuadratureResult mahler_jensen(const BivariatePolynomial& p, double tol) {
    if (p.terms().empty())
        throw domain_error("mahler_jensen: zero polynomial");
    JensenIntegrand integrand(p);
    Breakpoints bps = jensen_breakpoints(p);
    QuadratureResult r =
        integrate_adaptive([&integrand](double t) { return integrand(t); }, 0.0, M_PI, tol, bps);
    r.value /= M_PI;
    r.error_estimate /= M_PI;
    return r;
}

double mahler_2d_grid(const BivariatePolynomial& p, int n) {
    if (n < 16) throw domain_error("mahler_2d_grid: n >= 16 required");

    const int dy = p.degree_y();
    // A_j(alpha) = sum_i a_{ij} x^i at x = e^{i alpha}, for each y-power j.
    std::vector<std::vector<cdouble>> A(static_cast<std::size_t>(dy) + 1,
                                        std::vector<cdouble>(static_cast<std::size_t>(n)));
    std::vector<cdouble> ypow(static_cast<std::size_t>(n));

    for (int a = 0; a < n; ++a) {
        const double ang = 2.0 * M_PI * (a + 0.5) / n;
        const cdouble x(std::cos(ang), std::sin(ang));
        std::vector<cdouble> c = p.y_coefficients(x);
        for (int j = 0; j <= dy; ++j)
            A[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)] =
                c[static_cast<std::size_t>(j)];
        ypow[static_cast<std::size_t>(a)] = x; // same offsets for the y grid
    }

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int nthreads = static_cast<int>(std::min<unsigned>(hw, 8));
    std::vector<double> row_sum(static_cast<std::size_t>(n), 0.0);
    std::vector<long long> row_cnt(static_cast<std::size_t>(n), 0);

    auto work = [&](int t0) {
        for (int a = t0; a < n; a += nthreads) {
            double s = 0.0, comp = 0.0;
            long long cnt = 0;
            for (int b = 0; b < n; ++b) {
                const cdouble y = ypow[static_cast<std::size_t>(b)];
                // Horner in y with precomputed x-coefficients.
                cdouble v = A[static_cast<std::size_t>(dy)][static_cast<std::size_t>(a)];
                for (int j = dy - 1; j >= 0; --j)
                    v = v * y + A[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)];
                const double mag = std::abs(v);
                if (mag < 1e-300) continue; // skip accidental zeros
                const double lg = std::log(mag);
                const double d = lg - comp;
                const double tt = s + d;
                comp = (tt - s) - d;
                s = tt;
                ++cnt;
            }
            row_sum[static_cast<std::size_t>(a)] = s;
            row_cnt[static_cast<std::size_t>(a)] = cnt;
        }
    };

    std::vector<std::thread> threads;
    for (int t = 1; t < nthreads; ++t) threads.emplace_back(work, t);
    work(0);
    for (auto& th : threads) th.join();

    double total = 0.0, comp = 0.0;
    long long cnt = 0;
    for (int a = 0; a < n; ++a) {
        const double d = row_sum[static_cast<std::size_t>(a)] - comp;
        const double t = total + d;
        comp = (t - total) - d;
        total = t;
        cnt += row_cnt[static_cast<std::size_t>(a)];
    }
    return total / static_cast<double>(cnt);
}

double q_integrand_closed(double k, double theta) {
    const double d = delta_of(k, theta);
    if (d <= 0.0) return 0.0;
    const double b = std::abs(B_of(k, theta));
    return std::log(0.5 * (b + std::sqrt(d)));
}

QuadratureResult mahler_bosman_closed(double k, double tol) {
    Breakpoints bps =
        find_sign_changes([k](double t) { return delta_of(k, t); }, 0.0, M_PI, 4096);
    QuadratureResult r = integrate_adaptive(
        [k](double t) { return q_integrand_closed(k, t); }, 0.0, M_PI, tol, bps);
    r.value /= M_PI;
    r.error_estimate /= M_PI;
    return r;
}

QuadratureResult measure_family(const FamilyPoint& fp, double tol) {
    if (fp.family == Family::BosmanQ) return mahler_bosman_closed(fp.k, tol);
    return mahler_jensen(family_polynomial(fp.family, fp.k), tol);
}

} // namespace mahlerlab
