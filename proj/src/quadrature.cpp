#include "mahlerlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace mahlerlab {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
// Odd indices (and the centre) are the Gauss abscissae.
constexpr double xgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double wgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double a, b;          // in transformed coordinates
    double value;
    double error;
    int segment;
    std::int64_t seq;     // insertion index, for deterministic tie-breaking
};

struct PanelWorse {
    bool operator()(const Panel& p, const Panel& q) const {
        if (p.error != q.error) return p.error < q.error;
        return p.seq > q.seq;
    }
};

// Gauss-Kronrod 15/7 on [a,b] with the QUADPACK error heuristic.
// Returns false if the integrand produced a non-finite value.
bool gk15(const RealFunction& f, double a, double b, double& value, double& error) {
    const double hl = 0.5 * (b - a);
    const double centre = 0.5 * (a + b);

    const double fc = f(centre);
    if (!std::isfinite(fc)) return false;

    double resg = wg[3] * fc;
    double resk = wgk[7] * fc;
    double resabs = wgk[7] * std::abs(fc);
    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = hl * xgk[j];
        fv1[j] = f(centre - dx);
        fv2[j] = f(centre + dx);
        if (!std::isfinite(fv1[j]) || !std::isfinite(fv2[j])) return false;
        const double fsum = fv1[j] + fv2[j];
        resk += wgk[j] * fsum;
        resabs += wgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1) resg += wg[j / 2] * fsum;
    }

    const double reskh = resk * 0.5;
    double resasc = wgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    value = resk * hl;
    resabs *= std::abs(hl);
    resasc *= std::abs(hl);
    double err = std::abs((resk - resg) * hl);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);
    error = err;
    return true;
}

} // namespace

QuadratureResult integrate_adaptive(const RealFunction& f, double a, double b,
                                    double tol, const Breakpoints& breakpoints,
                                    std::int64_t budget) {
    QuadratureResult res;
    if (!(a < b)) throw std::invalid_argument("integrate_adaptive: requires a < b");

    // Split points: endpoints plus interior breakpoints, deduplicated.
    std::vector<double> splits;
    splits.push_back(a);
    for (double p : breakpoints.points) {
        if (p > a && p < b) splits.push_back(p);
    }
    splits.push_back(b);
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end(),
                             [&](double u, double v) {
                                 return std::abs(u - v) <= 1e-14 * (1.0 + std::abs(u));
                             }),
                 splits.end());

    // Each segment [alpha, beta] integrates F(u) = f(v(u)) v'(u) over [0,1]
    // with v(u) = alpha + (beta-alpha) sin^2(pi u / 2).
    struct Segment {
        double alpha, width;
    };
    std::vector<Segment> segments;
    for (std::size_t i = 0; i + 1 < splits.size(); ++i)
        segments.push_back({splits[i], splits[i + 1] - splits[i]});

    auto transformed = [&](int seg, double u) {
        const auto& s = segments[static_cast<std::size_t>(seg)];
        const double si = std::sin(0.5 * M_PI * u);
        const double v = s.alpha + s.width * si * si;
        const double dv = s.width * 0.5 * M_PI * std::sin(M_PI * u);
        return f(v) * dv;
    };

    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
    std::vector<Panel> done;
    std::int64_t evals = 0;
    std::int64_t seq = 0;
    double total_err = 0.0;
    bool nan_hit = false;

    auto push_panel = [&](int seg, double lo, double hi) {
        Panel p{lo, hi, 0.0, 0.0, seg, seq++};
        auto fu = [&](double u) { return transformed(seg, u); };
        if (!gk15(fu, lo, hi, p.value, p.error)) {
            nan_hit = true;
            return;
        }
        evals += 15;
        total_err += p.error;
        heap.push(p);
    };

    for (int s = 0; s < static_cast<int>(segments.size()) && !nan_hit; ++s)
        push_panel(s, 0.0, 1.0);

    const double min_width = 1e-15;
    std::vector<Panel> frozen; // panels too narrow to bisect further
    while (!nan_hit && total_err > tol && !heap.empty() && evals + 30 <= budget) {
        Panel worst = heap.top();
        heap.pop();
        if (worst.b - worst.a <= min_width) {
            frozen.push_back(worst);
            continue;
        }
        total_err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        push_panel(worst.segment, worst.a, mid);
        push_panel(worst.segment, mid, worst.b);
    }

    if (nan_hit) {
        res.value = std::numeric_limits<double>::quiet_NaN();
        res.error_estimate = std::numeric_limits<double>::infinity();
        res.evaluations = std::max<std::int64_t>(evals, 1);
        res.converged = false;
        return res;
    }

    // Deterministic summation: panels ordered by (segment, left endpoint).
    while (!heap.empty()) {
        done.push_back(heap.top());
        heap.pop();
    }
    done.insert(done.end(), frozen.begin(), frozen.end());
    std::sort(done.begin(), done.end(), [](const Panel& p, const Panel& q) {
        if (p.segment != q.segment) return p.segment < q.segment;
        return p.a < q.a;
    });
    double sum = 0.0, comp = 0.0, errsum = 0.0;
    for (const Panel& p : done) {
        const double y = p.value - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        errsum += p.error;
    }

    res.value = sum;
    res.error_estimate = errsum;
    res.evaluations = std::max<std::int64_t>(evals, 1);
    res.converged = errsum <= tol;
    return res;
}

QuadratureResult integrate_tail(const RealFunction& f, double c, double tol,
                                std::int64_t budget) {
    auto mapped = [&, c](double u) {
        const double v = c - (1.0 - u) / u;
        return f(v) / (u * u);
    };
    return integrate_adaptive(mapped, 0.0, 1.0, tol, {}, budget);
}

Breakpoints find_sign_changes(const RealFunction& f, double a, double b, int n_scan) {
    if (n_scan < 2) throw std::invalid_argument("find_sign_changes: n_scan >= 2");
    const double h = (b - a) / n_scan;
    const double plateau = 1e-10;

    std::vector<double> roots;
    double x0 = a;
    double f0 = f(x0);
    for (int i = 1; i <= n_scan; ++i) {
        const double x1 = (i == n_scan) ? b : a + i * h;
        const double f1 = f(x1);
        if (f0 == 0.0 && i > 1) {
            roots.push_back(x0);
        } else if (f0 * f1 < 0.0 && std::max(std::abs(f0), std::abs(f1)) > plateau) {
            double lo = x0, hi = x1, flo = f0;
            while (hi - lo > 1e-13) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (flo * fm < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double u, double v) { return std::abs(u - v) <= 1e-12; }),
                roots.end());
    return Breakpoints{std::move(roots)};
}

double richardson_derivative(const RealFunction& f, double x, double h) {
    auto central = [&](double step) { return (f(x + step) - f(x - step)) / (2.0 * step); };
    const double d1 = central(h);
    const double d2 = central(0.5 * h);
    return (4.0 * d2 - d1) / 3.0;
}

} // namespace mahlerlab
