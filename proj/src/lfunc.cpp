#include "mahlerlab/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "mahlerlab/errors.hpp"

#ifndef MAHLERLAB_DEFAULT_CURVES
#define MAHLERLAB_DEFAULT_CURVES "curves.json"
#endif

namespace mahlerlab {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209;

// Even Bernoulli numbers B_2, B_4, ..., B_20.
constexpr double kBernoulli2n[10] = {
    1.0 / 6.0,       -1.0 / 30.0,     1.0 / 42.0,      -1.0 / 30.0,   5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0,       -3617.0 / 510.0, 43867.0 / 798.0,
    -174611.0 / 330.0};

long long mod_ll(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// Euler-Maclaurin tail: sum_{n >= 0} (n + A)^{-s} for large A.
double em_zeta_tail(double s, double A) {
    double sum = std::pow(A, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(A, -s);
    double poch = s;                 // (s)_{2j-1}
    double apow = std::pow(A, -s - 1.0);
    double fact = 2.0;               // (2j)!
    for (int j = 1; j <= 10; ++j) {
        sum += kBernoulli2n[j - 1] / fact * poch * apow;
        // advance (s)_{2j-1} -> (s)_{2j+1}, (2j)! -> (2j+2)!, A^{-s-2j+1}
        poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        apow /= A * A;
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return sum;
}

} // namespace

long long CurveSpec::discriminant() const {
    const long long b2 = a1 * a1 + 4 * a2;
    const long long b4 = 2 * a4 + a1 * a3;
    const long long b6 = a3 * a3 + 4 * a6;
    const long long b8 = (b2 * b6 - b4 * b4) / 4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

void CurveSpec::validate() const {
    if (discriminant() == 0)
        throw structural_error("curve " + label + ": singular Weierstrass model");
    if (conductor <= 0) throw structural_error("curve " + label + ": conductor must be positive");
    if (root_number != 1 && root_number != -1)
        throw structural_error("curve " + label + ": root number must be +1 or -1");
    // Bad primes divide the discriminant.
    const long long disc = std::llabs(discriminant());
    long long n = conductor;
    for (long long p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            if (disc % p != 0)
                throw structural_error("curve " + label + ": conductor prime " +
                                       std::to_string(p) + " does not divide the discriminant");
            n /= p;
        }
    }
    if (n > 1 && disc % n != 0)
        throw structural_error("curve " + label + ": conductor prime " + std::to_string(n) +
                               " does not divide the discriminant");
}

std::vector<CurveSpec> load_curves(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw structural_error("cannot open curve table: " + path);
    nlohmann::json js;
    try {
        in >> js;
    } catch (const std::exception& e) {
        throw structural_error("curve table " + path + ": " + e.what());
    }
    if (!js.is_array()) throw structural_error("curve table must be a JSON array");

    const std::vector<std::string> allowed = {"label", "a1", "a2",        "a3",
                                              "a4",    "a6", "conductor", "root_number"};
    std::vector<CurveSpec> out;
    for (const auto& rec : js) {
        if (!rec.is_object()) throw structural_error("curve record must be an object");
        for (auto it = rec.begin(); it != rec.end(); ++it) {
            if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
                throw structural_error("curve record: unknown key '" + it.key() + "'");
        }
        for (const std::string& key : allowed) {
            if (!rec.contains(key))
                throw structural_error("curve record: missing key '" + key + "'");
            if (key != "label" && !rec.at(key).is_number_integer())
                throw structural_error("curve record: field '" + key + "' must be an integer");
        }
        CurveSpec c;
        c.label = rec.at("label").get<std::string>();
        c.a1 = rec.at("a1").get<long long>();
        c.a2 = rec.at("a2").get<long long>();
        c.a3 = rec.at("a3").get<long long>();
        c.a4 = rec.at("a4").get<long long>();
        c.a6 = rec.at("a6").get<long long>();
        c.conductor = rec.at("conductor").get<long long>();
        c.root_number = rec.at("root_number").get<int>();
        c.validate();
        out.push_back(std::move(c));
    }
    return out;
}

std::string default_curves_path() {
    if (const char* env = std::getenv("MAHLERLAB_CURVES")) return env;
    std::ifstream local("curves.json");
    if (local) return "curves.json";
    return MAHLERLAB_DEFAULT_CURVES;
}

CurveSpec curve_by_label(const std::vector<CurveSpec>& curves, const std::string& label) {
    for (const CurveSpec& c : curves)
        if (c.label == label) return c;
    throw structural_error("no curve with label '" + label + "' in the table");
}

long long ap_good(const CurveSpec& curve, long long p) {
    if (curve.conductor % p == 0)
        throw domain_error("ap_good: p divides the conductor");
    if (p == 2) {
        long long affine = 0;
        for (long long x = 0; x < 2; ++x)
            for (long long y = 0; y < 2; ++y) {
                const long long lhs = y * y + curve.a1 * x * y + curve.a3 * y;
                const long long rhs = x * x * x + curve.a2 * x * x + curve.a4 * x + curve.a6;
                if (mod_ll(lhs - rhs, 2) == 0) ++affine;
            }
        return p + 1 - (affine + 1);
    }

    // Complete the square: (2y + a1 x + a3)^2 = F(x) with
    // F = 4x^3 + (a1^2 + 4a2) x^2 + (2 a1 a3 + 4 a4) x + (a3^2 + 4 a6);
    // the y-count at x is 1 + chi(F(x)).
    std::vector<signed char> chi(static_cast<std::size_t>(p), -1);
    chi[0] = 0;
    for (long long t = 1; t <= (p - 1) / 2; ++t) chi[static_cast<std::size_t>((t * t) % p)] = 1;

    const long long c3 = 4 % p;
    const long long c2 = mod_ll(curve.a1 * curve.a1 + 4 * curve.a2, p);
    const long long c1 = mod_ll(2 * curve.a1 * curve.a3 + 4 * curve.a4, p);
    const long long c0 = mod_ll(curve.a3 * curve.a3 + 4 * curve.a6, p);

    // Forward differences of the cubic: third difference is 24.
    auto F = [&](long long x) {
        return mod_ll(((c3 * x + c2) % p) * x % p * x % p + (c1 * x + c0), p);
    };
    long long f = F(0);
    long long d1 = mod_ll(F(1) - F(0), p);
    long long d2 = mod_ll(F(2) - 2 * F(1) + F(0), p);
    const long long d3 = 24 % p;

    long long sum = 0;
    for (long long x = 0; x < p; ++x) {
        sum += chi[static_cast<std::size_t>(f)];
        f += d1;
        if (f >= p) f -= p;
        d1 += d2;
        if (d1 >= p) d1 -= p;
        d2 += d3;
        if (d2 >= p) d2 -= p;
    }
    return -sum;
}

long long ap_bad(const CurveSpec& curve, long long p) {
    if (curve.conductor % p != 0)
        throw domain_error("ap_bad: p does not divide the conductor");
    long long nonsingular = 0;
    for (long long x = 0; x < p; ++x) {
        for (long long y = 0; y < p; ++y) {
            const long long lhs = y * y + curve.a1 * x * y + curve.a3 * y;
            const long long rhs = x * x * x + curve.a2 * x * x + curve.a4 * x + curve.a6;
            if (mod_ll(lhs - rhs, p) != 0) continue;
            const long long Fy = mod_ll(2 * y + curve.a1 * x + curve.a3, p);
            const long long Fx =
                mod_ll(curve.a1 * y - (3 * x * x + 2 * curve.a2 * x + curve.a4), p);
            if (Fy != 0 || Fx != 0) ++nonsingular;
        }
    }
    const long long ap = p - (nonsingular + 1); // infinity is nonsingular
    if (ap < -1 || ap > 1)
        throw structural_error("ap_bad: a_p outside {-1,0,1} for " + curve.label +
                               " at p=" + std::to_string(p));
    return ap;
}

std::vector<long long> an_coeffs(const CurveSpec& curve, long long n_max) {
    if (n_max < 1) throw domain_error("an_coeffs: n_max >= 1");
    std::vector<long long> a(static_cast<std::size_t>(n_max) + 1, 0);
    a[1] = 1;

    // Smallest prime factor sieve.
    std::vector<int32_t> spf(static_cast<std::size_t>(n_max) + 1, 0);
    std::vector<long long> primes;
    for (long long i = 2; i <= n_max; ++i) {
        if (spf[static_cast<std::size_t>(i)] == 0) {
            spf[static_cast<std::size_t>(i)] = static_cast<int32_t>(i);
            primes.push_back(i);
        }
        for (long long p : primes) {
            if (p > spf[static_cast<std::size_t>(i)] || i * p > n_max) break;
            spf[static_cast<std::size_t>(i * p)] = static_cast<int32_t>(p);
        }
    }

    // a_p in parallel (independent point counts), then powers and composites.
    std::vector<long long> ap(primes.size(), 0);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t nthreads = std::min<std::size_t>(hw, primes.size() ? primes.size() : 1);
    auto count_range = [&](std::size_t t0) {
        for (std::size_t i = t0; i < primes.size(); i += nthreads) {
            const long long p = primes[i];
            ap[i] = (curve.conductor % p == 0) ? ap_bad(curve, p) : ap_good(curve, p);
        }
    };
    std::vector<std::thread> workers;
    for (std::size_t t = 1; t < nthreads; ++t) workers.emplace_back(count_range, t);
    count_range(0);
    for (auto& w : workers) w.join();

    for (std::size_t i = 0; i < primes.size(); ++i) {
        const long long p = primes[i];
        const bool bad = curve.conductor % p == 0;
        long long prev = 1, cur = ap[i];
        for (long long pk = p; pk <= n_max; pk *= p) {
            a[static_cast<std::size_t>(pk)] = cur;
            if (pk > n_max / p) break;
            const long long nxt = bad ? cur * ap[i] : ap[i] * cur - p * prev;
            prev = cur;
            cur = nxt;
        }
    }
    for (long long n = 2; n <= n_max; ++n) {
        const long long p = spf[static_cast<std::size_t>(n)];
        long long pk = 1, m = n;
        while (m % p == 0) {
            m /= p;
            pk *= p;
        }
        if (m > 1) a[static_cast<std::size_t>(n)] =
            a[static_cast<std::size_t>(pk)] * a[static_cast<std::size_t>(m)];
    }
    return a;
}

double inc_gamma_upper(int s, double x) {
    if (!(x > 0.0)) throw domain_error("inc_gamma_upper: requires x > 0");
    if (s == 2) return (1.0 + x) * std::exp(-x);
    if (s != 0) throw domain_error("inc_gamma_upper: only s in {0,2} supported");

    // E_1(x): power series for x <= 1, modified Lentz continued fraction above.
    if (x <= 1.0) {
        double sum = -kEulerGamma - std::log(x);
        double term = -1.0; // (-1)^{k+1} x^k / k!
        for (int k = 1; k <= 60; ++k) {
            term *= -x / k;
            sum += term / k;
            if (std::abs(term / k) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    const double tiny = 1e-300;
    double b = x + 1.0, c = 1e300, d = 1.0 / b, h = d;
    for (int i = 1; i <= 200; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x);
}

double L_E_2(const CurveSpec& curve, double cutoff) {
    if (!(cutoff >= 0.5 && cutoff <= 2.0))
        throw domain_error("L_E_2: cutoff must lie in [0.5, 2]");
    const double N = static_cast<double>(curve.conductor);
    const double sN = std::sqrt(N);
    const double eps = curve.root_number;

    auto lambda2 = [&](double c) {
        const long long n_max =
            static_cast<long long>(40.0 * sN / (2.0 * M_PI) * std::max(c, 1.0 / c)) + 8;
        const std::vector<long long> a = an_coeffs(curve, n_max);
        double sum = 0.0, comp = 0.0;
        for (long long n = 1; n <= n_max; ++n) {
            if (a[static_cast<std::size_t>(n)] == 0) continue;
            const double x1 = 2.0 * M_PI * n * c / sN;
            const double x2 = 2.0 * M_PI * n / (c * sN);
            const double w = N / std::pow(2.0 * M_PI * n, 2) * inc_gamma_upper(2, x1) +
                             eps * inc_gamma_upper(0, x2);
            const double v = a[static_cast<std::size_t>(n)] * w;
            const double y = v - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        return sum;
    };

    const double L = lambda2(cutoff) * std::pow(2.0 * M_PI, 2) / N;
    const double shifted = (cutoff * 1.2 <= 2.0) ? cutoff * 1.2 : cutoff / 1.2;
    const double L_check = lambda2(shifted) * std::pow(2.0 * M_PI, 2) / N;
    if (std::abs(L - L_check) > 1e-8)
        throw non_convergence("L_E_2: cutoff variation exceeds 1e-8 for " + curve.label);
    return L;
}

double Lprime_E_0(const CurveSpec& curve) {
    if (curve.root_number != +1)
        throw domain_error("Lprime_E_0: requires root number +1");
    return curve.conductor * L_E_2(curve) / (4.0 * M_PI * M_PI);
}

DirichletChar::DirichletChar(int disc) : discriminant(disc) {
    if (disc != -3 && disc != -4)
        throw domain_error("DirichletChar: discriminant must be -3 or -4");
}

int DirichletChar::value(long long n) const {
    const long long r = mod_ll(n, conductor());
    if (discriminant == -3) {
        if (r == 1) return 1;
        if (r == 2) return -1;
        return 0;
    }
    if (r == 1) return 1;
    if (r == 3) return -1;
    return 0;
}

double dirichlet_L(const DirichletChar& chi, double s) {
    if (!(s > 1.0)) throw domain_error("dirichlet_L: requires s > 1");
    const int f = chi.conductor();
    const long long M = 64; // periods summed directly
    double sum = 0.0, comp = 0.0;
    for (long long n = 1; n <= M * f; ++n) {
        const int v = chi.value(n);
        if (v == 0) continue;
        const double term = v * std::pow(static_cast<double>(n), -s);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    // Tail over each residue class r: sum_{m >= M} (fm + r)^{-s}
    //   = f^{-s} * em_zeta_tail(s, M + r/f).
    for (int r = 1; r < f; ++r) {
        const int v = chi.value(r);
        if (v == 0) continue;
        sum += v * std::pow(static_cast<double>(f), -s) *
               em_zeta_tail(s, static_cast<double>(M) + static_cast<double>(r) / f);
    }
    return sum;
}

double Lprime_chi_minus1(const DirichletChar& chi) {
    const double f = chi.conductor();
    return std::pow(f, 1.5) / (4.0 * M_PI) * dirichlet_L(chi, 2.0);
}

double hurwitz_zeta(double s, double a) {
    if (!(a > 0.0 && a <= 1.0)) throw domain_error("hurwitz_zeta: requires a in (0,1]");
    if (s == 1.0) throw domain_error("hurwitz_zeta: pole at s = 1");
    const int M = 36;
    double sum = 0.0, comp = 0.0;
    for (int n = 0; n < M; ++n) {
        const double term = std::pow(n + a, -s);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum + em_zeta_tail(s, M + a);
}

double dirichlet_L_hurwitz(const DirichletChar& chi, double s) {
    const int f = chi.conductor();
    double sum = 0.0;
    for (int r = 1; r < f; ++r) {
        const int v = chi.value(r);
        if (v == 0) continue;
        sum += v * hurwitz_zeta(s, static_cast<double>(r) / f);
    }
    return std::pow(static_cast<double>(f), -s) * sum;
}

} // namespace mahlerlab
