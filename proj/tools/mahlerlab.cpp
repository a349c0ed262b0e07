// mahlerlab: numerical verification of Mahler-measure identities for the
// Boyd / Bosman polynomial families and their L-value evaluations.
//
//   mahlerlab verify  --suite {thm1|thm2|thm3|bosman|lemma5|asymp|all}
//                     [--tol T] [--csv PATH] [--json PATH] [--jobs N]
//   mahlerlab measure --family {boydP|bosmanQ|t3P|t3Q|t3R} --k K
//                     [--method {jensen|grid2d}] [--tol T]
//   mahlerlab lvalue  --curve LABEL | --chi {-3|-4}
//   mahlerlab scan    --family F --k-min A --k-max B --steps N --csv PATH
//
// Exit codes: 0 pass, 1 tolerance failure, 2 configuration error,
// 3 numerical non-convergence.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mahlerlab/errors.hpp"
#include "mahlerlab/families.hpp"
#include "mahlerlab/lfunc.hpp"
#include "mahlerlab/mahler.hpp"
#include "mahlerlab/verify.hpp"

using namespace mahlerlab;

namespace {

int cmd_verify(const std::string& suite, double tol, const std::string& csv,
               const std::string& json, int jobs) {
    SuiteOptions opt;
    opt.jobs = jobs;
    if (tol > 0) {
        opt.tol_measure = tol;
        opt.tol_lvalue = tol;
        opt.tol_deriv = tol;
    }

    std::vector<VerificationRow> rows;
    if (suite == "thm1")
        rows = run_theorem1(theorem1_default_pos(), theorem1_default_neg(), opt);
    else if (suite == "thm2")
        rows = run_theorem2(opt);
    else if (suite == "thm3")
        rows = run_theorem3(opt);
    else if (suite == "bosman")
        rows = run_bosman(opt);
    else if (suite == "lemma5")
        rows = run_lemma5(opt);
    else if (suite == "asymp")
        rows = run_asymptotics(opt);
    else if (suite == "all")
        rows = run_all(opt);
    else
        throw domain_error("unknown suite: " + suite);

    for (const VerificationRow& r : rows) {
        std::printf("%-52s lhs=%+.12f rhs=%+.12f |diff|=%.3e tol=%.1e %s\n",
                    r.claim_id.c_str(), r.lhs, r.rhs, r.abs_diff, r.tolerance,
                    r.passed ? "PASS" : (r.informational ? "INFO" : "FAIL"));
    }
    if (!csv.empty()) write_csv(rows, csv);
    if (!json.empty()) write_json(rows, json);

    const std::size_t failures =
        static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) {
            return !r.informational && !r.passed;
        }));
    std::printf("%zu/%zu rows passed (%zu informational)\n",
                rows.size() - failures -
                    static_cast<std::size_t>(std::count_if(
                        rows.begin(), rows.end(), [](const auto& r) { return r.informational; })),
                rows.size(),
                static_cast<std::size_t>(std::count_if(
                    rows.begin(), rows.end(), [](const auto& r) { return r.informational; })));
    return failures == 0 ? 0 : 1;
}

int cmd_measure(const std::string& family, double k, const std::string& method, double tol,
                int grid_n) {
    const Family f = family_from_name(family);
    const FamilyPoint fp(f, k);
    if (method == "jensen") {
        QuadratureResult r = mahler_jensen(family_polynomial(f, k), tol);
        std::printf("m = %.15f  (error estimate %.3e, %lld evaluations%s)\n", r.value,
                    r.error_estimate, static_cast<long long>(r.evaluations),
                    fp.degenerate ? ", degenerate member" : "");
        if (!r.converged) {
            std::fprintf(stderr, "quadrature did not reach the requested tolerance\n");
            return 3;
        }
        return 0;
    }
    if (method == "grid2d") {
        const double v = mahler_2d_grid(family_polynomial(f, k), grid_n);
        std::printf("m ~ %.15f  (n = %d tensor grid, no error estimate%s)\n", v, grid_n,
                    fp.degenerate ? ", degenerate member" : "");
        return 0;
    }
    throw domain_error("unknown method: " + method);
}

int cmd_lvalue(const std::string& curve_label, int chi_disc) {
    if (!curve_label.empty()) {
        const auto curves = load_curves(default_curves_path());
        const CurveSpec c = curve_by_label(curves, curve_label);
        std::printf("L'(%s,0) = %.15f\n", c.label.c_str(), Lprime_E_0(c));
        return 0;
    }
    const DirichletChar chi(chi_disc);
    std::printf("L'(chi_%d,-1) = %.15f\n", chi_disc, Lprime_chi_minus1(chi));
    return 0;
}

int cmd_scan(const std::string& family, double k_min, double k_max, int steps,
             const std::string& csv, double tol) {
    if (steps < 1) throw domain_error("scan: steps >= 1");
    if (!(k_min < k_max)) throw domain_error("scan: requires k-min < k-max");
    const Family f = family_from_name(family);
    std::ofstream out(csv);
    if (!out) throw structural_error("cannot open CSV output: " + csv);
    out << "k,m,error_estimate\n";
    char buf[96];
    for (int i = 0; i <= steps; ++i) {
        const double k = k_min + (k_max - k_min) * i / steps;
        QuadratureResult r = mahler_jensen(family_polynomial(f, k), tol);
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.3e\n", k, r.value, r.error_estimate);
        out << buf;
    }
    std::printf("wrote %d rows to %s\n", steps + 1, csv.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mahler measure computations for the Boyd/Bosman families"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    double vtol = -1;
    std::string csv_path, json_path;
    int jobs = 0;
    verify->add_option("--suite", suite, "thm1|thm2|thm3|bosman|lemma5|asymp|all");
    verify->add_option("--tol", vtol, "override all row tolerances");
    verify->add_option("--csv", csv_path, "write the report as CSV");
    verify->add_option("--json", json_path, "write the report as JSON");
    verify->add_option("--jobs", jobs, "parallel row workers (default: hardware)");

    auto* measure = app.add_subcommand("measure", "Mahler measure of one family member");
    std::string family, method = "jensen";
    double k = 0, mtol = kDefaultQuadTol;
    int grid_n = 1024;
    measure->add_option("--family", family)->required();
    measure->add_option("--k", k)->required();
    measure->add_option("--method", method, "jensen|grid2d");
    measure->add_option("--tol", mtol, "quadrature tolerance");
    measure->add_option("--grid-n", grid_n, "grid size for grid2d");

    auto* lvalue = app.add_subcommand("lvalue", "L'(E,0) or L'(chi,-1)");
    std::string curve_label;
    int chi_disc = 0;
    lvalue->add_option("--curve", curve_label, "curve label from the curve table");
    lvalue->add_option("--chi", chi_disc, "-3 or -4");

    auto* scan = app.add_subcommand("scan", "tabulate k -> m over a range");
    std::string scan_family, scan_csv;
    double k_min = 0, k_max = 1, stol = kDefaultQuadTol;
    int steps = 10;
    scan->add_option("--family", scan_family)->required();
    scan->add_option("--k-min", k_min)->required();
    scan->add_option("--k-max", k_max)->required();
    scan->add_option("--steps", steps)->required();
    scan->add_option("--csv", scan_csv)->required();
    scan->add_option("--tol", stol, "quadrature tolerance");

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return cmd_verify(suite, vtol, csv_path, json_path, jobs);
        if (measure->parsed()) return cmd_measure(family, k, method, mtol, grid_n);
        if (lvalue->parsed()) {
            if (curve_label.empty() == (chi_disc == 0)) {
                std::fprintf(stderr, "lvalue: give exactly one of --curve or --chi\n");
                return 2;
            }
            return cmd_lvalue(curve_label, chi_disc);
        }
        if (scan->parsed()) return cmd_scan(scan_family, k_min, k_max, steps, scan_csv, stol);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const non_convergence& e) {
        std::fprintf(stderr, "non-convergence: %s\n", e.what());
        return 3;
    } catch (const structural_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const domain_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
