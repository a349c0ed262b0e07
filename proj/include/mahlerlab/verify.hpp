#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mahlerlab {

/// One verified claim: both sides, their difference, and the verdict.
/// passed is always recomputable from the stored fields:
///   passed <=> abs_diff <= max(tolerance, 3 (lhs_err + rhs_err)).
/// Informational rows (negative demonstrations, fitted constants) never
/// affect the exit code; for one-sided bound rows abs_diff holds the
/// violation amount max(0, lhs - rhs).
struct VerificationRow {
    std::string claim_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_diff = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    double lhs_error_estimate = 0.0;
    double rhs_error_estimate = 0.0;
    std::int64_t wall_time_ms = 0;
    bool informational = false;
};

/// A small rational num/den recovered from a real ratio.
struct RationalGuess {
    long long numerator = 0;
    long long denominator = 1;
    double residual = 0.0;
};

/// Continued-fraction recognition of x/y as a rational with denominator
/// <= max_den (max_den <= 64); returns nothing when the best candidate
/// misses by more than 1e-6.
std::optional<RationalGuess> rational_ratio(double x, double y, int max_den);

/// Recompute the passed flag from the stored fields.
bool row_passes(const VerificationRow& row);

struct SuiteOptions {
    double tol_measure = 1e-6;  // measure vs measure
    double tol_lvalue = 1e-5;   // measure vs L-value
    double tol_deriv = 1e-8;    // derivative identities
    int jobs = 0;               // 0 = hardware concurrency
    std::string curves_path;    // empty = default resolution
};

std::vector<VerificationRow> run_theorem1(const std::vector<double>& k_pos,
                                          const std::vector<double>& k_neg,
                                          const SuiteOptions& opt = {});
std::vector<VerificationRow> run_theorem2(const SuiteOptions& opt = {});
std::vector<VerificationRow> run_bosman(const SuiteOptions& opt = {});
std::vector<VerificationRow> run_theorem3(const SuiteOptions& opt = {});
std::vector<VerificationRow> run_lemma5(const SuiteOptions& opt = {});
std::vector<VerificationRow> run_asymptotics(const SuiteOptions& opt = {});

/// Default parameter lists for theorem 1.
std::vector<double> theorem1_default_pos();
std::vector<double> theorem1_default_neg();

/// All suites in declaration order.
std::vector<VerificationRow> run_all(const SuiteOptions& opt = {});

/// Fixed-header CSV:
/// claim_id,lhs,rhs,abs_diff,tolerance,passed,lhs_err,rhs_err,wall_time_ms
void write_csv(const std::vector<VerificationRow>& rows, const std::string& path);
void write_json(const std::vector<VerificationRow>& rows, const std::string& path);

/// True when every non-informational row passed.
bool all_passed(const std::vector<VerificationRow>& rows);

} // namespace mahlerlab
