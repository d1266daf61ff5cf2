#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gridcount/totient.hpp"
#include "gridcount/wide_int.hpp"

namespace gridcount {

// Main terms of f_q(n) and of the derived segment and line counts.
double main_term_f(std::uint64_t n, std::uint64_t q);          // 6 n^4 / (pi^2 q^2)
double main_term_segments(std::uint64_t n, std::uint64_t q);   // 3 n^4 / (pi^2 q^2)
double main_term_lines_ge(std::uint64_t n, std::uint64_t q);   // q >= 2
double main_term_lines_eq(std::uint64_t n, std::uint64_t q);   // q >= 2

// f_q(n) - main_term_f(n, q).
double residual(std::uint64_t n, std::uint64_t q, const TotientTable& table);

struct ScanRow {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    WideInt exact = 0;
    double main = 0.0;
    double residual = 0.0;
    double normalized = 0.0; // |residual| / n^exponent
};

struct ScanOptions {
    double exponent = 3.0;
    // 0 picks the hardware concurrency. Output does not depend on it.
    unsigned threads = 1;
};

std::vector<ScanRow> scan_residuals(std::uint64_t q, std::span<const std::uint64_t> n_values,
                                    const TotientTable& table, const ScanOptions& options = {});

// start, 2 start, 4 start, ... up to end inclusive.
std::vector<std::uint64_t> geometric_grid(std::uint64_t start, std::uint64_t end);
// start, start + step, ... up to end inclusive.
std::vector<std::uint64_t> arithmetic_grid(std::uint64_t start, std::uint64_t end, std::uint64_t step);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::uint64_t points_used = 0;
    std::pair<std::uint64_t, std::uint64_t> n_range{0, 0};
};

// Least squares of log|residual| on log n. Rows with |residual| < 1 are
// skipped: the error term changes sign and near-zero values are noise.
SlopeFit fit_log_exponent(std::span<const ScanRow> rows);

enum class SlopeClass {
    BelowRhExponent,     // slope < 5/2
    BetweenRhAndEnvelope, // 5/2 <= slope < 3
    AboveEnvelope,       // slope >= 3
};

struct RhReport {
    SlopeFit fit;
    SlopeClass classification = SlopeClass::BelowRhExponent;
    std::string label;
    std::string disclaimer;
};

inline constexpr double kRhExponent = 2.5;
inline constexpr double kUnconditionalExponent = 3.0;

RhReport rh_report(const SlopeFit& fit);

} // namespace gridcount
