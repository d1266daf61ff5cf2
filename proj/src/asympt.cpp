#include "gridcount/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "gridcount/counts.hpp"
#include "gridcount/error.hpp"

namespace gridcount {
namespace {

double n_fourth_over_pi2(std::uint64_t n)
{
    const auto x = static_cast<double>(n);
    return x * x * x * x / kPiSquared;
}

double inverse_square(std::uint64_t q)
{
    const auto x = static_cast<double>(q);
    return 1.0 / (x * x);
}

void require_line_q(std::uint64_t q)
{
    require(q >= 2, ErrorKind::InvalidArgument, "line point count q must be at least 2");
}

ScanRow make_row(std::uint64_t n, std::uint64_t q, const TotientTable& table, double exponent)
{
    ScanRow row;
    row.n = n;
    row.q = q;
    row.exact = f_fast({n, q}, table);
    row.main = main_term_f(n, q);
    row.residual = static_cast<double>(static_cast<long double>(row.exact)
                                       - static_cast<long double>(row.main));
    row.normalized = std::fabs(row.residual) / std::pow(static_cast<double>(n), exponent);
    return row;
}

} // namespace

double main_term_f(std::uint64_t n, std::uint64_t q)
{
    return 6.0 * n_fourth_over_pi2(n) * inverse_square(q);
}

double main_term_segments(std::uint64_t n, std::uint64_t q)
{
    return 3.0 * n_fourth_over_pi2(n) * inverse_square(q);
}

double main_term_lines_ge(std::uint64_t n, std::uint64_t q)
{
    require_line_q(q);
    return 3.0 * n_fourth_over_pi2(n) * (inverse_square(q - 1) - inverse_square(q));
}

double main_term_lines_eq(std::uint64_t n, std::uint64_t q)
{
    require_line_q(q);
    const double bracket = inverse_square(q + 1) - 2.0 * inverse_square(q) + inverse_square(q - 1);
    return 3.0 * n_fourth_over_pi2(n) * bracket;
}

double residual(std::uint64_t n, std::uint64_t q, const TotientTable& table)
{
    return make_row(n, q, table, 0.0).residual;
}

std::vector<ScanRow> scan_residuals(std::uint64_t q, std::span<const std::uint64_t> n_values,
                                    const TotientTable& table, const ScanOptions& options)
{
    require(!n_values.empty(), ErrorKind::InvalidArgument, "scan needs at least one n value");
    require(q >= 1, ErrorKind::InvalidArgument, "gcd class q must be at least 1");
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        require(n_values[i] >= 1, ErrorKind::InvalidArgument, "scan n values must be positive");
        require(i == 0 || n_values[i] > n_values[i - 1], ErrorKind::InvalidArgument,
                "scan n values must be strictly increasing");
    }
    const std::uint64_t needed = (n_values.back() - 1) / q;
    if (needed > table.limit()) {
        raise(ErrorKind::Precondition,
              "totient table limit " + std::to_string(table.limit())
                  + " too small; required limit " + std::to_string(needed));
    }

    std::vector<ScanRow> rows(n_values.size());
    unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(n_values.size()));

    // Rows are independent; each worker fills a strided subset in place, so
    // the output order never depends on scheduling.
    std::vector<std::exception_ptr> failures(threads);
    auto work = [&](unsigned worker) {
        try {
            for (std::size_t i = worker; i < n_values.size(); i += threads)
                rows[i] = make_row(n_values[i], q, table, options.exponent);
        } catch (...) {
            failures[worker] = std::current_exception();
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned worker = 0; worker < threads; ++worker)
            pool.emplace_back(work, worker);
    }
    for (const auto& failure : failures) {
        if (failure)
            std::rethrow_exception(failure);
    }
    return rows;
}

std::vector<std::uint64_t> geometric_grid(std::uint64_t start, std::uint64_t end)
{
    require(start >= 1, ErrorKind::InvalidArgument, "grid start must be at least 1");
    require(start <= end, ErrorKind::InvalidArgument, "grid start must not exceed end");
    std::vector<std::uint64_t> grid;
    for (std::uint64_t n = start; n <= end; n *= 2) {
        grid.push_back(n);
        if (n > end / 2)
            break;
    }
    return grid;
}

std::vector<std::uint64_t> arithmetic_grid(std::uint64_t start, std::uint64_t end, std::uint64_t step)
{
    require(start >= 1, ErrorKind::InvalidArgument, "grid start must be at least 1");
    require(start <= end, ErrorKind::InvalidArgument, "grid start must not exceed end");
    require(step >= 1, ErrorKind::InvalidArgument, "grid step must be at least 1");
    std::vector<std::uint64_t> grid;
    for (std::uint64_t n = start; n <= end; n += step) {
        grid.push_back(n);
        if (end - n < step)
            break;
    }
    return grid;
}

SlopeFit fit_log_exponent(std::span<const ScanRow> rows)
{
    std::vector<std::pair<double, double>> points;
    SlopeFit fit;
    for (const ScanRow& row : rows) {
        if (!(std::fabs(row.residual) >= 1.0))
            continue;
        points.emplace_back(std::log(static_cast<double>(row.n)), std::log(std::fabs(row.residual)));
        if (fit.points_used == 0)
            fit.n_range = {row.n, row.n};
        fit.n_range.first = std::min(fit.n_range.first, row.n);
        fit.n_range.second = std::max(fit.n_range.second, row.n);
        ++fit.points_used;
    }
    require(points.size() >= 4, ErrorKind::InvalidArgument,
            "slope fit needs at least 4 rows with |residual| >= 1");

    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& [x, y] : points) {
        mean_x += x;
        mean_y += y;
    }
    mean_x /= static_cast<double>(points.size());
    mean_y /= static_cast<double>(points.size());
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
    }
    require(sxx > 0.0, ErrorKind::InvalidArgument, "slope fit needs at least two distinct n");
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    return fit;
}

RhReport rh_report(const SlopeFit& fit)
{
    RhReport report;
    report.fit = fit;
    if (fit.slope < kRhExponent) {
        report.classification = SlopeClass::BelowRhExponent;
        report.label = "below RH exponent 5/2";
    } else if (fit.slope < kUnconditionalExponent) {
        report.classification = SlopeClass::BetweenRhAndEnvelope;
        report.label = "between 5/2 and 3";
    } else {
        report.classification = SlopeClass::AboveEnvelope;
        report.label = "above unconditional envelope - investigate implementation";
    }
    report.disclaimer =
        "heuristic diagnostic of a finite-range fit; not evidence for or against RH";
    return report;
}

} // namespace gridcount
