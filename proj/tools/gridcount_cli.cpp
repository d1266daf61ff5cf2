// gridcount command-line interface. Talks to the library only through the C
// API in gridcount/gridcount.h.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gridcount/gridcount.h"
#include "output.hpp"

namespace {

using gridcount::cli::Block;
using gridcount::cli::Cell;
using gridcount::cli::Format;

struct Failure {
    gc_status status;
    std::string message;
};

void check(gc_status status)
{
    if (status != GC_OK)
        throw Failure{status, gc_last_error()};
}

[[noreturn]] void fail(gc_status status, std::string message)
{
    throw Failure{status, std::move(message)};
}

struct TableDeleter {
    void operator()(gc_table* table) const noexcept { gc_table_destroy(table); }
};
using TableHandle = std::unique_ptr<gc_table, TableDeleter>;

struct GlobalOptions {
    Format format = Format::Table;
    std::uint64_t limit = 0;
    bool force = false;
    unsigned threads = 0;
};

// Builds the sieve for this invocation at max(needed, --limit), honoring the
// optional GRIDCOUNT_SIEVE_LIMIT cap.
TableHandle make_table(const GlobalOptions& global, std::uint64_t needed)
{
    const std::uint64_t limit = std::max<std::uint64_t>({needed, global.limit, 1});
    if (const char* cap_text = std::getenv("GRIDCOUNT_SIEVE_LIMIT"); cap_text && *cap_text) {
        char* end = nullptr;
        const unsigned long long cap = std::strtoull(cap_text, &end, 10);
        if (*end != '\0')
            fail(GC_ERR_INVALID_ARGUMENT, "GRIDCOUNT_SIEVE_LIMIT is not an integer");
        if (limit > cap) {
            fail(GC_ERR_RESOURCE_LIMIT, "sieve limit " + std::to_string(limit)
                                            + " exceeds GRIDCOUNT_SIEVE_LIMIT " + cap_text);
        }
    }
    gc_table* raw = nullptr;
    check(gc_table_create(limit, 0, &raw));
    return TableHandle(raw);
}

void check_grid_side(std::uint64_t n)
{
    if (n > gc_max_grid_side()) {
        fail(GC_ERR_RESOURCE_LIMIT, "grid side " + std::to_string(n)
                                        + " exceeds supported maximum "
                                        + std::to_string(gc_max_grid_side()));
    }
}

std::uint64_t needed_for(std::uint64_t n, std::uint64_t q)
{
    return gc_required_limit(n, q);
}

int run_fq(const GlobalOptions& global, std::uint64_t n, std::uint64_t q, bool direct)
{
    check_grid_side(n);
    gc_int128 f{};
    if (direct) {
        check(gc_f_direct(n, q, &f));
    } else {
        const auto table = make_table(global, needed_for(n, q));
        check(gc_f_fast(table.get(), n, q, &f));
    }
    gridcount::cli::emit_scalar(std::cout, global.format,
                                {{"n", "q", "f"}, {{Cell::number(n), Cell::number(q), Cell::number(f)}}});
    return 0;
}

int run_counts(const GlobalOptions& global, std::uint64_t n, std::uint64_t q)
{
    check_grid_side(n);
    // l_{>=q} and l_q reach down to f_{q-1}.
    const auto table = make_table(global, needed_for(n, q >= 2 ? q - 1 : q));
    gc_count_set counts{};
    check(gc_count_set_compute(table.get(), n, q, &counts));
    Block block{{"n", "q", "f", "segments", "lines_at_least", "lines_exactly"}, {}};
    block.rows.push_back({
        Cell::number(counts.n),
        Cell::number(counts.q),
        Cell::number(counts.f),
        Cell::number(counts.segments),
        counts.has_lines ? Cell::number(counts.lines_at_least) : Cell::null(),
        counts.has_lines ? Cell::number(counts.lines_exactly) : Cell::null(),
    });
    gridcount::cli::emit(std::cout, global.format, {block});
    return 0;
}

struct ScanArgs {
    std::uint64_t q = 1;
    std::uint64_t n_start = 128;
    std::uint64_t n_end = 8192;
    std::optional<std::uint64_t> step;
    double exponent = 3.0;
    bool fit = false;
};

std::vector<std::uint64_t> scan_grid(const ScanArgs& args)
{
    if (args.n_start < 1 || args.n_start > args.n_end)
        fail(GC_ERR_INVALID_ARGUMENT, "scan needs 1 <= n-start <= n-end");
    std::vector<std::uint64_t> grid;
    if (args.step) {
        if (*args.step == 0)
            fail(GC_ERR_INVALID_ARGUMENT, "scan step must be positive");
        for (std::uint64_t n = args.n_start; n <= args.n_end; n += *args.step) {
            grid.push_back(n);
            if (args.n_end - n < *args.step)
                break;
        }
    } else {
        for (std::uint64_t n = args.n_start; n <= args.n_end; n *= 2) {
            grid.push_back(n);
            if (n > args.n_end / 2)
                break;
        }
    }
    return grid;
}

int run_scan(const GlobalOptions& global, const ScanArgs& args)
{
    const auto grid = scan_grid(args);
    check_grid_side(grid.back());
    if (args.q == 0)
        fail(GC_ERR_INVALID_ARGUMENT, "gcd class q must be at least 1");
    const auto table = make_table(global, needed_for(grid.back(), args.q));
    std::vector<gc_scan_row> rows(grid.size());
    check(gc_scan_residuals(table.get(), args.q, grid.data(), grid.size(), args.exponent,
                            global.threads, rows.data()));

    std::vector<Block> blocks;
    Block scan{{"n", "q", "exact", "main", "residual", "normalized"}, {}};
    for (const auto& row : rows) {
        scan.rows.push_back({Cell::number(row.n), Cell::number(row.q), Cell::number(row.exact),
                             Cell::number(row.main), Cell::number(row.residual),
                             Cell::number(row.normalized)});
    }
    blocks.push_back(std::move(scan));

    if (args.fit) {
        gc_slope_fit fit{};
        check(gc_fit_log_exponent(rows.data(), rows.size(), &fit));
        gc_rh_report report{};
        check(gc_rh_report_classify(&fit, &report));
        Block summary{{"slope", "intercept", "points_used", "n_min", "n_max", "classification",
                       "note"},
                      {}};
        summary.rows.push_back({Cell::number(fit.slope), Cell::number(fit.intercept),
                                Cell::number(fit.points_used), Cell::number(fit.n_min),
                                Cell::number(fit.n_max), Cell::string(report.label),
                                Cell::string(report.disclaimer)});
        blocks.push_back(std::move(summary));
    }
    gridcount::cli::emit(std::cout, global.format, blocks);
    return 0;
}

int run_oracle(const GlobalOptions& global, std::uint64_t n, bool threshold)
{
    if (n < 2)
        fail(GC_ERR_INVALID_ARGUMENT, "oracle grid side n must be at least 2");
    const int force = global.force ? 1 : 0;
    std::vector<std::uint64_t> lines(n + 1), segments(n + 1);
    check(gc_oracle_line_histogram(n, force, lines.data(), lines.size()));
    check(gc_oracle_segment_census(n, force, segments.data(), segments.size()));

    std::vector<Block> blocks;
    Block histogram{{"n", "p", "lines"}, {}};
    Block census{{"n", "p", "segments"}, {}};
    for (std::uint64_t p = 2; p <= n; ++p) {
        histogram.rows.push_back({Cell::number(n), Cell::number(p), Cell::number(lines[p])});
        census.rows.push_back({Cell::number(n), Cell::number(p), Cell::number(segments[p])});
    }
    blocks.push_back(std::move(histogram));
    blocks.push_back(std::move(census));
    if (threshold) {
        std::uint64_t count = 0;
        check(gc_oracle_threshold_count(n, force, &count));
        blocks.push_back({{"n", "threshold_count"}, {{Cell::number(n), Cell::number(count)}}});
    }
    gridcount::cli::emit(std::cout, global.format, blocks);
    return 0;
}

int run_errterms(const GlobalOptions& global, std::uint64_t m_max, std::uint64_t every)
{
    if (m_max < 1)
        fail(GC_ERR_INVALID_ARGUMENT, "m-max must be at least 1");
    if (every < 1)
        fail(GC_ERR_INVALID_ARGUMENT, "every must be at least 1");
    const auto table = make_table(global, m_max);
    Block block{{"m", "phi_sum", "e_phi", "e_r"}, {}};
    for (std::uint64_t m = every; m <= m_max; m += every) {
        std::uint64_t phi_sum = 0;
        double e_phi = 0.0, e_r = 0.0;
        check(gc_summatory_phi(table.get(), m, &phi_sum));
        check(gc_e_phi(table.get(), m, &e_phi));
        check(gc_e_r(table.get(), m, &e_r));
        block.rows.push_back(
            {Cell::number(m), Cell::number(phi_sum), Cell::number(e_phi), Cell::number(e_r)});
        if (m_max - m < every)
            break;
    }
    gridcount::cli::emit(std::cout, global.format, {block});
    return 0;
}

int run_threshold(const GlobalOptions& global, std::uint64_t n)
{
    check_grid_side(n);
    const auto table = make_table(global, needed_for(n, 1));
    gc_int128 count{};
    check(gc_threshold_count(table.get(), n, &count));
    gridcount::cli::emit_scalar(std::cout, global.format,
                                {{"n", "threshold"}, {{Cell::number(n), Cell::number(count)}}});
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact and asymptotic counts of lines and segments in an n x n grid"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    const std::map<std::string, Format> formats{
        {"table", Format::Table}, {"csv", Format::Csv}, {"json-lines", Format::JsonLines}};
    app.add_option("--format", global.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--limit", global.limit, "Minimum totient sieve limit");
    app.add_flag("--force", global.force, "Lift oracle size guardrails");
    app.add_option("--threads", global.threads, "Worker threads for scans (0 = all cores)");

    std::uint64_t n = 0, q = 0;
    bool direct = false;
    auto* fq = app.add_subcommand("fq", "f_q(n), the gcd-class weighted pair count");
    fq->add_option("--n", n, "Grid side")->required();
    fq->add_option("--q", q, "gcd class")->required();
    fq->add_flag("--direct", direct, "Use the O(n^2) definition instead of the totient sum");

    auto* counts = app.add_subcommand("counts", "f, segments, lines through >= q and exactly q points");
    counts->add_option("--n", n, "Grid side")->required();
    counts->add_option("--q", q, "gcd class / points per line")->required();

    ScanArgs scan_args;
    std::uint64_t step = 0;
    bool geometric = false;
    auto* scan = app.add_subcommand("scan", "Residuals of f_q(n) against its main term");
    scan->add_option("--q", scan_args.q, "gcd class")->required();
    scan->add_option("--n-start", scan_args.n_start, "First n")->capture_default_str();
    scan->add_option("--n-end", scan_args.n_end, "Last n (inclusive bound)")->capture_default_str();
    auto* geometric_flag = scan->add_flag("--geometric", geometric, "Double n each step (default)");
    scan->add_option("--step", step, "Arithmetic step")->excludes(geometric_flag);
    scan->add_option("--exponent", scan_args.exponent, "Exponent e in |residual| / n^e")
        ->capture_default_str();
    scan->add_flag("--fit", scan_args.fit, "Append log-log slope fit and classification");

    bool threshold_flag = false;
    auto* oracle = app.add_subcommand("oracle", "Brute-force line histogram and segment census");
    oracle->add_option("--n", n, "Grid side")->required();
    oracle->add_flag("--threshold", threshold_flag, "Also count separable dichotomies");

    std::uint64_t m_max = 0, every = 1;
    auto* errterms = app.add_subcommand("errterms", "Phi(m), E_Phi(m), E_R(m)");
    errterms->add_option("--m-max", m_max, "Largest m")->required();
    errterms->add_option("--every", every, "Row spacing")->capture_default_str();

    auto* threshold = app.add_subcommand("threshold", "Number of threshold functions t(n)");
    threshold->add_option("--n", n, "Grid side")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        if (*fq)
            return run_fq(global, n, q, direct);
        if (*counts)
            return run_counts(global, n, q);
        if (*scan) {
            if (step != 0 || scan->count("--step") > 0)
                scan_args.step = step;
            return run_scan(global, scan_args);
        }
        if (*oracle)
            return run_oracle(global, n, threshold_flag);
        if (*errterms)
            return run_errterms(global, m_max, every);
        if (*threshold)
            return run_threshold(global, n);
    } catch (const Failure& failure) {
        std::cerr << "error: " << gc_status_name(failure.status) << ": " << failure.message << '\n';
        return 1;
    }
    return 2;
}
