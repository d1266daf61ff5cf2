#include "gridcount/gridcount.h"

#include <algorithm>
#include <cstring>
#include <map>
#include <new>
#include <string>
#include <vector>

#include "gridcount/asympt.hpp"
#include "gridcount/counts.hpp"
#include "gridcount/error.hpp"
#include "gridcount/oracle.hpp"
#include "gridcount/totient.hpp"

struct gc_table {
    gridcount::TotientTable table;
};

namespace {

using gridcount::ErrorKind;
using gridcount::WideInt;

thread_local std::string last_error;

gc_status to_status(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return GC_ERR_INVALID_ARGUMENT;
    case ErrorKind::Precondition:    return GC_ERR_PRECONDITION;
    case ErrorKind::ResourceLimit:   return GC_ERR_RESOURCE_LIMIT;
    case ErrorKind::Internal:        return GC_ERR_INTERNAL;
    }
    return GC_ERR_INTERNAL;
}

// Runs body, translating every exception into a status. Nothing may escape
// across the C boundary.
template <class Body>
gc_status guarded(Body&& body) noexcept
{
    try {
        body();
        return GC_OK;
    } catch (const gridcount::Error& e) {
        last_error = e.what();
        return to_status(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return GC_ERR_RESOURCE_LIMIT;
    } catch (const std::exception& e) {
        last_error = e.what();
        return GC_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return GC_ERR_INTERNAL;
    }
}

void require_pointer(const void* p, const char* name)
{
    if (p == nullptr)
        gridcount::raise(ErrorKind::InvalidArgument, std::string(name) + " must not be null");
}

const gridcount::TotientTable& table_of(const gc_table* table)
{
    require_pointer(table, "table");
    return table->table;
}

gc_int128 pack(WideInt value)
{
    const auto bits = static_cast<unsigned __int128>(value);
    return gc_int128{static_cast<uint64_t>(bits), static_cast<int64_t>(bits >> 64)};
}

WideInt unpack(gc_int128 value)
{
    const auto bits = (static_cast<unsigned __int128>(static_cast<uint64_t>(value.hi)) << 64)
        | value.lo;
    return static_cast<WideInt>(bits);
}

void fill_histogram(const std::map<std::uint64_t, std::uint64_t>& source, uint64_t n,
                    uint64_t* counts, size_t counts_length)
{
    require_pointer(counts, "counts");
    if (counts_length < n + 1)
        gridcount::raise(ErrorKind::InvalidArgument,
                         "counts buffer needs " + std::to_string(n + 1) + " entries");
    std::fill(counts, counts + counts_length, uint64_t{0});
    for (const auto& [p, lines] : source) {
        if (p < counts_length)
            counts[p] = lines;
    }
}

template <class Fn>
gc_status wide_result(gc_int128* out, Fn&& fn) noexcept
{
    return guarded([&] {
        require_pointer(out, "out");
        *out = pack(fn());
    });
}

template <class Fn>
gc_status real_result(double* out, Fn&& fn) noexcept
{
    return guarded([&] {
        require_pointer(out, "out");
        *out = fn();
    });
}

} // namespace

extern "C" {

const char* gc_last_error(void) { return last_error.c_str(); }

const char* gc_status_name(gc_status status)
{
    switch (status) {
    case GC_OK:                   return "ok";
    case GC_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case GC_ERR_PRECONDITION:     return "precondition";
    case GC_ERR_RESOURCE_LIMIT:   return "resource-limit";
    case GC_ERR_INTERNAL:         return "internal";
    }
    return "unknown";
}

gc_status gc_int128_format(gc_int128 value, char* buffer, size_t buffer_size)
{
    return guarded([&] {
        require_pointer(buffer, "buffer");
        const std::string text = gridcount::to_decimal(unpack(value));
        if (text.size() + 1 > buffer_size)
            gridcount::raise(ErrorKind::InvalidArgument,
                             "buffer needs " + std::to_string(text.size() + 1) + " bytes");
        std::memcpy(buffer, text.c_str(), text.size() + 1);
    });
}

uint64_t gc_max_grid_side(void) { return gridcount::kMaxGridSide; }

size_t gc_table_footprint(uint64_t limit) { return gridcount::TotientTable::footprint_bytes(limit); }

gc_status gc_table_create(uint64_t limit, size_t memory_budget_bytes, gc_table** out)
{
    return guarded([&] {
        require_pointer(out, "out");
        *out = nullptr;
        gridcount::TotientBuildOptions options;
        if (memory_budget_bytes != 0)
            options.memory_budget_bytes = memory_budget_bytes;
        *out = new gc_table{gridcount::TotientTable::build(limit, options)};
    });
}

void gc_table_destroy(gc_table* table) { delete table; }

uint64_t gc_table_limit(const gc_table* table) { return table ? table->table.limit() : 0; }

gc_status gc_phi(const gc_table* table, uint64_t i, uint32_t* out)
{
    return guarded([&] {
        require_pointer(out, "out");
        *out = table_of(table).phi(i);
    });
}

gc_status gc_summatory_phi(const gc_table* table, uint64_t i, uint64_t* out)
{
    return guarded([&] {
        require_pointer(out, "out");
        *out = gridcount::summatory_phi(table_of(table), i);
    });
}

gc_status gc_e_phi(const gc_table* table, uint64_t i, double* out)
{
    return real_result(out, [&] { return gridcount::e_phi(table_of(table), i); });
}

gc_status gc_e_r(const gc_table* table, uint64_t i, double* out)
{
    return real_result(out, [&] { return gridcount::e_r(table_of(table), i); });
}

gc_status gc_check_partial_summation(const double* a, const double* b, size_t length, int* out)
{
    return guarded([&] {
        require_pointer(out, "out");
        if (length > 0) {
            require_pointer(a, "a");
            require_pointer(b, "b");
        }
        *out = gridcount::check_partial_summation({a, length}, {b, length}) ? 1 : 0;
    });
}

uint64_t gc_required_limit(uint64_t n, uint64_t q) { return gridcount::required_table_limit({n, q}); }

gc_status gc_f_direct(uint64_t n, uint64_t q, gc_int128* out)
{
    return wide_result(out, [&] { return gridcount::f_direct({n, q}); });
}

gc_status gc_f_fast(const gc_table* table, uint64_t n, uint64_t q, gc_int128* out)
{
    return wide_result(out, [&] { return gridcount::f_fast({n, q}, table_of(table)); });
}

gc_status gc_decompose_lemma(const gc_table* table, uint64_t n, uint64_t q, gc_lemma* out)
{
    return guarded([&] {
        require_pointer(out, "out");
        const auto lemma = gridcount::decompose_lemma({n, q}, table_of(table));
        *out = gc_lemma{lemma.m, lemma.t, pack(lemma.s1_doubled), pack(lemma.s2_doubled)};
    });
}

gc_status gc_segments_count(const gc_table* table, uint64_t n, uint64_t p, gc_int128* out)
{
    return wide_result(out, [&] { return gridcount::segments_count(n, p, table_of(table)); });
}

gc_status gc_lines_at_least(const gc_table* table, uint64_t n, uint64_t q, gc_int128* out)
{
    return wide_result(out, [&] { return gridcount::lines_at_least(n, q, table_of(table)); });
}

gc_status gc_lines_exactly(const gc_table* table, uint64_t n, uint64_t q, gc_int128* out)
{
    return wide_result(out, [&] { return gridcount::lines_exactly(n, q, table_of(table)); });
}

gc_status gc_threshold_count(const gc_table* table, uint64_t n, gc_int128* out)
{
    return wide_result(out, [&] { return gridcount::threshold_count(n, table_of(table)); });
}

gc_status gc_count_set_compute(const gc_table* table, uint64_t n, uint64_t q, gc_count_set* out)
{
    return guarded([&] {
        require_pointer(out, "out");
        const auto counts = gridcount::count_set({n, q}, table_of(table));
        gc_count_set result{};
        result.n = counts.n;
        result.q = counts.q;
        result.f = pack(counts.f);
        result.segments = pack(counts.segments);
        result.has_lines = counts.lines_at_least.has_value() ? 1 : 0;
        if (result.has_lines) {
            result.lines_at_least = pack(*counts.lines_at_least);
            result.lines_exactly = pack(*counts.lines_exactly);
        }
        *out = result;
    });
}

gc_status gc_oracle_line_histogram(uint64_t n, int force, uint64_t* counts, size_t counts_length)
{
    return guarded([&] {
        const auto histogram = gridcount::oracle_line_histogram(n, {force != 0});
        fill_histogram(histogram.counts, n, counts, counts_length);
    });
}

gc_status gc_oracle_segment_census(uint64_t n, int force, uint64_t* counts, size_t counts_length)
{
    return guarded([&] {
        const auto census = gridcount::oracle_segment_census(n, {force != 0});
        fill_histogram(census, n, counts, counts_length);
    });
}

gc_status gc_oracle_segments(uint64_t n, uint64_t p, int force, uint64_t* out)
{
    return guarded([&] {
        require_pointer(out, "out");
        *out = gridcount::oracle_segments(n, p, {force != 0});
    });
}

gc_status gc_oracle_threshold_count(uint64_t n, int force, uint64_t* out)
{
    return guarded([&] {
        require_pointer(out, "out");
        *out = gridcount::oracle_threshold_count(n, {force != 0});
    });
}

gc_status gc_main_term_f(uint64_t n, uint64_t q, double* out)
{
    return real_result(out, [&] { return gridcount::main_term_f(n, q); });
}

gc_status gc_main_term_segments(uint64_t n, uint64_t q, double* out)
{
    return real_result(out, [&] { return gridcount::main_term_segments(n, q); });
}

gc_status gc_main_term_lines_ge(uint64_t n, uint64_t q, double* out)
{
    return real_result(out, [&] { return gridcount::main_term_lines_ge(n, q); });
}

gc_status gc_main_term_lines_eq(uint64_t n, uint64_t q, double* out)
{
    return real_result(out, [&] { return gridcount::main_term_lines_eq(n, q); });
}

gc_status gc_residual(const gc_table* table, uint64_t n, uint64_t q, double* out)
{
    return real_result(out, [&] { return gridcount::residual(n, q, table_of(table)); });
}

gc_status gc_scan_residuals(const gc_table* table, uint64_t q, const uint64_t* n_values,
                            size_t count, double exponent, unsigned threads, gc_scan_row* rows)
{
    return guarded([&] {
        if (count > 0) {
            require_pointer(n_values, "n_values");
            require_pointer(rows, "rows");
        }
        const auto scan = gridcount::scan_residuals(q, {n_values, count}, table_of(table),
                                                    {exponent, threads});
        for (std::size_t i = 0; i < scan.size(); ++i) {
            const auto& row = scan[i];
            rows[i] = gc_scan_row{row.n, row.q, pack(row.exact), row.main, row.residual,
                                  row.normalized};
        }
    });
}

gc_status gc_fit_log_exponent(const gc_scan_row* rows, size_t count, gc_slope_fit* out)
{
    return guarded([&] {
        require_pointer(out, "out");
        if (count > 0)
            require_pointer(rows, "rows");
        std::vector<gridcount::ScanRow> converted(count);
        for (std::size_t i = 0; i < count; ++i) {
            converted[i] = gridcount::ScanRow{rows[i].n, rows[i].q, unpack(rows[i].exact),
                                              rows[i].main, rows[i].residual, rows[i].normalized};
        }
        const auto fit = gridcount::fit_log_exponent(converted);
        *out = gc_slope_fit{fit.slope, fit.intercept, fit.points_used, fit.n_range.first,
                            fit.n_range.second};
    });
}

gc_status gc_rh_report_classify(const gc_slope_fit* fit, gc_rh_report* out)
{
    // Labels are fixed per class, so static copies outlive the call.
    static const std::string labels[] = {
        gridcount::rh_report({0.0}).label,
        gridcount::rh_report({2.75}).label,
        gridcount::rh_report({3.5}).label,
    };
    static const std::string disclaimer = gridcount::rh_report({}).disclaimer;
    return guarded([&] {
        require_pointer(fit, "fit");
        require_pointer(out, "out");
        gridcount::SlopeFit source;
        source.slope = fit->slope;
        source.intercept = fit->intercept;
        source.points_used = fit->points_used;
        source.n_range = {fit->n_min, fit->n_max};
        const auto report = gridcount::rh_report(source);
        const auto index = static_cast<int>(report.classification);
        out->classification = static_cast<gc_slope_class>(index);
        out->label = labels[index].c_str();
        out->disclaimer = disclaimer.c_str();
    });
}

} // extern "C"
