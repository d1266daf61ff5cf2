#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>

namespace gridcount {

// Brute-force geometry on small grids, independent of the totient machinery.

inline constexpr std::uint64_t kDefaultOracleLimit = 25;
inline constexpr std::uint64_t kThresholdOracleLimit = 4;

struct OracleOptions {
    // Lifts the size guardrails.
    bool force = false;
};

// The line a x + b y + c = 0 in lowest terms, with a > 0 or (a = 0, b > 0).
struct CanonicalLine {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    static CanonicalLine through(std::int64_t px, std::int64_t py, std::int64_t qx, std::int64_t qy);

    bool contains(std::int64_t x, std::int64_t y) const noexcept { return a * x + b * y + c == 0; }

    friend bool operator==(const CanonicalLine&, const CanonicalLine&) = default;
};

struct CanonicalLineHash {
    std::size_t operator()(const CanonicalLine& line) const noexcept;
};

struct LineHistogram {
    std::uint64_t n = 0;
    // point count p -> number of lines through exactly p gridpoints
    std::map<std::uint64_t, std::uint64_t> counts;

    std::uint64_t lines_through(std::uint64_t p) const;
    std::uint64_t lines_through_at_least(std::uint64_t p) const;
    // Sum_p C(p, 2) counts[p]; equals C(n^2, 2).
    std::uint64_t pair_total() const;
};

LineHistogram oracle_line_histogram(std::uint64_t n, const OracleOptions& options = {});

// p -> unordered gridpoint pairs whose difference gcd is p - 1.
std::map<std::uint64_t, std::uint64_t> oracle_segment_census(std::uint64_t n,
                                                             const OracleOptions& options = {});

std::uint64_t oracle_segments(std::uint64_t n, std::uint64_t p, const OracleOptions& options = {});

// Dichotomies d of the grid with d = 0 exactly where a1 x + a2 y + b <= 0 for
// some real (a1, a2, b).
std::uint64_t oracle_threshold_count(std::uint64_t n, const OracleOptions& options = {});

} // namespace gridcount
