#include "gridcount/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gridcount/error.hpp"

namespace gridcount {
namespace {

void check_grid(std::uint64_t n, std::uint64_t max_n, const OracleOptions& options)
{
    require(n >= 2, ErrorKind::InvalidArgument, "oracle grid side n must be at least 2");
    if (n > max_n && !options.force) {
        raise(ErrorKind::ResourceLimit,
              "oracle grid side " + std::to_string(n) + " exceeds guardrail "
                  + std::to_string(max_n) + " (use force to override)");
    }
}

} // namespace

CanonicalLine CanonicalLine::through(std::int64_t px, std::int64_t py, std::int64_t qx,
                                     std::int64_t qy)
{
    CanonicalLine line;
    line.a = qy - py;
    line.b = -(qx - px);
    require(line.a != 0 || line.b != 0, ErrorKind::InvalidArgument,
            "a line needs two distinct points");
    line.c = -(line.a * px + line.b * py);
    const std::int64_t g = std::gcd(std::gcd(line.a, line.b), line.c);
    line.a /= g;
    line.b /= g;
    line.c /= g;
    if (line.a < 0 || (line.a == 0 && line.b < 0)) {
        line.a = -line.a;
        line.b = -line.b;
        line.c = -line.c;
    }
    return line;
}

std::size_t CanonicalLineHash::operator()(const CanonicalLine& line) const noexcept
{
    std::size_t h = std::hash<std::int64_t>{}(line.a);
    h ^= std::hash<std::int64_t>{}(line.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::int64_t>{}(line.c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::uint64_t LineHistogram::lines_through(std::uint64_t p) const
{
    const auto it = counts.find(p);
    return it == counts.end() ? 0 : it->second;
}

std::uint64_t LineHistogram::lines_through_at_least(std::uint64_t p) const
{
    std::uint64_t total = 0;
    for (auto it = counts.lower_bound(p); it != counts.end(); ++it)
        total += it->second;
    return total;
}

std::uint64_t LineHistogram::pair_total() const
{
    std::uint64_t total = 0;
    for (const auto& [p, lines] : counts)
        total += p * (p - 1) / 2 * lines;
    return total;
}

LineHistogram oracle_line_histogram(std::uint64_t n, const OracleOptions& options)
{
    check_grid(n, kDefaultOracleLimit, options);
    const auto side = static_cast<std::int64_t>(n);
    const std::int64_t points = side * side;

    std::unordered_set<CanonicalLine, CanonicalLineHash> lines;
    lines.reserve(static_cast<std::size_t>(points * points / 2));
    for (std::int64_t u = 0; u < points; ++u) {
        for (std::int64_t v = u + 1; v < points; ++v)
            lines.insert(CanonicalLine::through(u % side, u / side, v % side, v / side));
    }

    // Gridpoints on each line are counted geometrically rather than from the
    // number of pairs that produced it.
    LineHistogram histogram;
    histogram.n = n;
    for (const CanonicalLine& line : lines) {
        std::uint64_t on_line = 0;
        if (line.b != 0) {
            for (std::int64_t x = 0; x < side; ++x) {
                const std::int64_t numerator = -(line.a * x + line.c);
                if (numerator % line.b == 0) {
                    const std::int64_t y = numerator / line.b;
                    if (y >= 0 && y < side)
                        ++on_line;
                }
            }
        } else {
            // vertical: a x + c = 0 with a = 1
            on_line = static_cast<std::uint64_t>(side);
        }
        ++histogram.counts[on_line];
    }
    return histogram;
}

std::map<std::uint64_t, std::uint64_t> oracle_segment_census(std::uint64_t n,
                                                             const OracleOptions& options)
{
    check_grid(n, kDefaultOracleLimit, options);
    const auto side = static_cast<std::int64_t>(n);
    const std::int64_t points = side * side;

    std::map<std::uint64_t, std::uint64_t> census;
    for (std::uint64_t p = 2; p <= n; ++p)
        census[p] = 0;
    for (std::int64_t u = 0; u < points; ++u) {
        for (std::int64_t v = u + 1; v < points; ++v) {
            const std::int64_t dx = std::llabs(v % side - u % side);
            const std::int64_t dy = std::llabs(v / side - u / side);
            ++census[static_cast<std::uint64_t>(std::gcd(dx, dy)) + 1];
        }
    }
    return census;
}

std::uint64_t oracle_segments(std::uint64_t n, std::uint64_t p, const OracleOptions& options)
{
    require(p >= 2, ErrorKind::InvalidArgument, "segment point count p must be at least 2");
    const auto census = oracle_segment_census(n, options);
    const auto it = census.find(p);
    return it == census.end() ? 0 : it->second;
}

std::uint64_t oracle_threshold_count(std::uint64_t n, const OracleOptions& options)
{
    require(n >= 1, ErrorKind::InvalidArgument, "grid side n must be at least 1");
    if (n > kThresholdOracleLimit && !options.force) {
        raise(ErrorKind::ResourceLimit,
              "threshold oracle grid side " + std::to_string(n) + " exceeds guardrail "
                  + std::to_string(kThresholdOracleLimit) + " (use force to override)");
    }
    const auto side = static_cast<std::int64_t>(n);
    const std::int64_t points = side * side;
    require(points <= 64, ErrorKind::ResourceLimit, "threshold oracle supports at most 64 gridpoints");

    using Mask = std::uint64_t;
    const Mask all = points == 64 ? ~Mask{0} : (Mask{1} << points) - 1;

    // Two constant functions: a1 = a2 = 0 with b of either sign.
    std::unordered_set<Mask> separable{Mask{0}, all};

    // Directions at which two gridpoints project equally have normals with
    // coordinates bounded by n - 1. The sum of two angularly adjacent such
    // normals lies strictly inside the cell between them, so normals bounded
    // by 2(n - 1) reach every cell of the direction arrangement.
    const std::int64_t bound = 2 * (side - 1);
    std::vector<std::int64_t> projection(static_cast<std::size_t>(points));
    std::vector<std::int64_t> levels;
    for (std::int64_t a1 = -bound; a1 <= bound; ++a1) {
        for (std::int64_t a2 = -bound; a2 <= bound; ++a2) {
            for (std::int64_t k = 0; k < points; ++k)
                projection[k] = a1 * (k % side) + a2 * (k / side);
            levels = projection;
            std::sort(levels.begin(), levels.end());
            levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
            // Offsets b halfway between adjacent projection values, doubled to
            // stay integral. A point is 0 iff 2 (a . x) + b2 <= 0.
            for (std::size_t level = 0; level + 1 < levels.size(); ++level) {
                const std::int64_t b2 = -(levels[level] + levels[level + 1]);
                Mask ones = 0;
                for (std::int64_t k = 0; k < points; ++k) {
                    if (2 * projection[k] + b2 > 0)
                        ones |= Mask{1} << k;
                }
                separable.insert(ones);
            }
        }
    }
    return separable.size();
}

} // namespace gridcount
