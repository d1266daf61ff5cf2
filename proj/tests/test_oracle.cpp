#include <doctest.h>

#include <random>

#include "gridcount/counts.hpp"
#include "gridcount/error.hpp"
#include "gridcount/oracle.hpp"
#include "support.hpp"

using namespace gridcount;
using gridcount::testing::choose2;

TEST_CASE("oracle_line_histogram examples")
{
    const auto two = oracle_line_histogram(2);
    CHECK(two.counts == std::map<std::uint64_t, std::uint64_t>{{2, 6}});
    CHECK(two.pair_total() == choose2(4));

    const auto three = oracle_line_histogram(3);
    CHECK(three.counts == std::map<std::uint64_t, std::uint64_t>{{2, 12}, {3, 8}});
    CHECK(three.lines_through_at_least(2) == 20);

    const auto four = oracle_line_histogram(4);
    CHECK(four.counts == std::map<std::uint64_t, std::uint64_t>{{2, 48}, {3, 4}, {4, 10}});
}

TEST_CASE("histogram support and pair identity")
{
    for (std::uint64_t n = 2; n <= 12; ++n) {
        const auto histogram = oracle_line_histogram(n);
        REQUIRE(histogram.counts.begin()->first >= 2);
        REQUIRE(histogram.counts.rbegin()->first <= n);
        REQUIRE(histogram.pair_total() == choose2(n * n));
    }
}

TEST_CASE("oracle_segments examples")
{
    CHECK(oracle_segments(2, 2) == 6);
    CHECK(oracle_segments(3, 3) == 8);
    CHECK(oracle_segments(3, 5) == 0);
    CHECK(oracle_segments(3, 2) == 28);
}

TEST_CASE("oracle_threshold_count examples")
{
    CHECK(oracle_threshold_count(1) == 2);
    CHECK(oracle_threshold_count(2) == 14);
    CHECK(oracle_threshold_count(3) == 58);
    CHECK(oracle_threshold_count(4) == 174);
}

TEST_CASE("oracle agrees with the closed formulas on small grids")
{
    const auto table = TotientTable::build(64);
    for (std::uint64_t n = 2; n <= 10; ++n) {
        const auto histogram = oracle_line_histogram(n);
        const auto census = oracle_segment_census(n);
        for (std::uint64_t q = 2; q <= n; ++q) {
            REQUIRE(histogram.lines_through(q) == static_cast<std::uint64_t>(lines_exactly(n, q, table)));
            REQUIRE(histogram.lines_through_at_least(q)
                    == static_cast<std::uint64_t>(lines_at_least(n, q, table)));
            REQUIRE(census.at(q) == static_cast<std::uint64_t>(segments_count(n, q, table)));
        }
    }
}

TEST_CASE("canonical line is the same for any two points on it")
{
    auto rng = gridcount::testing::seeded_rng(7);
    std::uniform_int_distribution<std::int64_t> coord(-50, 50);
    std::uniform_int_distribution<std::int64_t> step(-6, 6);
    std::uniform_int_distribution<std::int64_t> multiple(-5, 5);
    int checked = 0;
    while (checked < 2000) {
        const std::int64_t px = coord(rng), py = coord(rng);
        const std::int64_t dx = step(rng), dy = step(rng);
        const std::int64_t k1 = multiple(rng), k2 = multiple(rng);
        if ((dx == 0 && dy == 0) || k1 == 0 || k2 == 0 || k1 == k2)
            continue;
        // P, P + k1 d, P + k2 d are collinear and distinct.
        const auto first = CanonicalLine::through(px, py, px + k1 * dx, py + k1 * dy);
        const auto second = CanonicalLine::through(px + k1 * dx, py + k1 * dy, px + k2 * dx, py + k2 * dy);
        const auto reversed = CanonicalLine::through(px + k2 * dx, py + k2 * dy, px, py);
        REQUIRE(first == second);
        REQUIRE(first == reversed);
        REQUIRE((first.a > 0 || (first.a == 0 && first.b > 0)));
        REQUIRE(std::gcd(std::gcd(first.a, first.b), first.c) == 1);
        REQUIRE(first.contains(px, py));
        ++checked;
    }
}

TEST_CASE("oracle guardrails")
{
    CHECK_THROWS_AS(oracle_line_histogram(1), Error);
    CHECK_THROWS_AS(oracle_segments(3, 1), Error);
    try {
        (void)oracle_line_histogram(26);
        FAIL("expected resource limit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ResourceLimit);
    }
    try {
        (void)oracle_threshold_count(5);
        FAIL("expected resource limit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ResourceLimit);
    }
    CHECK_THROWS_AS(CanonicalLine::through(1, 1, 1, 1), Error);

    // force lifts the guardrail
    const auto table = TotientTable::build(64);
    CHECK(oracle_threshold_count(5, {.force = true})
          == static_cast<std::uint64_t>(threshold_count(5, table)));
    CHECK(oracle_line_histogram(26, {.force = true}).lines_through(26)
          == static_cast<std::uint64_t>(lines_exactly(26, 26, table)));
}
