#include <doctest.h>

#include <string>

#include "gridcount/counts.hpp"
#include "gridcount/error.hpp"
#include "support.hpp"

using namespace gridcount;
using gridcount::testing::choose2;

namespace {

const TotientTable& shared_table()
{
    static const TotientTable table = TotientTable::build(200000);
    return table;
}

template <class Fn>
Error caught(Fn&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e;
    }
    FAIL("expected gridcount::Error");
    return Error(ErrorKind::Internal, "unreachable");
}

} // namespace

TEST_CASE("f_direct examples")
{
    CHECK(f_direct({2, 1}) == 12);
    CHECK(f_direct({2, 2}) == 0);
    CHECK(f_direct({3, 2}) == 16);
    CHECK(f_direct({3, 1}) == 56);
    CHECK(f_direct({1, 1}) == 0);
}

TEST_CASE("f_fast examples")
{
    const auto& table = shared_table();
    CHECK(f_fast({2, 1}, table) == 12);
    CHECK(f_fast({3, 1}, table) == 56);
    CHECK(f_fast({5, 7}, table) == 0);
    CHECK(f_fast({1, 1}, table) == 0);
}

TEST_CASE("f_fast equals f_direct on 1..60 x 1..12")
{
    const auto& table = shared_table();
    for (std::uint64_t n = 1; n <= 60; ++n)
        for (std::uint64_t q = 1; q <= 12; ++q)
            REQUIRE(f_fast({n, q}, table) == f_direct({n, q}));
}

TEST_CASE("f is even and nondecreasing in n")
{
    for (std::uint64_t q = 1; q <= 6; ++q) {
        WideInt previous = 0;
        for (std::uint64_t n = 1; n <= 40; ++n) {
            const WideInt f = f_direct({n, q});
            REQUIRE(f % 2 == 0);
            REQUIRE(f >= previous);
            previous = f;
        }
    }
}

TEST_CASE("every ordered pair of distinct gridpoints has one difference gcd")
{
    const auto& table = shared_table();
    for (std::uint64_t n = 2; n <= 40; ++n) {
        WideInt total = 0;
        for (std::uint64_t q = 1; q < n; ++q)
            total += f_fast({n, q}, table);
        const WideInt points = static_cast<WideInt>(n) * n;
        REQUIRE(total == points * (points - 1));
    }
}

TEST_CASE("segments_count examples")
{
    const auto& table = shared_table();
    CHECK(segments_count(2, 2, table) == 6);
    CHECK(segments_count(3, 3, table) == 8);
    CHECK(segments_count(2, 3, table) == 0);
    CHECK(segments_count(3, 2, table) == 28);
}

TEST_CASE("lines_at_least examples")
{
    const auto& table = shared_table();
    CHECK(lines_at_least(3, 2, table) == 20);
    CHECK(lines_at_least(2, 2, table) == 6);
    CHECK(lines_at_least(2, 3, table) == 0);
}

TEST_CASE("lines_exactly examples")
{
    const auto& table = shared_table();
    CHECK(lines_exactly(3, 2, table) == 12);
    CHECK(lines_exactly(3, 3, table) == 8);
    CHECK(lines_exactly(4, 5, table) == 0);
}

TEST_CASE("line counts telescope and cover every point pair")
{
    const auto& table = shared_table();
    for (std::uint64_t n = 2; n <= 25; ++n) {
        WideInt pairs = 0;
        WideInt tail = 0;
        CHECK(lines_at_least(n, n + 1, table) == 0);
        for (std::uint64_t q = n; q >= 2; --q) {
            const WideInt exactly = lines_exactly(n, q, table);
            tail += exactly;
            REQUIRE(lines_at_least(n, q, table) == tail);
            pairs += static_cast<WideInt>(choose2(q)) * exactly;
        }
        REQUIRE(pairs == static_cast<WideInt>(choose2(n * n)));
    }
}

TEST_CASE("threshold_count examples")
{
    const auto& table = shared_table();
    CHECK(threshold_count(1, table) == 2);
    CHECK(threshold_count(2, table) == 14);
    CHECK(threshold_count(3, table) == 58);
}

TEST_CASE("decompose_lemma examples")
{
    const auto& table = shared_table();

    const auto a = decompose_lemma({2, 1}, table);
    CHECK(a.m == 2);
    CHECK(a.t == 0);
    CHECK(a.reconstruct() == f_fast({3, 1}, table));
    CHECK(a.reconstruct() == 56);

    const auto b = decompose_lemma({5, 2}, table);
    CHECK(b.m == 2);
    CHECK(b.t == 1);
    CHECK(b.reconstruct() == f_fast({6, 2}, table));

    const auto c = decompose_lemma({3, 5}, table);
    CHECK(c.m == 0);
    CHECK(c.t == 3);
    CHECK(c.s1_doubled == 0);
    CHECK(c.s2_doubled == 0);
    CHECK(f_fast({4, 5}, table) == 0);
}

TEST_CASE("decompose_lemma reconstructs f_q(n+1)")
{
    const auto& table = shared_table();
    for (std::uint64_t n = 1; n <= 50; ++n) {
        for (std::uint64_t q = 1; q <= 10; ++q) {
            const auto lemma = decompose_lemma({n, q}, table);
            REQUIRE(lemma.m * q + lemma.t == n);
            REQUIRE(lemma.t < q);
            REQUIRE(lemma.reconstruct() == f_direct({n + 1, q}));
        }
    }
}

TEST_CASE("count_set fields")
{
    const auto& table = shared_table();
    const auto with_lines = count_set({3, 2}, table);
    CHECK(with_lines.f == 16);
    CHECK(with_lines.segments == 8);
    REQUIRE(with_lines.lines_at_least.has_value());
    CHECK(*with_lines.lines_at_least == 20);
    CHECK(*with_lines.lines_exactly == 12);

    const auto no_lines = count_set({3, 1}, table);
    CHECK(no_lines.f == 56);
    CHECK(no_lines.segments == 28);
    CHECK_FALSE(no_lines.lines_at_least.has_value());
    CHECK_FALSE(no_lines.lines_exactly.has_value());
}

TEST_CASE("wide integer path beyond 64 bits")
{
    const auto table = TotientTable::build(100000);
    const WideInt f = f_fast({100000, 1}, table);
    CHECK(f > static_cast<WideInt>(INT64_MAX));
    CHECK(f % 2 == 0);
    // 6 n^4 / pi^2 ~ 6.08e19
    CHECK(to_double(f) == doctest::Approx(6.0e20 / 9.869604401089358).epsilon(1e-3));
}

TEST_CASE("counts errors")
{
    const auto small = TotientTable::build(5);
    const auto too_small = caught([&] { (void)f_fast({100, 1}, small); });
    CHECK(too_small.kind() == ErrorKind::Precondition);
    CHECK(std::string(too_small.what()).find("required limit 99") != std::string::npos);
    CHECK(caught([&] { (void)decompose_lemma({100, 1}, small); }).kind() == ErrorKind::Precondition);

    CHECK(caught([&] { (void)f_fast({0, 1}, small); }).kind() == ErrorKind::InvalidArgument);
    CHECK(caught([&] { (void)f_direct({3, 0}); }).kind() == ErrorKind::InvalidArgument);
    CHECK(caught([&] { (void)lines_at_least(3, 1, small); }).kind() == ErrorKind::InvalidArgument);
    CHECK(caught([&] { (void)lines_exactly(3, 1, small); }).kind() == ErrorKind::InvalidArgument);
    CHECK(caught([&] { (void)segments_count(3, 1, small); }).kind() == ErrorKind::InvalidArgument);
    CHECK(caught([&] { (void)f_fast({kMaxGridSide + 1, kMaxGridSide}, small); }).kind()
          == ErrorKind::ResourceLimit);
}

TEST_CASE("decimal rendering")
{
    CHECK(to_decimal(0) == "0");
    CHECK(to_decimal(-42) == "-42");
    const WideInt big = static_cast<WideInt>(1) << 100;
    CHECK(to_decimal(big) == "1267650600228229401496703205376");
    CHECK(parse_wide(to_decimal(big)) == big);
    CHECK(parse_wide("-17") == -17);
    CHECK_THROWS_AS(parse_wide("12a"), Error);
    CHECK_THROWS_AS(parse_wide(""), Error);
}
