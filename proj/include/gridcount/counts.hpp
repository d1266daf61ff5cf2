#pragma once

#include <cstdint>
#include <optional>

#include "gridcount/totient.hpp"
#include "gridcount/wide_int.hpp"

namespace gridcount {

// One (n, q) address: grid {0..n-1}^2 and gcd class q.
struct GridQuery {
    std::uint64_t n = 1;
    std::uint64_t q = 1;
};

// Witness of f_q(n+1) = 8 s1 + 8 (t+1) s2 with n = q m + t. s1 and s2 carry
// half-integers, so both are stored doubled.
struct LemmaDecomposition {
    std::uint64_t m = 0;
    std::uint64_t t = 0;
    WideInt s1_doubled = 0;
    WideInt s2_doubled = 0;

    // 4 (2 s1) + 4 (t+1) (2 s2); equals f_q(n+1).
    WideInt reconstruct() const;
};

struct CountSet {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    WideInt f = 0;
    WideInt segments = 0;                  // s_{q+1}(n)
    std::optional<WideInt> lines_at_least; // l_{>=q}(n), q >= 2 only
    std::optional<WideInt> lines_exactly;  // l_q(n), q >= 2 only
};

// Largest totient index f_fast touches for this query (0 when the sum is empty).
std::uint64_t required_table_limit(const GridQuery& query);

// Sum over -n < i, j < n with gcd(i, j) = q of (n - |i|)(n - |j|), by
// enumerating all difference vectors. gcd(0, k) = |k|, gcd(0, 0) = 0.
WideInt f_direct(const GridQuery& query);

// Same value in O(n/q) from the totient table:
//   f_q(n) = 4 Sum_{i=1}^{floor((n-1)/q)} (n - q i)(2n - q i) phi(i).
WideInt f_fast(const GridQuery& query, const TotientTable& table);

LemmaDecomposition decompose_lemma(const GridQuery& query, const TotientTable& table);

// s_p(n): segments between gridpoints with exactly p - 2 interior gridpoints.
WideInt segments_count(std::uint64_t n, std::uint64_t p, const TotientTable& table);

// l_{>=q}(n) = (f_{q-1}(n) - f_q(n)) / 2.
WideInt lines_at_least(std::uint64_t n, std::uint64_t q, const TotientTable& table);

// l_q(n) = (f_{q+1}(n) - 2 f_q(n) + f_{q-1}(n)) / 2.
WideInt lines_exactly(std::uint64_t n, std::uint64_t q, const TotientTable& table);

// Number of two-dimensional threshold functions on the n x n grid, f_1(n) + 2.
WideInt threshold_count(std::uint64_t n, const TotientTable& table);

CountSet count_set(const GridQuery& query, const TotientTable& table);

} // namespace gridcount
