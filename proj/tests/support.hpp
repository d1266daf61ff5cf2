#pragma once

// Test-only reference computations, written without the totient sieve or the
// library's counting code.

#include <cstdint>
#include <numeric>
#include <random>

#include "gridcount/wide_int.hpp"

namespace gridcount::testing {

inline std::uint64_t brute_phi(std::uint64_t k)
{
    std::uint64_t count = 0;
    for (std::uint64_t x = 1; x <= k; ++x)
        count += std::gcd(x, k) == 1;
    return count;
}

inline std::uint64_t brute_summatory_phi(std::uint64_t i)
{
    std::uint64_t total = 0;
    for (std::uint64_t j = 1; j <= i; ++j)
        total += brute_phi(j);
    return total;
}

inline std::uint64_t choose2(std::uint64_t k) { return k * (k - 1) / 2; }

inline std::mt19937_64 seeded_rng(std::uint64_t salt = 0)
{
    return std::mt19937_64(0x5eed'0000ULL + salt);
}

} // namespace gridcount::testing
