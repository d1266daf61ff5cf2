#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gridcount/wide_int.hpp"

namespace gridcount {

struct TotientBuildOptions {
    // Upper bound on the table's resident size; exceeding it is a
    // resource-limit error rather than an allocation failure.
    std::size_t memory_budget_bytes = std::size_t{1} << 30;
};

// Euler totient values phi(1..limit) with the summatory function
// Phi(i) = phi(1) + ... + phi(i) and the second-order prefix
// Phi(1) + ... + Phi(i). Immutable once built; safe to share across threads.
class TotientTable {
public:
    static TotientTable build(std::uint64_t limit, const TotientBuildOptions& options = {});

    // Bytes a table of the given limit occupies.
    static std::size_t footprint_bytes(std::uint64_t limit) noexcept;

    std::uint64_t limit() const noexcept { return limit_; }

    std::uint32_t phi(std::uint64_t i) const;
    std::uint64_t summatory_phi(std::uint64_t i) const;
    // Sum_{j <= i} Phi(j), exact.
    WideInt summatory_phi_sum(std::uint64_t i) const;

    // Unchecked views indexed 0..limit (index 0 holds 0).
    std::span<const std::uint32_t> phi_values() const noexcept { return phi_; }
    std::span<const std::uint64_t> phi_prefix() const noexcept { return phi_prefix_; }

private:
    TotientTable() = default;
    void check_index(std::uint64_t i) const;

    std::uint64_t limit_ = 0;
    std::vector<std::uint32_t> phi_;
    std::vector<std::uint64_t> phi_prefix_;
    std::vector<WideInt> phi_prefix2_;
};

std::uint64_t summatory_phi(const TotientTable& table, std::uint64_t i);

// Phi(i) - 3 i^2 / pi^2.
double e_phi(const TotientTable& table, std::uint64_t i);

// Sum_{j<=i} E_Phi(j) - 3 i^2 / (2 pi^2), evaluated as
// Sum_{j<=i} Phi(j) - (3/pi^2) Sum_{j<=i} j^2 - 3 i^2 / (2 pi^2)
// with both sums exact.
double e_r(const TotientTable& table, std::uint64_t i);

// Checks Abel's partial summation identity
//   Sum a_i b_i = (Sum a_i) b_N - Sum_{i<N} (Sum_{j<=i} a_j)(b_{i+1} - b_i)
// numerically, to relative tolerance 1e-12.
bool check_partial_summation(std::span<const double> a, std::span<const double> b);

// pi^2 from the double pi constant.
inline constexpr double kPiSquared = 3.141592653589793 * 3.141592653589793;

} // namespace gridcount
