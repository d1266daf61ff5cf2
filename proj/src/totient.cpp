#include "gridcount/totient.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gridcount/error.hpp"

namespace gridcount {

std::size_t TotientTable::footprint_bytes(std::uint64_t limit) noexcept
{
    constexpr std::size_t per_entry =
        sizeof(std::uint32_t) + sizeof(std::uint64_t) + sizeof(WideInt);
    if (limit >= std::numeric_limits<std::size_t>::max() / per_entry - 1)
        return std::numeric_limits<std::size_t>::max();
    return static_cast<std::size_t>(limit + 1) * per_entry;
}

TotientTable TotientTable::build(std::uint64_t limit, const TotientBuildOptions& options)
{
    require(limit >= 1, ErrorKind::InvalidArgument, "totient table limit must be at least 1");
    // phi is held in 32-bit words.
    if (limit > std::numeric_limits<std::uint32_t>::max()
        || footprint_bytes(limit) > options.memory_budget_bytes) {
        raise(ErrorKind::ResourceLimit,
              "totient table limit " + std::to_string(limit) + " needs "
                  + std::to_string(footprint_bytes(limit)) + " bytes, budget is "
                  + std::to_string(options.memory_budget_bytes));
    }

    TotientTable table;
    table.limit_ = limit;
    const auto size = static_cast<std::size_t>(limit) + 1;
    auto& phi = table.phi_;
    phi.assign(size, 0);
    phi[1] = 1;

    // Linear sieve: every composite is visited once, via its smallest prime.
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (phi[i] == 0) {
            phi[i] = static_cast<std::uint32_t>(i - 1);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (const std::uint32_t p : primes) {
            const std::uint64_t composite = i * p;
            if (composite > limit)
                break;
            if (i % p == 0) {
                phi[composite] = phi[i] * p;
                break;
            }
            phi[composite] = phi[i] * (p - 1);
        }
    }

    table.phi_prefix_.assign(size, 0);
    table.phi_prefix2_.assign(size, 0);
    std::uint64_t running = 0;
    WideInt running2 = 0;
    for (std::size_t i = 1; i < size; ++i) {
        running += phi[i];
        running2 += running;
        table.phi_prefix_[i] = running;
        table.phi_prefix2_[i] = running2;
    }
    return table;
}

void TotientTable::check_index(std::uint64_t i) const
{
    if (i < 1 || i > limit_) {
        raise(ErrorKind::InvalidArgument,
              "index " + std::to_string(i) + " outside totient table range 1.."
                  + std::to_string(limit_));
    }
}

std::uint32_t TotientTable::phi(std::uint64_t i) const
{
    check_index(i);
    return phi_[i];
}

std::uint64_t TotientTable::summatory_phi(std::uint64_t i) const
{
    check_index(i);
    return phi_prefix_[i];
}

WideInt TotientTable::summatory_phi_sum(std::uint64_t i) const
{
    check_index(i);
    return phi_prefix2_[i];
}

std::uint64_t summatory_phi(const TotientTable& table, std::uint64_t i)
{
    return table.summatory_phi(i);
}

double e_phi(const TotientTable& table, std::uint64_t i)
{
    const auto exact = static_cast<long double>(table.summatory_phi(i));
    const auto x = static_cast<long double>(i);
    return static_cast<double>(exact - 3.0L * x * x / static_cast<long double>(kPiSquared));
}

double e_r(const TotientTable& table, std::uint64_t i)
{
    const WideInt phi_sum = table.summatory_phi_sum(i);
    const WideInt w = i;
    const WideInt squares = w * (w + 1) * (2 * w + 1) / 6;
    const auto pi2 = static_cast<long double>(kPiSquared);
    const auto x = static_cast<long double>(i);
    const long double value = static_cast<long double>(phi_sum)
        - 3.0L * static_cast<long double>(squares) / pi2 - 1.5L * x * x / pi2;
    return static_cast<double>(value);
}

bool check_partial_summation(std::span<const double> a, std::span<const double> b)
{
    require(a.size() == b.size(), ErrorKind::InvalidArgument,
            "partial summation needs sequences of equal length");
    require(!a.empty(), ErrorKind::InvalidArgument, "partial summation needs nonempty sequences");

    const std::size_t n = a.size();
    double lhs = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        lhs += a[i] * b[i];
        scale += std::fabs(a[i] * b[i]);
    }

    double prefix = 0.0;
    double correction = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        prefix += a[i];
        const double term = prefix * (b[i + 1] - b[i]);
        correction += term;
        scale += std::fabs(term);
    }
    prefix += a[n - 1];
    const double rhs = prefix * b[n - 1] - correction;
    scale += std::fabs(prefix * b[n - 1]);

    // Relative to the magnitude of the terms involved, so cancellation to a
    // zero total does not demand an absolute match.
    return std::fabs(lhs - rhs) <= 1e-12 * std::max(scale, 1.0);
}

} // namespace gridcount
