#include "gridcount/counts.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "gridcount/error.hpp"

namespace gridcount {
namespace {

void validate(const GridQuery& query)
{
    require(query.n >= 1, ErrorKind::InvalidArgument, "grid side n must be at least 1");
    require(query.q >= 1, ErrorKind::InvalidArgument, "gcd class q must be at least 1");
    if (query.n > kMaxGridSide) {
        raise(ErrorKind::ResourceLimit,
              "grid side " + std::to_string(query.n) + " exceeds supported maximum "
                  + std::to_string(kMaxGridSide));
    }
}

void require_table(const TotientTable& table, std::uint64_t needed)
{
    if (needed > table.limit()) {
        raise(ErrorKind::Precondition,
              "totient table limit " + std::to_string(table.limit())
                  + " too small; required limit " + std::to_string(needed));
    }
}

WideInt halve_even(WideInt value, const char* what)
{
    if (value < 0 || value % 2 != 0)
        raise(ErrorKind::Internal, std::string("invariant violated: ") + what
                                       + " is " + to_decimal(value));
    return value / 2;
}

} // namespace

WideInt LemmaDecomposition::reconstruct() const
{
    return 4 * s1_doubled + 4 * static_cast<WideInt>(t + 1) * s2_doubled;
}

std::uint64_t required_table_limit(const GridQuery& query)
{
    if (query.n == 0 || query.q == 0)
        return 0;
    return (query.n - 1) / query.q;
}

WideInt f_direct(const GridQuery& query)
{
    validate(query);
    const auto n = static_cast<std::int64_t>(query.n);
    const auto q = static_cast<std::int64_t>(query.q);
    WideInt total = 0;
    for (std::int64_t i = -n + 1; i < n; ++i) {
        const std::int64_t wi = n - std::llabs(i);
        std::int64_t row = 0;
        for (std::int64_t j = -n + 1; j < n; ++j) {
            // std::gcd uses |.|, and gcd(0, 0) = 0 never equals q >= 1.
            if (std::gcd(i, j) == q)
                row += n - std::llabs(j);
        }
        total += static_cast<WideInt>(wi) * row;
    }
    return total;
}

WideInt f_fast(const GridQuery& query, const TotientTable& table)
{
    validate(query);
    const std::uint64_t upper = required_table_limit(query);
    require_table(table, upper);
    const auto phi = table.phi_values();
    const WideInt n = query.n;
    const WideInt q = query.q;
    WideInt sum = 0;
    WideInt step = q;
    for (std::uint64_t i = 1; i <= upper; ++i, step += q)
        sum += (n - step) * (2 * n - step) * phi[i];
    return 4 * sum;
}

LemmaDecomposition decompose_lemma(const GridQuery& query, const TotientTable& table)
{
    validate(query);
    LemmaDecomposition out;
    out.m = query.n / query.q;
    out.t = query.n % query.q;
    require_table(table, out.m);

    const auto phi = table.phi_values();
    const WideInt q = query.q;
    const WideInt qm = q * out.m;
    // 2 (q m + t + 1 - (q/2) i) = 2 (q m + t + 1) - q i
    const WideInt doubled_base = 2 * (qm + out.t + 1);
    for (std::uint64_t i = 1; i <= out.m; ++i) {
        const WideInt qi = q * i;
        const WideInt second = (doubled_base - qi) * phi[i];
        out.s1_doubled += (qm - qi) * second;
        out.s2_doubled += second;
    }
    return out;
}

WideInt segments_count(std::uint64_t n, std::uint64_t p, const TotientTable& table)
{
    require(p >= 2, ErrorKind::InvalidArgument, "segment point count p must be at least 2");
    return halve_even(f_fast({n, p - 1}, table), "f_{p-1}(n) parity");
}

WideInt lines_at_least(std::uint64_t n, std::uint64_t q, const TotientTable& table)
{
    require(q >= 2, ErrorKind::InvalidArgument, "line point count q must be at least 2");
    return halve_even(f_fast({n, q - 1}, table) - f_fast({n, q}, table),
                      "f_{q-1}(n) - f_q(n)");
}

WideInt lines_exactly(std::uint64_t n, std::uint64_t q, const TotientTable& table)
{
    require(q >= 2, ErrorKind::InvalidArgument, "line point count q must be at least 2");
    const WideInt second_difference =
        f_fast({n, q + 1}, table) - 2 * f_fast({n, q}, table) + f_fast({n, q - 1}, table);
    return halve_even(second_difference, "second difference of f");
}

WideInt threshold_count(std::uint64_t n, const TotientTable& table)
{
    return f_fast({n, 1}, table) + 2;
}

CountSet count_set(const GridQuery& query, const TotientTable& table)
{
    validate(query);
    CountSet out;
    out.n = query.n;
    out.q = query.q;
    out.f = f_fast(query, table);
    out.segments = segments_count(query.n, query.q + 1, table);
    if (query.q >= 2) {
        out.lines_at_least = lines_at_least(query.n, query.q, table);
        out.lines_exactly = lines_exactly(query.n, query.q, table);
    }
    return out;
}

} // namespace gridcount
