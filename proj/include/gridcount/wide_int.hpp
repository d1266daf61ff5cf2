#pragma once

#include <cstdint>
#include <string>

namespace gridcount {

// Exact integer type for all counts. f_q(n) ~ 6n^4/pi^2 leaves 64 bits near
// n = 4e4; 127 bits hold every value up to the supported n <= 1e7.
using WideInt = __int128;

inline constexpr std::uint64_t kMaxGridSide = 10'000'000;

// Full decimal rendering, never scientific notation.
std::string to_decimal(WideInt value);

// Inverse of to_decimal; throws InvalidArgument on malformed input or overflow.
WideInt parse_wide(const std::string& text);

inline double to_double(WideInt value) { return static_cast<double>(value); }

} // namespace gridcount
