#include "gridcount/wide_int.hpp"

#include <algorithm>

#include "gridcount/error.hpp"

namespace gridcount {

std::string to_decimal(WideInt value)
{
    if (value == 0)
        return "0";
    const bool negative = value < 0;
    // Work in the unsigned domain so the minimum value does not overflow.
    unsigned __int128 magnitude = negative ? -static_cast<unsigned __int128>(value)
                                           : static_cast<unsigned __int128>(value);
    std::string digits;
    while (magnitude != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
        magnitude /= 10;
    }
    if (negative)
        digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

WideInt parse_wide(const std::string& text)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size())
        raise(ErrorKind::InvalidArgument, "empty integer literal");

    constexpr unsigned __int128 kMaxMagnitude = (static_cast<unsigned __int128>(1) << 127);
    unsigned __int128 magnitude = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c < '0' || c > '9')
            raise(ErrorKind::InvalidArgument, "malformed integer literal: " + text);
        magnitude = magnitude * 10 + static_cast<unsigned>(c - '0');
        if (magnitude > kMaxMagnitude)
            raise(ErrorKind::InvalidArgument, "integer literal out of range: " + text);
    }
    if (!negative && magnitude == kMaxMagnitude)
        raise(ErrorKind::InvalidArgument, "integer literal out of range: " + text);
    return negative ? static_cast<WideInt>(-magnitude) : static_cast<WideInt>(magnitude);
}

} // namespace gridcount
