#include "discrim/int128.hpp"

#include <algorithm>

namespace discrim {

std::string to_string(Int value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    UInt magnitude = negative ? UInt{0} - static_cast<UInt>(value) : static_cast<UInt>(value);
    std::string digits;
    while (magnitude != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
        magnitude /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Int parse_int(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw DomainError("expected an integer, got '" + std::string(text) + "'");
    // Accumulate as a negative number so kIntMin is representable.
    Int acc = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') throw DomainError("expected an integer, got '" + std::string(text) + "'");
        if (__builtin_mul_overflow(acc, Int{10}, &acc) || __builtin_sub_overflow(acc, Int{c - '0'}, &acc))
            throw OverflowError("integer literal '" + std::string(text) + "' exceeds 128 bits");
    }
    if (!negative) {
        if (acc == kIntMin) throw OverflowError("integer literal '" + std::string(text) + "' exceeds 128 bits");
        acc = -acc;
    }
    return acc;
}

}  // namespace discrim
