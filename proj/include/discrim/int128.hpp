#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "discrim/error.hpp"

namespace discrim {

/// Exact integer type for coefficients and polynomial values. Every
/// arithmetic step goes through the checked helpers below; wraparound is
/// reported as OverflowError and never happens silently.
using Int = __int128;
using UInt = unsigned __int128;

inline constexpr Int kIntMax = static_cast<Int>(~UInt{0} >> 1);
inline constexpr Int kIntMin = -kIntMax - 1;

[[nodiscard]] inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit overflow in addition");
    return r;
}

[[nodiscard]] inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit overflow in subtraction");
    return r;
}

[[nodiscard]] inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit overflow in multiplication");
    return r;
}

/// Mathematical residue of `a` modulo `m`, always in [0, m).
[[nodiscard]] inline std::uint64_t mod_floor(Int a, std::uint64_t m) {
    Int r = a % static_cast<Int>(m);
    if (r < 0) r += static_cast<Int>(m);
    return static_cast<std::uint64_t>(r);
}

[[nodiscard]] std::string to_string(Int value);

/// Parses an optionally signed decimal literal. Throws DomainError on
/// malformed text and OverflowError when the value does not fit.
[[nodiscard]] Int parse_int(std::string_view text);

}  // namespace discrim
