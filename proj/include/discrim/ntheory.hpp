#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "discrim/int128.hpp"

namespace discrim {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes. Empty for 1.
using Factorization = std::vector<PrimePower>;

/// Deterministic Miller-Rabin, exact over the full 64-bit range.
[[nodiscard]] bool is_prime(std::uint64_t n);

/// Trial division up to 10^6, Pollard rho (Brent) beyond.
[[nodiscard]] Factorization factorize(std::uint64_t n);

[[nodiscard]] std::uint64_t euler_phi(std::uint64_t n);
[[nodiscard]] bool is_squarefree(std::uint64_t n);

/// The b in [1, m) with a*b = 1 (mod m), or nullopt when gcd(a, m) > 1.
[[nodiscard]] std::optional<std::uint64_t> mod_inverse(Int a, std::uint64_t m);

/// Smallest e >= 0 with base^e >= n, in exact integer arithmetic.
[[nodiscard]] unsigned ceil_log(std::uint64_t base, std::uint64_t n);

/// base^exponent; throws OverflowError past 64 bits.
[[nodiscard]] std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);

/// If n = p^k with p prime and k >= 1, returns that prime power.
[[nodiscard]] std::optional<PrimePower> as_prime_power(std::uint64_t n);

/// Smallest prime p > lower with p = residue (mod modulus). Scans the
/// progression directly. Throws DomainError when the class cannot contain
/// a prime above `lower`.
[[nodiscard]] std::uint64_t next_prime_satisfying(Int lower, Int residue, std::uint64_t modulus);

}  // namespace discrim
