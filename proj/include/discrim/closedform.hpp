#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "discrim/discriminator.hpp"
#include "discrim/int128.hpp"
#include "discrim/poly.hpp"

namespace discrim {

/// d^ceil(log_d n) for d in {2, 3}; 2^ceil(log_2 n) for d = 2^r, r >= 2.
/// Any other d throws DomainError: the formula is only proven for these.
[[nodiscard]] std::uint64_t sun_power_formula(std::uint64_t d, std::uint64_t n);

/// p^ceil(log_p n), the upper bound on D_f(n) for f = x(p^r x - 1).
/// Independent of r; r only names the family.
[[nodiscard]] std::uint64_t lemma1_bound(std::uint64_t p, unsigned r, std::uint64_t n);

/// D_f(n) for f = x^j:
///   j odd:  min{k >= n : k squarefree, gcd(phi(k), j) = 1}
///   j even: min{k >= 2n : k = q or 2q, q prime, gcd(phi(k), j) = 2}
/// k = 4 = 2*2 is admitted literally in the even branch.
[[nodiscard]] std::uint64_t bsw_discriminator(std::uint64_t j, std::uint64_t n);

enum class PrimeFamilyTag { TwoXXMinus1, FourX4XMinus1, EighteenX3XMinus1 };

/// A polynomial whose discriminator is the least prime p > num(n)/den with
/// p = residue (mod modulus).
struct PrimeFamily {
    PrimeFamilyTag tag;
    Polynomial polynomial;
    Int threshold_slope;  // num(n) = slope * n + offset
    Int threshold_offset;
    Int threshold_den;
    Int residue;
    std::uint64_t modulus;

    [[nodiscard]] Int threshold_num(std::uint64_t n) const;
    /// True iff p > num(n)/den, decided by cross-multiplication.
    [[nodiscard]] bool above_threshold(std::uint64_t n, Int p) const;
};

[[nodiscard]] PrimeFamily prime_family(PrimeFamilyTag tag);
/// "2xx1", "4x4x1" or "18x3x1".
[[nodiscard]] std::optional<PrimeFamilyTag> parse_family_tag(std::string_view text);
[[nodiscard]] std::string_view family_name(PrimeFamilyTag tag);

[[nodiscard]] std::uint64_t sun_prime_discriminator(const PrimeFamily& family, std::uint64_t n);

/// Open interval (lo_num/lo_den, hi) the family's discriminator falls in,
/// derived from the sandwich bound against x(dx - 1). Only defined for the
/// 4x(4x-1) and 18x(3x-1) families.
struct SizeWindow {
    Int lower_num;
    Int lower_den;
    Int upper;

    [[nodiscard]] bool contains(Int value) const {
        return value * lower_den > lower_num && value < upper;
    }
};

[[nodiscard]] std::optional<SizeWindow> size_window(PrimeFamilyTag tag, std::uint64_t n);

struct SandwichReport {
    Polynomial f;
    std::uint64_t p = 0;
    std::uint64_t n = 0;
    std::optional<Modulus> d_f;
    std::optional<Modulus> d_pf;
    bool holds = false;
};

/// D_f(n) <= D_{pf}(n) <= p D_f(n), both sides from the oracle.
[[nodiscard]] SandwichReport check_theorem4(const Polynomial& f, std::uint64_t p, std::uint64_t n);

}  // namespace discrim
