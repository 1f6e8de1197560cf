#include "discrim/closedform.hpp"

#include <numeric>

#include "discrim/error.hpp"
#include "discrim/ntheory.hpp"

namespace discrim {

std::uint64_t sun_power_formula(std::uint64_t d, std::uint64_t n) {
    if (n == 0) throw DomainError("sun_power_formula: n must be positive");
    if (d == 2 || d == 3) return checked_pow(d, ceil_log(d, n));
    if (d >= 4 && (d & (d - 1)) == 0) return checked_pow(2, ceil_log(2, n));
    throw DomainError("sun_power_formula: d = " + std::to_string(d) +
                      " is outside the proven family {2, 3} and 2^r");
}

std::uint64_t lemma1_bound(std::uint64_t p, unsigned r, std::uint64_t n) {
    if (!is_prime(p)) throw DomainError("lemma1_bound: " + std::to_string(p) + " is not prime");
    if (r == 0) throw DomainError("lemma1_bound: r must be positive");
    if (n == 0) throw DomainError("lemma1_bound: n must be positive");
    return checked_pow(p, ceil_log(p, n));
}

std::uint64_t bsw_discriminator(std::uint64_t j, std::uint64_t n) {
    if (j == 0) throw DomainError("bsw_discriminator: j must be positive");
    if (n == 0) throw DomainError("bsw_discriminator: n must be positive");
    if (j % 2 == 1) {
        for (std::uint64_t k = n;; ++k) {
            if (is_squarefree(k) && std::gcd(euler_phi(k), j) == 1) return k;
        }
    }
    for (std::uint64_t k = 2 * n;; ++k) {
        const bool q_or_2q = is_prime(k) || (k % 2 == 0 && is_prime(k / 2));
        if (q_or_2q && std::gcd(euler_phi(k), j) == 2) return k;
    }
}

Int PrimeFamily::threshold_num(std::uint64_t n) const {
    return checked_add(checked_mul(threshold_slope, static_cast<Int>(n)), threshold_offset);
}

bool PrimeFamily::above_threshold(std::uint64_t n, Int p) const {
    return checked_mul(p, threshold_den) > threshold_num(n);
}

PrimeFamily prime_family(PrimeFamilyTag tag) {
    switch (tag) {
        case PrimeFamilyTag::TwoXXMinus1:  // least prime > 2n - 2
            return {tag, Polynomial({0, -2, 2}), 2, -2, 1, 0, 1};
        case PrimeFamilyTag::FourX4XMinus1:  // least prime > (8n - 4)/3, = 1 mod 4
            return {tag, Polynomial({0, -4, 16}), 8, -4, 3, 1, 4};
        case PrimeFamilyTag::EighteenX3XMinus1:  // least prime > 3n, = 1 mod 3
            return {tag, Polynomial({0, -18, 54}), 3, 0, 1, 1, 3};
    }
    throw DomainError("unknown prime family");
}

std::optional<PrimeFamilyTag> parse_family_tag(std::string_view text) {
    if (text == "2xx1") return PrimeFamilyTag::TwoXXMinus1;
    if (text == "4x4x1") return PrimeFamilyTag::FourX4XMinus1;
    if (text == "18x3x1") return PrimeFamilyTag::EighteenX3XMinus1;
    return std::nullopt;
}

std::string_view family_name(PrimeFamilyTag tag) {
    switch (tag) {
        case PrimeFamilyTag::TwoXXMinus1: return "2xx1";
        case PrimeFamilyTag::FourX4XMinus1: return "4x4x1";
        case PrimeFamilyTag::EighteenX3XMinus1: return "18x3x1";
    }
    return "?";
}

std::uint64_t sun_prime_discriminator(const PrimeFamily& family, std::uint64_t n) {
    if (n == 0) throw DomainError("sun_prime_discriminator: n must be positive");
    // For integer p, p > num/den exactly when p > floor(num/den); num >= 0 for n >= 1.
    const Int floor_threshold = family.threshold_num(n) / family.threshold_den;
    return next_prime_satisfying(floor_threshold, family.residue, family.modulus);
}

std::optional<SizeWindow> size_window(PrimeFamilyTag tag, std::uint64_t n) {
    const Int nn = static_cast<Int>(n);
    switch (tag) {
        case PrimeFamilyTag::FourX4XMinus1: return SizeWindow{8 * nn - 4, 3, 8 * nn};
        case PrimeFamilyTag::EighteenX3XMinus1: return SizeWindow{3 * nn, 1, 54 * nn};
        case PrimeFamilyTag::TwoXXMinus1: return std::nullopt;
    }
    return std::nullopt;
}

SandwichReport check_theorem4(const Polynomial& f, std::uint64_t p, std::uint64_t n) {
    if (!is_prime(p)) throw DomainError("check_theorem4: " + std::to_string(p) + " is not prime");
    SandwichReport report{f, p, n, std::nullopt, std::nullopt, false};
    report.d_f = compute(f, n).value;
    report.d_pf = compute(scale(f, static_cast<Int>(p)), n).value;
    if (!report.d_f || !report.d_pf) {
        report.holds = !report.d_f && !report.d_pf;
    } else {
        report.holds = *report.d_f <= *report.d_pf &&
                       static_cast<Int>(*report.d_pf) <= static_cast<Int>(p) * static_cast<Int>(*report.d_f);
    }
    return report;
}

}  // namespace discrim
