#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace discrim {

/// Result of one formula-versus-oracle suite.
struct VerifyOutcome {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failure_count = 0;
    /// Human-readable counterexamples, first ones only.
    std::vector<std::string> failures;

    [[nodiscard]] bool passed() const noexcept { return failure_count == 0; }
    void fail(std::string message);
};

inline constexpr std::uint64_t kDefaultSeed = 20120801;

/// Oracle against d^ceil(log_d n) for f = x(dx - 1), d in {2, 3}.
[[nodiscard]] VerifyOutcome verify_theorem1(std::uint64_t n_max);
/// Oracle against 2^ceil(log_2 n) for d in {2, 4, 8, 16}.
[[nodiscard]] VerifyOutcome verify_theorem2(std::uint64_t n_max);
[[nodiscard]] VerifyOutcome verify_theorem3(std::uint64_t n_max);
/// Sandwich bound on `trials` random (f, p, n): degree <= 3, |coeff| <= 9,
/// p in {2, 3, 5}, 1 <= n <= n_max.
[[nodiscard]] VerifyOutcome verify_theorem4(std::uint64_t seed, std::uint64_t trials,
                                            std::uint64_t n_max);
/// BSW closed form against the oracle on x^j, j in {2, 3, 4, 5, 6, 9}.
[[nodiscard]] VerifyOutcome verify_theorem5(std::uint64_t n_max);

}  // namespace discrim
