#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "discrim/int128.hpp"
#include "discrim/poly.hpp"

namespace discrim {

using Modulus = std::uint64_t;

/// Candidate moduli m with lower <= m < upper. A missing upper means the
/// engine falls back to the trivial spread bound.
struct SearchBounds {
    Modulus lower = 1;
    std::optional<Modulus> upper;
};

struct DiscriminatorResult {
    /// D_f(n); nullopt when f(1..n) already collide as integers.
    std::optional<Modulus> value;
    std::uint64_t n = 0;
    /// Number of moduli examined, the successful one included.
    std::uint64_t candidates_tested = 0;

    [[nodiscard]] bool exists() const noexcept { return value.has_value(); }
    friend bool operator==(const DiscriminatorResult&, const DiscriminatorResult&) = default;
};

/// True iff f(1), ..., f(n) are pairwise distinct modulo m. Stops at the
/// first collision.
[[nodiscard]] bool is_discriminating(const Polynomial& f, std::uint64_t n, Modulus m);

/// max - min + 1 over f(1..n), or nullopt when two of those values are
/// equal. Every modulus at or above the returned value discriminates.
[[nodiscard]] std::optional<Int> trivial_upper_bound(const Polynomial& f, std::uint64_t n);

/// Least discriminating m in the bounds. With no bounds the search runs
/// over [n, spread + 1), the pigeonhole lower bound to the trivial one.
///
/// Throws BoundError when the caller's upper <= lower, or when the caller's
/// upper is exhausted although a discriminator exists. Candidate moduli are
/// tested in parallel blocks; the least one is returned regardless.
[[nodiscard]] DiscriminatorResult compute(const Polynomial& f, std::uint64_t n,
                                          std::optional<SearchBounds> bounds = std::nullopt);

/// Optional per-n exclusive upper bound on D_f(n), e.g. a family bound.
using UpperBoundFn = std::function<std::optional<Modulus>(std::uint64_t n)>;

/// compute(f, n) for n = 1..n_max. Uses D_f(n) >= D_f(n-1) to warm start
/// each search; contiguous n-chunks run in parallel, and the output is
/// identical to the serial scan in every field.
[[nodiscard]] std::vector<DiscriminatorResult> scan(const Polynomial& f, std::uint64_t n_max,
                                                    const UpperBoundFn& upper = {});

/// Single-threaded implementations kept as the reference the parallel
/// kernels are tested and benchmarked against.
namespace reference {

[[nodiscard]] DiscriminatorResult compute(const Polynomial& f, std::uint64_t n,
                                          std::optional<SearchBounds> bounds = std::nullopt);

[[nodiscard]] std::vector<DiscriminatorResult> scan(const Polynomial& f, std::uint64_t n_max,
                                                    const UpperBoundFn& upper = {});

}  // namespace reference

}  // namespace discrim
