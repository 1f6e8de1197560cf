#include "discrim/discriminator.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <set>
#include <stdexcept>

#include "detail/residue_kernel.hpp"
#include "discrim/error.hpp"
#include "discrim/threading.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace discrim {

namespace {

using detail::ResidueKernel;
using detail::ResidueScratch;

constexpr Modulus kNoModulus = std::numeric_limits<Modulus>::max();

Modulus clamp_to_modulus(Int v) {
    return v >= static_cast<Int>(kNoModulus) ? kNoModulus : static_cast<Modulus>(v);
}

void require_n(std::uint64_t n) {
    if (n == 0) throw DomainError("n must be positive");
}

// Least discriminating m in [lower, upper), kNoModulus if none.
Modulus first_discriminating_serial(const ResidueKernel& kernel, Modulus lower, Modulus upper,
                                    ResidueScratch& scratch) {
    for (Modulus m = lower; m < upper; ++m) {
        if (kernel.discriminates(m, scratch)) return m;
    }
    return kNoModulus;
}

// Tests moduli in blocks across threads and keeps the least hit of the
// first block that has one.
Modulus first_discriminating_parallel(const ResidueKernel& kernel, Modulus lower, Modulus upper) {
    const int threads = thread_count();
    if (threads <= 1) {
        ResidueScratch scratch;
        return first_discriminating_serial(kernel, lower, upper, scratch);
    }
    std::vector<ResidueScratch> scratch(static_cast<std::size_t>(threads));
    const Modulus block = static_cast<Modulus>(threads) * 32;
    for (Modulus start = lower; start < upper;) {
        const Modulus stop = upper - start > block ? start + block : upper;
        Modulus best = kNoModulus;
        const auto count = static_cast<std::int64_t>(stop - start);
#pragma omp parallel for schedule(dynamic, 2) reduction(min : best) num_threads(threads)
        for (std::int64_t i = 0; i < count; ++i) {
#ifdef _OPENMP
            auto& s = scratch[static_cast<std::size_t>(omp_get_thread_num())];
#else
            auto& s = scratch.front();
#endif
            const Modulus m = start + static_cast<Modulus>(i);
            if (kernel.discriminates(m, s)) best = std::min(best, m);
        }
        if (best != kNoModulus) return best;
        start = stop;
    }
    return kNoModulus;
}

struct SearchPlan {
    Modulus lower;
    Modulus upper;
    bool caller_upper;
};

SearchPlan plan_search(std::uint64_t n, Int spread, const std::optional<SearchBounds>& bounds) {
    const Modulus trivial_upper = clamp_to_modulus(checked_add(spread, 1));
    if (!bounds) return {n, trivial_upper, false};
    if (bounds->lower == 0) throw BoundError("search lower bound must be at least 1");
    if (bounds->upper && *bounds->upper <= bounds->lower)
        throw BoundError("inconsistent bounds: upper " + std::to_string(*bounds->upper) +
                         " is not above lower " + std::to_string(bounds->lower));
    return {bounds->lower, bounds->upper.value_or(trivial_upper), bounds->upper.has_value()};
}

[[noreturn]] void throw_exhausted(std::uint64_t n, Modulus upper) {
    throw BoundError("no discriminating modulus below the supplied upper bound " + std::to_string(upper) +
                     " for n = " + std::to_string(n));
}

template <typename Search>
DiscriminatorResult run_compute(const Polynomial& f, std::uint64_t n, const std::optional<SearchBounds>& bounds,
                                Search&& search) {
    require_n(n);
    const auto spread = trivial_upper_bound(f, n);
    if (!spread) return {std::nullopt, n, 0};
    const SearchPlan plan = plan_search(n, *spread, bounds);
    const Modulus m = search(plan.lower, plan.upper);
    if (m == kNoModulus) {
        if (plan.caller_upper) throw_exhausted(n, plan.upper);
        throw std::logic_error("discriminator search exhausted the trivial bound");
    }
    return {m, n, m - plan.lower + 1};
}

// Exact prefix facts of f(1..n_max): spread and first collision.
struct PrefixFacts {
    std::vector<Int> spread;  // spread[n - 1] = max - min + 1 over f(1..n)
    std::uint64_t first_collision;  // least n with a repeated value, n_max + 1 if none
};

PrefixFacts prefix_facts(const Polynomial& f, std::uint64_t n_max) {
    PrefixFacts facts{{}, n_max + 1};
    std::set<Int> seen;
    Int lo = 0, hi = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const Int v = evaluate(f, static_cast<Int>(n));
        if (n == 1) lo = hi = v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        if (!seen.insert(v).second) {
            facts.first_collision = n;
            break;
        }
        facts.spread.push_back(checked_add(checked_sub(hi, lo), 1));
    }
    return facts;
}

}  // namespace

bool is_discriminating(const Polynomial& f, std::uint64_t n, Modulus m) {
    require_n(n);
    if (m == 0) throw DomainError("modulus must be positive");
    ResidueScratch scratch;
    return ResidueKernel(f, n).discriminates(m, scratch);
}

std::optional<Int> trivial_upper_bound(const Polynomial& f, std::uint64_t n) {
    require_n(n);
    std::vector<Int> values;
    values.reserve(n);
    for (std::uint64_t i = 1; i <= n; ++i) values.push_back(evaluate(f, static_cast<Int>(i)));
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end()) return std::nullopt;
    return checked_add(checked_sub(values.back(), values.front()), 1);
}

DiscriminatorResult compute(const Polynomial& f, std::uint64_t n, std::optional<SearchBounds> bounds) {
    const ResidueKernel kernel(f, n);
    return run_compute(f, n, bounds, [&](Modulus lo, Modulus hi) {
        return first_discriminating_parallel(kernel, lo, hi);
    });
}

std::vector<DiscriminatorResult> scan(const Polynomial& f, std::uint64_t n_max, const UpperBoundFn& upper) {
    require_n(n_max);
    const PrefixFacts facts = prefix_facts(f, n_max);
    std::vector<DiscriminatorResult> out(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) out[n - 1].n = n;

    const std::uint64_t finite = facts.first_collision - 1;  // D exists exactly for n <= finite
    const int threads = thread_count();
    const std::uint64_t chunk =
        threads <= 1 ? std::max<std::uint64_t>(finite, 1)
                     : std::max<std::uint64_t>(16, finite / (static_cast<std::uint64_t>(threads) * 4) + 1);
    const std::uint64_t chunks = finite == 0 ? 0 : (finite + chunk - 1) / chunk;
    std::vector<std::exception_ptr> errors(chunks);

    // Each chunk warm starts from its own first value; the least modulus is
    // unique, so chunk boundaries cannot change any value.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        try {
            ResidueScratch scratch;
            const std::uint64_t first = static_cast<std::uint64_t>(c) * chunk + 1;
            const std::uint64_t last = std::min(finite, first + chunk - 1);
            Modulus prev = 0;
            for (std::uint64_t n = first; n <= last; ++n) {
                const auto bound = upper ? upper(n) : std::nullopt;
                const Modulus hi = bound ? *bound : clamp_to_modulus(checked_add(facts.spread[n - 1], 1));
                const Modulus lo = std::max<Modulus>(n, prev);
                const Modulus m = lo < hi ? first_discriminating_serial(ResidueKernel(f, n), lo, hi, scratch)
                                          : kNoModulus;
                if (m == kNoModulus) {
                    if (bound) throw_exhausted(n, hi);
                    throw std::logic_error("discriminator search exhausted the trivial bound");
                }
                out[n - 1].value = m;
                prev = m;
            }
        } catch (...) {
            errors[static_cast<std::size_t>(c)] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    // Candidate counts follow the serial warm-start order.
    Modulus prev = 0;
    for (std::uint64_t n = 1; n <= finite; ++n) {
        const Modulus m = *out[n - 1].value;
        out[n - 1].candidates_tested = m - std::max<Modulus>(n, prev) + 1;
        prev = m;
    }
    return out;
}

namespace reference {

namespace {

bool distinct_mod(const Polynomial& f, std::uint64_t n, Modulus m) {
    if (n > m) return false;
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 1; i <= n; ++i) {
        if (!seen.insert(evaluate_mod(f, static_cast<Int>(i), m)).second) return false;
    }
    return true;
}

}  // namespace

DiscriminatorResult compute(const Polynomial& f, std::uint64_t n, std::optional<SearchBounds> bounds) {
    return run_compute(f, n, bounds, [&](Modulus lo, Modulus hi) {
        for (Modulus m = lo; m < hi; ++m) {
            if (distinct_mod(f, n, m)) return m;
        }
        return kNoModulus;
    });
}

std::vector<DiscriminatorResult> scan(const Polynomial& f, std::uint64_t n_max, const UpperBoundFn& upper) {
    require_n(n_max);
    std::vector<DiscriminatorResult> out;
    out.reserve(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const auto bound = upper ? upper(n) : std::nullopt;
        out.push_back(bound ? reference::compute(f, n, SearchBounds{n, bound}) : reference::compute(f, n));
    }
    return out;
}

}  // namespace reference

}  // namespace discrim
