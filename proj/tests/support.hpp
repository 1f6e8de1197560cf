#pragma once

// Test-only oracles. They deliberately share nothing with the library's
// kernels: values come from direct power sums and distinctness from an
// all-pairs comparison.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "discrim/poly.hpp"

namespace discrim::testing {

inline Int naive_value(const std::vector<Int>& coeffs, Int x) {
    Int total = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Int term = coeffs[k];
        for (std::size_t e = 0; e < k; ++e) term *= x;
        total += term;
    }
    return total;
}

inline std::vector<Int> naive_values(const Polynomial& f, std::uint64_t n) {
    const std::vector<Int> coeffs(f.coefficients().begin(), f.coefficients().end());
    std::vector<Int> out;
    for (std::uint64_t i = 1; i <= n; ++i) out.push_back(naive_value(coeffs, static_cast<Int>(i)));
    return out;
}

inline Int naive_mod(Int v, std::uint64_t m) {
    const Int r = v % static_cast<Int>(m);
    return r < 0 ? r + static_cast<Int>(m) : r;
}

inline bool all_pairs_distinct(const std::vector<Int>& values, std::uint64_t m) {
    for (std::size_t a = 0; a < values.size(); ++a)
        for (std::size_t b = a + 1; b < values.size(); ++b)
            if (naive_mod(values[a], m) == naive_mod(values[b], m)) return false;
    return true;
}

/// D_f(n) by definition; nullopt when two values coincide as integers.
inline std::optional<std::uint64_t> naive_discriminator(const Polynomial& f, std::uint64_t n) {
    const auto values = naive_values(f, n);
    for (std::size_t a = 0; a < values.size(); ++a)
        for (std::size_t b = a + 1; b < values.size(); ++b)
            if (values[a] == values[b]) return std::nullopt;
    for (std::uint64_t m = 1;; ++m)
        if (all_pairs_distinct(values, m)) return m;
}

inline bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree, int bound) {
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::vector<Int> c(static_cast<std::size_t>(degree(rng)) + 1);
    for (Int& v : c) v = coeff(rng);
    return Polynomial(std::move(c));
}

}  // namespace discrim::testing
