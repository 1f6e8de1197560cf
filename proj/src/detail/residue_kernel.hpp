#pragma once

#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "discrim/int128.hpp"
#include "discrim/poly.hpp"

namespace discrim::detail {

/// Per-thread buffers for the distinctness test.
struct ResidueScratch {
    std::vector<std::uint8_t> seen;
    std::vector<std::uint64_t> touched;
    std::vector<std::uint64_t> reduced;
    std::unordered_set<std::uint64_t> sparse;
};

/// Decides whether f(1..n) are distinct mod m. Moduli up to kDenseLimit use
/// an occupancy array (cleared through the touched list), larger ones a
/// hash set.
class ResidueKernel {
public:
    static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

    ResidueKernel(const Polynomial& f, std::uint64_t n) : coeffs_(f.coefficients()), n_(n) {}

    [[nodiscard]] bool discriminates(std::uint64_t m, ResidueScratch& s) const {
        if (n_ > m) return false;
        if (m == 1) return true;
        s.reduced.resize(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) s.reduced[i] = mod_floor(coeffs_[i], m);
        return m <= kDenseLimit ? dense(m, s) : sparse(m, s);
    }

private:
    [[nodiscard]] std::uint64_t residue(std::uint64_t x, std::uint64_t m, const ResidueScratch& s) const {
        UInt acc = 0;
        for (auto it = s.reduced.rbegin(); it != s.reduced.rend(); ++it) acc = (acc * x + *it) % m;
        return static_cast<std::uint64_t>(acc);
    }

    bool dense(std::uint64_t m, ResidueScratch& s) const {
        if (s.seen.size() < m) s.seen.resize(m, 0);
        s.touched.clear();
        bool distinct = true;
        std::uint64_t x = 1 % m;
        for (std::uint64_t i = 1; i <= n_; ++i) {
            const std::uint64_t r = residue(x, m, s);
            if (s.seen[r]) {
                distinct = false;
                break;
            }
            s.seen[r] = 1;
            s.touched.push_back(r);
            if (++x == m) x = 0;
        }
        for (std::uint64_t r : s.touched) s.seen[r] = 0;
        return distinct;
    }

    bool sparse(std::uint64_t m, ResidueScratch& s) const {
        s.sparse.clear();
        s.sparse.reserve(n_);
        std::uint64_t x = 1 % m;
        for (std::uint64_t i = 1; i <= n_; ++i) {
            if (!s.sparse.insert(residue(x, m, s)).second) return false;
            if (++x == m) x = 0;
        }
        return true;
    }

    std::span<const Int> coeffs_;
    std::uint64_t n_;
};

}  // namespace discrim::detail
