#include "discrim/ntheory.hpp"

#include <algorithm>
#include <numeric>

#include "discrim/error.hpp"

namespace discrim {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1'000'000;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 e, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (e != 0) {
        if (e & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return result;
}

bool is_composite_witness(u64 n, u64 a, u64 d, unsigned s) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

// Brent's variant; returns a nontrivial factor of the odd composite n.
u64 pollard_rho(u64 n) {
    for (u64 c = 1;; ++c) {
        auto step = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        constexpr u64 kBatch = 128;
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = step(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
                    y = step(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += kBatch;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    const u64 d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are deterministic below 3.3e24.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (is_composite_witness(n, a, d, s)) return false;
    }
    return true;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    Factorization out;
    auto take = [&](u64 p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e != 0) out.push_back({p, e});
    };
    take(2);
    for (u64 p = 3; p <= kTrialLimit && p * p <= n; p += 2) take(p);
    if (n == 1) return out;
    if (n <= kTrialLimit * kTrialLimit) {
        out.push_back({n, 1});
        return out;
    }
    std::vector<u64> primes;
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!out.empty() && out.back().prime == p)
            ++out.back().exponent;
        else
            out.push_back({p, 1});
    }
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw DomainError("euler_phi: n must be positive");
    u64 phi = n;
    for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

bool is_squarefree(std::uint64_t n) {
    if (n == 0) throw DomainError("is_squarefree: n must be positive");
    const auto f = factorize(n);
    return std::all_of(f.begin(), f.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::optional<std::uint64_t> mod_inverse(Int a, std::uint64_t m) {
    if (m < 2) throw DomainError("mod_inverse: modulus must be at least 2");
    // Extended Euclid on (a mod m, m); coefficients stay within +-m.
    Int old_r = mod_floor(a, m), r = static_cast<Int>(m);
    Int old_s = 1, s = 0;
    while (r != 0) {
        const Int q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1) return std::nullopt;
    return mod_floor(old_s, m);
}

unsigned ceil_log(std::uint64_t base, std::uint64_t n) {
    if (base < 2) throw DomainError("ceil_log: base must be at least 2");
    if (n == 0) throw DomainError("ceil_log: n must be positive");
    unsigned e = 0;
    u128 power = 1;
    while (power < n) {
        power *= base;
        ++e;
    }
    return e;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
    u64 result = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        if (__builtin_mul_overflow(result, base, &result))
            throw OverflowError("power " + std::to_string(base) + "^" + std::to_string(exponent) + " exceeds 64 bits");
    }
    return result;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    const auto f = factorize(n);
    if (f.size() != 1) return std::nullopt;
    return f.front();
}

std::uint64_t next_prime_satisfying(Int lower, Int residue, std::uint64_t modulus) {
    if (modulus == 0) throw DomainError("next_prime_satisfying: modulus must be positive");
    const u64 r = mod_floor(residue, modulus);
    const u64 g = std::gcd(r, modulus);
    if (modulus > 1 && g > 1) {
        // Every member is divisible by g, so g itself is the only candidate.
        if (is_prime(g) && g % modulus == r && static_cast<Int>(g) > lower) return g;
        throw DomainError("next_prime_satisfying: residue class " + std::to_string(r) + " mod " +
                          std::to_string(modulus) + " holds no prime above " + to_string(lower));
    }
    Int start = lower < 1 ? Int{2} : checked_add(lower, 1);
    // First member of the class at or above start.
    Int candidate = checked_add(start, static_cast<Int>((r + modulus - mod_floor(start, modulus)) % modulus));
    for (;; candidate = checked_add(candidate, static_cast<Int>(modulus))) {
        if (candidate > static_cast<Int>(UINT64_MAX))
            throw OverflowError("next_prime_satisfying: search left the 64-bit range");
        if (is_prime(static_cast<u64>(candidate))) return static_cast<u64>(candidate);
    }
}

}  // namespace discrim
