#include "discrim/verify.hpp"

#include <random>

#include "discrim/analysis.hpp"
#include "discrim/closedform.hpp"
#include "discrim/discriminator.hpp"

namespace discrim {

namespace {

constexpr std::size_t kKeptFailures = 20;

std::string show(const std::optional<Modulus>& v) {
    return v ? std::to_string(*v) : std::string("infinity");
}

void power_formula_suite(VerifyOutcome& out, std::initializer_list<std::uint64_t> ds, std::uint64_t n_max) {
    for (std::uint64_t d : ds) {
        const auto results = scan(Polynomial::quadratic_family(static_cast<Int>(d)), n_max);
        for (const auto& r : results) {
            ++out.checks;
            const std::uint64_t expected = sun_power_formula(d, r.n);
            if (r.value != expected)
                out.fail("d=" + std::to_string(d) + " n=" + std::to_string(r.n) + ": oracle " + show(r.value) +
                         ", formula " + std::to_string(expected));
        }
    }
}

}  // namespace

void VerifyOutcome::fail(std::string message) {
    ++failure_count;
    if (failures.size() < kKeptFailures) failures.push_back(std::move(message));
}

VerifyOutcome verify_theorem1(std::uint64_t n_max) {
    VerifyOutcome out;
    out.name = "theorem 1: D = d^ceil(log_d n) for x(dx-1), d in {2,3}";
    power_formula_suite(out, {2, 3}, n_max);
    return out;
}

VerifyOutcome verify_theorem2(std::uint64_t n_max) {
    VerifyOutcome out;
    out.name = "theorem 2: D = 2^ceil(log_2 n) for x(2^r x-1)";
    power_formula_suite(out, {2, 4, 8, 16}, n_max);
    return out;
}

VerifyOutcome verify_theorem3(std::uint64_t n_max) {
    VerifyOutcome out;
    out.name = "theorem 3: discriminating m <= 2.4n for x(x-1) is prime or a power of two";
    out.checks = n_max >= 15 ? n_max - 14 : 0;
    for (const auto& v : check_theorem3(n_max))
        out.fail("n=" + std::to_string(v.n) + " m=" + std::to_string(v.m) + " discriminates");
    return out;
}

VerifyOutcome verify_theorem4(std::uint64_t seed, std::uint64_t trials, std::uint64_t n_max) {
    VerifyOutcome out;
    out.name = "theorem 4: D_f <= D_pf <= p D_f";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> degree(0, 3);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> prime_index(0, 2);
    std::uniform_int_distribution<std::uint64_t> pick_n(1, n_max);
    constexpr std::uint64_t kPrimes[] = {2, 3, 5};
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<Int> c(static_cast<std::size_t>(degree(rng)) + 1);
        for (Int& v : c) v = coeff(rng);
        const Polynomial f(std::move(c));
        const std::uint64_t p = kPrimes[prime_index(rng)];
        const std::uint64_t n = pick_n(rng);
        const auto report = check_theorem4(f, p, n);
        ++out.checks;
        if (!report.holds)
            out.fail("f=" + to_string(f) + " p=" + std::to_string(p) + " n=" + std::to_string(n) + ": D_f " +
                     show(report.d_f) + ", D_pf " + show(report.d_pf));
    }
    return out;
}

VerifyOutcome verify_theorem5(std::uint64_t n_max) {
    VerifyOutcome out;
    out.name = "theorem 5: BSW closed form for x^j";
    for (std::uint64_t j : {2, 3, 4, 5, 6, 9}) {
        const auto results = scan(Polynomial::monomial(j), n_max);
        for (const auto& r : results) {
            ++out.checks;
            const std::uint64_t expected = bsw_discriminator(j, r.n);
            if (r.value != expected)
                out.fail("j=" + std::to_string(j) + " n=" + std::to_string(r.n) + ": oracle " + show(r.value) +
                         ", formula " + std::to_string(expected));
        }
    }
    return out;
}

}  // namespace discrim
