#include <doctest.h>

#include <random>

#include "discrim/discriminator.hpp"
#include "discrim/error.hpp"
#include "discrim/threading.hpp"
#include "support.hpp"

using namespace discrim;

namespace {

std::vector<std::optional<Modulus>> values_of(const std::vector<DiscriminatorResult>& results) {
    std::vector<std::optional<Modulus>> out;
    for (const auto& r : results) out.push_back(r.value);
    return out;
}

std::vector<std::optional<Modulus>> finite(std::initializer_list<Modulus> vs) {
    return {vs.begin(), vs.end()};
}

const Polynomial kFamily4 = Polynomial::quadratic_family(4);
const Polynomial kFamily27 = Polynomial::quadratic_family(27);
const Polynomial kFamily29 = Polynomial::quadratic_family(29);
const Polynomial kFamily49 = Polynomial::quadratic_family(49);

}  // namespace

TEST_CASE("is_discriminating") {
    std::vector<std::uint64_t> residues;
    for (Int i = 1; i <= 5; ++i) residues.push_back(evaluate_mod(kFamily4, i, 8));
    CHECK(residues == std::vector<std::uint64_t>{3, 6, 1, 4, 7});
    CHECK(is_discriminating(kFamily4, 5, 8));
    CHECK(is_discriminating(Polynomial({5, 1, 1}), 1, 1));
    CHECK(!is_discriminating(Polynomial({5, 1, 1}), 2, 1));
    CHECK_THROWS_AS((void)is_discriminating(kFamily4, 0, 8), DomainError);
    CHECK_THROWS_AS((void)is_discriminating(kFamily4, 5, 0), DomainError);
}

TEST_CASE("is_discriminating on moduli past the dense limit") {
    const Modulus big = Modulus{1} << 25;
    CHECK(is_discriminating(Polynomial::monomial(1), 3, big));
    CHECK(!is_discriminating(Polynomial({0, static_cast<Int>(big)}), 2, big));
    CHECK(is_discriminating(Polynomial({0, 1, 1}), 100, big + 1));
}

TEST_CASE("distinctness is not monotone in m") {
    // x(49x - 1) at n = 9: 21 discriminates, 22 does not, 31 does again.
    CHECK(is_discriminating(kFamily49, 9, 21));
    CHECK(!is_discriminating(kFamily49, 9, 22));
    CHECK(is_discriminating(kFamily49, 9, 31));
    CHECK(is_discriminating(kFamily49, 8, 16));
    CHECK(!is_discriminating(kFamily49, 8, 17));
}

TEST_CASE("trivial_upper_bound") {
    CHECK(trivial_upper_bound(Polynomial::monomial(1), 10) == Int{10});
    CHECK(trivial_upper_bound(Polynomial::monomial(2), 3) == Int{9});
    CHECK(trivial_upper_bound(Polynomial({0, -2, 1}), 3) == Int{5});  // -1, 0, 3
    CHECK(!trivial_upper_bound(Polynomial({0, -3, 1}), 3));           // f(1) = f(2) = -2
    CHECK(!trivial_upper_bound(Polynomial::constant(4), 2));
    CHECK(trivial_upper_bound(Polynomial::constant(4), 1) == Int{1});
}

TEST_CASE("compute matches known discriminators") {
    CHECK(compute(kFamily49, 8).value == 16u);
    CHECK(compute(kFamily29, 5).value == 15u);
    CHECK(compute(Polynomial({3, 0, 7}), 1).value == 1u);
    // Table 1 lists 223 through n = 97, but f(94) = f(96) (mod 223): 94 + 96 is
    // the inverse of 27 mod 223, so 27*190 - 1 = 23*223 divides f(96) - f(94).
    CHECK(evaluate_mod(kFamily27, 94, 223) == evaluate_mod(kFamily27, 96, 223));
    CHECK(compute(kFamily27, 95).value == 223u);
    CHECK(compute(kFamily27, 96).value == 243u);
    CHECK(compute(kFamily27, 97).value == 243u);
}

TEST_CASE("compute reports nonexistence up front") {
    const auto r = compute(Polynomial::constant(4), 3);
    CHECK(!r.exists());
    CHECK(r.candidates_tested == 0);
    CHECK(!compute(Polynomial({0, -3, 1}), 2).exists());
}

TEST_CASE("compute honours and validates caller bounds") {
    const auto r = compute(kFamily29, 5);
    CHECK(r.candidates_tested == 11);  // moduli 5..15
    CHECK(compute(kFamily29, 5, SearchBounds{5, 16}).value == 15u);
    CHECK_THROWS_AS((void)compute(kFamily29, 5, SearchBounds{5, 15}), BoundError);
    CHECK_THROWS_AS((void)compute(kFamily29, 5, SearchBounds{10, 10}), BoundError);
    CHECK_THROWS_AS((void)compute(kFamily29, 5, SearchBounds{0, std::nullopt}), BoundError);
    CHECK_THROWS_AS((void)compute(kFamily29, 0), DomainError);

    // A lower bound above D_f(n) yields the least discriminating m above it.
    const auto values = testing::naive_values(kFamily29, 5);
    Modulus expected = 16;
    while (!testing::all_pairs_distinct(values, expected)) ++expected;
    CHECK(compute(kFamily29, 5, SearchBounds{16, std::nullopt}).value == expected);
    CHECK(compute(kFamily29, 5, SearchBounds{1, std::nullopt}).value == 15u);
}

TEST_CASE("scan") {
    CHECK(values_of(scan(kFamily29, 10)) == finite({1, 3, 7, 7, 15, 19, 19, 19, 19, 19}));
    CHECK(values_of(scan(Polynomial::monomial(1), 5)) == finite({1, 2, 3, 4, 5}));
    CHECK(values_of(scan(kFamily4, 8)) == finite({1, 2, 4, 4, 8, 8, 8, 8}));

    const auto collided = scan(Polynomial({0, -3, 1}), 5);
    CHECK(collided[0].value == 1u);
    for (std::size_t i = 1; i < collided.size(); ++i) CHECK(!collided[i].exists());

    CHECK_THROWS_AS((void)scan(kFamily29, 10, [](std::uint64_t n) -> std::optional<Modulus> {
                        return n == 5 ? std::optional<Modulus>(15) : std::nullopt;
                    }),
                    BoundError);
}

TEST_CASE("property: warm-started scan equals independent computation") {
    const auto warm = scan(kFamily29, 100);
    const auto cold = reference::scan(kFamily29, 100);
    REQUIRE(warm.size() == 100);
    for (std::uint64_t n = 1; n <= 100; ++n) {
        REQUIRE(warm[n - 1].n == n);
        REQUIRE(warm[n - 1].value == cold[n - 1].value);
        REQUIRE(warm[n - 1].value == compute(kFamily29, n).value);
    }
}

TEST_CASE("property: parallel kernels are bitwise identical to one thread") {
    const int saved = thread_count();
    std::mt19937_64 rng(99);
    for (int t = 0; t < 20; ++t) {
        const auto f = testing::random_polynomial(rng, 3, 9);
        set_thread_count(1);
        const auto serial = scan(f, 80);
        const auto serial_one = compute(f, 60);
        set_thread_count(4);
        const auto parallel = scan(f, 80);
        const auto parallel_one = compute(f, 60);
        REQUIRE(serial == parallel);
        REQUIRE(serial_one == parallel_one);
        REQUIRE(parallel_one == reference::compute(f, 60));
    }
    set_thread_count(saved);
}

TEST_CASE("property: monotone in n and at least n") {
    const Polynomial families[] = {kFamily27, kFamily49, kFamily29, Polynomial::monomial(2),
                                   Polynomial::monomial(3), Polynomial({1, 0, 0, 1})};
    for (const auto& f : families) {
        const auto results = scan(f, 200);
        for (std::uint64_t n = 1; n <= 200; ++n) {
            REQUIRE(results[n - 1].value >= n);
            if (n >= 2) REQUIRE(*results[n - 1].value >= *results[n - 2].value);
        }
    }
}

TEST_CASE("property: oracle minimality against an all-pairs search") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint64_t> pick_n(1, 30);
    for (int t = 0; t < 200; ++t) {
        const auto f = testing::random_polynomial(rng, 3, 9);
        const std::uint64_t n = pick_n(rng);
        const auto r = compute(f, n);
        REQUIRE(r.value == testing::naive_discriminator(f, n));
        if (r.value) {
            const auto values = testing::naive_values(f, n);
            REQUIRE(testing::all_pairs_distinct(values, *r.value));
        }
    }
}

TEST_CASE("property: early-exit check equals the all-pairs check") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        const auto f = testing::random_polynomial(rng, 3, 9);
        for (std::uint64_t n = 1; n <= 20; ++n) {
            const auto values = testing::naive_values(f, n);
            for (Modulus m = 1; m <= 50; ++m) REQUIRE(is_discriminating(f, n, m) == testing::all_pairs_distinct(values, m));
        }
    }
}
