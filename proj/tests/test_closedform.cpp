#include <doctest.h>

#include "discrim/closedform.hpp"
#include "discrim/error.hpp"
#include "discrim/ntheory.hpp"

using namespace discrim;

TEST_CASE("sun_power_formula") {
    CHECK(sun_power_formula(3, 10) == 27);
    CHECK(sun_power_formula(4, 5) == 8);
    CHECK(sun_power_formula(2, 1) == 1);
    CHECK(sun_power_formula(16, 512) == 512);
    CHECK(sun_power_formula(8, 513) == 1024);
    for (std::uint64_t d : {0u, 1u, 5u, 6u, 9u, 12u, 27u})
        CHECK_THROWS_AS((void)sun_power_formula(d, 10), DomainError);
    CHECK_THROWS_AS((void)sun_power_formula(2, 0), DomainError);
}

TEST_CASE("lemma1_bound") {
    CHECK(lemma1_bound(3, 3, 98) == 243);
    CHECK(lemma1_bound(7, 2, 49) == 49);
    CHECK(lemma1_bound(29, 1, 500) == 841);
    CHECK(lemma1_bound(29, 1, 1) == 1);
    CHECK_THROWS_AS((void)lemma1_bound(9, 1, 10), DomainError);
    CHECK_THROWS_AS((void)lemma1_bound(3, 0, 10), DomainError);
}

TEST_CASE("property: the power formulas match the oracle") {
    for (std::uint64_t d : {2u, 3u, 4u, 8u, 16u}) {
        const auto results = scan(Polynomial::quadratic_family(static_cast<Int>(d)), 128);
        for (const auto& r : results) REQUIRE(r.value == sun_power_formula(d, r.n));
    }
}

TEST_CASE("property: Lemma 1 bound, attained at powers of p") {
    const std::pair<std::uint64_t, unsigned> matrix[] = {{2, 1}, {2, 2}, {3, 1}, {3, 3},
                                                         {5, 1}, {5, 2}, {7, 2}, {29, 1}};
    for (const auto& [p, r] : matrix) {
        const auto f = Polynomial::quadratic_family(static_cast<Int>(checked_pow(p, r)));
        const auto results = scan(f, 300);
        for (const auto& res : results) REQUIRE(*res.value <= lemma1_bound(p, r, res.n));
        for (std::uint64_t pk = p; pk <= 300; pk *= p) REQUIRE(results[pk - 1].value == pk);
    }
}

TEST_CASE("bsw_discriminator") {
    CHECK(bsw_discriminator(2, 5) == 10);
    CHECK(compute(Polynomial::monomial(2), 5).value == 10u);
    CHECK(bsw_discriminator(3, 5) == 5);
    CHECK(compute(Polynomial::monomial(3), 5).value == 5u);
    CHECK(bsw_discriminator(3, 1) == 1);
    CHECK(bsw_discriminator(1, 12) == 13);
    // k = 4 = 2*2 is admitted literally.
    CHECK(bsw_discriminator(2, 2) == 4);
    CHECK_THROWS_AS((void)bsw_discriminator(0, 5), DomainError);
}

TEST_CASE("the even BSW branch fails below its range") {
    // The stated formula needs k >= 2n, but one value is distinct mod 1 and
    // 1, 4 are distinct mod 2; likewise 1, 4, 9, 16 are distinct mod 9.
    CHECK(bsw_discriminator(2, 1) == 3);
    CHECK(compute(Polynomial::monomial(2), 1).value == 1u);
    CHECK(compute(Polynomial::monomial(2), 2).value == 2u);
    CHECK(bsw_discriminator(2, 4) == 10);
    CHECK(compute(Polynomial::monomial(2), 4).value == 9u);
}

TEST_CASE("property: BSW odd branch matches the oracle and depends only on the radical of j") {
    for (std::uint64_t j : {3u, 5u, 9u}) {
        const auto results = scan(Polynomial::monomial(j), 100);
        for (const auto& r : results) REQUIRE(r.value == bsw_discriminator(j, r.n));
    }
    for (std::uint64_t n = 1; n <= 200; ++n) {
        REQUIRE(bsw_discriminator(3, n) == bsw_discriminator(9, n));
        REQUIRE(bsw_discriminator(9, n) == bsw_discriminator(27, n));
    }
    // Odd exponents with equal prime factors give equal discriminators.
    const auto x9 = compose(Polynomial::monomial(3), Polynomial::monomial(3));
    const auto x27 = compose(Polynomial::monomial(3), x9);
    REQUIRE(x27 == compose(x9, Polynomial::monomial(3)));
    REQUIRE(x27 == Polynomial::monomial(27));
    const auto d3 = scan(Polynomial::monomial(3), 60), d9 = scan(x9, 60), d27 = scan(x27, 25);
    for (std::size_t i = 0; i < 60; ++i) {
        REQUIRE(d9[i].value == d3[i].value);
        if (i < 25) REQUIRE(d27[i].value == d3[i].value);
    }
    // 3 and 5 do not share prime factors: phi(11) = 10 separates x^15 from x^3.
    const auto x15 = compose(Polynomial::monomial(3), Polynomial::monomial(5));
    CHECK(compute(x15, 11).value == 15u);
    CHECK(compute(Polynomial::monomial(3), 11).value == 11u);
    CHECK(bsw_discriminator(15, 11) == 15);
}

TEST_CASE("prime families") {
    const auto two = prime_family(PrimeFamilyTag::TwoXXMinus1);
    const auto four = prime_family(PrimeFamilyTag::FourX4XMinus1);
    const auto eighteen = prime_family(PrimeFamilyTag::EighteenX3XMinus1);
    CHECK(two.polynomial == scale(Polynomial({0, -1, 1}), 2));
    CHECK(four.polynomial == scale(Polynomial::quadratic_family(4), 4));
    CHECK(eighteen.polynomial == scale(Polynomial::quadratic_family(3), 18));

    CHECK(sun_prime_discriminator(two, 4) == 7);
    CHECK(compute(two.polynomial, 4).value == 7u);
    CHECK(sun_prime_discriminator(four, 4) == 13);
    CHECK(sun_prime_discriminator(eighteen, 3) == 13);
    // Below n = 5 the oracle disagrees for these two families.
    CHECK(compute(four.polynomial, 4).value == 7u);
    CHECK(compute(eighteen.polynomial, 3).value == 5u);

    // Integer boundary points of (8n - 4)/3: the inequality is strict.
    CHECK(sun_prime_discriminator(four, 2) == 5);
    CHECK(sun_prime_discriminator(four, 5) == 13);
    CHECK(!four.above_threshold(5, 12));
    CHECK(four.above_threshold(5, 13));
    CHECK(sun_prime_discriminator(eighteen, 4) == 13);
    CHECK(sun_prime_discriminator(two, 1) == 2);

    CHECK(parse_family_tag("4x4x1") == PrimeFamilyTag::FourX4XMinus1);
    CHECK(!parse_family_tag("x"));
    CHECK(family_name(PrimeFamilyTag::EighteenX3XMinus1) == "18x3x1");
}

TEST_CASE("property: prime families match the oracle from n = 5 and sit in their windows") {
    for (auto tag : {PrimeFamilyTag::TwoXXMinus1, PrimeFamilyTag::FourX4XMinus1,
                     PrimeFamilyTag::EighteenX3XMinus1}) {
        const auto family = prime_family(tag);
        const auto results = scan(family.polynomial, 200);
        for (std::uint64_t n = 5; n <= 200; ++n) {
            const std::uint64_t p = sun_prime_discriminator(family, n);
            REQUIRE(results[n - 1].value == p);
            REQUIRE(is_prime(p));
            REQUIRE(p % family.modulus == static_cast<std::uint64_t>(family.residue) % family.modulus);
            if (const auto w = size_window(tag, n)) REQUIRE(w->contains(p));
        }
    }
    CHECK(!size_window(PrimeFamilyTag::TwoXXMinus1, 10));
    const auto w = *size_window(PrimeFamilyTag::FourX4XMinus1, 5);
    CHECK(!w.contains(12));
    CHECK(w.contains(13));
    CHECK(!w.contains(40));
}

TEST_CASE("check_theorem4") {
    const auto a = check_theorem4(Polynomial({0, -1, 1}), 2, 4);
    CHECK(a.d_f == 7u);
    CHECK(a.d_pf == 7u);
    CHECK(a.holds);

    const auto b = check_theorem4(Polynomial::monomial(1), 3, 5);
    CHECK(b.d_f == 5u);
    CHECK(*b.d_pf >= 5u);
    CHECK(*b.d_pf <= 15u);
    CHECK(b.holds);

    const auto c = check_theorem4(Polynomial::quadratic_family(4), 2, 8);
    CHECK(c.d_f == 8u);
    CHECK(c.d_pf == 16u);
    CHECK(c.holds);

    const auto d = check_theorem4(Polynomial::constant(3), 5, 3);
    CHECK(!d.d_f);
    CHECK(!d.d_pf);
    CHECK(d.holds);

    CHECK_THROWS_AS((void)check_theorem4(Polynomial::monomial(1), 4, 5), DomainError);
}
