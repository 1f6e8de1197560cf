#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "discrim/int128.hpp"

namespace discrim {

/// Dense univariate polynomial with exact integer coefficients.
///
/// `coefficients()[i]` is the coefficient of x^i. The stored sequence is
/// always normalized: the highest stored coefficient is nonzero, and the
/// zero polynomial stores nothing.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Int> coefficients);

    /// x^k
    [[nodiscard]] static Polynomial monomial(std::size_t k, Int coefficient = 1);
    [[nodiscard]] static Polynomial constant(Int c) { return Polynomial({c}); }
    /// x(dx - 1), the family the discriminator tables are built from.
    [[nodiscard]] static Polynomial quadratic_family(Int d) { return Polynomial({0, -1, d}); }

    [[nodiscard]] std::span<const Int> coefficients() const noexcept { return coefficients_; }
    [[nodiscard]] std::optional<std::size_t> degree() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept { return coefficients_.empty(); }
    /// Coefficient of x^k, zero past the degree.
    [[nodiscard]] Int coefficient(std::size_t k) const noexcept;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);

private:
    std::vector<Int> coefficients_;
};

/// Raises `base` to a nonnegative integer power by repeated squaring.
[[nodiscard]] Polynomial pow(const Polynomial& base, std::uint64_t exponent);

/// Reads either an expression over integers and `x` with `+ - * ^` and
/// parentheses, or the ascending list form `coeffs:c0,c1,...`.
/// Throws ParseError (with the offending offset) on malformed input.
[[nodiscard]] Polynomial parse_polynomial(std::string_view text);

/// Descending powers with explicit operators, e.g. `27*x^2 - x`.
[[nodiscard]] std::string to_string(const Polynomial& f);

[[nodiscard]] Int evaluate(const Polynomial& f, Int x);

/// f(x) mod m in [0, m). Reduces every coefficient and every partial Horner
/// value, so intermediates stay below m^2 regardless of degree.
[[nodiscard]] std::uint64_t evaluate_mod(const Polynomial& f, Int x, std::uint64_t m);

/// c * f for nonzero c.
[[nodiscard]] Polynomial scale(const Polynomial& f, Int c);

/// f(g(x)).
[[nodiscard]] Polynomial compose(const Polynomial& f, const Polynomial& g);

}  // namespace discrim
