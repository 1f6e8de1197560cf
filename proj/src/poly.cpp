#include "discrim/poly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace discrim {

namespace {

void normalize(std::vector<Int>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// Upper bound on a parsed exponent; keeps x^j within sane memory.
constexpr std::uint64_t kMaxExponent = 4096;

}  // namespace

Polynomial::Polynomial(std::vector<Int> coefficients) : coefficients_(std::move(coefficients)) {
    normalize(coefficients_);
}

Polynomial Polynomial::monomial(std::size_t k, Int coefficient) {
    std::vector<Int> c(k + 1, 0);
    c[k] = coefficient;
    return Polynomial(std::move(c));
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
    if (coefficients_.empty()) return std::nullopt;
    return coefficients_.size() - 1;
}

Int Polynomial::coefficient(std::size_t k) const noexcept {
    return k < coefficients_.size() ? coefficients_[k] : 0;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Int> c(std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a.coefficient(i), b.coefficient(i));
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Int> c(std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_sub(a.coefficient(i), b.coefficient(i));
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a) {
    return Polynomial() - a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        if (a.coefficients_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
            c[i + j] = checked_add(c[i + j], checked_mul(a.coefficients_[i], b.coefficients_[j]));
    }
    return Polynomial(std::move(c));
}

Polynomial pow(const Polynomial& base, std::uint64_t exponent) {
    Polynomial result = Polynomial::constant(1);
    Polynomial square = base;
    while (exponent != 0) {
        if (exponent & 1) result = result * square;
        exponent >>= 1;
        if (exponent != 0) square = square * square;
    }
    return result;
}

Int evaluate(const Polynomial& f, Int x) {
    const auto c = f.coefficients();
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = checked_add(checked_mul(acc, x), *it);
    return acc;
}

std::uint64_t evaluate_mod(const Polynomial& f, Int x, std::uint64_t m) {
    if (m == 0) throw DomainError("evaluate_mod: modulus must be positive");
    const UInt xr = mod_floor(x, m);
    const auto c = f.coefficients();
    UInt acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * xr + mod_floor(*it, m)) % m;
    return static_cast<std::uint64_t>(acc);
}

Polynomial scale(const Polynomial& f, Int c) {
    if (c == 0) throw DomainError("scale: factor must be nonzero");
    std::vector<Int> out(f.coefficients().begin(), f.coefficients().end());
    for (Int& v : out) v = checked_mul(v, c);
    return Polynomial(std::move(out));
}

Polynomial compose(const Polynomial& f, const Polynomial& g) {
    const auto c = f.coefficients();
    Polynomial acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * g + Polynomial::constant(*it);
    return acc;
}

std::string to_string(const Polynomial& f) {
    const auto c = f.coefficients();
    if (c.empty()) return "0";
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        const Int coeff = c[k];
        if (coeff == 0) continue;
        const bool negative = coeff < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        // |kIntMin| is not representable; print its digits directly.
        std::string magnitude = to_string(coeff);
        if (negative) magnitude.erase(0, 1);
        if (k == 0) {
            out += magnitude;
            continue;
        }
        if (magnitude != "1") out += magnitude + "*";
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

namespace {

enum class Tok { Int, X, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string_view text;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ == src_.size()) return {Tok::End, start, {}};
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return {Tok::Int, start, src_.substr(start, pos_ - start)};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            const auto name = src_.substr(start, pos_ - start);
            if (name != "x") throw ParseError("unknown variable '" + std::string(name) + "', only x is allowed", start);
            return {Tok::X, start, name};
        }
        ++pos_;
        switch (c) {
            case '+': return {Tok::Plus, start, src_.substr(start, 1)};
            case '-': return {Tok::Minus, start, src_.substr(start, 1)};
            case '*': return {Tok::Star, start, src_.substr(start, 1)};
            case '^': return {Tok::Caret, start, src_.substr(start, 1)};
            case '(': return {Tok::LParen, start, src_.substr(start, 1)};
            case ')': return {Tok::RParen, start, src_.substr(start, 1)};
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

// expr  := term (('+' | '-') term)*
// term  := unary ('*' unary)*
// unary := '-' unary | power
// power := atom ('^' INT)?
// atom  := INT | 'x' | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    Polynomial parse() {
        Polynomial f = expr();
        if (cur_.kind != Tok::End) throw ParseError("unexpected '" + std::string(cur_.text) + "'", cur_.pos);
        return f;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    Polynomial expr() {
        Polynomial acc = term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const bool plus = cur_.kind == Tok::Plus;
            advance();
            Polynomial rhs = term();
            acc = plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (cur_.kind == Tok::Star) {
            advance();
            acc = acc * unary();
        }
        return acc;
    }

    Polynomial unary() {
        if (cur_.kind == Tok::Minus) {
            advance();
            return -unary();
        }
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (cur_.kind != Tok::Caret) return base;
        advance();
        if (cur_.kind != Tok::Int)
            throw ParseError("exponent must be a nonnegative integer literal", cur_.pos);
        const Token exp_tok = cur_;
        std::uint64_t e = 0;
        for (char c : exp_tok.text) {
            e = e * 10 + static_cast<std::uint64_t>(c - '0');
            if (e > kMaxExponent)
                throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), exp_tok.pos);
        }
        advance();
        if (cur_.kind == Tok::Caret)
            throw ParseError("chained '^' is ambiguous, use parentheses", cur_.pos);
        return pow(base, e);
    }

    Polynomial atom() {
        const Token t = cur_;
        switch (t.kind) {
            case Tok::Int: {
                advance();
                try {
                    return Polynomial::constant(parse_int(t.text));
                } catch (const OverflowError&) {
                    throw ParseError("integer literal out of range", t.pos);
                }
            }
            case Tok::X:
                advance();
                return Polynomial::monomial(1);
            case Tok::LParen: {
                advance();
                Polynomial inner = expr();
                if (cur_.kind != Tok::RParen) throw ParseError("expected ')'", cur_.pos);
                advance();
                return inner;
            }
            case Tok::End:
                throw ParseError("unexpected end of input", t.pos);
            default:
                throw ParseError("unexpected '" + std::string(t.text) + "'", t.pos);
        }
    }

    Lexer lexer_;
    Token cur_{Tok::End, 0, {}};
};

Polynomial parse_coefficient_list(std::string_view text, std::size_t offset) {
    std::vector<Int> coeffs;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        std::size_t lead = 0;
        while (lead < field.size() && std::isspace(static_cast<unsigned char>(field[lead]))) ++lead;
        field.remove_prefix(lead);
        while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
        const std::size_t at = offset + pos + lead;
        if (field.empty()) throw ParseError("empty coefficient", at);
        try {
            coeffs.push_back(parse_int(field));
        } catch (const OverflowError&) {
            throw ParseError("coefficient out of range", at);
        } catch (const DomainError&) {
            throw ParseError("coefficient '" + std::string(field) + "' is not an integer", at);
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
    constexpr std::string_view kListPrefix = "coeffs:";
    std::size_t lead = 0;
    while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
    if (text.substr(lead, kListPrefix.size()) == kListPrefix) {
        const std::size_t offset = lead + kListPrefix.size();
        return parse_coefficient_list(text.substr(offset), offset);
    }
    return Parser(text).parse();
}

}  // namespace discrim
