#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "discrim/discriminator.hpp"

namespace discrim {

enum class ValueKind { Unit, Prime, PowerOfP, PrimePowerOther, CompositeOther };

struct ValueClass {
    ValueKind kind = ValueKind::CompositeOther;
    /// (base, exponent) for PowerOfP and PrimePowerOther, zero otherwise.
    std::uint64_t base = 0;
    unsigned exponent = 0;

    friend bool operator==(const ValueClass&, const ValueClass&) = default;
};

/// Partitions a discriminator value relative to the family prime p. With
/// no family prime every proper prime power is PrimePowerOther.
[[nodiscard]] ValueClass classify_value(std::uint64_t value, std::optional<std::uint64_t> p);

/// "unit", "prime", "power_of_p", "prime_power_other", "composite_other".
[[nodiscard]] std::string_view kind_name(ValueKind kind);

struct RunRow {
    std::uint64_t n_low;
    std::uint64_t n_high;
    std::uint64_t value;

    friend bool operator==(const RunRow&, const RunRow&) = default;
};

struct RunTable {
    std::vector<RunRow> rows;

    friend bool operator==(const RunTable&, const RunTable&) = default;
};

/// Run-length encodes a sequence indexed from n = 1.
[[nodiscard]] RunTable run_length_table(std::span<const std::uint64_t> values);
/// Throws DomainError on a nonexistent value or non-consecutive n.
[[nodiscard]] RunTable run_length_table(std::span<const DiscriminatorResult> results);
[[nodiscard]] std::vector<std::uint64_t> decode(const RunTable& table);

struct ConjectureException {
    std::uint64_t n;
    std::uint64_t value;
    ValueClass cls;

    friend bool operator==(const ConjectureException&, const ConjectureException&) = default;
};

/// Scans f = x(p^r x - 1) up to n_max and lists every n whose value is not
/// accepted: a value is accepted when it is prime, or when it is a proper
/// power of p equal to p^ceil(log_p n). Units are always listed.
[[nodiscard]] std::vector<ConjectureException> check_conjecture1(std::uint64_t p, unsigned r,
                                                                 std::uint64_t n_max);

struct Theorem3Violation {
    std::uint64_t n;
    std::uint64_t m;

    friend bool operator==(const Theorem3Violation&, const Theorem3Violation&) = default;
};

/// For f = x(x-1) and 15 <= n <= n_max, every discriminating m with
/// 10m <= 24n that is neither prime nor a power of two.
[[nodiscard]] std::vector<Theorem3Violation> check_theorem3(std::uint64_t n_max);

struct TableMetadata {
    std::string polynomial;
    std::optional<std::uint64_t> family_prime;
};

/// `n_low,n_high,value,class` header plus one LF-terminated line per run.
[[nodiscard]] std::string emit_csv(const RunTable& table, const TableMetadata& meta);

/// LaTeX tabular with `column_pairs` (n, D_f(n)) column pairs filled
/// column-major, e.g. `{| c | c | c | c |}` for two pairs.
[[nodiscard]] std::string emit_latex(const RunTable& table, const TableMetadata& meta,
                                     unsigned column_pairs = 2);

}  // namespace discrim
