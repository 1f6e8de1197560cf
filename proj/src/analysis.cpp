#include "discrim/analysis.hpp"

#include <sstream>

#include "detail/residue_kernel.hpp"
#include "discrim/error.hpp"
#include "discrim/ntheory.hpp"
#include "discrim/threading.hpp"

namespace discrim {

ValueClass classify_value(std::uint64_t value, std::optional<std::uint64_t> p) {
    if (value == 0) throw DomainError("classify_value: value must be positive");
    if (p && !is_prime(*p)) throw DomainError("classify_value: family base " + std::to_string(*p) + " is not prime");
    if (value == 1) return {ValueKind::Unit};
    if (is_prime(value)) return {ValueKind::Prime};
    if (const auto pp = as_prime_power(value)) {
        const ValueKind kind = p && pp->prime == *p ? ValueKind::PowerOfP : ValueKind::PrimePowerOther;
        return {kind, pp->prime, pp->exponent};
    }
    return {ValueKind::CompositeOther};
}

std::string_view kind_name(ValueKind kind) {
    switch (kind) {
        case ValueKind::Unit: return "unit";
        case ValueKind::Prime: return "prime";
        case ValueKind::PowerOfP: return "power_of_p";
        case ValueKind::PrimePowerOther: return "prime_power_other";
        case ValueKind::CompositeOther: return "composite_other";
    }
    return "?";
}

RunTable run_length_table(std::span<const std::uint64_t> values) {
    RunTable table;
    for (std::uint64_t i = 0; i < values.size(); ++i) {
        const std::uint64_t n = i + 1;
        if (!table.rows.empty() && table.rows.back().value == values[i])
            table.rows.back().n_high = n;
        else
            table.rows.push_back({n, n, values[i]});
    }
    return table;
}

RunTable run_length_table(std::span<const DiscriminatorResult> results) {
    std::vector<std::uint64_t> values;
    values.reserve(results.size());
    for (const auto& r : results) {
        if (r.n != values.size() + 1)
            throw DomainError("run_length_table: expected n = " + std::to_string(values.size() + 1) + ", got " +
                              std::to_string(r.n));
        if (!r.value) throw DomainError("run_length_table: D_f(" + std::to_string(r.n) + ") does not exist");
        values.push_back(*r.value);
    }
    return run_length_table(values);
}

std::vector<std::uint64_t> decode(const RunTable& table) {
    std::vector<std::uint64_t> out;
    for (const auto& row : table.rows) out.insert(out.end(), row.n_high - row.n_low + 1, row.value);
    return out;
}

std::vector<ConjectureException> check_conjecture1(std::uint64_t p, unsigned r, std::uint64_t n_max) {
    if (!is_prime(p)) throw DomainError("check_conjecture1: " + std::to_string(p) + " is not prime");
    if (r == 0) throw DomainError("check_conjecture1: r must be positive");
    const auto f = Polynomial::quadratic_family(static_cast<Int>(checked_pow(p, r)));
    const auto results = scan(f, n_max, [p](std::uint64_t n) -> std::optional<Modulus> {
        return checked_pow(p, ceil_log(p, n)) + 1;
    });
    std::vector<ConjectureException> exceptions;
    for (const auto& res : results) {
        const std::uint64_t v = *res.value;
        const ValueClass cls = classify_value(v, p);
        const bool accepted = cls.kind == ValueKind::Prime ||
                              (cls.kind == ValueKind::PowerOfP && v == checked_pow(p, ceil_log(p, res.n)));
        if (!accepted) exceptions.push_back({res.n, v, cls});
    }
    return exceptions;
}

std::vector<Theorem3Violation> check_theorem3(std::uint64_t n_max) {
    if (n_max < 15) throw DomainError("check_theorem3: n_max must be at least 15");
    const Polynomial f({0, -1, 1});
    const std::uint64_t count = n_max - 14;
    std::vector<std::vector<Theorem3Violation>> per_n(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
        const std::uint64_t n = 15 + static_cast<std::uint64_t>(i);
        const detail::ResidueKernel kernel(f, n);
        detail::ResidueScratch scratch;
        // m <= 2.4n, compared exactly
        for (std::uint64_t m = 1; 10 * m <= 24 * n; ++m) {
            if ((m & (m - 1)) == 0 || is_prime(m)) continue;
            if (kernel.discriminates(m, scratch)) per_n[static_cast<std::size_t>(i)].push_back({n, m});
        }
    }
    std::vector<Theorem3Violation> out;
    for (const auto& v : per_n) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::string emit_csv(const RunTable& table, const TableMetadata& meta) {
    std::ostringstream out;
    out << "n_low,n_high,value,class\n";
    for (const auto& row : table.rows) {
        out << row.n_low << ',' << row.n_high << ',' << row.value << ','
            << kind_name(classify_value(row.value, meta.family_prime).kind) << '\n';
    }
    return out.str();
}

std::string emit_latex(const RunTable& table, const TableMetadata& meta, unsigned column_pairs) {
    if (column_pairs == 0) throw DomainError("emit_latex: need at least one column pair");
    const std::size_t rows = table.rows.size();
    const std::size_t height = (rows + column_pairs - 1) / column_pairs;
    std::ostringstream out;
    out << "% Discriminator values for f(x) = " << meta.polynomial << '\n';
    out << "\\begin{tabular}{|";
    for (unsigned c = 0; c < 2 * column_pairs; ++c) out << " c |";
    out << "}\n\\hline\n";
    for (unsigned c = 0; c < column_pairs; ++c) out << (c ? " & " : "") << "$n$ & $D_f(n)$";
    out << " \\\\\n\\hline\n";
    for (std::size_t line = 0; line < height; ++line) {
        for (unsigned c = 0; c < column_pairs; ++c) {
            if (c) out << " & ";
            const std::size_t idx = c * height + line;
            if (idx >= rows) {
                out << " & ";
                continue;
            }
            const auto& row = table.rows[idx];
            if (row.n_low == row.n_high)
                out << row.n_low;
            else
                out << row.n_low << " - " << row.n_high;
            out << " & " << row.value;
        }
        out << " \\\\\n";
    }
    out << "\\hline\n\\end{tabular}\n";
    return out.str();
}

}  // namespace discrim
