#include "discrim/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "discrim/analysis.hpp"
#include "discrim/closedform.hpp"
#include "discrim/discriminator.hpp"
#include "discrim/error.hpp"
#include "discrim/ntheory.hpp"
#include "discrim/poly.hpp"
#include "discrim/threading.hpp"
#include "discrim/verify.hpp"

namespace discrim {

namespace {

// Raised for a failed verification; maps to kExitMismatch.
class MismatchError : public Error {
public:
    using Error::Error;
};

struct FamilySpec {
    std::uint64_t p = 0;
    unsigned r = 0;
};

FamilySpec parse_family_spec(const std::string& text) {
    FamilySpec spec;
    std::istringstream in(text);
    std::string field;
    bool have_p = false, have_r = false;
    while (std::getline(in, field, ',')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw DomainError("--family expects p=<prime>,r=<int>, got '" + text + "'");
        const std::string key = field.substr(0, eq);
        const Int value = parse_int(field.substr(eq + 1));
        if (value < 1) throw DomainError("--family: " + key + " must be positive");
        if (key == "p") {
            spec.p = static_cast<std::uint64_t>(value);
            have_p = true;
        } else if (key == "r") {
            spec.r = static_cast<unsigned>(value);
            have_r = true;
        } else {
            throw DomainError("--family: unknown key '" + key + "'");
        }
    }
    if (!have_p || !have_r) throw DomainError("--family expects p=<prime>,r=<int>, got '" + text + "'");
    if (!is_prime(spec.p)) throw DomainError("--family: p = " + std::to_string(spec.p) + " is not prime");
    return spec;
}

// For x(dx - 1) with d a prime power, the prime; used to classify values.
std::optional<std::uint64_t> infer_family_prime(const Polynomial& f) {
    if (f.degree() != 2 || f.coefficient(0) != 0 || f.coefficient(1) != -1) return std::nullopt;
    const Int d = f.coefficient(2);
    if (d < 2 || d > static_cast<Int>(UINT64_MAX)) return std::nullopt;
    if (const auto pp = as_prime_power(static_cast<std::uint64_t>(d))) return pp->prime;
    return std::nullopt;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw DomainError("cannot open '" + path + "' for writing");
    file << text;
    if (!file) throw DomainError("failed writing '" + path + "'");
}

std::string render_table(const RunTable& table, const TableMetadata& meta, const std::string& format,
                         unsigned columns) {
    if (format == "latex") return emit_latex(table, meta, columns);
    return emit_csv(table, meta);
}

std::string show(const std::optional<Modulus>& v) {
    return v ? std::to_string(*v) : std::string("infinity");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    apply_thread_env();

    CLI::App app{"Discriminators of integer polynomials: exhaustive search, closed forms, and checks", "discrim"};
    app.require_subcommand(1);

    std::string poly_text;
    std::uint64_t n = 0, n_max = 0;
    std::optional<std::uint64_t> lower, upper, family_prime;
    std::string format = "csv", out_path, family_text;
    unsigned columns = 2;

    auto* compute_cmd = app.add_subcommand("compute", "Compute D_f(n)");
    compute_cmd->add_option("--poly", poly_text, "Polynomial, e.g. \"x*(27*x-1)\" or coeffs:0,-1,27")->required();
    compute_cmd->add_option("--n", n, "Number of values f(1..n)")->required()->check(CLI::PositiveNumber);
    compute_cmd->add_option("--lower", lower, "Inclusive lower bound on m");
    compute_cmd->add_option("--upper", upper, "Exclusive upper bound on m");

    auto* scan_cmd = app.add_subcommand("scan", "Run-length table of D_f(n) for n = 1..n-max");
    scan_cmd->add_option("--poly", poly_text, "Polynomial")->required();
    scan_cmd->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--format", format, "csv or latex")->check(CLI::IsMember({"csv", "latex"}));
    scan_cmd->add_option("--out", out_path, "Write to this file instead of stdout");
    scan_cmd->add_option("--p", family_prime, "Family prime used to classify values");
    scan_cmd->add_option("--columns", columns, "Column pairs in LaTeX output")->check(CLI::PositiveNumber);

    auto* table_cmd = app.add_subcommand("table", "Classified table for x(p^r x - 1)");
    table_cmd->add_option("--family", family_text, "p=<prime>,r=<int>")->required();
    table_cmd->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::PositiveNumber);
    table_cmd->add_option("--format", format, "csv or latex")->check(CLI::IsMember({"csv", "latex"}));
    table_cmd->add_option("--out", out_path, "Write to this file instead of stdout");
    table_cmd->add_option("--columns", columns, "Column pairs in LaTeX output")->check(CLI::PositiveNumber);

    int theorem = 0;
    std::optional<std::uint64_t> verify_n_max;
    std::uint64_t seed = kDefaultSeed, trials = 200;
    auto* verify_cmd = app.add_subcommand("verify", "Check a closed form or bound against the oracle");
    verify_cmd->add_option("--theorem", theorem, "1-5")->required()->check(CLI::Range(1, 5));
    verify_cmd->add_option("--n-max", verify_n_max, "Largest n checked");
    verify_cmd->add_option("--seed", seed, "Seed for randomized suites");
    verify_cmd->add_option("--trials", trials, "Random cases for theorem 4");

    std::uint64_t p = 0;
    unsigned r = 0;
    auto* conj_cmd = app.add_subcommand("conjecture", "List values that are neither prime nor p^ceil(log_p n)");
    conj_cmd->add_option("--p", p, "Family prime")->required();
    conj_cmd->add_option("--r", r, "Exponent, d = p^r")->required()->check(CLI::PositiveNumber);
    conj_cmd->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::PositiveNumber);

    std::string prime_family_text;
    std::uint64_t count = 0;
    auto* primes_cmd = app.add_subcommand("primes", "Primes produced by a prime-valued discriminator family");
    primes_cmd->add_option("--family", prime_family_text, "2xx1, 4x4x1 or 18x3x1")
        ->required()
        ->check(CLI::IsMember({"2xx1", "4x4x1", "18x3x1"}));
    primes_cmd->add_option("--count", count, "How many primes")->required()->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*compute_cmd) {
            const Polynomial f = parse_polynomial(poly_text);
            std::optional<SearchBounds> bounds;
            if (lower || upper) bounds = SearchBounds{lower.value_or(n), upper};
            const auto result = compute(f, n, bounds);
            out << "D = " << show(result.value) << '\n';
        } else if (*scan_cmd) {
            const Polynomial f = parse_polynomial(poly_text);
            if (family_prime && !is_prime(*family_prime))
                throw DomainError("--p = " + std::to_string(*family_prime) + " is not prime");
            auto results = scan(f, n_max);
            const auto finite_end = std::find_if(results.begin(), results.end(),
                                                 [](const DiscriminatorResult& res) { return !res.exists(); });
            if (finite_end != results.end())
                err << "note: D_f(n) = infinity for n >= " << finite_end->n << "; table stops at n = "
                    << finite_end->n - 1 << '\n';
            results.erase(finite_end, results.end());
            const TableMetadata meta{to_string(f), family_prime ? family_prime : infer_family_prime(f)};
            write_output(render_table(run_length_table(results), meta, format, columns), out_path, out);
        } else if (*table_cmd) {
            const FamilySpec spec = parse_family_spec(family_text);
            const Polynomial f = Polynomial::quadratic_family(static_cast<Int>(checked_pow(spec.p, spec.r)));
            std::vector<DiscriminatorResult> results;
            try {
                results = scan(f, n_max, [&](std::uint64_t k) -> std::optional<Modulus> {
                    return lemma1_bound(spec.p, spec.r, k) + 1;
                });
            } catch (const BoundError& e) {
                throw MismatchError(std::string("upper bound p^ceil(log_p n) violated: ") + e.what());
            }
            const TableMetadata meta{to_string(f), spec.p};
            write_output(render_table(run_length_table(results), meta, format, columns), out_path, out);
        } else if (*verify_cmd) {
            VerifyOutcome outcome;
            switch (theorem) {
                case 1: outcome = verify_theorem1(verify_n_max.value_or(729)); break;
                case 2: outcome = verify_theorem2(verify_n_max.value_or(512)); break;
                case 3: outcome = verify_theorem3(verify_n_max.value_or(200)); break;
                case 4: outcome = verify_theorem4(seed, trials, verify_n_max.value_or(40)); break;
                default: outcome = verify_theorem5(verify_n_max.value_or(100)); break;
            }
            out << outcome.name << ": " << outcome.checks << " checks, " << outcome.failure_count << " failures\n";
            if (!outcome.passed()) {
                out << "counterexample: " << outcome.failures.front() << '\n';
                return kExitMismatch;
            }
        } else if (*conj_cmd) {
            for (const auto& e : check_conjecture1(p, r, n_max))
                out << "n=" << e.n << " value=" << e.value << " class=" << kind_name(e.cls.kind) << '\n';
        } else if (*primes_cmd) {
            const PrimeFamily family = prime_family(*parse_family_tag(prime_family_text));
            // The formula agrees with the oracle from n = 5 on; smaller n are skipped.
            constexpr std::uint64_t kFirstN = 5;
            bool mismatch = false;
            std::uint64_t last = 0, emitted = 0;
            for (std::uint64_t k = kFirstN; emitted < count; ++k) {
                const std::uint64_t prime = sun_prime_discriminator(family, k);
                if (prime == last) continue;
                const auto oracle = compute(family.polynomial, k).value;
                if (oracle != prime) {
                    err << "mismatch at n=" << k << ": formula " << prime << ", oracle " << show(oracle) << '\n';
                    mismatch = true;
                }
                out << prime << '\n';
                last = prime;
                ++emitted;
            }
            if (mismatch) return kExitMismatch;
        }
    } catch (const MismatchError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace discrim
