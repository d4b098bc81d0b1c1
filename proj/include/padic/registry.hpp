#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "padic/context.hpp"
#include "padic/rational.hpp"
#include "padic/residue.hpp"

namespace padic {

enum class Verdict { Holds, ConditionNotMet, Fails, EvaluationError };

const char* to_string(Verdict v);

struct CaseResult {
    Verdict verdict = Verdict::EvaluationError;
    std::string detail;   // failed condition, branch tag, or error kind
    std::optional<uint64_t> lhs, rhs;
    uint64_t modulus = 0;
};

struct TheoremCase {
    const PrimeContext* ctx = nullptr;
    std::vector<Rational> params;
    std::optional<Rational> z;
};

enum class CheckMode { Numeric, PolynomialInZ, Both };

// Constraints the z sampler must respect: each entry is (c0, c1) meaning
// c0 + c1*z must be a p-adic unit.
struct ZConstraint {
    int64_t c0, c1;
};

struct ZPolicy {
    bool needs_z = false;
    std::vector<ZConstraint> unit_required;
    // residue classes a statement's derivation excludes but the statement
    // still covers (the "exceptional z"): z ≡ -1 and z^2 ≡ -1 mod p
    bool include_exceptional = false;
};

// One congruence theorem: a side-condition predicate and two evaluators that
// never consult each other. Branch dispatch happens inside `branch`, shared
// by condition and rhs so the verdict can carry the branch tag.
struct TheoremStatement {
    std::string id;
    std::string anchor; // the literature label, for cross-referencing reports
    int arity = 0;
    int mod_exp = 2;
    CheckMode mode = CheckMode::Numeric;
    ZPolicy zpolicy;

    // returns the name of the first violated condition, or nullopt
    std::function<std::optional<std::string>(const TheoremCase&)> condition;
    // branch tag for multi-branch statements (empty for single-branch)
    std::function<std::string(const TheoremCase&)> branch;
    std::function<Residue(const TheoremCase&)> lhs;
    std::function<Residue(const TheoremCase&)> rhs;
    // polynomial-mode check (set when mode != Numeric)
    std::function<bool(const PrimeContext&, const std::vector<Rational>&)> poly_check;

    // worked-instance tuples appended to every sweep pool
    std::vector<std::vector<Rational>> worked_examples;
    // some statements fix their own strength (Kilbourn: 3)
    int strength = 2;
};

const std::vector<TheoremStatement>& theorem_registry();
const TheoremStatement& find_theorem(const std::string& id); // raises UnknownTheorem

struct TheoremInfo {
    std::string id, anchor;
    int arity;
    CheckMode mode;
};
std::vector<TheoremInfo> list_theorems();

CaseResult check_case(const std::string& id, const PrimeContext& ctx,
                      const std::vector<Rational>& params,
                      std::optional<Rational> z = std::nullopt);

struct ReportRecord {
    std::string theorem;
    uint64_t p = 0;
    std::vector<std::string> params;
    std::optional<std::string> z;
    std::string verdict;
    std::string detail;
    std::string lhs, rhs; // decimal strings, empty when not evaluated
    uint64_t modulus = 0;
    uint64_t duration_ms = 0;

    bool operator==(const ReportRecord&) const = default;
};

struct SweepOptions {
    uint64_t prime_lo = 3, prime_hi = 97;
    std::vector<Rational> pool;      // empty = default pool
    int z_samples = 20;
    uint64_t seed = 0;
    int jobs = 1;
    size_t tuple_cap = 400;          // per-prime cap for arity >= 3 (seeded subsample)
    uint64_t poly_prime_cap = 13;    // polynomial mode runs for p <= this
    bool timings = false;
};

struct SweepReport {
    std::string theorem;
    uint64_t prime_lo = 0, prime_hi = 0;
    std::string pool_desc;
    uint64_t cases = 0, holds = 0, condition_not_met = 0;
    std::vector<ReportRecord> fails;
    std::vector<ReportRecord> errors;
    uint64_t duration_ms = 0;
};

// Enumerates all (p, params, z) combinations deterministically (given the
// seed) and aggregates verdicts. Evaluation errors become recorded verdicts;
// the sweep itself never aborts. jobs > 1 runs the case list through the
// OpenMP pool; output order is the enumeration order either way.
SweepReport sweep(const std::string& id, const SweepOptions& opt);

// r/d reduced fractions with d in {1,2,3,4,5,6,8,12}, 0 < r < d, plus 1
std::vector<Rational> default_pool();
std::vector<Rational> pool_with_denominators(const std::vector<int64_t>& dens);

// deterministic z samples for one (theorem, prime); exposed for tests
std::vector<Rational> sample_z(const TheoremStatement& t, const PrimeContext& ctx, int count,
                               uint64_t seed);

} // namespace padic
