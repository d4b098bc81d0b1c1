#include "padic/registry.hpp"

#include <algorithm>
#include <chrono>
#include <memory>

#include "padic/numtheory.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace padic {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::ConditionNotMet: return "condition-not-met";
        case Verdict::Fails: return "fails";
        case Verdict::EvaluationError: return "error";
    }
    return "?";
}

const TheoremStatement& find_theorem(const std::string& id) {
    for (const auto& t : theorem_registry())
        if (t.id == id) return t;
    raise(Err::UnknownTheorem, id);
}

std::vector<TheoremInfo> list_theorems() {
    std::vector<TheoremInfo> out;
    for (const auto& t : theorem_registry()) out.push_back({t.id, t.anchor, t.arity, t.mode});
    return out;
}

std::vector<Rational> pool_with_denominators(const std::vector<int64_t>& dens) {
    std::vector<Rational> pool;
    pool.emplace_back(1);
    for (int64_t d : dens)
        for (int64_t r = 1; r < d; ++r)
            if (std::gcd(r, d) == 1) pool.emplace_back(r, d);
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    return pool;
}

std::vector<Rational> default_pool() { return pool_with_denominators({2, 3, 4, 5, 6, 8, 12}); }

namespace {

uint64_t splitmix64(uint64_t& s) {
    uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

bool z_admissible(const TheoremStatement& t, const PrimeContext& ctx, const Rational& z) {
    for (const auto& c : t.zpolicy.unit_required) {
        Rational expr = Rational(c.c0) + Rational(c.c1) * z;
        if (expr.den() % static_cast<int64_t>(ctx.p()) == 0) return false;
        if (expr.is_zero() || least_nonneg_residue(expr, ctx, 1) == 0) return false;
    }
    return true;
}

} // namespace

std::vector<Rational> sample_z(const TheoremStatement& t, const PrimeContext& ctx, int count,
                               uint64_t seed) {
    std::vector<Rational> out;
    if (!t.zpolicy.needs_z) return out;
    uint64_t p = ctx.p();
    auto push = [&](const Rational& z) {
        if (!z_admissible(t, ctx, z)) return;
        if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
    };
    if (t.zpolicy.include_exceptional) {
        push(Rational(static_cast<int64_t>(p) - 1)); // z ≡ -1 (mod p)
        if (p % 4 == 1) {
            uint64_t i0 = sqrt_lift(-1, ctx, 1).value; // z^2 ≡ -1 (mod p)
            push(Rational(static_cast<int64_t>(i0)));
            push(Rational(static_cast<int64_t>(p - i0)));
        }
    }
    uint64_t state = seed ^ fnv1a(t.id) ^ (p * 0x9e3779b97f4a7c15ull);
    uint64_t span = std::min<uint64_t>(p * p, 64 * p);
    int guard = 0;
    while (out.size() < static_cast<size_t>(count) && guard < 64 * count) {
        ++guard;
        int64_t v = static_cast<int64_t>(2 + splitmix64(state) % span);
        push(Rational(v));
    }
    return out;
}

namespace {

struct PendingCase {
    size_t prime_idx;
    std::vector<Rational> params;
    std::optional<Rational> z;
    bool poly = false;
    // condition verdict precomputed during enumeration (z-independent), so a
    // failing tuple is recorded once instead of once per z sample
    std::optional<std::string> pre_cnm;
};

CaseResult run_case(const TheoremStatement& t, const PrimeContext& ctx,
                    const std::vector<Rational>& params, const std::optional<Rational>& z,
                    bool poly) {
    TheoremCase tc{&ctx, params, z};
    CaseResult res;
    res.modulus = ctx.pow_k(t.strength);
    try {
        if (t.zpolicy.needs_z && !poly && !z)
            raise(Err::BadArgument, t.id + " needs an argument z");
        if (auto violated = t.condition(tc)) {
            res.verdict = Verdict::ConditionNotMet;
            res.detail = *violated;
            return res;
        }
        if (poly) {
            bool ok = t.poly_check(ctx, params);
            res.verdict = ok ? Verdict::Holds : Verdict::Fails;
            res.detail = "polynomial";
            return res;
        }
        if (t.branch) res.detail = t.branch(tc);
        Residue l = t.lhs(tc);
        Residue r = t.rhs(tc);
        res.lhs = l.value;
        res.rhs = r.value;
        res.modulus = l.modulus;
        res.verdict = (l == r) ? Verdict::Holds : Verdict::Fails;
        return res;
    } catch (const Error& e) {
        if (e.kind() == Err::NotRepresentable) {
            res.verdict = Verdict::ConditionNotMet;
            res.detail = "NotRepresentable";
            return res;
        }
        res.verdict = Verdict::EvaluationError;
        res.detail = e.what();
        return res;
    }
}

ReportRecord make_record(const TheoremStatement& t, uint64_t p, const PendingCase& c,
                         const CaseResult& r) {
    ReportRecord rec;
    rec.theorem = t.id;
    rec.p = p;
    for (const auto& x : c.params) rec.params.push_back(x.str());
    if (c.poly)
        rec.z = "poly";
    else if (c.z)
        rec.z = c.z->str();
    rec.verdict = to_string(r.verdict);
    rec.detail = r.detail;
    if (r.lhs) rec.lhs = std::to_string(*r.lhs);
    if (r.rhs) rec.rhs = std::to_string(*r.rhs);
    rec.modulus = r.modulus;
    return rec;
}

std::vector<std::vector<Rational>> tuples_for(const TheoremStatement& t,
                                              const std::vector<Rational>& pool, size_t cap) {
    std::vector<std::vector<Rational>> tuples;
    if (t.arity == 0) {
        tuples.push_back({});
    } else {
        uint64_t total = 1;
        bool overflow = false;
        for (int i = 0; i < t.arity; ++i) {
            if (total > (1ull << 40) / pool.size()) overflow = true;
            total *= pool.size();
        }
        auto decode = [&](uint64_t idx) {
            std::vector<Rational> tuple(t.arity);
            for (int i = 0; i < t.arity; ++i) {
                tuple[i] = pool[idx % pool.size()];
                idx /= pool.size();
            }
            return tuple;
        };
        if (!overflow && (total <= cap || t.arity <= 2)) {
            for (uint64_t i = 0; i < total; ++i) tuples.push_back(decode(i));
        } else {
            // deterministic stride subsample of the cartesian product
            for (size_t j = 0; j < cap; ++j) {
                uint64_t idx = static_cast<uint64_t>((static_cast<__uint128_t>(j) * total) / cap);
                tuples.push_back(decode(idx));
            }
        }
    }
    for (const auto& w : t.worked_examples)
        if (std::find(tuples.begin(), tuples.end(), w) == tuples.end()) tuples.push_back(w);
    return tuples;
}

} // namespace

CaseResult check_case(const std::string& id, const PrimeContext& ctx,
                      const std::vector<Rational>& params, std::optional<Rational> z) {
    const TheoremStatement& t = find_theorem(id);
    if (static_cast<int>(params.size()) != t.arity)
        raise(Err::BadArgument, "theorem " + id + " takes " + std::to_string(t.arity) + " parameters");
    return run_case(t, ctx, params, z, /*poly=*/false);
}

SweepReport sweep(const std::string& id, const SweepOptions& opt) {
    const TheoremStatement& t = find_theorem(id);
    auto t0 = std::chrono::steady_clock::now();

    SweepReport rep;
    rep.theorem = id;
    rep.prime_lo = opt.prime_lo;
    rep.prime_hi = opt.prime_hi;
    std::vector<Rational> pool = opt.pool.empty() ? default_pool() : opt.pool;
    rep.pool_desc = std::to_string(pool.size()) + " pool values, tuple cap " +
                    std::to_string(opt.tuple_cap) + ", " + std::to_string(opt.z_samples) +
                    " z samples, seed " + std::to_string(opt.seed);

    std::vector<uint64_t> primes = primes_in(opt.prime_lo, opt.prime_hi);
    std::vector<std::unique_ptr<PrimeContext>> ctxs;
    ctxs.reserve(primes.size());
    for (uint64_t p : primes) ctxs.push_back(std::make_unique<PrimeContext>(p));

    std::vector<PendingCase> cases;
    for (size_t pi = 0; pi < primes.size(); ++pi) {
        auto tuples = tuples_for(t, pool, opt.tuple_cap);
        std::vector<Rational> zs = sample_z(t, *ctxs[pi], opt.z_samples, opt.seed);
        for (auto& tuple : tuples) {
            if (t.zpolicy.needs_z) {
                // conditions never read z; check them once per tuple
                std::optional<std::string> viol;
                try {
                    TheoremCase tc0{ctxs[pi].get(), tuple, std::nullopt};
                    viol = t.condition(tc0);
                } catch (const Error&) {
                    viol.reset(); // let the per-case evaluation report it
                }
                if (viol) {
                    cases.push_back({pi, tuple, std::nullopt, false, viol});
                } else {
                    for (const auto& z : zs) cases.push_back({pi, tuple, z, false, std::nullopt});
                }
            } else {
                cases.push_back({pi, tuple, std::nullopt, false, std::nullopt});
            }
            if (t.mode != CheckMode::Numeric && primes[pi] <= opt.poly_prime_cap)
                cases.push_back({pi, tuple, std::nullopt, true, std::nullopt});
        }
    }

    std::vector<CaseResult> results(cases.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(std::max(1, opt.jobs)) if (opt.jobs > 1)
#endif
    for (size_t i = 0; i < cases.size(); ++i) {
        const PendingCase& c = cases[i];
        if (c.pre_cnm) {
            results[i].verdict = Verdict::ConditionNotMet;
            results[i].detail = *c.pre_cnm;
            results[i].modulus = ctxs[c.prime_idx]->pow_k(t.strength);
        } else {
            results[i] = run_case(t, *ctxs[c.prime_idx], c.params, c.z, c.poly);
        }
    }

    for (size_t i = 0; i < cases.size(); ++i) {
        const CaseResult& r = results[i];
        ++rep.cases;
        switch (r.verdict) {
            case Verdict::Holds: ++rep.holds; break;
            case Verdict::ConditionNotMet: ++rep.condition_not_met; break;
            case Verdict::Fails:
                rep.fails.push_back(make_record(t, primes[cases[i].prime_idx], cases[i], r));
                break;
            case Verdict::EvaluationError:
                rep.errors.push_back(make_record(t, primes[cases[i].prime_idx], cases[i], r));
                break;
        }
    }
    if (opt.timings) {
        auto t1 = std::chrono::steady_clock::now();
        rep.duration_ms = static_cast<uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    }
    return rep;
}

} // namespace padic
