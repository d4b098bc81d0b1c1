#include "padic/gamma.hpp"

#include <map>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace padic {

namespace {

constexpr uint64_t kMaxTableEntries = 1ull << 27;

std::map<std::pair<uint64_t, int>, std::shared_ptr<const GammaTable>>& table_cache() {
    static std::map<std::pair<uint64_t, int>, std::shared_ptr<const GammaTable>> cache;
    return cache;
}

std::mutex& cache_mutex() {
    static std::mutex mu;
    return mu;
}

} // namespace

std::shared_ptr<const GammaTable> GammaTable::build_serial(const PrimeContext& ctx, int k) {
    uint64_t m = ctx.pow_k(k);
    if (m > kMaxTableEntries) raise(Err::PrimeOutOfRange, "gamma table p^k too large");
    auto t = std::shared_ptr<GammaTable>(new GammaTable(ctx.p(), k, m));
    t->values_.resize(m);
    t->values_[0] = 1; // Gamma_p(0) = 1
    uint64_t acc = 1;  // prod_{1 <= j < n, p∤j} j
    for (uint64_t n = 1; n < m; ++n) {
        uint64_t j = n - 1;
        if (j >= 1 && j % ctx.p() != 0) acc = detail::mulmod(acc, j, m);
        t->values_[n] = (n & 1) ? (m - acc) % m : acc;
    }
    return t;
}

std::shared_ptr<const GammaTable> GammaTable::build_parallel(const PrimeContext& ctx, int k,
                                                             bool force) {
#ifndef _OPENMP
    (void)force;
    return build_serial(ctx, k);
#else
    uint64_t m = ctx.pow_k(k);
    if (m > kMaxTableEntries) raise(Err::PrimeOutOfRange, "gamma table p^k too large");
    // the blocked scan multiplies every factor twice; below four threads the
    // serial prefix product wins
    if (!force && (m < 1u << 14 || omp_get_max_threads() < 4)) return build_serial(ctx, k);

    auto t = std::shared_ptr<GammaTable>(new GammaTable(ctx.p(), k, m));
    t->values_.resize(m);
    uint64_t p = ctx.p();

    int nblocks = std::max(1, omp_get_max_threads() * 4);
    uint64_t bsz = (m + nblocks - 1) / nblocks;
    std::vector<uint64_t> block_prod(nblocks, 1);

    // pass 1: product of each block's coprime factors
#pragma omp parallel for schedule(static)
    for (int b = 0; b < nblocks; ++b) {
        uint64_t lo = static_cast<uint64_t>(b) * bsz;
        uint64_t hi = std::min(m, lo + bsz);
        uint64_t acc = 1;
        for (uint64_t j = std::max<uint64_t>(lo, 1); j < hi; ++j)
            if (j % p != 0) acc = detail::mulmod(acc, j, m);
        block_prod[b] = acc;
    }
    // pass 2: exclusive scan of block products
    std::vector<uint64_t> prefix(nblocks, 1);
    for (int b = 1; b < nblocks; ++b) prefix[b] = detail::mulmod(prefix[b - 1], block_prod[b - 1], m);
    // pass 3: fill values; values_[n] uses the product over j < n
#pragma omp parallel for schedule(static)
    for (int b = 0; b < nblocks; ++b) {
        uint64_t lo = static_cast<uint64_t>(b) * bsz;
        uint64_t hi = std::min(m, lo + bsz);
        uint64_t acc = prefix[b];
        for (uint64_t n = lo; n < hi; ++n) {
            if (n == 0) {
                t->values_[0] = 1;
                continue;
            }
            uint64_t j = n - 1;
            // factors below lo are already inside prefix[b]
            if (j >= 1 && j >= lo && j % p != 0) acc = detail::mulmod(acc, j, m);
            t->values_[n] = (n & 1) ? (m - acc) % m : acc;
        }
    }
    return t;
#endif
}

std::shared_ptr<const GammaTable> GammaTable::get(const PrimeContext& ctx, int k) {
    // per-thread memo so steady-state reads never touch the lock
    thread_local std::map<std::pair<uint64_t, int>, std::shared_ptr<const GammaTable>> local;
    auto key = std::make_pair(ctx.p(), k);
    auto hit = local.find(key);
    if (hit != local.end()) return hit->second;
    std::shared_ptr<const GammaTable> t;
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = table_cache().find(key);
        if (it != table_cache().end()) {
            t = it->second;
        } else {
            t = build_parallel(ctx, k);
            table_cache()[key] = t;
        }
    }
    local[key] = t;
    return t;
}

Residue gamma_p(const Rational& alpha, const PrimeContext& ctx, int k) {
    auto t = GammaTable::get(ctx, k);
    uint64_t n = least_nonneg_residue(alpha, ctx, k);
    return Residue(t->at(n), t->modulus());
}

bool gamma_reflection_check(const Rational& alpha, const PrimeContext& ctx) {
    Residue lhs = gamma_p(alpha, ctx, 2) * gamma_p(Rational(1) - alpha, ctx, 2);
    uint64_t a = least_nonneg_residue(-alpha, ctx, 1);
    Residue rhs = Residue::of((a % 2 == 1) ? 1 : -1, ctx.p2()); // (-1)^(a-1)
    return lhs == rhs;
}

int64_t lambda_p2(const Rational& alpha, const PrimeContext& ctx) {
    int64_t a1 = static_cast<int64_t>(least_nonneg_residue(-alpha, ctx, 1));
    int64_t a2 = static_cast<int64_t>(least_nonneg_residue(-alpha, ctx, 2));
    int64_t p = static_cast<int64_t>(ctx.p());
    return (a1 - a2) / p * (p - 1) - a1;
}

ExponentSpec neg_lambda_exponent(const Rational& alpha, const PrimeContext& ctx) {
    int64_t a = static_cast<int64_t>(least_nonneg_residue(-alpha, ctx, 1));
    Rational s = (alpha + Rational(a)) / Rational(static_cast<int64_t>(ctx.p()));
    return {a, -s};
}

Residue zpow(const Rational& z, const ExponentSpec& e, const PrimeContext& ctx) {
    if (z.num() % static_cast<int64_t>(ctx.p()) == 0 || z.den() % static_cast<int64_t>(ctx.p()) == 0)
        raise(Err::NotAUnit, "zpow base " + z.str());
    uint64_t m = ctx.p2();
    Residue zi = embed(z, ctx, 2);
    Residue base = e.base >= 0 ? zi.pow(static_cast<uint64_t>(e.base))
                               : zi.inverse().pow(static_cast<uint64_t>(-e.base));
    Residue zpm1 = zi.pow(ctx.p() - 1);
    Residue s = embed(e.mult, ctx, 2);
    Residue tail = Residue(1, m) + s * (zpm1 - Residue(1, m));
    return base * tail;
}

bool gauss_mult_check(const Rational& x, int64_t m, const PrimeContext& ctx) {
    if (m < 1 || m % static_cast<int64_t>(ctx.p()) == 0) raise(Err::BadArgument, "m must be >= 1 and coprime to p");
    Rational mx = Rational(m) * x;
    Residue lhs(1, ctx.p2());
    for (int64_t k = 0; k < m; ++k) lhs = lhs * gamma_p(x + Rational(k, m), ctx, 2);
    Residue rhs = zpow(Rational(m), neg_lambda_exponent(mx, ctx), ctx) * gamma_p(mx, ctx, 2);
    for (int64_t k = 0; k < m; ++k) rhs = rhs * gamma_p(Rational(k, m), ctx, 2);
    return lhs == rhs;
}

Residue gamma_deriv0(const PrimeContext& ctx) {
    auto t = GammaTable::get(ctx, 2);
    uint64_t gp = t->at(ctx.p()); // Gamma_p(p) mod p^2, ≡ 1 (mod p) by Wilson
    uint64_t diff = detail::submod(gp, 1, ctx.p2());
    return Residue(diff / ctx.p(), ctx.p());
}

Residue gamma_log_derivative(const Rational& alpha, const PrimeContext& ctx) {
    uint64_t a = least_nonneg_residue(-alpha, ctx, 1);
    return gamma_deriv0(ctx) + harmonic_mod_p(ctx.p() - a - 1, ctx);
}

} // namespace padic
