#include "padic/numtheory.hpp"

#include <algorithm>
#include <cmath>

namespace padic {

namespace detail {

uint64_t invmod(uint64_t a, uint64_t m) {
    a %= m;
    int64_t r0 = static_cast<int64_t>(m), r1 = static_cast<int64_t>(a);
    int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) raise(Err::NotAUnit, "no inverse mod " + std::to_string(m));
    if (t0 < 0) t0 += static_cast<int64_t>(m);
    return static_cast<uint64_t>(t0);
}

} // namespace detail

Residue embed(const Rational& r, const PrimeContext& ctx, int k) {
    uint64_t m = ctx.pow_k(k);
    if (r.den() % static_cast<int64_t>(ctx.p()) == 0)
        raise(Err::NotPIntegral, r.str() + " at p=" + std::to_string(ctx.p()));
    Residue num = Residue::of(r.num(), m);
    Residue den = Residue::of(r.den(), m);
    return num * den.inverse();
}

uint64_t least_nonneg_residue(const Rational& r, const PrimeContext& ctx, int k) {
    return embed(r, ctx, k).value;
}

int legendre_symbol(int64_t a, const PrimeContext& ctx) {
    uint64_t p = ctx.p();
    uint64_t av = static_cast<uint64_t>(((a % static_cast<int64_t>(p)) + static_cast<int64_t>(p)) % static_cast<int64_t>(p));
    if (av == 0) return 0;
    uint64_t t = detail::powmod(av, (p - 1) / 2, p);
    return t == 1 ? 1 : -1;
}

namespace {

// Tonelli-Shanks mod p; a assumed a nonzero quadratic residue
uint64_t sqrt_mod_p(uint64_t a, uint64_t p) {
    if (p % 4 == 3) return detail::powmod(a, (p + 1) / 4, p);
    uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    uint64_t z = 2;
    while (detail::powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    uint64_t c = detail::powmod(z, q, p);
    uint64_t x = detail::powmod(a, (q + 1) / 2, p);
    uint64_t t = detail::powmod(a, q, p);
    int m = s;
    while (t != 1) {
        uint64_t tt = t;
        int i = 0;
        while (tt != 1) {
            tt = detail::mulmod(tt, tt, p);
            ++i;
        }
        uint64_t b = detail::powmod(c, 1ull << (m - i - 1), p);
        x = detail::mulmod(x, b, p);
        c = detail::mulmod(b, b, p);
        t = detail::mulmod(t, c, p);
        m = i;
    }
    return x;
}

} // namespace

Residue sqrt_lift(int64_t a, const PrimeContext& ctx, int k, std::optional<uint64_t> seed) {
    uint64_t p = ctx.p();
    uint64_t m = ctx.pow_k(k);
    uint64_t am = static_cast<uint64_t>(((a % static_cast<int64_t>(m)) + static_cast<int64_t>(m)) % static_cast<int64_t>(m));
    if (am % p == 0) {
        if (am == 0) return Residue(0, m);
        raise(Err::NotAResidue, "p divides argument");
    }
    if (legendre_symbol(a, ctx) != 1) raise(Err::NotAResidue, std::to_string(a) + " is a non-residue mod " + std::to_string(p));

    uint64_t x = sqrt_mod_p(am % p, p);
    // Newton lift x -> x - (x^2 - a)/(2x), doubling precision each step
    uint64_t mod = p;
    for (int have = 1; have < k; have *= 2) {
        uint64_t next = (2 * have >= k) ? m : mod * mod;
        uint64_t x2 = detail::mulmod(x, x, next);
        uint64_t diff = detail::submod(x2, am % next, next);
        uint64_t inv2x = detail::invmod(detail::addmod(x, x, next), next);
        x = detail::submod(x, detail::mulmod(diff, inv2x, next), next);
        mod = next;
    }
    uint64_t other = m - x;
    if (seed) {
        uint64_t want = *seed % p;
        if (x % p == want) return Residue(x, m);
        if (other % p == want) return Residue(other, m);
        raise(Err::BadArgument, "seed is not a square root mod p");
    }
    return Residue(std::min(x, other), m);
}

std::pair<int64_t, int64_t> cornacchia(const PrimeContext& ctx, int d, CornacchiaRule rule) {
    uint64_t p = ctx.p();
    if (d != 1 && d != 3) raise(Err::BadArgument, "d must be 1 or 3");
    if (d == 1 && p % 4 != 1) raise(Err::NotRepresentable, "p !≡ 1 (mod 4)");
    if (d == 3 && p % 3 != 1) raise(Err::NotRepresentable, "p !≡ 1 (mod 3)");

    // half-gcd descent: x^2 ≡ -d (mod p), reduce (p, x) until below sqrt(p)
    uint64_t x = sqrt_lift(-d, ctx, 1).value;
    x = std::max(x, p - x);
    uint64_t r0 = p, r1 = x;
    uint64_t bound = static_cast<uint64_t>(std::sqrt(static_cast<double>(p)));
    while (r1 > bound) {
        uint64_t r2 = r0 % r1;
        r0 = r1;
        r1 = r2;
    }
    int64_t a = static_cast<int64_t>(r1);
    uint64_t rem = p - r1 * r1;
    if (rem % static_cast<uint64_t>(d) != 0) raise(Err::NotRepresentable, "descent failed");
    uint64_t b2 = rem / static_cast<uint64_t>(d);
    uint64_t b = static_cast<uint64_t>(std::llround(std::sqrt(static_cast<double>(b2))));
    while (b * b > b2) --b;
    while ((b + 1) * (b + 1) <= b2) ++b;
    if (b * b != b2) raise(Err::NotRepresentable, "no representation");
    int64_t bs = static_cast<int64_t>(b);

    switch (rule) {
        case CornacchiaRule::AMod4:
            // p ≡ 1 (mod 4): exactly one of a,b is odd; that one plays a
            if (a % 2 == 0) std::swap(a, bs);
            if ((a % 4 + 4) % 4 != 1) a = -a;
            return {a, bs};
        case CornacchiaRule::AMod3:
            if ((a % 3 + 3) % 3 != 1) a = -a;
            return {a, bs};
        case CornacchiaRule::SumMod4Even: {
            std::optional<std::pair<int64_t, int64_t>> pick;
            for (int64_t sa : {a, -a}) {
                for (int64_t sb : {bs, -bs}) {
                    bool even_pos = (sa > 0 && sa % 2 == 0) || (sb > 0 && sb % 2 == 0);
                    bool sum_ok = ((sa + sb) % 4 + 4) % 4 == 1;
                    if (even_pos && sum_ok) {
                        if (pick && *pick != std::make_pair(sa, sb))
                            raise(Err::BadArgument,
                                  "normalization not unique at p=" + std::to_string(p));
                        pick = {sa, sb};
                    }
                }
            }
            if (!pick) raise(Err::NotRepresentable, "no normalized pair at p=" + std::to_string(p));
            return *pick;
        }
    }
    raise(Err::BadArgument, "unknown rule");
}

Residue harmonic_mod_p(uint64_t n, const PrimeContext& ctx) {
    uint64_t p = ctx.p();
    if (n >= p) raise(Err::DenominatorDivisible, "H_n needs n < p");
    uint64_t acc = 0;
    for (uint64_t k = 1; k <= n; ++k) acc = detail::addmod(acc, detail::invmod(k, p), p);
    return Residue(acc, p);
}

std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi) {
    std::vector<uint64_t> out;
    if (lo < 3) lo = 3;
    for (uint64_t n = lo | 1; n <= hi; n += 2)
        if (is_prime_u64(n)) out.push_back(n);
    return out;
}

} // namespace padic
