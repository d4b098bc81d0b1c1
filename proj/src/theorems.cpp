// Machine-readable encodings of the congruence theorems: side conditions,
// LHS/RHS evaluators (never consulting each other), branch dispatch.

#include <initializer_list>

#include "padic/gamma.hpp"
#include "padic/hyper.hpp"
#include "padic/qseries.hpp"
#include "padic/registry.hpp"

namespace padic {

namespace {

using RV = std::vector<Rational>;
const Rational kHalf(1, 2);
const Rational kOne(1);

bool pint(const TheoremCase& tc, const Rational& x) {
    return x.den() % static_cast<int64_t>(tc.ctx->p()) != 0;
}

bool punit(const TheoremCase& tc, const Rational& x) {
    return pint(tc, x) && !x.is_zero() && x.num() % static_cast<int64_t>(tc.ctx->p()) != 0;
}

// <-x>_p
int64_t A(const TheoremCase& tc, const Rational& x) {
    return static_cast<int64_t>(least_nonneg_residue(-x, *tc.ctx, 1));
}

Residue emb(const TheoremCase& tc, const Rational& x, int k = 2) { return embed(x, *tc.ctx, k); }

// valuation of (x)_{p-1}; huge when a factor vanishes exactly
int64_t poch_pm1_val(const TheoremCase& tc, const Rational& x) {
    int64_t v = 0;
    for (int64_t j = 0; j < static_cast<int64_t>(tc.ctx->p()) - 1; ++j) {
        Rational f = x + Rational(j);
        if (f.is_zero()) return 1 << 20;
        int64_t num = f.num();
        while (num % static_cast<int64_t>(tc.ctx->p()) == 0) {
            num /= static_cast<int64_t>(tc.ctx->p());
            ++v;
        }
    }
    return v;
}

bool poch_clean(const TheoremCase& tc, const Rational& x) { return poch_pm1_val(tc, x) < 2; }

Residue gq(const TheoremCase& tc, std::initializer_list<Rational> nums,
           std::initializer_list<Rational> dens, int k = 2) {
    Residue n(1, tc.ctx->pow_k(k));
    for (const Rational& x : nums) n = n * gamma_p(x, *tc.ctx, k);
    Residue d(1, tc.ctx->pow_k(k));
    for (const Rational& x : dens) d = d * gamma_p(x, *tc.ctx, k);
    return n / d;
}

Residue hyp(const TheoremCase& tc, RV up, RV lo, const Rational& z, int64_t n, int k = 2) {
    SeriesSpec s;
    s.upper = std::move(up);
    s.lower = std::move(lo);
    s.z = z;
    s.truncation = n;
    return truncated_hyper(s, *tc.ctx, k).to_residue(k);
}

Residue hyp_pm1(const TheoremCase& tc, RV up, RV lo, const Rational& z, int k = 2) {
    return hyp(tc, std::move(up), std::move(lo), z, static_cast<int64_t>(tc.ctx->p()) - 1, k);
}

ExponentSpec e_shift_neg_lambda(const TheoremCase& tc, int64_t c, const Rational& alpha) {
    return shifted_neg_lambda(c, alpha, *tc.ctx);
}

// z^(c - lambda_p(alpha)) mod p^2
Residue zpl(const TheoremCase& tc, const Rational& z, int64_t c, const Rational& alpha) {
    return zpow(z, e_shift_neg_lambda(tc, c, alpha), *tc.ctx);
}

// z^(c - 2 lambda_p(alpha)) mod p^2
Residue zpl2(const TheoremCase& tc, const Rational& z, int64_t c, const Rational& alpha) {
    ExponentSpec e = neg_lambda_exponent(alpha, *tc.ctx);
    ExponentSpec e2{detail::checked_add(c, 2 * e.base), e.mult + e.mult};
    return zpow(z, e2, *tc.ctx);
}

Residue sign_residue(const TheoremCase& tc, int64_t parity, int k = 2) {
    return Residue::of(parity % 2 == 0 ? 1 : -1, tc.ctx->pow_k(k));
}

// a lower parameter must not hit a nonpositive integer within the truncation
bool pole_free(const Rational& lower, int64_t trunc) {
    return !(lower.is_nonpositive_integer() && -lower.num() < trunc);
}

std::optional<std::string> need_pint(const TheoremCase& tc, std::initializer_list<Rational> xs) {
    for (const Rational& x : xs)
        if (!pint(tc, x)) return "p-integral parameters";
    return std::nullopt;
}

// binomial helpers for the independent binomial-sum routes (12.15, 12.17):
// factorials tracked as Padic so C(4k,2k) etc. keep exact valuations
Residue binom_sum_mod_p2(const TheoremCase& tc, int64_t denom_base, bool alternating) {
    const PrimeContext& ctx = *tc.ctx;
    const int64_t p = static_cast<int64_t>(ctx.p());
    const int M = 2;
    Padic sum = Padic::zero(ctx.p());
    std::vector<Padic> facts; // n! for n = 0..4(p-1)
    facts.push_back(Padic::one(ctx.p(), M));
    for (int64_t n = 1; n <= 4 * (p - 1); ++n)
        facts.push_back(facts.back() * Padic::from_rational(ctx, Rational(n), M));
    Padic denom_pow = Padic::one(ctx.p(), M);
    Padic denom = Padic::from_rational(ctx, Rational(denom_base), M);
    for (int64_t k = 0; k <= p - 1; ++k) {
        Padic c2k = facts[2 * k] / (facts[k] * facts[k]);
        Padic c4k = facts[4 * k] / (facts[2 * k] * facts[2 * k]);
        Padic term = (denom_base == 144 ? c2k * c2k * c4k : c2k * c4k) / denom_pow;
        if (alternating && k % 2 == 1) term = -term;
        sum = sum + term;
        denom_pow = denom_pow * denom;
    }
    return sum.to_residue(2);
}

// Cornacchia p = a^2 + 3 b^2 with the CM normalization, plus sqrt(-3) lifted
// mod p^2 from the seed a/b
struct CmData {
    int64_t a, b;
    Residue sqrt_m3; // mod p^2
};

CmData cm_data(const TheoremCase& tc) {
    const PrimeContext& ctx = *tc.ctx;
    auto [a, b] = cornacchia(ctx, 3, CornacchiaRule::SumMod4Even);
    uint64_t p = ctx.p();
    uint64_t ar = static_cast<uint64_t>(((a % static_cast<int64_t>(p)) + static_cast<int64_t>(p)) % static_cast<int64_t>(p));
    uint64_t br = static_cast<uint64_t>(((b % static_cast<int64_t>(p)) + static_cast<int64_t>(p)) % static_cast<int64_t>(p));
    uint64_t seed = detail::mulmod(ar, detail::invmod(br, p), p);
    return {a, b, sqrt_lift(-3, ctx, 2, seed)};
}

Residue legendre_res(const TheoremCase& tc, int64_t n, int k = 2) {
    return Residue::of(legendre_symbol(n, *tc.ctx), tc.ctx->pow_k(k));
}

// ---------------------------------------------------------------------------
// entry builders
// ---------------------------------------------------------------------------

TheoremStatement make_thm_1_2() {
    TheoremStatement t;
    t.id = "thm-1.2-gauss";
    t.anchor = "Theorem 1.2, Eqs. (1.11)/(1.12)";
    t.arity = 2;
    t.condition = [](const TheoremCase& tc) { return need_pint(tc, {tc.params[0], tc.params[1]}); };
    t.branch = [](const TheoremCase& tc) {
        return A(tc, tc.params[0]) + A(tc, tc.params[1]) < static_cast<int64_t>(tc.ctx->p())
                   ? "eq-1.11"
                   : "eq-1.12";
    };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {tc.params[0], tc.params[1]}, {kOne}, kOne);
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1];
        Residue g = gq(tc, {kOne - al - be}, {kOne - al, kOne - be});
        int64_t a = A(tc, al), b = A(tc, be);
        if (a + b < static_cast<int64_t>(tc.ctx->p())) return g.neg();
        Rational fac = al + be + Rational(a + b - static_cast<int64_t>(tc.ctx->p()));
        return emb(tc, fac) * g;
    };
    return t;
}

TheoremStatement make_eq_1_5() {
    TheoremStatement t;
    t.id = "eq-1.5-mortenson";
    t.anchor = "Eq. (1.5)";
    t.arity = 1;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (tc.ctx->p() < 5) return "p >= 5";
        if (!pint(tc, tc.params[0])) return "p-integral parameters";
        const Rational& al = tc.params[0];
        if (al != kHalf && al != Rational(1, 3) && al != Rational(1, 4) && al != Rational(1, 6))
            return "alpha in {1/2,1/3,1/4,1/6}";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {tc.params[0], kOne - tc.params[0]}, {kOne}, kOne);
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        int64_t d = (al == kHalf || al == Rational(1, 6)) ? -1 : (al == Rational(1, 3) ? -3 : -2);
        return legendre_res(tc, d);
    };
    t.worked_examples = {{kHalf}, {Rational(1, 3)}, {Rational(1, 4)}, {Rational(1, 6)}};
    return t;
}

TheoremStatement make_eq_1_6() {
    TheoremStatement t;
    t.id = "eq-1.6-sun";
    t.anchor = "Eq. (1.6)";
    t.arity = 1;
    t.condition = [](const TheoremCase& tc) { return need_pint(tc, {tc.params[0]}); };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {tc.params[0], kOne - tc.params[0]}, {kOne}, kOne);
    };
    t.rhs = [](const TheoremCase& tc) { return sign_residue(tc, A(tc, tc.params[0])); };
    return t;
}

TheoremStatement make_eq_1_7() {
    TheoremStatement t;
    t.id = "eq-1.7-sun-poly";
    t.anchor = "Eq. (1.7)";
    t.arity = 1;
    t.mode = CheckMode::Both;
    t.zpolicy.needs_z = true;
    t.condition = [](const TheoremCase& tc) { return need_pint(tc, {tc.params[0]}); };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {tc.params[0], kOne - tc.params[0]}, {kOne}, *tc.z);
    };
    t.rhs = [](const TheoremCase& tc) {
        return sign_residue(tc, A(tc, tc.params[0])) *
               hyp_pm1(tc, {tc.params[0], kOne - tc.params[0]}, {kOne}, kOne - *tc.z);
    };
    t.poly_check = [](const PrimeContext& ctx, const RV& params) {
        const Rational& al = params[0];
        int64_t n = static_cast<int64_t>(ctx.p()) - 1;
        int64_t a = static_cast<int64_t>(least_nonneg_residue(-al, ctx, 1));
        PolySeries L{{al, kOne - al}, {kOne}, {Rational(0), kOne}, n, kOne};
        PolySeries R{{al, kOne - al}, {kOne}, {kOne, Rational(-1)}, n,
                     Rational(a % 2 == 0 ? 1 : -1)};
        return polynomial_congruence_check(L, R, ctx, 2);
    };
    return t;
}

TheoremStatement make_thm_2_1() {
    TheoremStatement t;
    t.id = "thm-2.1-quad-4z1mz";
    t.anchor = "Theorem 2.1, Eq. (2.2)";
    t.arity = 1;
    t.mode = CheckMode::Both;
    t.zpolicy.needs_z = true;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (auto c = need_pint(tc, {tc.params[0]})) return c;
        if (A(tc, tc.params[0]) % 2 != 0) return "<-alpha>_p even";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {tc.params[0], kOne - tc.params[0]}, {kOne}, *tc.z);
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        Rational z = *tc.z;
        return hyp_pm1(tc, {al * kHalf, (kOne - al) * kHalf}, {kOne}, Rational(4) * z * (kOne - z));
    };
    t.poly_check = [](const PrimeContext& ctx, const RV& params) {
        const Rational& al = params[0];
        int64_t n = static_cast<int64_t>(ctx.p()) - 1;
        PolySeries L{{al, kOne - al}, {kOne}, {Rational(0), kOne}, n, kOne};
        PolySeries R{{al * kHalf, (kOne - al) * kHalf},
                     {kOne},
                     {Rational(0), Rational(4), Rational(-4)},
                     n,
                     kOne};
        return polynomial_congruence_check(L, R, ctx, 2);
    };
    return t;
}

TheoremStatement make_thm_2_2() {
    TheoremStatement t;
    t.id = "thm-2.2-clausen";
    t.anchor = "Theorem 2.2, Eq. (2.4)";
    t.arity = 1;
    t.mode = CheckMode::Both;
    t.zpolicy.needs_z = true;
    t.condition = [](const TheoremCase& tc) { return need_pint(tc, {tc.params[0]}); };
    t.lhs = [](const TheoremCase& tc) {
        Residue f = hyp_pm1(tc, {tc.params[0], kOne - tc.params[0]}, {kOne}, *tc.z);
        return f * f;
    };
    t.rhs = [](const TheoremCase& tc) {
        Rational z = *tc.z;
        return hyp_pm1(tc, {tc.params[0], kOne - tc.params[0], kHalf}, {kOne, kOne},
                       Rational(4) * z * (kOne - z));
    };
    t.poly_check = [](const PrimeContext& ctx, const RV& params) {
        const Rational& al = params[0];
        int64_t n = static_cast<int64_t>(ctx.p()) - 1;
        size_t cap = 2 * ctx.p() - 1;
        PadicPoly f = hyper_poly_in_z({al, kOne - al}, {kOne}, n, {Rational(0), kOne}, ctx, 2, cap);
        PadicPoly L = f.square();
        PadicPoly R = hyper_poly_in_z({al, kOne - al, kHalf}, {kOne, kOne}, n,
                                      {Rational(0), Rational(4), Rational(-4)}, ctx, 2, cap);
        return poly_congruent(L, R, 2);
    };
    return t;
}

TheoremStatement make_cor_2_3() {
    TheoremStatement t;
    t.id = "cor-2.3";
    t.anchor = "Corollary 2.3";
    t.arity = 1;
    t.zpolicy.needs_z = true;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (auto c = need_pint(tc, {tc.params[0]})) return c;
        if (A(tc, tc.params[0]) % 2 != 0) return "<-alpha>_p even";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        Residue f = hyp_pm1(tc, {al * kHalf, (kOne - al) * kHalf}, {kOne}, *tc.z);
        return f * f;
    };
    t.rhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {tc.params[0], kOne - tc.params[0], kHalf}, {kOne, kOne}, *tc.z);
    };
    return t;
}

TheoremStatement make_thm_2_4() {
    TheoremStatement t;
    t.id = "thm-2.4-linear-z-over-zm1";
    t.anchor = "Theorem 2.4, Eq. (2.13)";
    t.arity = 1;
    t.zpolicy.needs_z = true;
    t.zpolicy.unit_required = {{0, 1}, {-1, 1}}; // z, z-1
    t.condition = [](const TheoremCase& tc) { return need_pint(tc, {tc.params[0]}); };
    t.lhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        Rational z = *tc.z;
        Residue t1 = hyp_pm1(tc, {al, al}, {kOne}, z);
        Residue t2 = hyp_pm1(tc, {al, al}, {kOne}, z.inverse());
        return t1 - zpl(tc, z, 1, al) * t2;
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        Rational z = *tc.z;
        return zpl(tc, kOne - z, 1, al) * hyp_pm1(tc, {al, kOne - al}, {kOne}, z / (z - kOne));
    };
    return t;
}

TheoremStatement make_thm_2_5() {
    TheoremStatement t;
    t.id = "thm-2.5-quad-m4z-over-1mz2";
    t.anchor = "Theorem 2.5";
    t.arity = 1;
    t.zpolicy.needs_z = true;
    t.zpolicy.unit_required = {{0, 1}, {-1, 1}};
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (auto c = need_pint(tc, {tc.params[0]})) return c;
        if (A(tc, tc.params[0]) % 2 != 0) return "<-alpha>_p even";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        Rational z = *tc.z;
        Residue t1 = hyp_pm1(tc, {al, al}, {kOne}, z);
        Residue t2 = hyp_pm1(tc, {al, al}, {kOne}, z.inverse());
        return t1 - zpl(tc, z, 1, al) * t2;
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        Rational z = *tc.z;
        Rational arg = Rational(-4) * z / ((kOne - z) * (kOne - z));
        return zpl(tc, kOne - z, 1, al) * hyp_pm1(tc, {al * kHalf, (kOne - al) * kHalf}, {kOne}, arg);
    };
    return t;
}

TheoremStatement make_thm_2_6() {
    TheoremStatement t;
    t.id = "thm-2.6-quad-4z-over-1pz2";
    t.anchor = "Theorem 2.6";
    t.arity = 1;
    t.zpolicy.needs_z = true;
    t.zpolicy.unit_required = {{0, 1}, {1, 1}}; // z, z+1
    t.condition = [](const TheoremCase& tc) { return need_pint(tc, {tc.params[0]}); };
    t.lhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        Rational z = *tc.z;
        Residue t1 = hyp_pm1(tc, {al, al}, {kOne}, z);
        Residue t2 = hyp_pm1(tc, {al, al}, {kOne}, z.inverse());
        return t1 + zpl(tc, z, 1, al) * t2;
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        Rational z = *tc.z;
        Rational arg = Rational(4) * z / ((kOne + z) * (kOne + z));
        return zpl(tc, kOne + z, 1, al) * hyp_pm1(tc, {al * kHalf, (kOne + al) * kHalf}, {kOne}, arg);
    };
    return t;
}

TheoremStatement make_thm_2_7() {
    TheoremStatement t;
    t.id = "thm-2.7-quad-z2-over-zm22";
    t.anchor = "Theorem 2.7";
    t.arity = 1;
    t.zpolicy.needs_z = true;
    t.zpolicy.unit_required = {{-1, 1}, {-2, 1}}; // z-1, z-2
    t.condition = [](const TheoremCase& tc) { return need_pint(tc, {tc.params[0]}); };
    t.lhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        Rational z = *tc.z;
        Residue t1 = hyp_pm1(tc, {al, kHalf}, {kOne}, z);
        Residue t2 = hyp_pm1(tc, {al, kHalf}, {kOne}, z / (z - kOne));
        return t1 + zpl(tc, kOne - z, 1, al) * t2;
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        Rational z = *tc.z;
        Rational arg = z * z / ((z - Rational(2)) * (z - Rational(2)));
        Residue two(2, tc.ctx->p2());
        return two * zpl(tc, kOne - z * kHalf, 1, al) *
               hyp_pm1(tc, {al * kHalf, (kOne + al) * kHalf}, {kOne}, arg);
    };
    return t;
}

TheoremStatement make_thm_2_8() {
    TheoremStatement t;
    t.id = "thm-2.8-quad-z2";
    t.anchor = "Theorem 2.8, Eq. (2.21)";
    t.arity = 1;
    t.zpolicy.needs_z = true;
    t.zpolicy.unit_required = {{0, 1}, {1, 1}}; // z(1+z) prime to p
    t.condition = [](const TheoremCase& tc) { return need_pint(tc, {tc.params[0]}); };
    t.lhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        Rational z = *tc.z;
        Residue t1 = hyp_pm1(tc, {al, al}, {kOne}, z * z);
        Residue t2 = hyp_pm1(tc, {al, al}, {kOne}, (z * z).inverse());
        return t1 + zpl2(tc, z, 1, al) * t2;
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        Rational z = *tc.z;
        Rational arg = Rational(4) * z / ((kOne + z) * (kOne + z));
        return zpl2(tc, kOne + z, 1, al) * hyp_pm1(tc, {al, kHalf}, {kOne}, arg);
    };
    return t;
}

TheoremStatement make_eq_2_22() {
    TheoremStatement t;
    t.id = "eq-2.22-quad-z2-companion";
    t.anchor = "Eq. (2.22)";
    t.arity = 1;
    t.zpolicy.needs_z = true;
    t.zpolicy.unit_required = {{0, 1}, {-1, 1}};
    t.zpolicy.include_exceptional = true; // still valid where 1+z or 1+z^2 ≡ 0 (mod p)
    t.condition = [](const TheoremCase& tc) { return need_pint(tc, {tc.params[0]}); };
    t.lhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        Rational z = *tc.z;
        Residue t1 = hyp_pm1(tc, {al, al}, {kOne}, z * z);
        Residue t2 = hyp_pm1(tc, {al, al}, {kOne}, (z * z).inverse());
        return t1 - zpl2(tc, z, 1, al) * t2;
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        Rational z = *tc.z;
        Rational arg = Rational(-4) * z / ((kOne - z) * (kOne - z));
        return zpl2(tc, kOne - z, 1, al) * hyp_pm1(tc, {al, kHalf}, {kOne}, arg);
    };
    return t;
}

TheoremStatement make_thm_2_9() {
    TheoremStatement t;
    t.id = "thm-2.9-quad-z2-over-4zm4";
    t.anchor = "Theorem 2.9";
    t.arity = 1;
    t.zpolicy.needs_z = true;
    t.zpolicy.unit_required = {{-1, 1}};
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (auto c = need_pint(tc, {tc.params[0]})) return c;
        if (A(tc, tc.params[0]) % 2 != 0) return "<-alpha>_p even";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        Rational z = *tc.z;
        int64_t a = A(tc, al);
        Residue t1 = hyp_pm1(tc, {al, kHalf}, {kOne}, z);
        Residue t2 = hyp_pm1(tc, {al, kHalf}, {kOne}, z / (z - kOne));
        return t1 + emb(tc, kOne - z).pow(static_cast<uint64_t>(a)) * t2;
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        Rational z = *tc.z;
        int64_t a = A(tc, al);
        Rational arg = z * z / (Rational(4) * z - Rational(4));
        Residue two(2, tc.ctx->p2());
        return two * emb(tc, kOne - z).pow(static_cast<uint64_t>(a / 2)) *
               hyp_pm1(tc, {al * kHalf, (kOne - al) * kHalf}, {kOne}, arg);
    };
    return t;
}

TheoremStatement make_eq_2_24() {
    TheoremStatement t;
    t.id = "eq-2.24-liu-half";
    t.anchor = "Eq. (2.24)";
    t.arity = 1;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (auto c = need_pint(tc, {tc.params[0]})) return c;
        if (A(tc, tc.params[0]) % 2 != 0) return "<-alpha>_p even";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {tc.params[0], kOne - tc.params[0]}, {kOne}, kHalf);
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        return gq(tc, {kHalf}, {kOne - al * kHalf, kHalf + al * kHalf}).neg();
    };
    return t;
}

TheoremStatement make_eq_2_26() {
    TheoremStatement t;
    t.id = "eq-2.26-quarter-m8";
    t.anchor = "Eq. (2.26)";
    t.arity = 0;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (tc.ctx->p() % 4 != 1) return "p ≡ 1 (mod 4)";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {Rational(1, 4), Rational(1, 4)}, {kOne}, Rational(-8));
    };
    t.rhs = [](const TheoremCase& tc) {
        int64_t e = (static_cast<int64_t>(tc.ctx->p()) + 3) / 4;
        return sign_residue(tc, e) * gq(tc, {kHalf}, {Rational(3, 4), Rational(3, 4)});
    };
    return t;
}

TheoremStatement make_thm_2_10() {
    TheoremStatement t;
    t.id = "thm-2.10-watson";
    t.anchor = "Theorem 2.10";
    t.arity = 2;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1];
        if (auto c = need_pint(tc, {al, be, Rational(2) * be})) return c;
        if (2 * A(tc, be) >= static_cast<int64_t>(tc.ctx->p())) return "<-beta>_p < p/2";
        if (!poch_clean(tc, Rational(2) * be)) return "(2beta)_{p-1} not divisible by p^2";
        return std::nullopt;
    };
    t.branch = [](const TheoremCase& tc) {
        return A(tc, tc.params[0]) % 2 == 0 ? "even" : "odd";
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1];
        return hyp_pm1(tc, {al, kOne - al, be}, {kOne, Rational(2) * be}, kOne);
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1];
        if (A(tc, al) % 2 != 0) return Residue(0, tc.ctx->p2());
        return gq(tc, {kHalf, kHalf + be, be},
                  {kHalf + al * kHalf, kOne - al * kHalf, kHalf + be - al * kHalf, be + al * kHalf})
            .neg();
    };
    return t;
}

TheoremStatement make_thm_2_11() {
    TheoremStatement t;
    t.id = "thm-2.11-dixon";
    t.anchor = "Theorem 2.11";
    t.arity = 2;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1];
        if (auto c = need_pint(tc, {al, be, al - be + kOne})) return c;
        if (!punit(tc, al)) return "p does not divide alpha";
        if (!poch_clean(tc, al - be + kOne)) return "(alpha-beta+1)_{p-1} not divisible by p^2";
        int64_t a = A(tc, al), b = A(tc, be), p = static_cast<int64_t>(tc.ctx->p());
        bool br1 = a % 2 == 0 && a <= b && 2 * b < p - a;
        bool br2 = a % 2 == 1 && a <= b && p - a <= 2 * b && 2 * b < p + a;
        bool br3 = a % 2 == 1 && a <= b && 2 * b < p - a;
        if (!(br1 || br2 || br3)) return "branch inequalities on <-alpha>_p, <-beta>_p";
        return std::nullopt;
    };
    t.branch = [](const TheoremCase& tc) {
        int64_t a = A(tc, tc.params[0]), b = A(tc, tc.params[1]),
                p = static_cast<int64_t>(tc.ctx->p());
        if (a % 2 == 0) return "gamma-quotient";
        return 2 * b < p - a ? "unit-times-quotient" : "zero";
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1];
        return hyp_pm1(tc, {al, al, be}, {kOne, al - be + kOne}, kOne);
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1];
        int64_t a = A(tc, al), b = A(tc, be), p = static_cast<int64_t>(tc.ctx->p());
        if (a % 2 == 1 && 2 * b >= p - a) return Residue(0, tc.ctx->p2());
        Residue g = gq(tc, {kOne + al * kHalf, kOne + al - be, kOne - al * kHalf - be},
                       {al + kOne, kOne - al * kHalf, kOne - be, kOne + al * kHalf - be});
        if (a % 2 == 0) return (Residue(2, tc.ctx->p2()) * g).neg();
        return (emb(tc, al + Rational(a)) * g).neg();
    };
    return t;
}

TheoremStatement make_thm_2_12() {
    TheoremStatement t;
    t.id = "thm-2.12-pfaff-saalschutz";
    t.anchor = "Theorem 2.12, Eqs. (2.37)/(2.38)";
    t.arity = 3;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        if (auto c = need_pint(tc, {al, be, ga, ga - al - be})) return c;
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga), p = static_cast<int64_t>(tc.ctx->p());
        if (!(std::max(a, b) <= cc)) return "max(<-alpha>,<-beta>) <= <-gamma>";
        if (!poch_clean(tc, ga)) return "(gamma)_{p-1} not divisible by p^2";
        if (!(a + b < cc || a + b > p)) return "branch gap: <-gamma> <= <-a>+<-b> <= p";
        if (!pole_free(ga, p - 1)) return "gamma pole";
        return std::nullopt;
    };
    t.branch = [](const TheoremCase& tc) {
        int64_t a = A(tc, tc.params[0]), b = A(tc, tc.params[1]), cc = A(tc, tc.params[2]);
        return a + b < cc ? "gamma-quotient" : "zero";
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        return hyp_pm1(tc, {al, be, ga - al - be}, {kOne, ga}, kOne);
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga);
        if (!(a + b < cc)) return Residue(0, tc.ctx->p2());
        return gq(tc, {kOne + al - ga, kOne + be - ga, kOne - al - be},
                  {kOne - al, kOne - be, kOne - ga, kOne + al + be - ga})
            .neg();
    };
    return t;
}

TheoremStatement make_thm_2_13() {
    TheoremStatement t;
    t.id = "thm-2.13-kummer-3f2";
    t.anchor = "Theorem 2.13";
    t.arity = 4;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3];
        Rational lower = kOne + de - be - ga;
        if (auto c = need_pint(tc, {al, be, ga, de, lower})) return c;
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga), d = A(tc, de),
                p = static_cast<int64_t>(tc.ctx->p());
        if (!(std::max({a, b, cc}) <= d)) return "(i) max <= <-delta>";
        if (!(a + b + cc < p + d)) return "(ii) sum < p + <-delta>";
        if (!(b + cc >= d)) return "(iii) <-beta>+<-gamma> >= <-delta>";
        if (!poch_clean(tc, de) || !poch_clean(tc, lower))
            return "(iv) Pochhammer divisibility";
        if (!pole_free(de, p - 1) || !pole_free(lower, p - 1)) return "lower-parameter pole";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3];
        return hyp_pm1(tc, {al, be, ga}, {kOne, de}, kOne);
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3];
        Rational lower = kOne + de - be - ga;
        Residue g = gq(tc, {de, kOne + de - al - be - ga}, {de - al, lower});
        return g * hyp_pm1(tc, {al, kOne - be, kOne - ga}, {kOne, lower}, kOne);
    };
    t.worked_examples = {{Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(5, 6)}};
    return t;
}

TheoremStatement make_thm_2_14() {
    TheoremStatement t;
    t.id = "thm-2.14-whipple-3f2-z";
    t.anchor = "Theorem 2.14";
    t.arity = 2;
    t.zpolicy.needs_z = true;
    t.zpolicy.unit_required = {{0, 1}, {-1, 1}};
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1];
        if (auto c = need_pint(tc, {al, be, al - be + kOne})) return c;
        if (!punit(tc, al)) return "p does not divide alpha";
        int64_t a = A(tc, al), b = A(tc, be), p = static_cast<int64_t>(tc.ctx->p());
        if (!(a <= b)) return "(i) <-alpha> <= <-beta>";
        if (!(p + a > 2 * b)) return "(ii) p + <-alpha> > 2<-beta>";
        if (!poch_clean(tc, al - be + kOne)) return "(iii) Pochhammer divisibility";
        if (!pole_free(al - be + kOne, p - 1)) return "lower-parameter pole";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1];
        Rational z = *tc.z;
        Residue t1 = hyp_pm1(tc, {al, al, be}, {kOne, al - be + kOne}, z);
        Residue t2 = hyp_pm1(tc, {al, al, be}, {kOne, al - be + kOne}, z.inverse());
        return t1 + zpl(tc, -z, 1, al) * t2;
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1];
        Rational z = *tc.z;
        Rational arg = Rational(-4) * z / ((kOne - z) * (kOne - z));
        return zpl(tc, kOne - z, 1, al) *
               hyp_pm1(tc, {kOne - be, al * kHalf, al * kHalf + kHalf}, {kOne, al - be + kOne}, arg);
    };
    return t;
}

TheoremStatement make_thm_2_15() {
    TheoremStatement t;
    t.id = "thm-2.15-whipple-4f3";
    t.anchor = "Theorem 2.15";
    t.arity = 5;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3], &ep = tc.params[4];
        Rational rho = de + ep - al - be - ga;
        Rational lo1 = kOne + de - be - ga, lo2 = kOne + ep - be - ga;
        if (auto c = need_pint(tc, {al, be, ga, de, ep, rho, lo1, lo2})) return c;
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga), d = A(tc, de), e = A(tc, ep);
        int64_t p = static_cast<int64_t>(tc.ctx->p());
        if (!(a <= std::min(d, e) && b <= d && cc <= e)) return "(i) residue ordering";
        if (!(a + b + cc <= d + e)) return "(ii) residue sum bound";
        if (!(b + cc >= std::max(d, e))) return "(iii) <-beta>+<-gamma> >= max";
        if (!poch_clean(tc, de) || !poch_clean(tc, ep) || !poch_clean(tc, lo1) ||
            !poch_clean(tc, lo2))
            return "(iv) Pochhammer divisibility";
        for (const Rational& x : {de, ep, lo1, lo2})
            if (!pole_free(x, p - 1)) return "lower-parameter pole";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3], &ep = tc.params[4];
        Rational rho = de + ep - al - be - ga;
        return hyp_pm1(tc, {rho, al, be, ga}, {kOne, de, ep}, kOne);
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3], &ep = tc.params[4];
        Rational rho = de + ep - al - be - ga;
        Rational lo1 = kOne + de - be - ga, lo2 = kOne + ep - be - ga;
        Residue g = gq(tc, {be + ga - de, be + ga - ep, de, ep}, {de - rho, ep - rho, de - al, ep - al});
        return g * hyp_pm1(tc, {rho, al, kOne - be, kOne - ga}, {kOne, lo1, lo2}, kOne);
    };
    t.worked_examples = {{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2), kOne},
                         {Rational(1, 3), Rational(1, 2), Rational(2, 3), kOne, Rational(5, 6)}};
    return t;
}

TheoremStatement make_thm_2_16() {
    TheoremStatement t;
    t.id = "thm-2.16-4f3-zero";
    t.anchor = "Theorem 2.16";
    t.arity = 5;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3], &ep = tc.params[4];
        Rational rho = de + ep - al - be - ga;
        if (auto c = need_pint(tc, {al, be, ga, de, ep, rho})) return c;
        if (!punit(tc, al)) return "alpha in Z_p^x";
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga), d = A(tc, de), e = A(tc, ep);
        int64_t p = static_cast<int64_t>(tc.ctx->p());
        if (!(a <= std::min(d, e) && b <= d && cc <= e)) return "(i) residue ordering";
        if (!(a + b + cc >= p + std::max(d, e))) return "(ii) residue sum >= p + max";
        if (!poch_clean(tc, de) || !poch_clean(tc, ep)) return "(iii) Pochhammer divisibility";
        for (const Rational& x : {de, ep})
            if (!pole_free(x, p - 1)) return "lower-parameter pole";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3], &ep = tc.params[4];
        Rational rho = de + ep - al - be - ga;
        return hyp_pm1(tc, {rho, al, be, ga}, {kOne, de, ep}, kOne);
    };
    t.rhs = [](const TheoremCase& tc) { return Residue(0, tc.ctx->p2()); };
    return t;
}

// shared pieces of the well-poised 7F6 family
RV wp7f6_upper(const Rational& al, const Rational& be, const Rational& ga, const Rational& de,
               const Rational& ep) {
    return {al, al, kOne + al * kHalf, be, ga, de, ep};
}
RV wp7f6_lower(const Rational& al, const Rational& be, const Rational& ga, const Rational& de,
               const Rational& ep) {
    return {kOne, al * kHalf, al - be + kOne, al - ga + kOne, al - de + kOne, al - ep + kOne};
}

std::optional<std::string> wp7f6_shared_cond(const TheoremCase& tc, const Rational& al,
                                             const Rational& be, const Rational& ga,
                                             const Rational& de, const Rational& ep) {
    if (auto c = need_pint(tc, {al, be, ga, de, ep, al * kHalf})) return c;
    if (!punit(tc, al)) return "p does not divide alpha";
    int64_t p = static_cast<int64_t>(tc.ctx->p());
    for (const Rational& x : {al - be + kOne, al - ga + kOne, al - de + kOne, al - ep + kOne}) {
        if (!pint(tc, x)) return "p-integral parameters";
        if (!pole_free(x, p - 1)) return "lower-parameter pole";
    }
    if (!pole_free(al * kHalf, p - 1)) return "alpha/2 pole";
    return std::nullopt;
}

Residue wp7f6_gamma_quotient(const TheoremCase& tc, const Rational& al, const Rational& be,
                             const Rational& ga, const Rational& de) {
    return gq(tc, {al - be + kOne, al - ga + kOne, al - de + kOne, al - be - ga - de + kOne},
              {al + kOne, al - be - ga + kOne, al - be - de + kOne, al - ga - de + kOne});
}

TheoremStatement make_thm_2_17() {
    TheoremStatement t;
    t.id = "thm-2.17-whipple-7f6";
    t.anchor = "Theorem 2.17";
    t.arity = 5;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3], &ep = tc.params[4];
        if (auto c = wp7f6_shared_cond(tc, al, be, ga, de, ep)) return c;
        Rational bal = be + ga + de - al;
        if (!pint(tc, bal)) return "p-integral parameters";
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga), d = A(tc, de), e = A(tc, ep);
        int64_t p = static_cast<int64_t>(tc.ctx->p());
        if (!(b < a && a <= std::min({cc, d, e}))) return "(i) residue ordering";
        if (!(p + a > std::max({cc + e, d + e, b + cc + d}))) return "(ii) residue sums";
        if (Rational(a) * be != Rational(b) * al) return "(iii) <-alpha>/alpha = <-beta>/beta";
        for (const Rational& x : {al - be + kOne, al - ga + kOne, al - de + kOne, al - ep + kOne, bal})
            if (!poch_clean(tc, x)) return "(iv) Pochhammer divisibility";
        if (!pole_free(bal, p - 1) || !pole_free(al - ep + kOne, p - 1)) return "lower-parameter pole";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3], &ep = tc.params[4];
        return hyp_pm1(tc, wp7f6_upper(al, be, ga, de, ep), wp7f6_lower(al, be, ga, de, ep), kOne);
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3], &ep = tc.params[4];
        int64_t a = A(tc, al), b = A(tc, be);
        Rational bal = be + ga + de - al;
        Residue pref = emb(tc, Rational(a, a - b));
        Residue f = hyp_pm1(tc, {kOne - ep, be, ga, de}, {kOne, al - ep + kOne, bal}, kOne);
        return pref * wp7f6_gamma_quotient(tc, al, be, ga, de) * f;
    };
    t.worked_examples = {
        {Rational(2, 3), Rational(1, 12), Rational(3, 4), Rational(3, 4), Rational(3, 4)},
        {Rational(2, 3), Rational(1, 3), Rational(2, 3), Rational(2, 3), Rational(2, 3)}};
    return t;
}

TheoremStatement make_thm_2_18() {
    TheoremStatement t;
    t.id = "thm-2.18-7f6-zero";
    t.anchor = "Theorem 2.18";
    t.arity = 5;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3], &ep = tc.params[4];
        if (auto c = wp7f6_shared_cond(tc, al, be, ga, de, ep)) return c;
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga), d = A(tc, de), e = A(tc, ep);
        int64_t p = static_cast<int64_t>(tc.ctx->p());
        if (!(a <= std::min({b, cc, d, e}))) return "(i) residue ordering";
        if (!(p + a > std::max({b + cc, b + d, b + e, cc + d}))) return "(ii) residue sums";
        if (!(2 * p - 1 + a <= b + cc + d + e)) return "(iii) 2p-1+<-alpha> <= sum";
        for (const Rational& x : {al - be + kOne, al - ga + kOne, al - de + kOne, al - ep + kOne})
            if (!poch_clean(tc, x)) return "(iv) Pochhammer divisibility";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3], &ep = tc.params[4];
        return hyp_pm1(tc, wp7f6_upper(al, be, ga, de, ep), wp7f6_lower(al, be, ga, de, ep), kOne);
    };
    t.rhs = [](const TheoremCase& tc) { return Residue(0, tc.ctx->p2()); };
    return t;
}

TheoremStatement make_thm_2_19() {
    TheoremStatement t;
    t.id = "thm-2.19-7f6-unit";
    t.anchor = "Theorem 2.19";
    t.arity = 5;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3], &ep = tc.params[4];
        if (auto c = wp7f6_shared_cond(tc, al, be, ga, de, ep)) return c;
        Rational bal = be + ga + de - al;
        if (!pint(tc, bal)) return "p-integral parameters";
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga), d = A(tc, de), e = A(tc, ep);
        int64_t p = static_cast<int64_t>(tc.ctx->p());
        if (!(a <= std::min({b, cc, d, e}))) return "(i) residue ordering";
        if (!(p + a > std::max(b + cc + d, std::min({b, cc, d}) + e))) return "(ii) residue sums";
        for (const Rational& x : {al - be + kOne, al - ga + kOne, al - de + kOne, al - ep + kOne, bal})
            if (!poch_clean(tc, x)) return "(iii) Pochhammer divisibility";
        if (!pole_free(bal, p - 1)) return "lower-parameter pole";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3], &ep = tc.params[4];
        return hyp_pm1(tc, wp7f6_upper(al, be, ga, de, ep), wp7f6_lower(al, be, ga, de, ep), kOne);
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3], &ep = tc.params[4];
        Rational bal = be + ga + de - al;
        Residue pref = emb(tc, al + Rational(A(tc, al)));
        Residue f = hyp_pm1(tc, {kOne - ep, be, ga, de}, {kOne, al - ep + kOne, bal}, kOne);
        return pref * wp7f6_gamma_quotient(tc, al, be, ga, de) * f;
    };
    return t;
}

TheoremStatement make_thm_2_20() {
    TheoremStatement t;
    t.id = "thm-2.20-dougall-7f6";
    t.anchor = "Theorem 2.20";
    t.arity = 4;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3];
        Rational ep = al + kOne - be - ga - de; // epsilon evaluated first
        if (auto c = wp7f6_shared_cond(tc, al, be, ga, de, ep)) return c;
        if (!pint(tc, be + ga + de)) return "p-integral parameters";
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga), d = A(tc, de);
        int64_t p = static_cast<int64_t>(tc.ctx->p());
        if (!(b < a && a <= std::min(cc, d))) return "(i) residue ordering";
        if (!(b + cc + d < p)) return "(ii) <-b>+<-c>+<-d> < p";
        if (Rational(a) * be != Rational(b) * al) return "(iii) <-alpha>/alpha = <-beta>/beta";
        for (const Rational& x : {al - be + kOne, al - ga + kOne, al - de + kOne, be + ga + de})
            if (!poch_clean(tc, x)) return "(iv) Pochhammer divisibility";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3];
        Rational ep = al + kOne - be - ga - de;
        return hyp_pm1(tc, wp7f6_upper(al, be, ga, de, ep), wp7f6_lower(al, be, ga, de, ep), kOne);
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3];
        Residue g1 = gq(tc, {kOne - be - ga, kOne - be - de, kOne - ga - de},
                        {kOne - be, kOne - ga, kOne - de, kOne - be - ga - de});
        Residue g2 = wp7f6_gamma_quotient(tc, al, be, ga, de);
        return (emb(tc, al / (al - be)) * g1 * g2).neg();
    };
    t.worked_examples = {{Rational(2, 3), Rational(1, 12), Rational(3, 4), Rational(3, 4)},
                         {Rational(1, 3), Rational(1, 6), Rational(1, 3), Rational(1, 3)}};
    return t;
}

TheoremStatement make_thm_2_21() {
    TheoremStatement t;
    t.id = "thm-2.21-dougall-7f6-unit";
    t.anchor = "Theorem 2.21";
    t.arity = 4;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3];
        Rational ep = al + kOne - be - ga - de;
        if (auto c = wp7f6_shared_cond(tc, al, be, ga, de, ep)) return c;
        if (!pint(tc, be + ga + de)) return "p-integral parameters";
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga), d = A(tc, de), e = A(tc, ep);
        int64_t p = static_cast<int64_t>(tc.ctx->p());
        if (!(a <= std::min({b, cc, d, e}))) return "(i) residue ordering";
        if (!(b + cc + d < p)) return "(ii) <-b>+<-c>+<-d> < p";
        for (const Rational& x : {al - be + kOne, al - ga + kOne, al - de + kOne, be + ga + de})
            if (!poch_clean(tc, x)) return "(iii) Pochhammer divisibility";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3];
        Rational ep = al + kOne - be - ga - de;
        return hyp_pm1(tc, wp7f6_upper(al, be, ga, de, ep), wp7f6_lower(al, be, ga, de, ep), kOne);
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3];
        Residue g1 = gq(tc, {kOne - be - ga, kOne - be - de, kOne - ga - de},
                        {kOne - be, kOne - ga, kOne - de, kOne - be - ga - de});
        Residue g2 = wp7f6_gamma_quotient(tc, al, be, ga, de);
        return (emb(tc, al + Rational(A(tc, al))) * g1 * g2).neg();
    };
    t.worked_examples = {{Rational(1, 6), Rational(1, 4), Rational(1, 4), Rational(1, 4)}};
    return t;
}

TheoremStatement make_thm_5f4_a() {
    TheoremStatement t;
    t.id = "thm-5f4-a";
    t.anchor = "Eq. (2.50)";
    t.arity = 3;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        if (auto c = need_pint(tc, {al, be, ga, al * kHalf, al - be + kOne, al - ga + kOne}))
            return c;
        if (!punit(tc, al)) return "p does not divide alpha";
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga), p = static_cast<int64_t>(tc.ctx->p());
        if (!(b < a && a <= cc && 2 * cc < p + a)) return "(i) residue ordering";
        if (!(b + cc < p)) return "(ii) <-beta>+<-gamma> < p";
        if (Rational(a) * be != Rational(b) * al) return "(iii) <-alpha>/alpha = <-beta>/beta";
        if (!poch_clean(tc, al - be + kOne) || !poch_clean(tc, al - ga + kOne))
            return "(iv) Pochhammer divisibility";
        for (const Rational& x : {al - be + kOne, al - ga + kOne, al * kHalf})
            if (!pole_free(x, p - 1)) return "lower-parameter pole";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        return hyp_pm1(tc, {al, al, kOne + al * kHalf, be, ga},
                       {kOne, al * kHalf, al - be + kOne, al - ga + kOne}, kOne);
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        Residue g = gq(tc, {kOne + al - be, kOne + al - ga, kOne - be - ga},
                       {kOne + al, kOne - be, kOne - ga, kOne + al - be - ga});
        return (emb(tc, al / (al - be)) * g).neg();
    };
    t.worked_examples = {{Rational(2, 3), Rational(1, 12), Rational(3, 4)},
                         {Rational(2, 3), Rational(1, 3), Rational(2, 3)}};
    return t;
}

TheoremStatement make_thm_5f4_b() {
    TheoremStatement t;
    t.id = "thm-5f4-b";
    t.anchor = "Eqs. (2.52)/(2.53)";
    t.arity = 3;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        if (auto c = need_pint(tc, {al, be, ga, al * kHalf, al - be + kOne, al - ga + kOne}))
            return c;
        if (!punit(tc, al)) return "p does not divide alpha";
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga), p = static_cast<int64_t>(tc.ctx->p());
        if (!(a <= std::min(b, cc))) return "(i) <-alpha> <= min";
        if (!poch_clean(tc, al - be + kOne) || !poch_clean(tc, al - ga + kOne))
            return "(ii) Pochhammer divisibility";
        if (!(b + cc < p + a)) return "branch bound <-beta>+<-gamma> < p+<-alpha>";
        for (const Rational& x : {al - be + kOne, al - ga + kOne, al * kHalf})
            if (!pole_free(x, p - 1)) return "lower-parameter pole";
        return std::nullopt;
    };
    t.branch = [](const TheoremCase& tc) {
        int64_t b = A(tc, tc.params[1]), cc = A(tc, tc.params[2]),
                p = static_cast<int64_t>(tc.ctx->p());
        return b + cc >= p ? "zero" : "unit-times-quotient";
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        return hyp_pm1(tc, {al, al, kOne + al * kHalf, be, ga},
                       {kOne, al * kHalf, al - be + kOne, al - ga + kOne}, kOne);
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        int64_t b = A(tc, be), cc = A(tc, ga), p = static_cast<int64_t>(tc.ctx->p());
        if (b + cc >= p) return Residue(0, tc.ctx->p2());
        Residue g = gq(tc, {kOne + al - be, kOne + al - ga, kOne - be - ga},
                       {kOne + al, kOne - be, kOne - ga, kOne + al - be - ga});
        return (emb(tc, al + Rational(A(tc, al))) * g).neg();
    };
    return t;
}

TheoremStatement make_thm_6f5_a() {
    TheoremStatement t;
    t.id = "thm-6f5-a";
    t.anchor = "Eq. (2.56)";
    t.arity = 4;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3];
        if (auto c = need_pint(tc, {al, be, ga, de, al * kHalf})) return c;
        if (!punit(tc, al)) return "p does not divide alpha";
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga), d = A(tc, de),
                p = static_cast<int64_t>(tc.ctx->p());
        if (!(b < a && a <= std::min(cc, d))) return "(i) residue ordering";
        if (!(p + a > cc + d)) return "(ii) p+<-alpha> > <-gamma>+<-delta>";
        if (Rational(a) * be != Rational(b) * al) return "(iii) <-alpha>/alpha = <-beta>/beta";
        for (const Rational& x : {al - be + kOne, al - ga + kOne, al - de + kOne}) {
            if (!pint(tc, x)) return "p-integral parameters";
            if (!poch_clean(tc, x)) return "(iv) Pochhammer divisibility";
            if (!pole_free(x, p - 1)) return "lower-parameter pole";
        }
        if (!pole_free(al * kHalf, p - 1)) return "alpha/2 pole";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3];
        return hyp_pm1(tc, {al, al, kOne + al * kHalf, be, ga, de},
                       {kOne, al * kHalf, al - be + kOne, al - ga + kOne, al - de + kOne},
                       Rational(-1));
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3];
        Residue g = gq(tc, {al - be + kOne, al - ga + kOne}, {al + kOne, al - be - ga + kOne});
        Residue f = hyp_pm1(tc, {kOne - de, be, ga}, {kOne, al - de + kOne}, kOne);
        return emb(tc, al / (al - be)) * g * f;
    };
    t.worked_examples = {{Rational(2, 3), Rational(1, 12), Rational(3, 4), Rational(3, 4)},
                         {Rational(2, 3), Rational(1, 3), Rational(2, 3), Rational(2, 3)}};
    return t;
}

TheoremStatement make_thm_6f5_b() {
    TheoremStatement t;
    t.id = "thm-6f5-b";
    t.anchor = "Eq. (2.58)";
    t.arity = 4;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3];
        if (auto c = need_pint(tc, {al, be, ga, de, al * kHalf})) return c;
        if (!punit(tc, al)) return "p does not divide alpha";
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga), d = A(tc, de),
                p = static_cast<int64_t>(tc.ctx->p());
        if (!(a <= std::min({b, cc, d}))) return "(i) residue ordering";
        if (!(p + a > std::max({b + cc, b + d, cc + d}))) return "(ii) residue sums";
        for (const Rational& x : {al - be + kOne, al - ga + kOne, al - de + kOne}) {
            if (!pint(tc, x)) return "p-integral parameters";
            if (!poch_clean(tc, x)) return "(iii) Pochhammer divisibility";
            if (!pole_free(x, p - 1)) return "lower-parameter pole";
        }
        if (!pole_free(al * kHalf, p - 1)) return "alpha/2 pole";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3];
        return hyp_pm1(tc, {al, al, kOne + al * kHalf, be, ga, de},
                       {kOne, al * kHalf, al - be + kOne, al - ga + kOne, al - de + kOne},
                       Rational(-1));
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2],
                       &de = tc.params[3];
        Residue g = gq(tc, {al - be + kOne, al - ga + kOne}, {al + kOne, al - be - ga + kOne});
        Residue f = hyp_pm1(tc, {kOne - de, be, ga}, {kOne, al - de + kOne}, kOne);
        return emb(tc, al + Rational(A(tc, al))) * g * f;
    };
    return t;
}

TheoremStatement make_cor_2_59_60() {
    TheoremStatement t;
    t.id = "cor-2.59-2.60-4f3-m1";
    t.anchor = "Corollary, Eqs. (2.59)/(2.60)";
    t.arity = 2;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1];
        if (auto c = need_pint(tc, {al, be, al * kHalf, al - be + kOne})) return c;
        if (!punit(tc, al)) return "p does not divide alpha";
        if (!poch_clean(tc, al - be + kOne)) return "Pochhammer divisibility";
        int64_t a = A(tc, al), b = A(tc, be), p = static_cast<int64_t>(tc.ctx->p());
        bool br1 = b < a && Rational(a) * be == Rational(b) * al;
        bool br2 = a <= b && 2 * b <= p + a - 1;
        if (!(br1 || br2)) return "branch hypotheses";
        if (!pole_free(al - be + kOne, p - 1) || !pole_free(al * kHalf, p - 1))
            return "lower-parameter pole";
        return std::nullopt;
    };
    t.branch = [](const TheoremCase& tc) {
        int64_t a = A(tc, tc.params[0]), b = A(tc, tc.params[1]);
        return b < a ? "eq-2.59" : "eq-2.60";
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1];
        return hyp_pm1(tc, {al, al, al * kHalf + kOne, be}, {kOne, al * kHalf, al - be + kOne},
                       Rational(-1));
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1];
        int64_t a = A(tc, al), b = A(tc, be);
        Residue g = gq(tc, {al - be + kOne}, {al + kOne, kOne - be});
        Residue pref = b < a ? emb(tc, al / (al - be)) : emb(tc, al + Rational(a));
        return (pref * g).neg();
    };
    t.worked_examples = {{Rational(2, 3), Rational(1, 3)}};
    return t;
}

TheoremStatement make_cor_2_27() {
    TheoremStatement t;
    t.id = "cor-2.27-2f1-m1";
    t.anchor = "Corollary 2.27, Eq. (2.61)";
    t.arity = 1;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (auto c = need_pint(tc, {tc.params[0]})) return c;
        if (!punit(tc, tc.params[0])) return "p does not divide alpha";
        if (A(tc, tc.params[0]) % 2 != 0) return "<-alpha>_p even";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {tc.params[0], tc.params[0]}, {kOne}, Rational(-1));
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        Residue g = gq(tc, {kOne + al * kHalf}, {kOne + al, kOne - al * kHalf});
        return (Residue(2, tc.ctx->p2()) * g).neg();
    };
    return t;
}

TheoremStatement make_thm_4_1() {
    TheoremStatement t;
    t.id = "thm-4.1-complete-gauss";
    t.anchor = "Theorem 4.1";
    t.arity = 3;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        if (auto c = need_pint(tc, {al, be, ga})) return c;
        if (!punit(tc, ga)) return "gamma in Z_p^x";
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga);
        if (!(a <= cc && b <= cc)) return "<-alpha>,<-beta> <= <-gamma>";
        if (!pole_free(ga, cc)) return "gamma pole";
        return std::nullopt;
    };
    t.branch = [](const TheoremCase& tc) {
        int64_t a = A(tc, tc.params[0]), b = A(tc, tc.params[1]), cc = A(tc, tc.params[2]);
        return a + b <= cc ? "case-i" : "case-ii";
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        return hyp(tc, {al, be}, {ga}, kOne, A(tc, ga));
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga);
        Residue g = gq(tc, {ga, ga - al - be}, {ga - al, ga - be});
        if (a + b <= cc) return g;
        Rational fac = ga + Rational(cc) - al - Rational(a) - be - Rational(b);
        return emb(tc, fac) * g;
    };
    return t;
}

TheoremStatement make_thm_4_2() {
    TheoremStatement t;
    t.id = "thm-4.2-pfaff";
    t.anchor = "Theorem 4.2";
    t.arity = 3;
    t.zpolicy.needs_z = true;
    t.zpolicy.unit_required = {{0, 1}};
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        Rational lower = al + be - ga + kOne;
        if (auto c = need_pint(tc, {al, be, ga, lower})) return c;
        if (!punit(tc, be)) return "beta in Z_p^x";
        if (!punit(tc, ga)) return "gamma in Z_p^x";
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga);
        if (!(a + b <= cc)) return "<-alpha>+<-beta> <= <-gamma>";
        int64_t d = static_cast<int64_t>(least_nonneg_residue(ga - al - be - kOne, *tc.ctx, 1));
        if (!pole_free(ga, cc) || !pole_free(lower, d)) return "lower-parameter pole";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        return hyp(tc, {al, be}, {ga}, *tc.z, A(tc, ga));
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        int64_t d = static_cast<int64_t>(least_nonneg_residue(ga - al - be - kOne, *tc.ctx, 1));
        Residue g = gq(tc, {ga, ga - al - be}, {ga - al, ga - be});
        return g * hyp(tc, {al, be}, {al + be - ga + kOne}, kOne - *tc.z, d);
    };
    return t;
}

TheoremStatement make_eq_4_10() {
    TheoremStatement t;
    t.id = "eq-4.10-watson-complete";
    t.anchor = "Eq. (4.10)";
    t.arity = 3;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        Rational lo2 = (al + ga + kOne) * kHalf;
        if (auto c = need_pint(tc, {al, be, ga, Rational(2) * be, lo2})) return c;
        int64_t a = A(tc, al), b = A(tc, be), cc = A(tc, ga), p = static_cast<int64_t>(tc.ctx->p());
        if (a % 2 != 0 || cc % 2 != 0) return "(i) <-alpha>, <-gamma> even";
        if (!(a + cc < p)) return "(i) <-alpha>+<-gamma> < p";
        if (!(2 * b < p)) return "(ii) <-beta>_p < p/2";
        if (!poch_clean(tc, Rational(2) * be)) return "(ii) (2beta)_{p-1} divisibility";
        int64_t n = (p - 1 + a + cc) / 2;
        if (!pole_free(Rational(2) * be, n) || !pole_free(lo2, n)) return "lower-parameter pole";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        int64_t a = A(tc, al), cc = A(tc, ga), p = static_cast<int64_t>(tc.ctx->p());
        int64_t n = (p - 1 + a + cc) / 2;
        return hyp(tc, {al, be, ga}, {Rational(2) * be, (al + ga + kOne) * kHalf}, kOne, n);
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational &al = tc.params[0], &be = tc.params[1], &ga = tc.params[2];
        return gq(tc,
                  {kHalf, kHalf + be, (kOne + al + ga) * kHalf, kHalf + be - (al + ga) * kHalf},
                  {(kOne + al) * kHalf, (kOne + ga) * kHalf, kHalf + be - al * kHalf,
                   kHalf + be - ga * kHalf});
    };
    return t;
}

TheoremStatement make_eq_9_4() {
    TheoremStatement t;
    t.id = "eq-9.4-half-at-2";
    t.anchor = "Eq. (9.4)";
    t.arity = 1;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (auto c = need_pint(tc, {tc.params[0]})) return c;
        if (A(tc, tc.params[0]) % 2 != 0) return "<-alpha>_p even";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {tc.params[0], kHalf}, {kOne}, Rational(2));
    };
    t.rhs = [](const TheoremCase& tc) {
        const Rational& al = tc.params[0];
        int64_t a = A(tc, al);
        return sign_residue(tc, 1 + a / 2) * gq(tc, {kHalf}, {kHalf + al * kHalf, kOne - al * kHalf});
    };
    return t;
}

TheoremStatement make_eq_9_6() {
    TheoremStatement t;
    t.id = "eq-9.6-quarter34-8over9";
    t.anchor = "Eq. (9.6)";
    t.arity = 0;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (tc.ctx->p() % 4 != 1) return "p ≡ 1 (mod 4)";
        if (tc.ctx->p() == 3) return "p != 3";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {Rational(1, 4), Rational(3, 4)}, {kOne}, Rational(8, 9));
    };
    t.rhs = [](const TheoremCase& tc) {
        return (legendre_res(tc, 6) * gq(tc, {kHalf}, {Rational(3, 4), Rational(3, 4)})).neg();
    };
    return t;
}

TheoremStatement make_eq_9_8() {
    TheoremStatement t;
    t.id = "eq-9.8-3f2-32over81";
    t.anchor = "Eq. (9.8)";
    t.arity = 0;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (tc.ctx->p() % 4 != 1) return "p ≡ 1 (mod 4)";
        if (tc.ctx->p() == 3) return "p != 3";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {Rational(1, 4), Rational(3, 4), kHalf}, {kOne, kOne}, Rational(32, 81));
    };
    t.rhs = [](const TheoremCase& tc) {
        return gq(tc, {kHalf, kHalf},
                  {Rational(3, 4), Rational(3, 4), Rational(3, 4), Rational(3, 4)});
    };
    return t;
}

// --- §12 CM suite ---

TheoremStatement make_eq_12_4() {
    TheoremStatement t;
    t.id = "eq-12.4-legendre-sqrtm3";
    t.anchor = "Eq. (12.4)";
    t.arity = 0;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (tc.ctx->p() % 3 != 1) return "p ≡ 1 (mod 3)";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        CmData cm = cm_data(tc);
        Padic x = Padic::from_parts(tc.ctx->p(), 0, cm.sqrt_m3.value, 2);
        return legendre_poly_at((static_cast<int64_t>(tc.ctx->p()) - 1) / 2, x, *tc.ctx);
    };
    t.rhs = [](const TheoremCase& tc) {
        CmData cm = cm_data(tc);
        return Residue::of(cm.a, tc.ctx->p2()) + Residue::of(cm.b, tc.ctx->p2()) * cm.sqrt_m3;
    };
    return t;
}

// a + b sqrt(-3) for p ≡ 1 (mod 4), a sqrt(-3) - 3b for p ≡ 3 (mod 4)
Residue cm_rhs_base(const TheoremCase& tc, const CmData& cm) {
    if (tc.ctx->p() % 4 == 1)
        return Residue::of(cm.a, tc.ctx->p2()) + Residue::of(cm.b, tc.ctx->p2()) * cm.sqrt_m3;
    return Residue::of(cm.a, tc.ctx->p2()) * cm.sqrt_m3 - Residue::of(3 * cm.b, tc.ctx->p2());
}

TheoremStatement make_eq_12_5() {
    TheoremStatement t;
    t.id = "eq-12.5-quarter-at-4";
    t.anchor = "Eq. (12.5)";
    t.arity = 0;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (tc.ctx->p() % 3 != 1) return "p ≡ 1 (mod 3)";
        return std::nullopt;
    };
    t.branch = [](const TheoremCase& tc) { return tc.ctx->p() % 4 == 1 ? "1mod4" : "3mod4"; };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {Rational(1, 4), Rational(1, 4)}, {kOne}, Rational(4));
    };
    t.rhs = [](const TheoremCase& tc) { return cm_rhs_base(tc, cm_data(tc)); };
    return t;
}

TheoremStatement make_eq_12_6() {
    TheoremStatement t;
    t.id = "eq-12.6-quarter-at-1over4";
    t.anchor = "Eq. (12.6)";
    t.arity = 0;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (tc.ctx->p() % 3 != 1) return "p ≡ 1 (mod 3)";
        return std::nullopt;
    };
    t.branch = [](const TheoremCase& tc) { return tc.ctx->p() % 4 == 1 ? "1mod4" : "3mod4"; };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {Rational(1, 4), Rational(1, 4)}, {kOne}, Rational(1, 4));
    };
    t.rhs = [](const TheoremCase& tc) {
        Residue base = cm_rhs_base(tc, cm_data(tc));
        Residue two = legendre_res(tc, 2);
        if (tc.ctx->p() % 4 == 1) return two * base;
        // factor 4^{lambda_p(1/4)} ≡ (2/p)/2 for p ≡ 3 (mod 4)
        return two * base * Residue(2, tc.ctx->p2()).inverse();
    };
    return t;
}

TheoremStatement make_eq_12_8() {
    TheoremStatement t;
    t.id = "eq-12.8-quarter34-m1over3";
    t.anchor = "Eq. (12.8)";
    t.arity = 0;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (tc.ctx->p() % 3 != 1) return "p ≡ 1 (mod 3)";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {Rational(1, 4), Rational(3, 4)}, {kOne}, Rational(-1, 3));
    };
    t.rhs = [](const TheoremCase& tc) {
        Residue g = gq(tc, {Rational(4, 3)}, {Rational(3, 2), Rational(5, 6)});
        Residue three_halves = Residue(3, tc.ctx->p2()) * Residue(2, tc.ctx->p2()).inverse();
        return (legendre_res(tc, 2) * three_halves * g).neg();
    };
    return t;
}

TheoremStatement make_eq_12_9() {
    TheoremStatement t;
    t.id = "eq-12.9-cm-reflection";
    t.anchor = "Eq. (12.9), z = 4";
    t.arity = 0;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (tc.ctx->p() % 3 != 1) return "p ≡ 1 (mod 3)"; // z = -4B/Δ = 4 is the sqrt(-3) curve
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {Rational(1, 4), Rational(1, 4)}, {kOne}, Rational(4));
    };
    t.rhs = [](const TheoremCase& tc) {
        Residue f = hyp_pm1(tc, {Rational(1, 4), Rational(1, 4)}, {kOne}, Rational(1, 4));
        return zpl(tc, Rational(4), 0, Rational(1, 4)) * f;
    };
    return t;
}

TheoremStatement make_eq_12_10() {
    TheoremStatement t;
    t.id = "eq-12.10-cm-pfaff";
    t.anchor = "Eq. (12.10), z = 4";
    t.arity = 0;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (tc.ctx->p() % 3 != 1) return "p ≡ 1 (mod 3)";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {Rational(1, 4), Rational(1, 4)}, {kOne}, Rational(4));
    };
    t.rhs = [](const TheoremCase& tc) {
        Residue f = hyp_pm1(tc, {Rational(1, 4), Rational(3, 4)}, {kOne}, Rational(4, 3));
        return zpl(tc, Rational(-3), 0, Rational(1, 4)) * f;
    };
    return t;
}

TheoremStatement make_eq_12_12() {
    TheoremStatement t;
    t.id = "eq-12.12-quarter4-gamma";
    t.anchor = "Eq. (12.12)";
    t.arity = 0;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (tc.ctx->p() % 3 != 1) return "p ≡ 1 (mod 3)";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {Rational(1, 4), Rational(1, 4)}, {kOne}, Rational(4));
    };
    t.rhs = [](const TheoremCase& tc) {
        Residue g = gq(tc, {Rational(4, 3)}, {Rational(3, 2), Rational(5, 6)});
        Residue three_pow = zpl(tc, Rational(3), 1, Rational(1, 4));
        return (legendre_res(tc, 2) * three_pow * g * Residue(2, tc.ctx->p2()).inverse()).neg();
    };
    return t;
}

TheoremStatement make_eq_12_13() {
    TheoremStatement t;
    t.id = "eq-12.13-quarter14-gamma";
    t.anchor = "Eq. (12.13)";
    t.arity = 0;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (tc.ctx->p() % 3 != 1) return "p ≡ 1 (mod 3)";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {Rational(1, 4), Rational(1, 4)}, {kOne}, Rational(1, 4));
    };
    t.rhs = [](const TheoremCase& tc) {
        Residue g = gq(tc, {Rational(4, 3)}, {Rational(3, 2), Rational(5, 6)});
        Residue pw = zpl(tc, Rational(3, 4), 1, Rational(1, 4));
        return (legendre_res(tc, 2) * pw * Residue(2, tc.ctx->p2()) * g).neg();
    };
    return t;
}

TheoremStatement make_eq_12_14() {
    TheoremStatement t;
    t.id = "eq-12.14-3f2-m16over9";
    t.anchor = "Eq. (12.14)";
    t.arity = 0;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (tc.ctx->p() % 3 != 1) return "p ≡ 1 (mod 3)";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {Rational(1, 4), Rational(3, 4), kHalf}, {kOne, kOne}, Rational(-16, 9));
    };
    t.rhs = [](const TheoremCase& tc) {
        Residue g = gq(tc, {Rational(4, 3), Rational(4, 3)},
                       {Rational(3, 2), Rational(3, 2), Rational(5, 6), Rational(5, 6)});
        return Residue(9, tc.ctx->p2()) * Residue(4, tc.ctx->p2()).inverse() * g;
    };
    return t;
}

TheoremStatement make_eq_12_15() {
    TheoremStatement t;
    t.id = "eq-12.15-binomial-144";
    t.anchor = "Eq. (12.15)";
    t.arity = 0;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (tc.ctx->p() % 3 != 1) return "p ≡ 1 (mod 3)";
        return std::nullopt;
    };
    // independent route: binomial products, not the 3F2 evaluator
    t.lhs = [](const TheoremCase& tc) { return binom_sum_mod_p2(tc, 144, /*alternating=*/true); };
    t.rhs = [](const TheoremCase& tc) {
        Residue g = gq(tc, {Rational(4, 3), Rational(4, 3)},
                       {Rational(3, 2), Rational(3, 2), Rational(5, 6), Rational(5, 6)});
        return Residue(9, tc.ctx->p2()) * Residue(4, tc.ctx->p2()).inverse() * g;
    };
    return t;
}

TheoremStatement make_eq_12_16() {
    TheoremStatement t;
    t.id = "eq-12.16-quarter34-4over3";
    t.anchor = "Eq. (12.16)";
    t.arity = 0;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (tc.ctx->p() % 3 != 1) return "p ≡ 1 (mod 3)";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {Rational(1, 4), Rational(3, 4)}, {kOne}, Rational(4, 3));
    };
    t.rhs = [](const TheoremCase& tc) {
        // the Sun-transformation sign (-1)^{<-1/4>_p} carried over from (12.8)
        Residue g = gq(tc, {Rational(4, 3)}, {Rational(3, 2), Rational(5, 6)});
        Residue three_halves = Residue(3, tc.ctx->p2()) * Residue(2, tc.ctx->p2()).inverse();
        Residue base = (legendre_res(tc, 2) * three_halves * g).neg();
        return sign_residue(tc, A(tc, Rational(1, 4))) * base;
    };
    return t;
}

TheoremStatement make_eq_12_17() {
    TheoremStatement t;
    t.id = "eq-12.17-sun-48";
    t.anchor = "Eq. (12.17)";
    t.arity = 0;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (tc.ctx->p() % 3 != 1) return "p ≡ 1 (mod 3)";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) { return binom_sum_mod_p2(tc, 48, /*alternating=*/false); };
    t.rhs = [](const TheoremCase& tc) {
        auto [a, b] = cornacchia(*tc.ctx, 3, CornacchiaRule::AMod3);
        (void)b;
        Residue twoa = Residue::of(2 * a, tc.ctx->p2());
        Residue pres(tc.ctx->p(), tc.ctx->p2());
        return twoa - pres * twoa.inverse();
    };
    return t;
}

TheoremStatement make_thm_13_1() {
    TheoremStatement t;
    t.id = "thm-13.1-dflst";
    t.anchor = "Theorem 13.1, Eq. (13.1)";
    t.arity = 0;
    t.condition = [](const TheoremCase& tc) -> std::optional<std::string> {
        if (tc.ctx->p() % 4 != 1) return "p ≡ 1 (mod 4)";
        return std::nullopt;
    };
    t.lhs = [](const TheoremCase& tc) {
        return hyp_pm1(tc, {kHalf, kHalf}, {kOne}, Rational(-1));
    };
    t.rhs = [](const TheoremCase& tc) {
        // p^2 * 3F2[1,1,1; 3/2,3/2 | -1]_{p-1}: the k >= (p-1)/2 terms carry
        // denominator valuation 2, exactly what the guard tracks
        SeriesSpec s;
        s.upper = {kOne, kOne, kOne};
        s.lower = {Rational(3, 2), Rational(3, 2)};
        s.z = Rational(-1);
        s.truncation = static_cast<int64_t>(tc.ctx->p()) - 1;
        Padic sum = truncated_hyper(s, *tc.ctx, 2);
        return sum.scaled_by_p_pow(2).to_residue(2);
    };
    return t;
}

TheoremStatement make_eq_1_3(bool kilbourn) {
    TheoremStatement t;
    t.id = kilbourn ? "eq-1.3-kilbourn" : "eq-1.3-ahlgren-ono";
    t.anchor = kilbourn ? "Kilbourn strengthening of Eq. (1.3)" : "Eq. (1.3)";
    t.arity = 0;
    t.strength = kilbourn ? 3 : 2;
    t.condition = [kilbourn](const TheoremCase& tc) -> std::optional<std::string> {
        if (kilbourn && tc.ctx->p() < 5) return "p >= 5";
        if (kilbourn && tc.ctx->p() > 100) return "p <= 100 at strength 3";
        return std::nullopt;
    };
    int k = kilbourn ? 3 : 2;
    t.lhs = [k](const TheoremCase& tc) {
        return hyp_pm1(tc, {kHalf, kHalf, kHalf, kHalf}, {kOne, kOne, kOne}, kOne, k);
    };
    t.rhs = [k](const TheoremCase& tc) {
        size_t order = std::max<size_t>(64, tc.ctx->p() + 1);
        int64_t ap = eta_product_ap(tc.ctx->p(), order);
        return Residue::of(ap, tc.ctx->pow_k(k));
    };
    return t;
}

} // namespace

const std::vector<TheoremStatement>& theorem_registry() {
    static const std::vector<TheoremStatement> reg = [] {
        std::vector<TheoremStatement> v;
        v.push_back(make_thm_1_2());
        v.push_back(make_eq_1_5());
        v.push_back(make_eq_1_6());
        v.push_back(make_eq_1_7());
        v.push_back(make_thm_2_1());
        v.push_back(make_thm_2_2());
        v.push_back(make_cor_2_3());
        v.push_back(make_thm_2_4());
        v.push_back(make_thm_2_5());
        v.push_back(make_thm_2_6());
        v.push_back(make_thm_2_7());
        v.push_back(make_thm_2_8());
        v.push_back(make_eq_2_22());
        v.push_back(make_thm_2_9());
        v.push_back(make_eq_2_24());
        v.push_back(make_eq_2_26());
        v.push_back(make_thm_2_10());
        v.push_back(make_thm_2_11());
        v.push_back(make_thm_2_12());
        v.push_back(make_thm_2_13());
        v.push_back(make_thm_2_14());
        v.push_back(make_thm_2_15());
        v.push_back(make_thm_2_16());
        v.push_back(make_thm_2_17());
        v.push_back(make_thm_2_18());
        v.push_back(make_thm_2_19());
        v.push_back(make_thm_2_20());
        v.push_back(make_thm_2_21());
        v.push_back(make_thm_5f4_a());
        v.push_back(make_thm_5f4_b());
        v.push_back(make_thm_6f5_a());
        v.push_back(make_thm_6f5_b());
        v.push_back(make_cor_2_59_60());
        v.push_back(make_cor_2_27());
        v.push_back(make_thm_4_1());
        v.push_back(make_thm_4_2());
        v.push_back(make_eq_4_10());
        v.push_back(make_eq_9_4());
        v.push_back(make_eq_9_6());
        v.push_back(make_eq_9_8());
        v.push_back(make_eq_12_4());
        v.push_back(make_eq_12_5());
        v.push_back(make_eq_12_6());
        v.push_back(make_eq_12_8());
        v.push_back(make_eq_12_9());
        v.push_back(make_eq_12_10());
        v.push_back(make_eq_12_12());
        v.push_back(make_eq_12_13());
        v.push_back(make_eq_12_14());
        v.push_back(make_eq_12_15());
        v.push_back(make_eq_12_16());
        v.push_back(make_eq_12_17());
        v.push_back(make_thm_13_1());
        v.push_back(make_eq_1_3(false));
        v.push_back(make_eq_1_3(true));
        return v;
    }();
    return reg;
}

} // namespace padic
