#include "padic/hyper.hpp"

#include <algorithm>
#include <cmath>

namespace padic {

namespace {

void check_p_integral(const Rational& r, const PrimeContext& ctx) {
    if (r.den() % static_cast<int64_t>(ctx.p()) == 0)
        raise(Err::NotPIntegral, r.str() + " at p=" + std::to_string(ctx.p()));
}

int64_t factorial_valuation(int64_t n, uint64_t p) {
    int64_t v = 0;
    for (int64_t q = static_cast<int64_t>(p); q <= n; q *= static_cast<int64_t>(p)) {
        v += n / q;
        if (q > n / static_cast<int64_t>(p)) break; // avoid overflow on q *= p
    }
    return v;
}

// exact p-valuation of the shifted parameter alpha + j (zero numerator -> -1)
int64_t shift_valuation(const Rational& alpha, int64_t j, uint64_t p) {
    int64_t num = detail::checked_add(alpha.num(), detail::checked_mul(j, alpha.den()));
    if (num == 0) return -1;
    int64_t v = 0;
    while (num % static_cast<int64_t>(p) == 0) {
        num /= static_cast<int64_t>(p);
        ++v;
    }
    return v;
}

} // namespace

int64_t pochhammer_valuation(const Rational& alpha, int64_t n, const PrimeContext& ctx) {
    int64_t v = 0;
    for (int64_t j = 0; j < n; ++j) {
        int64_t s = shift_valuation(alpha, j, ctx.p());
        if (s < 0) raise(Err::BadArgument, "pochhammer hits exact zero");
        v += s;
    }
    return v;
}

Padic pochhammer(const Rational& alpha, int64_t k, const PrimeContext& ctx, int m) {
    check_p_integral(alpha, ctx);
    if (k < 0 || k > static_cast<int64_t>(ctx.p2()))
        raise(Err::BadArgument, "pochhammer index out of range");
    Padic acc = Padic::one(ctx.p(), m);
    for (int64_t j = 0; j < k; ++j) {
        Rational f = alpha + Rational(j);
        if (f.is_zero()) return Padic::zero(ctx.p());
        acc = acc * Padic::from_rational(ctx, f, m);
    }
    return acc;
}

namespace {

struct GuardPlan {
    int64_t guard;       // exact worst-case denominator valuation
    int working_prec;    // k + guard
};

GuardPlan plan_guard(const SeriesSpec& spec, const PrimeContext& ctx, int k) {
    int64_t g = factorial_valuation(spec.truncation, ctx.p());
    for (const Rational& b : spec.lower) {
        for (int64_t j = 0; j < spec.truncation; ++j) {
            int64_t s = shift_valuation(b, j, ctx.p());
            if (s < 0) raise(Err::LowerParameterPole, "lower parameter " + b.str());
            g += s;
        }
    }
    GuardPlan plan;
    plan.guard = g;
    if (g > 60) raise(Err::PrecisionLoss, "guard valuation " + std::to_string(g));
    plan.working_prec = k + static_cast<int>(g);
    // the working modulus and the scaled accumulator both live mod p^(k+G)
    double bits = static_cast<double>(plan.working_prec) * std::log2(static_cast<double>(ctx.p()));
    if (bits >= 62.0) raise(Err::PrecisionLoss, "working modulus p^" + std::to_string(plan.working_prec) + " exceeds 64 bits");
    return plan;
}

// Shared core: z supplied as a Padic at precision >= working precision.
Padic hyper_core(const SeriesSpec& spec, const PrimeContext& ctx, int k, const Padic& z,
                 const GuardPlan& plan) {
    const uint64_t p = ctx.p();
    const int M = plan.working_prec;
    const int64_t G = plan.guard;
    if (!z.is_exact_zero() && z.valuation() < 0)
        raise(Err::BadArgument, "argument must lie in Z_p");

    const uint64_t acc_mod = pow_u64_checked(p, M);
    uint64_t acc = 0; // sum of u_i * p^(v_i + G) mod p^(k+G)

    Padic term = Padic::one(p, M);
    for (int64_t i = 0; i <= spec.truncation; ++i) {
        if (!term.is_exact_zero()) {
            // each term must be pinned down mod p^k for the sum to be exact there
            if (term.valuation() + term.precision() < k)
                raise(Err::PrecisionLoss, "term known only mod p^" +
                                              std::to_string(term.valuation() + term.precision()));
            if (!term.is_vanishing()) {
                int64_t shifted = term.valuation() + G;
                if (shifted < 0) raise(Err::PrecisionLoss, "term valuation below guard");
                if (shifted < M) {
                    uint64_t contrib = detail::mulmod(term.unit() % acc_mod,
                                                      detail::powmod(p, static_cast<uint64_t>(shifted), acc_mod),
                                                      acc_mod);
                    acc = detail::addmod(acc, contrib, acc_mod);
                }
            }
        }
        if (i == spec.truncation) break;

        // term *= prod(upper + i) / (prod(lower + i) * (i+1)) * z
        Padic num = Padic::one(p, M);
        bool zero_factor = false;
        for (const Rational& a : spec.upper) {
            Rational f = a + Rational(i);
            if (f.is_zero()) {
                zero_factor = true;
                break;
            }
            num = num * Padic::from_rational(ctx, f, M);
        }
        if (zero_factor) break; // (alpha)_j = 0 for every j > i
        Padic den = Padic::from_rational(ctx, Rational(i + 1), M);
        for (const Rational& b : spec.lower) {
            Rational f = b + Rational(i);
            if (f.is_zero()) raise(Err::LowerParameterPole, "lower parameter pole at k=" + std::to_string(i + 1));
            den = den * Padic::from_rational(ctx, f, M);
        }
        term = term * num / den * z;
        if (term.is_exact_zero()) break;
    }
    return Padic::from_parts(p, -G, acc, M);
}

} // namespace

Padic truncated_hyper(const SeriesSpec& spec, const PrimeContext& ctx, int k) {
    if (spec.upper.size() != spec.lower.size() + 1)
        raise(Err::BadArgument, "need len(upper) == len(lower) + 1");
    if (spec.truncation < 0 || spec.truncation > static_cast<int64_t>(ctx.p2()))
        raise(Err::BadArgument, "truncation out of range");
    for (const Rational& a : spec.upper) check_p_integral(a, ctx);
    for (const Rational& b : spec.lower) check_p_integral(b, ctx);
    check_p_integral(spec.z, ctx);
    GuardPlan plan = plan_guard(spec, ctx, k);
    Padic z = Padic::from_rational(ctx, spec.z, plan.working_prec);
    return hyper_core(spec, ctx, k, z, plan);
}

Padic truncated_hyper_at(const SeriesSpec& spec, const PrimeContext& ctx, int k, const Padic& z) {
    if (spec.upper.size() != spec.lower.size() + 1)
        raise(Err::BadArgument, "need len(upper) == len(lower) + 1");
    for (const Rational& a : spec.upper) check_p_integral(a, ctx);
    for (const Rational& b : spec.lower) check_p_integral(b, ctx);
    GuardPlan plan = plan_guard(spec, ctx, k);
    return hyper_core(spec, ctx, k, z, plan);
}

Rational exact_terminating_hyper(const SeriesSpec& spec) {
    if (spec.upper.size() != spec.lower.size() + 1)
        raise(Err::BadArgument, "need len(upper) == len(lower) + 1");
    bool terminates = false;
    for (const Rational& a : spec.upper)
        if (a.is_nonpositive_integer() && -a.num() <= spec.truncation) terminates = true;
    if (!terminates) raise(Err::NonTerminating, "no nonpositive-integer upper parameter in range");

    Rational sum(0);
    Rational term(1);
    for (int64_t i = 0; i <= spec.truncation; ++i) {
        sum = sum + term;
        Rational num(1);
        bool zero_factor = false;
        for (const Rational& a : spec.upper) {
            Rational f = a + Rational(i);
            if (f.is_zero()) {
                zero_factor = true;
                break;
            }
            num = num * f;
        }
        if (zero_factor) break;
        Rational den(i + 1);
        for (const Rational& b : spec.lower) {
            Rational f = b + Rational(i);
            if (f.is_zero()) raise(Err::LowerParameterPole, "lower parameter pole");
            den = den * f;
        }
        term = term * num / den * spec.z;
    }
    return sum;
}

Residue legendre_poly(int64_t n, const Rational& x, const PrimeContext& ctx) {
    SeriesSpec s;
    s.upper = {Rational(-n), Rational(1 + n)};
    s.lower = {Rational(1)};
    s.z = (Rational(1) - x) / Rational(2);
    s.truncation = n;
    return truncated_hyper(s, ctx, 2).to_residue(2);
}

Residue legendre_poly_at(int64_t n, const Padic& x, const PrimeContext& ctx) {
    SeriesSpec s;
    s.upper = {Rational(-n), Rational(1 + n)};
    s.lower = {Rational(1)};
    s.truncation = n;
    Padic half = Padic::from_rational(ctx, Rational(1, 2), x.precision());
    Padic z = (Padic::one(ctx.p(), x.precision()) + (-x)) * half;
    return truncated_hyper_at(s, ctx, 2, z).to_residue(2);
}

PadicPoly PadicPoly::mul(const PadicPoly& o) const {
    PadicPoly out(p_, cap());
    for (size_t i = 0; i < cap(); ++i) {
        if (coef_[i].is_exact_zero()) continue;
        for (size_t j = 0; i + j < cap() && j < o.cap(); ++j) {
            if (o.coef_[j].is_exact_zero()) continue;
            out.coef_[i + j] = out.coef_[i + j] + coef_[i] * o.coef_[j];
        }
    }
    return out;
}

PadicPoly hyper_poly_in_z(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                          int64_t truncation, const std::vector<Rational>& arg_coeffs,
                          const PrimeContext& ctx, int prec, size_t degree_cap) {
    size_t arg_deg = 0;
    for (size_t i = 0; i < arg_coeffs.size(); ++i)
        if (!arg_coeffs[i].is_zero()) arg_deg = i;
    if (static_cast<size_t>(truncation) * arg_deg >= degree_cap)
        raise(Err::DegreeOverflow, "expansion degree reaches the cap");

    const uint64_t p = ctx.p();
    PadicPoly out(p, degree_cap);
    PadicPoly argpow(p, degree_cap); // arg^k, k starting at 0
    argpow[0] = Padic::one(p, prec);
    PadicPoly arg(p, degree_cap);
    for (size_t i = 0; i < arg_coeffs.size() && i < degree_cap; ++i)
        arg[i] = Padic::from_rational(ctx, arg_coeffs[i], prec);

    Padic c = Padic::one(p, prec); // series coefficient c_k
    for (int64_t k = 0; k <= truncation; ++k) {
        if (!c.is_exact_zero()) {
            for (size_t i = 0; i < degree_cap; ++i) {
                if (argpow[i].is_exact_zero()) continue;
                out[i] = out[i] + c * argpow[i];
            }
        }
        if (k == truncation) break;
        Padic num = Padic::one(p, prec);
        bool zero_factor = false;
        for (const Rational& a : upper) {
            Rational f = a + Rational(k);
            if (f.is_zero()) {
                zero_factor = true;
                break;
            }
            num = num * Padic::from_rational(ctx, f, prec);
        }
        if (zero_factor) break;
        Padic den = Padic::from_rational(ctx, Rational(k + 1), prec);
        for (const Rational& b : lower) {
            Rational f = b + Rational(k);
            if (f.is_zero()) raise(Err::LowerParameterPole, "lower parameter pole");
            den = den * Padic::from_rational(ctx, f, prec);
        }
        c = c * num / den;
        argpow = argpow.mul(arg);
    }
    return out;
}

bool poly_congruent(const PadicPoly& a, const PadicPoly& b, int k) {
    if (a.cap() != b.cap()) raise(Err::BadArgument, "degree caps differ");
    for (size_t i = 0; i < a.cap(); ++i)
        if (a[i].to_residue(k) != b[i].to_residue(k)) return false;
    return true;
}

bool polynomial_congruence_check(const PolySeries& lhs, const PolySeries& rhs,
                                 const PrimeContext& ctx, int k) {
    size_t cap = 2 * ctx.p() - 1;
    auto expand = [&](const PolySeries& s) {
        PadicPoly poly = hyper_poly_in_z(s.upper, s.lower, s.truncation, s.arg, ctx, k, cap);
        if (s.scale != Rational(1)) {
            Padic sc = Padic::from_rational(ctx, s.scale, k);
            for (size_t i = 0; i < cap; ++i) poly[i] = poly[i] * sc;
        }
        return poly;
    };
    return poly_congruent(expand(lhs), expand(rhs), k);
}

} // namespace padic
