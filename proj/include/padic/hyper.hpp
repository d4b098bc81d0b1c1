#pragma once

#include <cstdint>
#include <vector>

#include "padic/approx.hpp"
#include "padic/context.hpp"
#include "padic/rational.hpp"

namespace padic {

// An (m+1)F_m specification: len(upper) = len(lower) + 1. The implicit k! is
// not part of `lower`. p-integrality of parameters and argument is checked at
// evaluation, not construction.
struct SeriesSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    Rational z;
    int64_t truncation = 0;
};

// (alpha)_k as a valuation-tracked value with unit known mod p^m.
// exact_zero iff alpha is a nonpositive integer -n with k > n.
Padic pochhammer(const Rational& alpha, int64_t k, const PrimeContext& ctx, int m);

// exact p-valuation of (alpha)_n
int64_t pochhammer_valuation(const Rational& alpha, int64_t n, const PrimeContext& ctx);

// Truncated hypergeometric sum at target precision p^k. Each term is carried
// at working precision p^(k+G) where G is the exact worst-case denominator
// valuation over the truncation range, so a sum of negative valuation is
// reported faithfully. Raises PrecisionLoss when the working modulus would
// not fit 64 bits.
Padic truncated_hyper(const SeriesSpec& spec, const PrimeContext& ctx, int k);

// Same sum with the argument given p-adically (CM values like sqrt(-3) live
// mod p^2, not in Q). z must carry enough precision for the guard.
Padic truncated_hyper_at(const SeriesSpec& spec, const PrimeContext& ctx, int k, const Padic& z);

// Exact rational value of a terminating series. Raises NonTerminating when no
// upper parameter is a nonpositive integer within the truncation range, and
// LowerParameterPole when a lower parameter hits a nonpositive integer first.
Rational exact_terminating_hyper(const SeriesSpec& spec);

// P_n(x) mod p^2 via the terminating 2F1[-n, 1+n; 1 | (1-x)/2]
Residue legendre_poly(int64_t n, const Rational& x, const PrimeContext& ctx);

// P_n at a p-adic point (x known mod p^j, j >= 2 + guard)
Residue legendre_poly_at(int64_t n, const Padic& x, const PrimeContext& ctx);

// Dense polynomial in z with p-adic coefficients, degree-capped. Polynomial
// mode of the congruence checks: both sides expand through composition with a
// polynomial argument and compare coefficientwise mod p^2.
class PadicPoly {
public:
    PadicPoly(uint64_t p, size_t cap) : p_(p), coef_(cap, Padic::zero(p)) {}

    size_t cap() const { return coef_.size(); }
    const Padic& operator[](size_t i) const { return coef_[i]; }
    Padic& operator[](size_t i) { return coef_[i]; }

    PadicPoly mul(const PadicPoly& o) const; // truncates at cap
    PadicPoly square() const { return mul(*this); }

private:
    uint64_t p_;
    std::vector<Padic> coef_;
};

// Coefficients of the truncated series sum_k c_k * arg(z)^k where arg is a
// polynomial in z with rational coefficients (e.g. z, 1-z, 4z(1-z)). Raises
// DegreeOverflow when the true degree truncation*deg(arg) reaches the cap,
// since the comparison would silently ignore coefficients beyond it.
PadicPoly hyper_poly_in_z(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                          int64_t truncation, const std::vector<Rational>& arg_coeffs,
                          const PrimeContext& ctx, int prec, size_t degree_cap);

// coefficientwise congruence mod p^k
bool poly_congruent(const PadicPoly& a, const PadicPoly& b, int k);

// A truncated series with a polynomial argument: sum_k c_k * arg(z)^k where
// arg is given by its coefficient list in z. scale multiplies the whole
// expansion (signs like (-1)^{<-alpha>_p} in the linear transformation).
struct PolySeries {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    std::vector<Rational> arg;
    int64_t truncation = 0;
    Rational scale = Rational(1);
};

// Both sides expanded as polynomials in z with p-adic coefficients and
// compared coefficientwise mod p^k, degree cap 2p-1.
bool polynomial_congruence_check(const PolySeries& lhs, const PolySeries& rhs,
                                 const PrimeContext& ctx, int k = 2);

} // namespace padic
