#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "padic/context.hpp"
#include "padic/numtheory.hpp"
#include "padic/rational.hpp"
#include "padic/residue.hpp"

namespace padic {

// Prefix table of Morita gamma values: Gamma_p(n) mod p^k for 0 <= n < p^k.
// Built once per (p, k) behind a memoization guard; reads are lock-free.
class GammaTable {
public:
    uint64_t at(uint64_t n) const { return values_[n]; }
    uint64_t modulus() const { return modulus_; }
    int precision() const { return k_; }
    uint64_t prime() const { return p_; }
    size_t size() const { return values_.size(); }

    static std::shared_ptr<const GammaTable> get(const PrimeContext& ctx, int k);

    // Builders exposed for the benchmark and the serial-vs-parallel test.
    // The parallel builder is the one behind get(); the serial builder is the
    // reference.
    static std::shared_ptr<const GammaTable> build_serial(const PrimeContext& ctx, int k);
    // force skips the small-size / low-thread-count fallback (benchmarking)
    static std::shared_ptr<const GammaTable> build_parallel(const PrimeContext& ctx, int k,
                                                            bool force = false);

private:
    GammaTable(uint64_t p, int k, uint64_t modulus) : p_(p), k_(k), modulus_(modulus) {}

    uint64_t p_;
    int k_;
    uint64_t modulus_;
    std::vector<uint64_t> values_;
};

// Gamma_p(alpha) mod p^k via the residue of alpha mod p^k and the table;
// exact by |Gamma_p(m) - Gamma_p(n)|_p <= |m - n|_p.
Residue gamma_p(const Rational& alpha, const PrimeContext& ctx, int k);

// Gamma_p(alpha) Gamma_p(1-alpha) == (-1)^{<-alpha>_p - 1} mod p^2
bool gamma_reflection_check(const Rational& alpha, const PrimeContext& ctx);

// lambda_p^(2)(alpha) = (<-a>_p - <-a>_{p^2})/p * (p-1) - <-a>_p.
// z^{lambda_p(alpha)} ≡ z^{lambda_p^(2)(alpha)} (mod p^2) for every unit z;
// callers reduce mod p(p-1) before exponentiating.
int64_t lambda_p2(const Rational& alpha, const PrimeContext& ctx);

// Exponent a + s(p-1) with s p-integral; the p-adic exponent shape appearing
// as z^{-lambda_p(alpha)} and friends.
struct ExponentSpec {
    int64_t base;
    Rational mult;

    ExponentSpec operator+(const ExponentSpec& o) const {
        return {detail::checked_add(base, o.base), mult + o.mult};
    }
};

// exponent form of -lambda_p(alpha) = <-a>_p - (alpha + <-a>_p)/p * (p-1)
ExponentSpec neg_lambda_exponent(const Rational& alpha, const PrimeContext& ctx);

// exponent form of c - lambda_p(alpha)
inline ExponentSpec shifted_neg_lambda(int64_t c, const Rational& alpha, const PrimeContext& ctx) {
    ExponentSpec e = neg_lambda_exponent(alpha, ctx);
    e.base = detail::checked_add(e.base, c);
    return e;
}

// z^(a + s(p-1)) mod p^2 = z^a * (1 + s (z^{p-1} - 1)); only the k = 0,1
// terms of the binomial series survive mod p^2. Raises NotAUnit unless z is a
// p-adic unit.
Residue zpow(const Rational& z, const ExponentSpec& e, const PrimeContext& ctx);

// prod_{k<m} Gamma_p(x + k/m) == m^{-lambda_p(mx)} Gamma_p(mx) prod_{k<m} Gamma_p(k/m)
// checked mod p^2
bool gauss_mult_check(const Rational& x, int64_t m, const PrimeContext& ctx);

// Gamma_p'(0) mod p as the finite difference (Gamma_p(p) - Gamma_p(0))/p,
// exact mod p by the Lipschitz property.
Residue gamma_deriv0(const PrimeContext& ctx);

// Gamma_p'(alpha)/Gamma_p(alpha) ≡ Gamma_p'(0) + H_{p - <-alpha>_p - 1} (mod p)
Residue gamma_log_derivative(const Rational& alpha, const PrimeContext& ctx);

} // namespace padic
