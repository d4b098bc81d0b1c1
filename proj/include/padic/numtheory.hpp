#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "padic/context.hpp"
#include "padic/rational.hpp"
#include "padic/residue.hpp"

namespace padic {

// Canonical embedding Q ∩ Z_p -> Z/p^k. Raises NotPIntegral when p divides
// the denominator.
Residue embed(const Rational& r, const PrimeContext& ctx, int k);

// The least non-negative residue <r>_{p^k}: the unique n in [0, p^k) with
// n ≡ r (mod p^k).
uint64_t least_nonneg_residue(const Rational& r, const PrimeContext& ctx, int k);

// Euler-criterion value of (a/p).
int legendre_symbol(int64_t a, const PrimeContext& ctx);

// Square root of a mod p^k, Tonelli-Shanks followed by Hensel lifting. Of the
// two roots, picks the one congruent mod p to `seed` when given, otherwise the
// smaller representative. Raises NotAResidue when (a/p) != +1.
Residue sqrt_lift(int64_t a, const PrimeContext& ctx, int k,
                  std::optional<uint64_t> seed = std::nullopt);

// Sign/swap normalizations for p = a^2 + d b^2; each named congruence
// fixes a different representative.
enum class CornacchiaRule {
    AMod4,           // d=1, a ≡ 1 (mod 4); b reported nonnegative
    AMod3,           // d=3, a ≡ 1 (mod 3); b reported nonnegative
    SumMod4Even,     // d=3, one of a,b a positive even integer and a+b ≡ 1 (mod 4)
};

// Representation p = a^2 + d b^2 with the normalization applied. Raises
// NotRepresentable when the congruence precondition on p fails. The
// SumMod4Even rule asserts uniqueness of the normalized pair and raises
// BadArgument with a diagnostic if two distinct pairs qualify.
std::pair<int64_t, int64_t> cornacchia(const PrimeContext& ctx, int d, CornacchiaRule rule);

// H_n = sum_{k=1..n} 1/k reduced mod p; requires n < p.
Residue harmonic_mod_p(uint64_t n, const PrimeContext& ctx);

// Odd primes in [lo, hi], ascending.
std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi);

} // namespace padic
