#pragma once

#include <cstdint>

#include "padic/context.hpp"
#include "padic/rational.hpp"
#include "padic/residue.hpp"

namespace padic {

// A p-adic number as (valuation, unit mod p^m) with a distinguished exact
// zero. The represented value is p^v * unit, known to absolute precision
// p^(v+m). A unit of 0 with m > 0 is an inexact zero: the value is divisible
// by p^(v+m) but its valuation is unknown.
class Padic {
public:
    static Padic zero(uint64_t p) {
        Padic x;
        x.p_ = p;
        x.exact_zero_ = true;
        return x;
    }

    static Padic one(uint64_t p, int m) { return from_parts(p, 0, 1, m); }

    static Padic from_parts(uint64_t p, int64_t v, uint64_t unit, int m);

    // Embeds a rational, stripping powers of p from numerator and denominator.
    // A denominator divisible by p gives a negative valuation, not an error.
    static Padic from_rational(const PrimeContext& ctx, const Rational& r, int m);

    bool is_exact_zero() const { return exact_zero_; }
    // inexact zero: all known digits vanish
    bool is_vanishing() const { return exact_zero_ || unit_ == 0; }

    uint64_t p() const { return p_; }
    int64_t valuation() const;
    uint64_t unit() const { return unit_; }
    int precision() const { return m_; }

    Padic operator*(const Padic& o) const;
    Padic operator/(const Padic& o) const;
    Padic operator+(const Padic& o) const;
    Padic operator-() const;
    Padic inverse() const;
    Padic pow(uint64_t e) const;

    // The value mod p^k as a Residue. Raises PrecisionLoss when the valuation
    // is negative or the known precision does not determine the value mod p^k.
    Residue to_residue(int k) const;

    // value * p^e (e may be negative)
    Padic scaled_by_p_pow(int64_t e) const;

    bool congruent(const Padic& o, int k) const {
        return to_residue(k) == o.to_residue(k);
    }

private:
    Padic() = default;
    void normalize();

    uint64_t p_ = 0;
    int64_t v_ = 0;
    uint64_t unit_ = 0;
    int m_ = 0;
    bool exact_zero_ = false;
};

// p^k as u64; raises Overflow when it does not fit
uint64_t pow_u64_checked(uint64_t p, int k);

} // namespace padic
