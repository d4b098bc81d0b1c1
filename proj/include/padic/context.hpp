#pragma once

#include <cstdint>

#include "padic/errors.hpp"

namespace padic {

// Largest prime the library accepts. p^3 must fit an unsigned 64-bit value and
// products of two residues below p^3 must fit 128 bits, so the cap stays far
// below the representable limit. Overridable at runtime through the
// PADIC_MAX_PRIME environment variable.
uint64_t max_prime();

bool is_prime_u64(uint64_t n);

// A fixed odd prime together with its derived moduli. Immutable and freely
// shareable across threads.
class PrimeContext {
public:
    explicit PrimeContext(uint64_t p);

    uint64_t p() const { return p_; }
    uint64_t p2() const { return p2_; }
    uint64_t p3() const { return p3_; }
    uint64_t p_pm1() const { return p_pm1_; } // p(p-1), the exponent group order mod p^2

    // p^k for k in {1,2,3}
    uint64_t pow_k(int k) const;

private:
    uint64_t p_;
    uint64_t p2_;
    uint64_t p3_;
    uint64_t p_pm1_;
};

} // namespace padic
