#pragma once

#include <cstdint>

#include "padic/errors.hpp"

namespace padic {

namespace detail {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t s = a + b; // both < m <= 2^63, no wrap
    return s >= m ? s - m : s;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t m) { return a >= b ? a - b : a + m - b; }

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// inverse mod m via extended gcd; raises NotAUnit when gcd(a,m) != 1
uint64_t invmod(uint64_t a, uint64_t m);

} // namespace detail

// Value in Z/m for m a power of the context prime (or p(p-1) for exponent
// arithmetic). Mixing moduli is a programming error and raises
// Err::ModulusMismatch.
struct Residue {
    uint64_t value = 0;
    uint64_t modulus = 0;

    Residue() = default;
    Residue(uint64_t v, uint64_t m) : value(v % m), modulus(m) {}

    static Residue of(int64_t v, uint64_t m) {
        int64_t r = v % static_cast<int64_t>(m);
        if (r < 0) r += static_cast<int64_t>(m);
        return Residue(static_cast<uint64_t>(r), m);
    }

    Residue operator+(const Residue& o) const {
        check(o);
        return Residue(detail::addmod(value, o.value, modulus), modulus);
    }
    Residue operator-(const Residue& o) const {
        check(o);
        return Residue(detail::submod(value, o.value, modulus), modulus);
    }
    Residue operator*(const Residue& o) const {
        check(o);
        return Residue(detail::mulmod(value, o.value, modulus), modulus);
    }
    Residue inverse() const { return Residue(detail::invmod(value, modulus), modulus); }
    Residue operator/(const Residue& o) const { return *this * o.inverse(); }
    Residue pow(uint64_t e) const { return Residue(detail::powmod(value, e, modulus), modulus); }
    Residue neg() const { return Residue(value == 0 ? 0 : modulus - value, modulus); }

    bool operator==(const Residue& o) const { return value == o.value && modulus == o.modulus; }
    bool operator!=(const Residue& o) const { return !(*this == o); }

private:
    void check(const Residue& o) const {
        if (modulus != o.modulus) raise(Err::ModulusMismatch, "residue moduli differ");
    }
};

} // namespace padic
