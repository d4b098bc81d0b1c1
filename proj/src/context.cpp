#include "padic/context.hpp"

#include <cstdlib>

#include "padic/residue.hpp"

namespace padic {

uint64_t max_prime() {
    static const uint64_t cap = [] {
        if (const char* env = std::getenv("PADIC_MAX_PRIME")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v >= 3) return static_cast<uint64_t>(v);
        }
        return static_cast<uint64_t>(1'000'000);
    }();
    return cap;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic for all 64-bit inputs with this base set
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = detail::powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

PrimeContext::PrimeContext(uint64_t p) : p_(p) {
    if (p < 3 || p > max_prime()) raise(Err::PrimeOutOfRange, "p=" + std::to_string(p));
    if (p % 2 == 0 || !is_prime_u64(p)) raise(Err::BadArgument, "p must be an odd prime, got " + std::to_string(p));
    p2_ = p * p;
    p3_ = p2_ * p;
    p_pm1_ = p * (p - 1);
}

uint64_t PrimeContext::pow_k(int k) const {
    switch (k) {
        case 1: return p_;
        case 2: return p2_;
        case 3: return p3_;
        default: raise(Err::BadArgument, "precision exponent must be 1, 2 or 3");
    }
}

} // namespace padic
