#include "padic/approx.hpp"

#include <algorithm>

namespace padic {

uint64_t pow_u64_checked(uint64_t p, int k) {
    uint64_t r = 1;
    for (int i = 0; i < k; ++i) {
        if (r > UINT64_MAX / p) raise(Err::Overflow, "p^k exceeds 64 bits");
        r *= p;
    }
    return r;
}

Padic Padic::from_parts(uint64_t p, int64_t v, uint64_t unit, int m) {
    Padic x;
    x.p_ = p;
    x.v_ = v;
    x.unit_ = unit % pow_u64_checked(p, m);
    x.m_ = m;
    x.normalize();
    return x;
}

Padic Padic::from_rational(const PrimeContext& ctx, const Rational& r, int m) {
    if (r.is_zero()) return zero(ctx.p());
    int64_t p = static_cast<int64_t>(ctx.p());
    int64_t num = r.num(), den = r.den();
    int64_t v = 0;
    while (num % p == 0) {
        num /= p;
        ++v;
    }
    while (den % p == 0) {
        den /= p;
        --v;
    }
    uint64_t mod = pow_u64_checked(ctx.p(), m);
    uint64_t nu = Residue::of(num, mod).value;
    uint64_t du = Residue::of(den, mod).value;
    return from_parts(ctx.p(), v, detail::mulmod(nu, detail::invmod(du, mod), mod), m);
}

void Padic::normalize() {
    if (exact_zero_) return;
    while (unit_ != 0 && m_ > 0 && unit_ % p_ == 0) {
        unit_ /= p_;
        ++v_;
        --m_;
    }
    if (m_ <= 0) {
        // no significant digits left; value known only to be divisible by p^v
        unit_ = 0;
        m_ = 0;
    }
}

int64_t Padic::valuation() const {
    if (exact_zero_) raise(Err::BadArgument, "valuation of exact zero");
    return v_;
}

Padic Padic::operator*(const Padic& o) const {
    if (exact_zero_ || o.exact_zero_) return zero(p_);
    Padic x;
    x.p_ = p_;
    x.v_ = v_ + o.v_;
    x.m_ = std::min(m_, o.m_);
    uint64_t mod = pow_u64_checked(p_, x.m_);
    x.unit_ = detail::mulmod(unit_ % mod, o.unit_ % mod, mod);
    x.normalize();
    return x;
}

Padic Padic::inverse() const {
    if (exact_zero_ || unit_ == 0) raise(Err::NotAUnit, "inverse of (indistinguishable-from-)zero");
    Padic x;
    x.p_ = p_;
    x.v_ = -v_;
    x.m_ = m_;
    x.unit_ = detail::invmod(unit_, pow_u64_checked(p_, m_));
    return x;
}

Padic Padic::operator/(const Padic& o) const { return *this * o.inverse(); }

Padic Padic::operator-() const {
    if (exact_zero_) return *this;
    Padic x = *this;
    uint64_t mod = pow_u64_checked(p_, m_);
    x.unit_ = unit_ == 0 ? 0 : mod - unit_;
    return x;
}

Padic Padic::operator+(const Padic& o) const {
    if (exact_zero_) return o;
    if (o.exact_zero_) return *this;
    int64_t v = std::min(v_, o.v_);
    int64_t abs_prec = std::min(v_ + m_, o.v_ + o.m_);
    int m = static_cast<int>(abs_prec - v);
    if (m <= 0) {
        Padic x;
        x.p_ = p_;
        x.v_ = abs_prec;
        x.unit_ = 0;
        x.m_ = 0;
        return x;
    }
    uint64_t mod = pow_u64_checked(p_, m);
    auto shifted = [&](const Padic& t) -> uint64_t {
        uint64_t s = detail::powmod(p_, static_cast<uint64_t>(t.v_ - v), mod);
        return detail::mulmod(t.unit_ % mod, s, mod);
    };
    Padic x;
    x.p_ = p_;
    x.v_ = v;
    x.m_ = m;
    x.unit_ = detail::addmod(shifted(*this), shifted(o), mod);
    x.normalize();
    return x;
}

Padic Padic::pow(uint64_t e) const {
    if (exact_zero_) return e == 0 ? one(p_, 1) : *this;
    Padic r = one(p_, m_);
    Padic b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Residue Padic::to_residue(int k) const {
    uint64_t mod = pow_u64_checked(p_, k);
    if (exact_zero_) return Residue(0, mod);
    if (unit_ == 0) {
        // all known digits vanish; the value is pinned to 0 mod p^(v+m)
        if (v_ + m_ >= k) return Residue(0, mod);
        raise(Err::PrecisionLoss, "value only known mod p^" + std::to_string(v_ + m_));
    }
    if (v_ < 0) raise(Err::PrecisionLoss, "negative valuation " + std::to_string(v_));
    if (v_ >= k) return Residue(0, mod);
    if (v_ + m_ < k) raise(Err::PrecisionLoss, "insufficient precision");
    uint64_t s = detail::powmod(p_, static_cast<uint64_t>(v_), mod);
    return Residue(detail::mulmod(unit_ % mod, s, mod), mod);
}

Padic Padic::scaled_by_p_pow(int64_t e) const {
    if (exact_zero_) return *this;
    Padic x = *this;
    x.v_ += e;
    return x;
}

} // namespace padic
