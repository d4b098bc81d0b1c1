#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "padic/errors.hpp"

namespace padic {

namespace detail {

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) raise(Err::Overflow, "integer add");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) raise(Err::Overflow, "integer sub");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) raise(Err::Overflow, "integer mul");
    return r;
}

} // namespace detail

// Exact rational with 64-bit numerator and positive 64-bit denominator, kept
// in lowest terms. Arithmetic that would overflow raises Err::Overflow rather
// than wrapping; parameter pools are small fractions, so overflow indicates a
// harness bug.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(int64_t n) : num_(n), den_(1) {} // implicit: integers promote
    Rational(int64_t n, int64_t d) : num_(n), den_(d) { normalize(); }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    // nonpositive integer -n, the termination triggers of Pochhammer products
    bool is_nonpositive_integer() const { return den_ == 1 && num_ <= 0; }

    Rational operator-() const {
        Rational r;
        r.num_ = detail::checked_sub(0, num_);
        r.den_ = den_;
        return r;
    }

    Rational operator+(const Rational& o) const {
        int64_t g = std::gcd(den_, o.den_);
        int64_t lhs = detail::checked_mul(num_, o.den_ / g);
        int64_t rhs = detail::checked_mul(o.num_, den_ / g);
        return Rational(detail::checked_add(lhs, rhs), detail::checked_mul(den_, o.den_ / g));
    }
    Rational operator-(const Rational& o) const { return *this + (-o); }

    Rational operator*(const Rational& o) const {
        int64_t g1 = std::gcd(std::abs(num_), o.den_);
        int64_t g2 = std::gcd(std::abs(o.num_), den_);
        return Rational(detail::checked_mul(num_ / g1, o.num_ / g2),
                        detail::checked_mul(den_ / g2, o.den_ / g1));
    }

    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) raise(Err::BadArgument, "rational division by zero");
        return *this * o.inverse();
    }

    Rational inverse() const {
        if (num_ == 0) raise(Err::BadArgument, "inverse of zero");
        Rational r;
        if (num_ > 0) {
            r.num_ = den_;
            r.den_ = num_;
        } else {
            r.num_ = detail::checked_sub(0, den_);
            r.den_ = detail::checked_sub(0, num_);
        }
        return r;
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        // pools are tiny; the checked product cannot overflow there
        return detail::checked_mul(num_, o.den_) < detail::checked_mul(o.num_, den_);
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Parses "r", "-r", "r/d", "-r/d".
    static Rational parse(const std::string& s);

private:
    void normalize() {
        if (den_ == 0) raise(Err::BadArgument, "zero denominator");
        if (den_ < 0) {
            num_ = detail::checked_sub(0, num_);
            den_ = detail::checked_sub(0, den_);
        }
        int64_t a = num_ < 0 ? -num_ : num_;
        int64_t g = std::gcd(a, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    int64_t num_;
    int64_t den_;
};

inline Rational Rational::parse(const std::string& s) {
    if (s.empty()) raise(Err::BadArgument, "empty fraction");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        raise(Err::BadArgument, "cannot parse fraction '" + s + "'");
    }
}

} // namespace padic
