#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/numtheory.hpp"
#include "padic/qseries.hpp"
#include "padic/special.hpp"

using namespace padic;

TEST_CASE("qseries multiplication laws on random small inputs") {
    uint64_t s = 31;
    auto next = [&s]() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    };
    for (int trial = 0; trial < 20; ++trial) {
        QSeries a(24), b(24), c(24);
        for (size_t i = 0; i <= 24; ++i) {
            a.at(i) = static_cast<int64_t>(next() % 9) - 4;
            b.at(i) = static_cast<int64_t>(next() % 9) - 4;
            c.at(i) = static_cast<int64_t>(next() % 9) - 4;
        }
        QSeries ab = a * b, ba = b * a;
        for (size_t i = 0; i <= 24; ++i) CHECK(ab.at(i) == ba.at(i));
        QSeries l = (a * b) * c, r = a * (b * c);
        for (size_t i = 0; i <= 24; ++i) CHECK(l.at(i) == r.at(i));
    }
}

TEST_CASE("eta expansion stability under order increase") {
    for (uint64_t p : {5ull, 11ull, 23ull, 47ull}) {
        int64_t base = eta_product_ap(p, 50);
        CHECK(eta_product_ap(p, 80) == base);
        CHECK(eta_product_ap(p, 128) == base);
    }
    CHECK_THROWS_AS(eta_product_ap(53, 50), Error);
}

TEST_CASE("eta coefficients via the congruences they feed") {
    // a(2): only odd powers of q appear in the expansion
    QSeries s(8);
    for (size_t n = 1; 2 * n <= 8; ++n) s.mul_euler_factor(2 * n, 4);
    for (size_t n = 1; 4 * n <= 8; ++n) s.mul_euler_factor(4 * n, 4);
    CHECK(s.at(1) == 0); // q^2 coefficient of q * s
    CHECK(eta_product_ap(5, 64) == -2);
    CHECK(eta_product_ap(7, 64) == 24);
    CHECK(eta_product_ap(11, 64) == -44);
    CHECK(eta_product_ap(13, 64) == 22);
}

TEST_CASE("ahlgren-ono and kilbourn") {
    CHECK(ahlgren_ono_check(PrimeContext(5), 2).verdict == Verdict::Holds);
    CHECK(ahlgren_ono_check(PrimeContext(7), 3).verdict == Verdict::Holds);
    CHECK(ahlgren_ono_check(PrimeContext(3), 3).verdict == Verdict::ConditionNotMet);
    for (uint64_t p : primes_in(5, 23)) {
        CHECK(ahlgren_ono_check(PrimeContext(p), 2).verdict == Verdict::Holds);
        CHECK(ahlgren_ono_check(PrimeContext(p), 3).verdict == Verdict::Holds);
    }
}

TEST_CASE("cm congruences at the worked primes") {
    PrimeContext p7(7), p13(13);
    auto r16 = cm_congruence_check("eq-12.16-quarter34-4over3", p7);
    CHECK(r16.verdict == Verdict::Holds);
    auto r17 = cm_congruence_check("eq-12.17-sun-48", p7);
    CHECK(r17.verdict == Verdict::Holds);
    auto r4 = cm_congruence_check("eq-12.4-legendre-sqrtm3", p13);
    CHECK(r4.verdict == Verdict::Holds);
    auto r26 = cm_congruence_check("eq-2.26-quarter-m8", p7);
    CHECK(r26.verdict == Verdict::ConditionNotMet); // needs p ≡ 1 (mod 4)
}

TEST_CASE("dflst") {
    CHECK(dflst_check(PrimeContext(5)).verdict == Verdict::Holds);
    CHECK(dflst_check(PrimeContext(13)).verdict == Verdict::Holds);
    CHECK(dflst_check(PrimeContext(7)).verdict == Verdict::ConditionNotMet);
}

TEST_CASE("12.8 through 12.17 hold for the first qualifying primes") {
    for (uint64_t p : {7ull, 13ull, 19ull, 31ull}) {
        PrimeContext ctx(p);
        for (const char* id :
             {"eq-12.4-legendre-sqrtm3", "eq-12.5-quarter-at-4", "eq-12.6-quarter-at-1over4",
              "eq-12.8-quarter34-m1over3", "eq-12.9-cm-reflection", "eq-12.10-cm-pfaff",
              "eq-12.12-quarter4-gamma", "eq-12.13-quarter14-gamma", "eq-12.14-3f2-m16over9",
              "eq-12.15-binomial-144", "eq-12.16-quarter34-4over3", "eq-12.17-sun-48"}) {
            auto r = cm_congruence_check(id, ctx);
            INFO(id << " at p=" << p);
            CHECK(r.verdict == Verdict::Holds);
        }
    }
}
