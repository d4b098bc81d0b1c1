#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/gamma.hpp"
#include "padic/registry.hpp"
#include "padic/report.hpp"

using namespace padic;

TEST_CASE("registry lookups") {
    CHECK_THROWS_AS(find_theorem("nonexistent"), Error);
    try {
        find_theorem("nonexistent");
    } catch (const Error& e) {
        CHECK(e.kind() == Err::UnknownTheorem);
    }
    const auto& dflst = find_theorem("thm-13.1-dflst");
    CHECK(dflst.arity == 0);
    CHECK(dflst.mode == CheckMode::Numeric);
    const auto& sun = find_theorem("eq-1.7-sun-poly");
    CHECK(sun.mode == CheckMode::Both);
    CHECK(list_theorems().size() >= 50);
}

TEST_CASE("frozen worked cases") {
    PrimeContext p13(13), p7(7);
    auto r = check_case("thm-1.2-gauss", p13, {Rational(1, 3), Rational(1, 4)});
    CHECK(r.verdict == Verdict::Holds);
    CHECK(*r.lhs == 126); // ≡ -Gamma(5/12)/(Gamma(2/3)Gamma(3/4)) mod 169
    CHECK(*r.rhs == 126);

    auto w = check_case("thm-2.10-watson", p7, {Rational(1, 2), Rational(1, 3)});
    CHECK(w.verdict == Verdict::Holds);
    CHECK(*w.lhs == 0); // p ≡ 7 (mod 12): the ≡ 0 branch
    CHECK(w.detail == "odd");

    auto cnm = check_case("thm-2.10-watson", p7, {Rational(1, 2), Rational(5, 6)});
    CHECK(cnm.verdict == Verdict::ConditionNotMet); // <-5/6>_7 = 6 > 7/2
    CHECK(cnm.detail == "<-beta>_p < p/2");

    auto both = check_case("thm-1.2-gauss", p7, {Rational(1, 2), Rational(1, 2)});
    CHECK(both.verdict == Verdict::Holds);
    CHECK(both.detail == "eq-1.11"); // 3 + 3 < 7

    auto dflst5 = check_case("thm-13.1-dflst", PrimeContext(5), {});
    CHECK(dflst5.verdict == Verdict::Holds);
    CHECK(*dflst5.lhs == 13); // both sides ≡ 13 (mod 25)
    auto dflst13 = check_case("thm-13.1-dflst", p13, {});
    CHECK(dflst13.verdict == Verdict::Holds);
    CHECK(*dflst13.lhs == 32);
    auto dflst7 = check_case("thm-13.1-dflst", p7, {});
    CHECK(dflst7.verdict == Verdict::ConditionNotMet);
}

TEST_CASE("double entry: thm 4.1 at gamma=1 is thm 1.2") {
    for (uint64_t p : {5ull, 13ull, 31ull}) {
        PrimeContext ctx(p);
        for (const Rational& a : default_pool()) {
            for (const Rational& b : default_pool()) {
                if (a.den() % static_cast<int64_t>(p) == 0 ||
                    b.den() % static_cast<int64_t>(p) == 0)
                    continue;
                auto r1 = check_case("thm-1.2-gauss", ctx, {a, b});
                auto r2 = check_case("thm-4.1-complete-gauss", ctx, {a, b, Rational(1)});
                REQUIRE(r1.verdict == Verdict::Holds);
                REQUIRE(r2.verdict == Verdict::Holds);
                REQUIRE(*r1.lhs == *r2.lhs);
                REQUIRE(*r1.rhs == *r2.rhs);
            }
        }
    }
}

TEST_CASE("double entry: cor 2.27 against the 5F4 corollary route") {
    // Eq. (2.61) comes from Eq. (2.59) at beta = alpha/2; where both apply the
    // 4F3 collapses to the 2F1 and the right sides must agree
    for (uint64_t p : primes_in(5, 61)) {
        PrimeContext ctx(p);
        for (const Rational& al : default_pool()) {
            if (al.den() % static_cast<int64_t>(p) == 0) continue;
            auto direct = check_case("cor-2.27-2f1-m1", ctx, {al});
            auto route = check_case("cor-2.59-2.60-4f3-m1", ctx, {al, al * Rational(1, 2)});
            if (direct.verdict == Verdict::Holds && route.verdict == Verdict::Holds)
                REQUIRE(*direct.lhs == *route.lhs);
        }
    }
}

TEST_CASE("double entry: 12.8 and 12.16 agree through Sun's transformation") {
    for (uint64_t p : primes_in(7, 97)) {
        if (p % 3 != 1) continue;
        PrimeContext ctx(p);
        auto a = check_case("eq-12.8-quarter34-m1over3", ctx, {});
        auto b = check_case("eq-12.16-quarter34-4over3", ctx, {});
        REQUIRE(a.verdict == Verdict::Holds);
        REQUIRE(b.verdict == Verdict::Holds);
        // 2F1[..|4/3] = (-1)^{<-1/4>_p} 2F1[..|-1/3] termwise via Eq. (1.7)
        uint64_t sign_exp = least_nonneg_residue(Rational(-1, 4), ctx, 1);
        Residue lhs4 = Residue(*b.lhs, ctx.p2());
        Residue lhsm = Residue(*a.lhs, ctx.p2());
        CHECK(lhs4 == (sign_exp % 2 == 0 ? lhsm : lhsm.neg()));
    }
}

TEST_CASE("every theorem has holds and condition-not-met cases") {
    SweepOptions opt;
    opt.prime_lo = 3;
    opt.prime_hi = 61;
    opt.z_samples = 6;
    opt.tuple_cap = 150;
    for (const auto& info : list_theorems()) {
        SweepReport r = sweep(info.id, opt);
        INFO(info.id);
        CHECK(r.holds >= 3);
        // Eq. (1.3) mod p^2 has no hypotheses at all ("for any odd prime p"),
        // so it alone cannot produce a condition-not-met case
        if (info.id != "eq-1.3-ahlgren-ono") CHECK(r.condition_not_met >= 1);
        CHECK(r.fails.empty());
        CHECK(r.errors.empty());
        CHECK(r.cases == r.holds + r.condition_not_met + r.fails.size() + r.errors.size());
    }
}

TEST_CASE("sweep determinism and serial-parallel agreement") {
    SweepOptions opt;
    opt.prime_lo = 3;
    opt.prime_hi = 61;
    opt.seed = 42;
    opt.jobs = 1;
    SweepReport serial = sweep("thm-2.4-linear-z-over-zm1", opt);
    SweepReport again = sweep("thm-2.4-linear-z-over-zm1", opt);
    CHECK(report_to_json(serial) == report_to_json(again));
    opt.jobs = 4;
    SweepReport parallel = sweep("thm-2.4-linear-z-over-zm1", opt);
    CHECK(report_to_json(serial) == report_to_json(parallel));
    CHECK(serial.holds == parallel.holds);
    CHECK(serial.cases == parallel.cases);
}

TEST_CASE("z sampler respects unit constraints and exceptional classes") {
    PrimeContext ctx(13);
    const auto& t22 = find_theorem("eq-2.22-quad-z2-companion");
    auto zs = sample_z(t22, ctx, 20, 7);
    REQUIRE(!zs.empty());
    bool has_m1 = false, has_i = false;
    for (const auto& z : zs) {
        CHECK(least_nonneg_residue(z, ctx, 1) != 0);
        CHECK(least_nonneg_residue(z - Rational(1), ctx, 1) != 0);
        if (least_nonneg_residue(z + Rational(1), ctx, 1) == 0) has_m1 = true;
        Rational z2p1 = z * z + Rational(1);
        if (least_nonneg_residue(z2p1, ctx, 1) == 0) has_i = true;
    }
    CHECK(has_m1);
    CHECK(has_i); // 13 ≡ 1 (mod 4): z^2 ≡ -1 exists
}

TEST_CASE("lhs is independent of rhs evaluation") {
    PrimeContext ctx(13);
    const auto& t = find_theorem("thm-1.2-gauss");
    TheoremCase tc{&ctx, {Rational(1, 3), Rational(1, 4)}, std::nullopt};
    Residue l1 = t.lhs(tc);
    (void)t.rhs(tc);
    Residue l2 = t.lhs(tc);
    CHECK(l1 == l2);
}

TEST_CASE("empty prime range gives empty report") {
    SweepOptions opt;
    opt.prime_lo = 24;
    opt.prime_hi = 28; // no primes in range
    SweepReport r = sweep("thm-1.2-gauss", opt);
    CHECK(r.cases == 0);
    CHECK(r.fails.empty());
}

TEST_CASE("arity mismatch raises") {
    PrimeContext ctx(13);
    CHECK_THROWS_AS(check_case("thm-1.2-gauss", ctx, {Rational(1, 2)}), Error);
}
