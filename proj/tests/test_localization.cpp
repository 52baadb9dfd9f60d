#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhs/verify.hpp"

using namespace mhs;

TEST_CASE("letters act as stated on basic series") {
    // e_1 on the constant series 1 gives sum z^n / n
    ZSeries one = ZSeries::one(1, 6);
    ZSeries f = apply_letter(ez(1), one);
    for (long n = 1; n <= 6; ++n) CHECK(f.coeff(n) == CycNum(rat(1, n), 1));
    CHECK(f.at_zero().is_zero());

    // e_0^{-1} on sum z^n/n gives the geometric series
    ZSeries g = apply_letter(Letter{0, true}, f);
    for (long n = 1; n <= 6; ++n) CHECK(g.coeff(n) == CycNum::one(1));

    // e_0 on a nonzero constant needs a log
    CHECK_THROWS_AS(apply_letter(e0(), one), log_required);

    // raw kernel flips the integration sign
    ZSeries fr = apply_letter(ez(1), one, KernelConvention::raw);
    for (long n = 1; n <= 6; ++n) CHECK(fr.coeff(n) == CycNum(rat(-1, n), 1));
}

TEST_CASE("li_loc pinned expansions") {
    // coefficient of z^3 in li_loc(e0 e1) is 1/9
    ZSeries f = li_loc(Word::parse("e0 e1"), 1, 5);
    CHECK(f.coeff(3) == CycNum(rat(1, 9), 1));

    ZSeries g = li_loc(Word::parse("e0^-1 e1"), 1, 4);
    for (long n = 1; n <= 4; ++n) CHECK(g.coeff(n) == CycNum::one(1));

    // sampled (l, s, n): coefficient of z^n is sigma_n(s) / n^l
    for (long l = 1; l <= 3; ++l)
        for (long s = 1; s <= 3; ++s) {
            HarIndex idx = HarIndex::from_display({s});
            ZSeries h = li_loc(generalized_word_n1(l, idx), 1, 9);
            for (long n = 1; n <= 9; ++n)
                CHECK(h.coeff(n) == sigma(n, idx).scaled(rat_pow(Rat(n), -l)));
        }
}

TEST_CASE("inverse letters invert their integrations") {
    GrouplikeGen rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        ZSeries f(1, 7);
        for (long n = 0; n <= 7; ++n)
            f.set_coeff(n, CycNum(rat(rng.next_in(-5, 5), rng.next_in(1, 3)), 1));
        // e_0 needs a vanishing constant term
        ZSeries f0 = f;
        f0.set_coeff(0, CycNum::zero(1));
        CHECK(apply_letter(Letter{0, true}, apply_letter(e0(), f0)) == f0);
        // e_0 e_0^{-1} = id on series vanishing at 0
        CHECK(apply_letter(e0(), apply_letter(Letter{0, true}, f0)) == f0);
        for (KernelConvention k : {KernelConvention::normalized, KernelConvention::raw}) {
            ZSeries once = apply_letter(ez(1), f, k);
            CHECK(apply_letter(Letter{1, true}, once, k) == f.truncated(6));
        }
    }
}

TEST_CASE("derivation rule for inverse letters") {
    GrouplikeGen rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        ZSeries f(1, 6), g(1, 6);
        for (long n = 0; n <= 6; ++n) {
            f.set_coeff(n, CycNum(rat(rng.next_in(-4, 4), rng.next_in(1, 3)), 1));
            g.set_coeff(n, CycNum(rat(rng.next_in(-4, 4), rng.next_in(1, 3)), 1));
        }
        for (Letter l : {Letter{0, true}, Letter{1, true}}) {
            ZSeries lhs = apply_letter(l, f * g);
            ZSeries rhs = apply_letter(l, f) * g + f * apply_letter(l, g);
            CHECK(lhs == rhs.truncated(lhs.order_cap()));
        }
    }
}

TEST_CASE("localized shuffle identity in the log-free chart") {
    for (const Word& u : enumerate_words(1, 3)) {
        if (u.letters.back().is_e0()) continue;
        for (const Word& v : enumerate_words(1, 2)) {
            if (v.letters.back().is_e0()) continue;
            ZSeries lhs = li_loc(u, 1, 9) * li_loc(v, 1, 9);
            ZSeries rhs(1, 9);
            for (const auto& [w, c] : shuffle(u, v).terms())
                rhs = rhs + li_loc(w, 1, 9).scaled(c);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("series coefficients reproduce iterated sums at cap 12") {
    for (const HarIndex& idx : compositions_up_to(4)) {
        for (long l = 1; l + idx.weight() <= 5; ++l) {
            ZSeries f = li_loc(generalized_word_n1(l, idx), 1, 12);
            for (long n = 1; n <= 12; ++n)
                CHECK(f.coeff(n) == sigma(n, idx).scaled(rat_pow(Rat(n), -l)));
        }
    }
    // a negative exponent realized by an inverted block: s_1 = -1
    HarIndex gidx = HarIndex::generalized_from_display({-1}, 1);
    Word w = generalized_word_n1(1, gidx);
    CHECK(w.str() == "e1 e0^-1 e0^-1 e1");
    ZSeries f = li_loc(w, 1, 12);
    for (long n = 1; n <= 12; ++n) CHECK(f.coeff(n) == sigma(n, gidx).scaled(rat(1, n)));
}

TEST_CASE("divided derivative extraction") {
    HarIndex one = HarIndex::from_display({1});
    CHECK(taylor_eval_sigma(2, 1, one, 6) == CycNum(rat(1, 2), 1));
    CHECK(taylor_eval_sigma(1, 1, one, 6).is_zero());
    CHECK(taylor_eval_sigma(3, 2, one, 6) == CycNum(rat(1, 6), 1));
    for (long n = 1; n <= 10; ++n)
        for (const HarIndex& idx : compositions_up_to(3))
            CHECK(taylor_eval_sigma(n, 1, idx, 11) == sigma(n, idx).scaled(rat(1, n)));
}

TEST_CASE("cumulative extraction reproduces the shifted bound") {
    HarIndex one = HarIndex::from_display({1});
    // n=1: cumulative gives 1 = sigma_2(1), not sigma_1(1) = 0
    CHECK(taylor_eval_sigma_cumulative(1, one, 8) == CycNum::one(1));
    CHECK(cumulative_boundary_check(1, one, 8, CumulativeBoundary::reproduces_next));
    CHECK_FALSE(cumulative_boundary_check(1, one, 8, CumulativeBoundary::reproduces_same));
    for (long n = 1; n <= 6; ++n)
        for (const HarIndex& idx : compositions_up_to(3))
            CHECK(cumulative_boundary_check(n, idx, 10, CumulativeBoundary::reproduces_next));
}

TEST_CASE("localization suite passes") {
    RunConfig cfg;
    cfg.seed = 19;
    SuiteReport rep = run_localization_suite(cfg);
    for (const CheckResult& c : rep.checks) {
        INFO(c.name, " ", c.detail);
        CHECK(c.pass);
    }
}
