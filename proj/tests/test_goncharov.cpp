#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhs/verify.hpp"

using namespace mhs;

namespace {

// generic labels for symbolic checks
const int A = 10, B = 11, X = 12, Y = 13;

}  // namespace

TEST_CASE("coproduct of the empty symbol") {
    IWord w(A, {}, B);
    auto terms = gon_coproduct(w);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].left.is_unit());
    CHECK(terms[0].gaps.empty());
}

TEST_CASE("length-one symbols are primitive") {
    IWord w(A, {X}, B);
    auto terms = gon_coproduct(w);
    REQUIRE(terms.size() == 2);
    bool full_left = false, full_right = false;
    for (const CoproductTerm& t : terms) {
        if (t.left == w && t.gaps.empty()) full_left = true;
        if (t.left.is_unit() && t.gaps.size() == 1 && t.gaps[0] == w) full_right = true;
    }
    CHECK(full_left);
    CHECK(full_right);
}

TEST_CASE("length-two coproduct lists the two middle terms") {
    // interior bottom-up (x, y): I(b; y, x; a) in top-down display
    IWord w(A, {X, Y}, B);
    auto terms = gon_coproduct(w);
    REQUIRE(terms.size() == 4);
    long hits = 0;
    for (const CoproductTerm& t : terms) {
        if (t.left == w && t.gaps.empty()) ++hits;
        if (t.left.is_unit() && t.gaps.size() == 1 && t.gaps[0] == w) ++hits;
        // select x: gap from x up to b holds y
        if (t.left == IWord(A, {X}, B) && t.gaps.size() == 1 && t.gaps[0] == IWord(X, {Y}, B))
            ++hits;
        // select y: gap from a up to y holds x
        if (t.left == IWord(A, {Y}, B) && t.gaps.size() == 1 && t.gaps[0] == IWord(A, {X}, Y))
            ++hits;
    }
    CHECK(hits == 4);
}

TEST_CASE("vanishing rule by path kind") {
    CHECK(vanishing_rule(IWord(A, {0, 0}, B), PathKind::loop_conjugate));
    CHECK_FALSE(vanishing_rule(IWord(A, {0, 1}, B), PathKind::loop_conjugate));
    CHECK(vanishing_rule(IWord(A, {1, 1}, B), PathKind::straight));
    CHECK_FALSE(vanishing_rule(IWord(A, {1, 1}, B), PathKind::loop_conjugate));
    CHECK_FALSE(vanishing_rule(IWord(A, {}, B), PathKind::straight));
}

TEST_CASE("composition of functionals") {
    // G the unit functional: F(w) comes back
    IFunctional F = [](const IWord& w) { return CycNum(Rat((long)w.n() + 1), 1); };
    IFunctional unit = [](const IWord& w) {
        return w.is_unit() ? CycNum::one(1) : CycNum::zero(1);
    };
    IWord w(A, {X, Y, X}, B);
    CHECK(compose_functionals(F, unit, w, 7) == CycNum(Rat(4), 1));

    // n = 1: two splits
    IFunctional G = [](const IWord& w) { return CycNum(Rat(2 * (long)w.n() + 1), 1); };
    IWord v(A, {X}, B);
    // F(top with x) G(unit) + F(unit) G(bottom with x) = 2*1 + 1*3 = 5
    CHECK(compose_functionals(F, G, v, 7) == CycNum(Rat(5), 1));
}

TEST_CASE("composition against the deconcatenation pairing") {
    // grouplike functionals reading the interior as a word: composing
    // matches the concat-deconcat pairing
    GrouplikeGen rng(13);
    NCSeries f = rng.point(1, 4);
    NCSeries g = rng.point(1, 4);
    IFunctional F = [&](const IWord& iw) { return f.coeff(iword_to_word(iw)); };
    IFunctional G = [&](const IWord& iw) { return g.coeff(iword_to_word(iw)); };
    for (const Word& w : enumerate_words(1, 4)) {
        IWord iw = word_to_iword(w, 0, 0);
        CycNum direct = compose_functionals(F, G, iw, 0);
        CycNum paired = CycNum::zero(1);
        for (const auto& [u, v] : deconcat(w)) paired += f.coeff(u) * g.coeff(v);
        CHECK(direct == paired);
    }
}

TEST_CASE("iword/word identification") {
    Word w = Word::parse("e0 e1");
    IWord iw = word_to_iword(w, 0, 5);
    // leftmost letter sits at the top of the interior
    CHECK(iw.interior == std::vector<int>{1, 0});
    CHECK(iword_to_word(iw) == w);
}

TEST_CASE("adjoint-loop coaction identity at desk scale") {
    CHECK(verify_prop715(0, 1, true).ok);
    CHECK(verify_prop715(3, 1, true).ok);
    CHECK(verify_prop715(3, 2, true).ok);

    Prop715Report off = verify_prop715(3, 1, false);
    CHECK_FALSE(off.ok);
    CHECK(off.witness.has_value());
}

TEST_CASE("exponential loop variable mod its square") {
    // Phi^{-1} exp(eps e_1) Phi = 1 + eps Ad_Phi(e_1) when eps^2 = 0: the
    // eps-part of the conjugate is the adjoint series
    GrouplikeGen rng(3);
    NCSeries phi = rng.point(1, 4);
    NCSeries phi_inv = concat_inverse(phi);
    // dual-number pair (real, eps): (1, e_1) conjugated
    NCSeries e1 = NCSeries::monomial(1, 4, Word::parse("e1"), CycNum::one(1));
    NCSeries real = concat_mul(phi_inv, phi);
    NCSeries eps = concat_mul(concat_mul(phi_inv, e1), phi);
    CHECK(real == NCSeries::unit(1, 4));
    // and the eps part pairs to the adjoint coefficients
    CycNum total = CycNum::zero(1);
    for (long l = 0; l + 1 <= 4; ++l) total += eps.coeff(word_e0_pow(l).concat(Word::parse("e1")));
    CHECK(total == adjoint_coeff(phi, 1, Word::parse("e1")));
}

TEST_CASE("goncharov suite passes") {
    for (int level : {1, 2}) {
        RunConfig cfg;
        cfg.level = level;
        cfg.cap = 4;
        SuiteReport rep = run_goncharov_suite(cfg);
        for (const CheckResult& c : rep.checks) {
            INFO(c.name, " ", c.detail);
            CHECK(c.pass);
        }
    }
}
