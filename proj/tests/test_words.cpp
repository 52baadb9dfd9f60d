#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhs/series.hpp"
#include "mhs/verify.hpp"

using namespace mhs;

TEST_CASE("word literals round-trip") {
    Word w = Word::parse("e0 e1 e1");
    CHECK(w.weight() == 3);
    CHECK(w.depth() == 2);
    CHECK(w.str() == "e0 e1 e1");
    Word inv = Word::parse("e0^-1 e1");
    CHECK(inv.has_inverted());
    CHECK(inv.signed_weight() == 0);
    CHECK(inv.str() == "e0^-1 e1");
    CHECK(Word::parse("ez3 e0").letters[0].index == 3);
}

TEST_CASE("weight and depth are additive under concatenation") {
    for (const Word& u : enumerate_words(2, 3))
        for (const Word& v : enumerate_words(2, 2)) {
            Word uv = u.concat(v);
            CHECK(uv.weight() == u.weight() + v.weight());
            CHECK(uv.depth() == u.depth() + v.depth());
        }
}

TEST_CASE("index to word, N=1 convention") {
    HarIndex idx = HarIndex::from_display({2, 1});
    CHECK(index_to_word(idx, WordConvention::N1) == Word::parse("e0 e1 e1"));
    CHECK(index_to_word(HarIndex::from_display({1}), WordConvention::N1) == Word::parse("e1"));
    CHECK_THROWS_AS(index_to_word(HarIndex::generalized_from_display({0}, 1), WordConvention::N1),
                    bad_index);
}

TEST_CASE("index to word, cyclotomic convention") {
    // d=1, s_1=2, labels (z_{i_2}, z_{i_1}) = (xi, 1) at N=4
    HarIndex idx = HarIndex::parse("(xi^1:2, xi^0:1)", 4);
    CHECK(idx.depth() == 1);
    CHECK(idx.exponents[0] == 2);
    Word w = index_to_word(idx, WordConvention::cyclotomic);
    CHECK(w.str() == "e1 e0 ez4");  // e_xi e_0 e_1, the label 1 being z_4
    CHECK(word_to_index(w, WordConvention::cyclotomic, 4) == idx);
}

TEST_CASE("index/word round-trip on all indices of weight <= 8") {
    for (const HarIndex& idx : compositions_up_to(8)) {
        CHECK(word_to_index(index_to_word(idx, WordConvention::N1), WordConvention::N1) == idx);
        CHECK(word_to_index(index_to_word(idx, WordConvention::cyclotomic),
                            WordConvention::cyclotomic, 1) == idx);
    }
    // cyclotomic round-trip with nontrivial labels
    for (int N : {3, 4}) {
        for (const HarIndex& base : compositions_up_to(4)) {
            HarIndex idx = base;
            idx.level = N;
            for (size_t j = 0; j < idx.depth(); ++j) idx.ratios[j] = (int)((j + 1) % N);
            idx.outer = 2 % N;
            CHECK(word_to_index(index_to_word(idx, WordConvention::cyclotomic),
                                WordConvention::cyclotomic, N) == idx);
        }
    }
}

TEST_CASE("display follows the (s_d, ..., s_1) order") {
    HarIndex idx = HarIndex::from_display({3, 1, 2});
    CHECK(idx.str() == "(3,1,2)");
    CHECK(idx.exponents.front() == 2);  // internal order is ascending
    CHECK(HarIndex::parse("(3,1,2)") == idx);
}

TEST_CASE("concatenation product of series") {
    NCSeries f = NCSeries::unit(1, 3);
    f.set(Word::parse("e0"), CycNum::one(1));  // 1 + e0
    NCSeries g = NCSeries::unit(1, 3);
    g.set(Word::parse("e1"), CycNum::one(1));  // 1 + e1
    NCSeries fg = concat_mul(f, g);
    CHECK(fg.coeff(Word{}) == CycNum::one(1));
    CHECK(fg.coeff(Word::parse("e0")) == CycNum::one(1));
    CHECK(fg.coeff(Word::parse("e1")) == CycNum::one(1));
    CHECK(fg.coeff(Word::parse("e0 e1")) == CycNum::one(1));
    CHECK(fg.coeff(Word::parse("e1 e0")).is_zero());

    CHECK(concat_mul(f, NCSeries::unit(1, 3)) == f);

    // truncation: all products of weight 2 > cap vanish
    NCSeries a(1, 1);
    a.set(Word::parse("e0"), CycNum::one(1));
    a.set(Word::parse("e1"), CycNum::one(1));
    NCSeries b(1, 1);
    b.set(Word::parse("e1"), CycNum::one(1));
    CHECK(concat_mul(a, b).is_zero());
    CHECK_THROWS_AS(concat_mul(f, NCSeries::unit(1, 4)), cap_mismatch);
}

TEST_CASE("concatenation is associative and unital at every cap") {
    GrouplikeGen rng(7);
    for (int cap : {2, 3, 4}) {
        for (int trial = 0; trial < 5; ++trial) {
            NCSeries f(2, cap), g(2, cap), h(2, cap);
            for (const Word& w : enumerate_words(2, cap)) {
                if (rng.next() % 3 == 0) f.set(w, CycNum(Rat(rng.next_in(-2, 2)), 2));
                if (rng.next() % 3 == 0) g.set(w, CycNum(Rat(rng.next_in(-2, 2)), 2));
                if (rng.next() % 3 == 0) h.set(w, CycNum(Rat(rng.next_in(-2, 2)), 2));
            }
            CHECK(concat_mul(concat_mul(f, g), h) == concat_mul(f, concat_mul(g, h)));
            CHECK(concat_mul(f, NCSeries::unit(2, cap)) == f);
            CHECK(concat_mul(NCSeries::unit(2, cap), f) == f);
        }
    }
}

TEST_CASE("localized letters are rejected outside localized series") {
    NCSeries f(1, 3);
    CHECK_THROWS_AS(f.set(Word::parse("e0^-1"), CycNum::one(1)), localized_letter);
    NCSeries loc(1, 3, /*localized=*/true);
    loc.set(Word::parse("e0^-1"), CycNum::one(1));
    CHECK(loc.coeff(Word::parse("e0^-1")) == CycNum::one(1));
}

TEST_CASE("weight parts split a series") {
    NCSeries f = NCSeries::unit(1, 3);
    f.set(Word::parse("e0 e1"), CycNum(rat(2, 3), 1));
    f.set(Word::parse("e1"), CycNum::one(1));
    NCSeries sum(1, 3);
    for (long s = 0; s <= 3; ++s) sum = sum + f.weight_part(s);
    CHECK(sum == f);
    CHECK(f.weight_part(2).coeff(Word::parse("e0 e1")) == CycNum(rat(2, 3), 1));
    CHECK(f.weight_part(1).coeff(Word::parse("e0 e1")).is_zero());
}
