#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhs/verify.hpp"

using namespace mhs;

TEST_CASE("path composition concatenates and keeps the junction") {
    ProPath a(0, 3, {{1, 1}});
    ProPath b(3, 6, {{4, 1}});
    CHECK(compose_paths(a, b) == ProPath(0, 6, {{1, 1}, {3, 1}, {4, 1}}));

    ProPath c(0, 5, {{2, 2}});
    ProPath d(5, 9, {{7, 1}});
    ProPath cd = compose_paths(c, d);
    CHECK(cd == ProPath(0, 9, {{2, 2}, {5, 1}, {7, 1}}));
    CHECK(cd.str() == "(0<2=2<5<7<9)");

    CHECK_THROWS_AS(compose_paths(ProPath(0, 3, {{1, 1}}), ProPath(4, 6, {{5, 1}})),
                    endpoint_mismatch);
}

TEST_CASE("overlay of step sets") {
    // same value collides, multiplicities add
    PathSum s = pre_quasi_shuffle(ProPath(0, 2, {{1, 1}}), ProPath(0, 2, {{1, 1}}));
    REQUIRE(s.terms.size() == 1);
    CHECK(s.terms.count(ProPath(0, 2, {{1, 2}})) == 1);

    // unit
    ProPath g(0, 4, {{2, 1}, {3, 1}});
    PathSum u = pre_quasi_shuffle(g, ProPath(0, 4));
    REQUIRE(u.terms.size() == 1);
    CHECK(u.terms.count(g) == 1);

    // distinct values interleave by value order
    PathSum t = pre_quasi_shuffle(ProPath(0, 4, {{1, 1}}), ProPath(0, 4, {{3, 1}}));
    REQUIRE(t.terms.size() == 1);
    CHECK(t.terms.count(ProPath(0, 4, {{1, 1}, {3, 1}})) == 1);

    CHECK_THROWS_AS(pre_quasi_shuffle(ProPath(0, 3, {{1, 1}}), ProPath(0, 4, {{1, 1}})),
                    endpoint_mismatch);
}

TEST_CASE("class paths enumeration") {
    auto p1 = class_paths(PathClass{"<"}, 0, 3);
    REQUIRE(p1.size() == 2);
    CHECK(p1[0] == ProPath(0, 3, {{1, 1}}));
    CHECK(p1[1] == ProPath(0, 3, {{2, 1}}));

    auto p2 = class_paths(PathClass{"<<"}, 0, 3);
    REQUIRE(p2.size() == 1);
    CHECK(p2[0] == ProPath(0, 3, {{1, 1}, {2, 1}}));

    CHECK(class_paths(PathClass{"<"}, 0, 1).empty());
    // depth-0 class: the single empty path
    CHECK(class_paths(PathClass{""}, 0, 5).size() == 1);
}

TEST_CASE("the generic overlay of two depth-one classes has three patterns") {
    // (n<n1<m) x (n<m1<m) = interleave both ways + collide
    std::map<PathClass, long> prod = class_pre_quasi_shuffle(PathClass{"<"}, PathClass{"<"}, 0, 5);
    REQUIRE(prod.size() == 2);
    CHECK(prod.at(PathClass{"<<"}) == 2);
    CHECK(prod.at(PathClass{"<="}) == 1);
}

TEST_CASE("coupling reproduces sigma") {
    std::function<Rat(long)> inv = [](long l) { return rat(1, l); };
    CHECK(coupling(PathClass{"<"}, {inv}, 0, 3) == rat(3, 2));
    CHECK(coupling(PathClass{"<<"}, {inv, inv}, 0, 3) == rat(1, 2));
    CHECK(coupling(PathClass{""}, {}, 0, 3) == Rat(1));
    CHECK_THROWS_AS(coupling(PathClass{"<<"}, {inv}, 0, 3), arity_mismatch);

    // repeated letters use the step function once per letter
    CHECK(coupling(PathClass{"<="}, {inv}, 0, 3) == rat(5, 4));  // sigma_3(2)
}

TEST_CASE("restriction coproduct") {
    ProPath g(0, 4, {{1, 1}, {2, 1}});
    DeltaM d = delta_M(g, MSet::multiples(2));
    CHECK(d.restricted == ProPath(0, 4, {{2, 1}}));
    REQUIRE(d.gaps.size() == 2);
    CHECK(d.gaps[0] == ProPath(0, 2, {{1, 1}}));
    CHECK(d.gaps[1] == ProPath(2, 4));

    // no steps in M: bare restriction, single gap = the path
    ProPath h(0, 4, {{1, 1}, {3, 1}});
    DeltaM dh = delta_M(h, MSet::multiples(4));
    CHECK(dh.restricted == ProPath(0, 4));
    REQUIRE(dh.gaps.size() == 1);
    CHECK(dh.gaps[0] == h);

    // all steps in M: gaps all empty
    ProPath k(0, 8, {{2, 1}, {4, 1}});
    DeltaM dk = delta_M(k, MSet::multiples(2));
    CHECK(dk.restricted == k);
    for (const ProPath& gap : dk.gaps) CHECK(gap.steps.empty());

    CHECK_THROWS_AS(delta_M(ProPath(0, 3, {{1, 1}}), MSet::multiples(2)), endpoints_not_in_m);

    DeltaM de = delta_M(g, MSet::explicit_set({0, 2, 4}));
    CHECK(de.restricted == d.restricted);
}

TEST_CASE("split_sum equals sigma over the product bound") {
    // m=2, n=2, idx=(1): 11/6 split as even 1/2 + odd 4/3
    HarIndex one = HarIndex::from_display({1});
    CHECK(split_sum(2, 2, one).rational_part() == rat(11, 6));
    CHECK(sigma(4, one).rational_part() == rat(11, 6));

    // n=1 keeps only the all-in-gaps fiber
    HarIndex idx21 = HarIndex::from_display({2, 1});
    CHECK(split_sum(3, 1, idx21) == sigma(3, idx21));

    // m=3, n=2, idx=(1,1)
    HarIndex idx11 = HarIndex::from_display({1, 1});
    CHECK(split_sum(3, 2, idx11) == sigma(6, idx11));

    for (long m : {2L, 3L, 4L, 5L})
        for (long n = 2; n <= 6; ++n)
            for (const HarIndex& idx : compositions_up_to(4)) {
                if (idx.depth() > 3) continue;
                CHECK(split_sum(m, n, idx) == sigma(m * n, idx));
            }
}

TEST_CASE("split_sum with cyclotomic labels") {
    for (int N : {2, 3}) {
        for (const HarIndex& base : compositions_up_to(3)) {
            HarIndex idx = base;
            idx.level = N;
            for (size_t j = 0; j < idx.depth(); ++j) idx.ratios[j] = (int)((j + 1) % N);
            idx.outer = 1;
            CHECK(split_sum(2, 3, idx) == sigma(6, idx));
        }
    }
}

TEST_CASE("prime factor composition") {
    HarIndex idx2 = HarIndex::from_display({2});
    CHECK(prime_factor_compose(12, idx2) == sigma(12, idx2));
    CHECK(prime_factor_compose(7, idx2) == sigma(7, idx2));

    HarIndex idx11 = HarIndex::from_display({1, 1});
    CHECK(prime_factor_compose(12, idx11, {3, 4}) == sigma(12, idx11));
    CHECK(prime_factor_compose(12, idx11, {4, 3}) == sigma(12, idx11));
    CHECK(prime_factor_compose(60, idx11) == sigma(60, idx11));
}

TEST_CASE("transition map substitutes the delta component") {
    NSeqFn f(4);
    f.delta_at_minus1 = CycNum::one(4);
    NSeqFn t = transition_map(1, f);
    CHECK(t.delta_at_minus1.is_zero());
    for (long n = 0; n <= 8; ++n) CHECK(t.eval(n) == -CycNum::root_power(4, -n));

    NSeqFn g(4);
    g.geom[2] = CycNum(rat(5, 3), 4);
    CHECK(transition_map(1, g) == g);  // zero delta component: unchanged
}

TEST_CASE("paths suite passes") {
    for (int level : {1, 2}) {
        RunConfig cfg;
        cfg.level = level;
        cfg.seed = 17;
        SuiteReport rep = run_paths_suite(cfg);
        for (const CheckResult& c : rep.checks) {
            INFO(c.name, " ", c.detail);
            CHECK(c.pass);
        }
    }
}
