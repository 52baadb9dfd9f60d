#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mhs/harmonic.hpp"

namespace mhs {

// A pro-unipotent path on N: a strictly increasing sequence of values in
// ]lo, hi[ with multiplicities.  Depth is the number of distinct values;
// the letters of the path are the values counted with multiplicity.
struct ProPath {
    long lo = 0;
    long hi = 1;
    std::vector<std::pair<long, int>> steps;  // (value, multiplicity >= 1)

    ProPath() = default;
    ProPath(long lo_, long hi_, std::vector<std::pair<long, int>> st = {});

    long depth() const { return (long)steps.size(); }
    long letter_count() const;

    bool operator==(const ProPath& o) const {
        return lo == o.lo && hi == o.hi && steps == o.steps;
    }
    bool operator<(const ProPath& o) const;

    std::string str() const;  // "(0<1=1<3)"
};

// The {<,=}-pattern of a path: one symbol per letter, '<' when the letter
// starts a new value and '=' when it repeats the previous one.
struct PathClass {
    std::string pattern;

    PathClass() = default;
    explicit PathClass(std::string p);

    long depth() const;        // number of '<'
    long letter_count() const { return (long)pattern.size(); }

    bool operator==(const PathClass& o) const { return pattern == o.pattern; }
    bool operator<(const PathClass& o) const;

    // '=' <-> e_0, '<' <-> e_1; a depth-preserving bijection with words.
    Word to_word() const;
    static PathClass from_word(const Word& w);
};

PathClass class_of(const ProPath& p);

// Z-linear combinations of paths with common endpoints; paths whose depth
// exceeds hi - lo - 1 are dropped at insertion.
struct PathSum {
    long lo = 0;
    long hi = 1;
    std::map<ProPath, long> terms;

    PathSum() = default;
    PathSum(long lo_, long hi_) : lo(lo_), hi(hi_) {}

    void add(const ProPath& p, long c);
    bool operator==(const PathSum& o) const {
        return lo == o.lo && hi == o.hi && terms == o.terms;
    }
    std::string str() const;
};

// Concatenation of sequences; the junction point becomes a step.
ProPath compose_paths(const ProPath& a, const ProPath& b);

// Overlay of the two step multisets ("or"): equal values collide and their
// multiplicities add.  Bilinear extension on PathSum; depth overflow -> 0.
PathSum pre_quasi_shuffle(const ProPath& a, const ProPath& b);
PathSum pre_quasi_shuffle(const PathSum& a, const PathSum& b);

// All paths in P_{lo,hi} whose pattern is cls (empty when the interval is
// too short).
std::vector<ProPath> class_paths(const PathClass& cls, long lo, long hi);

// The induced product on classes, obtained by summing the overlay over all
// members of both classes and collecting patterns; the coefficients are the
// stuffle coefficients.
std::map<PathClass, long> class_pre_quasi_shuffle(const PathClass& a, const PathClass& b,
                                                  long lo, long hi);

// Summation coupling: sum over class_paths(cls) of one factor per letter,
// the letter of step i contributing fs[i](value).
Rat coupling(const PathClass& cls, const std::vector<std::function<Rat(long)>>& fs, long lo,
             long hi);

// M is either an arithmetic progression mN or an explicit finite set.
struct MSet {
    long modulus = 0;          // > 0 for the mN kind
    std::set<long> elements;   // used when modulus == 0

    static MSet multiples(long m) { return MSet{m, {}}; }
    static MSet explicit_set(std::set<long> els) { return MSet{0, std::move(els)}; }
    bool contains(long x) const {
        return modulus > 0 ? x % modulus == 0 : elements.count(x) > 0;
    }
};

struct DeltaM {
    ProPath restricted;           // steps of the path lying in M, endpoints kept
    std::vector<ProPath> gaps;    // subpaths strictly between consecutive M-points
};

DeltaM delta_M(const ProPath& p, const MSet& M);

// sigma_{m n}(idx) computed over the Delta_{mN} fibers: outer sum over which
// summation variables are multiples of m (with quotients < n), inner sums
// over the gap ranges.  Must equal sigma(m n, idx).
CycNum split_sum(long m, long n, const HarIndex& idx);

// sigma_n(idx) through the prime factorization of n: each variable is graded
// by its divisibility level along the chain m_1 | m_1 m_2 | ..., nesting the
// split fiber decomposition.  The factor order changes the fibers, never the
// total.
CycNum prime_factor_compose(long n, const HarIndex& idx);
CycNum prime_factor_compose(long n, const HarIndex& idx,
                            const std::vector<long>& prime_power_order);

// Functions on N u {-1} spanned by the delta at -1 and geometric streams
// n -> c xi^{k n}; the gluing transition substitutes the delta component.
struct NSeqFn {
    int level = 1;
    CycNum delta_at_minus1;       // coefficient of 1_{n=-1}
    std::map<int, CycNum> geom;   // xi-exponent class -> coefficient

    explicit NSeqFn(int N = 1)
        : level(N), delta_at_minus1(CycNum::zero(N)) {}

    CycNum eval(long n) const;    // n >= 0; the delta part only lives at -1
    NSeqFn scaled(const CycNum& c) const;
    NSeqFn operator+(const NSeqFn& o) const;
    bool operator==(const NSeqFn& o) const;
};

// 1_{n=-1} at z_i  |->  n -> -z_i^{-n} 1_{n>=0} at 0; identity elsewhere.
NSeqFn transition_map(int root_index, const NSeqFn& f);

}  // namespace mhs
