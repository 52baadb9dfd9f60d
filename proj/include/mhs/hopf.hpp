#pragma once

#include <utility>
#include <vector>

#include "mhs/series.hpp"

namespace mhs {

// Shuffle product of two words: the sum over all order-preserving
// interleavings, with integer coefficients.  Rejects inverted letters.
// level 0 infers the smallest level covering the letters.
NCSeries shuffle(const Word& u, const Word& v, int level = 0);

// Bilinear extension to series (same level/cap).
NCSeries shuffle_mul(const NCSeries& f, const NCSeries& g);

// All splits w = uv, as an ordered list of (u, v).
std::vector<std::pair<Word, Word>> deconcat(const Word& w);

// Formal linear combination of indices; the quasi-shuffle algebra.
struct IndexSum {
    std::map<HarIndex, CycNum> terms;

    void add(const HarIndex& idx, const CycNum& c);
    bool operator==(const IndexSum& o) const { return terms == o.terms; }
    std::string str() const;
};

// Recursive stuffle: interleave entries or merge two head entries by adding
// exponents and multiplying root-ratio labels; outer labels multiply.
IndexSum quasi_shuffle(const HarIndex& a, const HarIndex& b);

// True iff f[0] = 1 and f[u] f[v] = f[u sh v] whenever both sides fit the cap.
bool is_grouplike(const NCSeries& f);
// Same, reporting a violating pair when there is one.
bool is_grouplike(const NCSeries& f, std::pair<Word, Word>* witness);

// exp for the shuffle product: sum x^{sh n} / n!, truncated at the cap.
// Needs x[0] = 0.
NCSeries exp_sh(const NCSeries& x);

// exp for the concatenation product.  For x a Lie element (letters,
// brackets) this produces a point of the grouplike locus; it is the
// exponential that builds elements of Pi.
NCSeries exp_concat(const NCSeries& x);

NCSeries lie_bracket(const NCSeries& a, const NCSeries& b);

}  // namespace mhs
