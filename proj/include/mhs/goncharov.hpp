#pragma once

#include <functional>
#include <optional>

#include "mhs/series.hpp"

namespace mhs {

// An iterated-integral symbol I(upper; a_n, ..., a_1; lower).  Labels are
// small integers: 0 is the point 0, i in 1..N the root z_i = xi^i; other
// values serve as generic markers in symbolic checks.  The interior is
// stored bottom-up (index 0 is adjacent to the lower endpoint), so the word
// e_{u_n} ... e_{u_1} has interior (u_1, ..., u_n).
struct IWord {
    int lower = 0;
    std::vector<int> interior;
    int upper = 0;

    IWord() = default;
    IWord(int lo, std::vector<int> in, int up) : lower(lo), interior(std::move(in)), upper(up) {}

    size_t n() const { return interior.size(); }
    bool is_unit() const { return interior.empty(); }

    bool operator==(const IWord& o) const {
        return lower == o.lower && interior == o.interior && upper == o.upper;
    }
    bool operator<(const IWord& o) const;

    std::string str() const;  // "I(b; x, y; a)" listing the interior top-down
};

// Empty-interior symbols are the scalar 1 whatever their endpoints.
inline IWord unit_iword() { return IWord{0, {}, 0}; }

// The word e_{u_n} ... e_{u_1} read as a symbol between the given endpoints.
IWord word_to_iword(const Word& w, int lower, int upper);
Word iword_to_word(const IWord& iw);

// One term of the coaction: the selected subsequence on the left, the gap
// factors (unordered, unit factors dropped) on the right.
struct CoproductTerm {
    IWord left;                 // canonicalized to unit_iword() when empty
    std::vector<IWord> gaps;    // kept sorted

    void normalize();
    bool operator==(const CoproductTerm& o) const { return left == o.left && gaps == o.gaps; }
    bool operator<(const CoproductTerm& o) const;
    std::string str() const;
};

// Goncharov coaction: sum over subsequences of the interior; the left factor
// is the subsequence symbol, the right factors are the gap symbols between
// consecutive selected points (endpoints included).  2^n terms.
std::vector<CoproductTerm> gon_coproduct(const IWord& w);

// As above but with the gaps in bottom-to-top order and unit gaps kept; the
// last gap is always the one ending at the upper endpoint.
struct RawCoproductTerm {
    IWord left;
    std::vector<IWord> gaps;  // k+1 of them, bottom to top, units included
};
std::vector<RawCoproductTerm> gon_coproduct_raw(const IWord& w);

enum class PathKind {
    straight,        // constant interior vanishes (n >= 1)
    loop_conjugate,  // only the all-zero interior vanishes (n >= 1)
};

// True iff the symbol must vanish under the selected path kind.
bool vanishing_rule(const IWord& w, PathKind kind);

using IFunctional = std::function<CycNum(const IWord&)>;

// Path-composition formula: sum_k F(upper segment of length n-k) * G(lower
// segment of length k), the two segments meeting at the junction label.
CycNum compose_functionals(const IFunctional& F, const IFunctional& G, const IWord& w,
                           int junction);

struct Prop715Report {
    bool ok = true;
    std::optional<Word> witness;  // a word where the two expansions differ
};

// Symbolic identity behind the coaction of the adjoint-loop coefficients:
// expanding the coaction of sum_l e_0^l w matches, term by term, the
// coaction of w with the e_0 block redistributed onto the left slot and the
// top gap, once symbols with nonempty all-zero interior are killed.  With
// the vanishing rule disabled the match must fail.
Prop715Report verify_prop715(int cap, int level, bool vanishing_enabled = true);

}  // namespace mhs
