#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mhs/cyclotomic.hpp"

namespace mhs {

// One letter of the alphabet e_Z = {e_0, e_{z_1}, ..., e_{z_N}}, with z_i =
// xi^i (so z_N = 1 and, at level 1, "e1" is e_{z_1}).  index 0 means e_0.
// Inverted letters are the formal inverses of the localization; they are
// only legal where a context explicitly says so.
struct Letter {
    uint8_t index = 0;
    bool inverted = false;

    bool operator==(const Letter& o) const { return index == o.index && inverted == o.inverted; }
    bool operator<(const Letter& o) const {
        if (index != o.index) return index < o.index;
        return inverted < o.inverted;
    }
    bool is_e0() const { return index == 0; }
};

inline Letter e0() { return Letter{0, false}; }
inline Letter ez(int i) { return Letter{(uint8_t)i, false}; }

struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    // Plain weight counts every letter; the signed variant counts inverted
    // letters as -1 (only meaningful in localized contexts).
    long weight() const { return (long)letters.size(); }
    long signed_weight() const;
    // Depth: letters that are not e_0 and not inverted.
    long depth() const;
    bool has_inverted() const;
    int max_index() const;

    Word concat(const Word& o) const;
    Word prefix(size_t k) const { return Word({letters.begin(), letters.begin() + k}); }
    Word suffix_from(size_t k) const { return Word({letters.begin() + k, letters.end()}); }
    Word reversed() const;

    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator!=(const Word& o) const { return !(*this == o); }
    bool operator<(const Word& o) const;  // by length, then lexicographic

    // Literal syntax: "e0 e1 e1", inverses as "e0^-1"; level-N letters "ez3".
    std::string str() const;
    static Word parse(const std::string& text);
};

inline Word word_e0_pow(long l) {
    Word w;
    w.letters.assign((size_t)l, e0());
    return w;
}

// A composition (s_d, ..., s_1) with mu_N root data, stored internally in
// ascending summation-variable order (s_1 first); display follows the
// (s_d, ..., s_1) convention.  Root data is kept as the consecutive-label
// ratios y_j = z_{i_{j+1}} / z_{i_j} plus the outer label z_{i_{d+1}}, each
// as an exponent class of xi mod N; together they determine all labels.
struct HarIndex {
    int level = 1;
    std::vector<long> exponents;   // s_1, ..., s_d
    std::vector<int> ratios;       // y_1, ..., y_d as xi-exponents mod N
    int outer = 0;                 // z_{i_{d+1}} as a xi-exponent mod N
    bool generalized = false;      // allows exponents outside N^*

    HarIndex() = default;
    // Classical N=1 index from display order (s_d, ..., s_1).
    static HarIndex from_display(std::vector<long> display, int level = 1);
    // Generalized index (integer exponents allowed), display order.
    static HarIndex generalized_from_display(std::vector<long> display, int level = 1);

    size_t depth() const { return exponents.size(); }
    long weight() const;
    bool classical() const;
    void require_classical() const {
        if (!classical()) throw generalized_index();
    }

    // Labels z_{i_1}, ..., z_{i_{d+1}} as xi-exponents, recovered from
    // ratios and the outer label.
    std::vector<int> labels() const;

    HarIndex reversed() const;  // reverses exponents (N = 1 only)

    bool operator==(const HarIndex& o) const;
    bool operator<(const HarIndex& o) const;

    // "(2,1)" for N=1; "(xi^1:2, xi^0:1)" in the cyclotomic syntax, listing
    // (z_{i_{j+1}} : s_j) from j = d down to 1 and ending with the innermost
    // label paired with the sentinel exponent 1.
    std::string str() const;
    static HarIndex parse(const std::string& text, int level = 1);
};

enum class WordConvention {
    N1,          // e_0^{s_d-1} e_1 ... e_0^{s_1-1} e_1         (level 1 only)
    cyclotomic,  // e_{z_{i_{d+1}}} e_0^{s_d-1} e_{z_{i_d}} ... e_0^{s_1-1} e_{z_{i_1}}
};

Word index_to_word(const HarIndex& idx, WordConvention convention);
HarIndex word_to_index(const Word& w, WordConvention convention, int level = 1);

}  // namespace mhs
