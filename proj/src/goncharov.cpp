#include "mhs/goncharov.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mhs {

bool IWord::operator<(const IWord& o) const {
    if (lower != o.lower) return lower < o.lower;
    if (upper != o.upper) return upper < o.upper;
    return interior < o.interior;
}

std::string IWord::str() const {
    std::ostringstream out;
    out << "I(" << upper << ';';
    for (size_t i = interior.size(); i-- > 0;) {
        out << interior[i];
        if (i) out << ',';
    }
    out << ';' << lower << ')';
    return out.str();
}

IWord word_to_iword(const Word& w, int lower, int upper) {
    if (w.has_inverted()) throw localized_letter();
    std::vector<int> interior;
    interior.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        interior.push_back((int)it->index);
    return IWord(lower, std::move(interior), upper);
}

Word iword_to_word(const IWord& iw) {
    Word w;
    for (auto it = iw.interior.rbegin(); it != iw.interior.rend(); ++it) {
        if (*it < 0 || *it > 255) throw bad_index("iword label out of letter range");
        w.letters.push_back(ez(*it));
    }
    return w;
}

void CoproductTerm::normalize() {
    if (left.is_unit()) left = unit_iword();
    gaps.erase(std::remove_if(gaps.begin(), gaps.end(),
                              [](const IWord& g) { return g.is_unit(); }),
               gaps.end());
    std::sort(gaps.begin(), gaps.end());
}

bool CoproductTerm::operator<(const CoproductTerm& o) const {
    if (!(left == o.left)) return left < o.left;
    return std::lexicographical_compare(gaps.begin(), gaps.end(), o.gaps.begin(), o.gaps.end());
}

std::string CoproductTerm::str() const {
    std::ostringstream out;
    out << left.str() << " (x)";
    if (gaps.empty()) out << " 1";
    for (const IWord& g : gaps) out << ' ' << g.str();
    return out.str();
}

std::vector<RawCoproductTerm> gon_coproduct_raw(const IWord& w) {
    const size_t n = w.n();
    std::vector<RawCoproductTerm> out;
    out.reserve((size_t)1 << n);
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        RawCoproductTerm term;
        std::vector<size_t> sel;  // selected interior positions, bottom-up
        for (size_t i = 0; i < n; ++i)
            if (mask & (1ul << i)) sel.push_back(i);
        std::vector<int> sub;
        for (size_t i : sel) sub.push_back(w.interior[i]);
        term.left = IWord(w.lower, std::move(sub), w.upper);
        // gaps between consecutive selected points, endpoints included
        long prev_pos = -1;
        int prev_label = w.lower;
        for (size_t t = 0; t <= sel.size(); ++t) {
            long next_pos = t < sel.size() ? (long)sel[t] : (long)n;
            int next_label = t < sel.size() ? w.interior[sel[t]] : w.upper;
            std::vector<int> gap(w.interior.begin() + (prev_pos + 1),
                                 w.interior.begin() + next_pos);
            term.gaps.push_back(IWord(prev_label, std::move(gap), next_label));
            prev_pos = next_pos;
            prev_label = next_label;
        }
        out.push_back(std::move(term));
    }
    return out;
}

std::vector<CoproductTerm> gon_coproduct(const IWord& w) {
    std::vector<CoproductTerm> out;
    for (RawCoproductTerm& raw : gon_coproduct_raw(w)) {
        CoproductTerm t;
        t.left = std::move(raw.left);
        t.gaps = std::move(raw.gaps);
        t.normalize();
        out.push_back(std::move(t));
    }
    return out;
}

bool vanishing_rule(const IWord& w, PathKind kind) {
    if (w.interior.empty()) return false;
    if (kind == PathKind::loop_conjugate)
        return std::all_of(w.interior.begin(), w.interior.end(), [](int a) { return a == 0; });
    return std::all_of(w.interior.begin(), w.interior.end(),
                       [&](int a) { return a == w.interior.front(); });
}

CycNum compose_functionals(const IFunctional& F, const IFunctional& G, const IWord& w,
                           int junction) {
    const size_t n = w.n();
    CycNum acc;
    bool first = true;
    for (size_t k = 0; k <= n; ++k) {
        IWord bottom(w.lower, {w.interior.begin(), w.interior.begin() + k}, junction);
        IWord top(junction, {w.interior.begin() + k, w.interior.end()}, w.upper);
        CycNum v = F(top) * G(bottom);
        acc = first ? v : acc + v;
        first = false;
    }
    return acc;
}

namespace {

using TermMap = std::map<CoproductTerm, long>;

void add_term(TermMap& m, CoproductTerm t, long c, bool vanishing_enabled) {
    t.normalize();
    if (vanishing_enabled) {
        if (vanishing_rule(t.left, PathKind::loop_conjugate)) return;
        for (const IWord& g : t.gaps)
            if (vanishing_rule(g, PathKind::loop_conjugate)) return;
    }
    m[t] += c;
    if (m[t] == 0) m.erase(t);
}

std::vector<Word> all_words(int level, int max_weight) {
    std::vector<Word> out{Word{}};
    std::function<void(Word&, int)> gen = [&](Word& w, int rem) {
        if (rem == 0) return;
        for (int i = 0; i <= level; ++i) {
            w.letters.push_back(ez(i));
            out.push_back(w);
            gen(w, rem - 1);
            w.letters.pop_back();
        }
    };
    Word w;
    gen(w, max_weight);
    return out;
}

}  // namespace

Prop715Report verify_prop715(int cap, int level, bool vanishing_enabled) {
    Prop715Report rep;
    for (const Word& w : all_words(level, cap)) {
        // Left route: coact on the whole block sum_{l} e_0^l w.
        TermMap lhs;
        for (long l = 0; l + w.weight() <= cap; ++l) {
            IWord iw = word_to_iword(word_e0_pow(l).concat(w), 0, 0);
            for (RawCoproductTerm& raw : gon_coproduct_raw(iw)) {
                CoproductTerm t;
                t.left = std::move(raw.left);
                t.gaps = std::move(raw.gaps);
                add_term(lhs, std::move(t), 1, vanishing_enabled);
            }
        }
        // Right route: coact on w alone, then redistribute the e_0 block
        // over the left slot (l' copies) and the top gap (a copies).
        TermMap rhs;
        IWord base = word_to_iword(w, 0, 0);
        for (const RawCoproductTerm& raw : gon_coproduct_raw(base)) {
            for (long lp = 0; lp + w.weight() <= cap; ++lp) {
                for (long a = 0; lp + a + w.weight() <= cap; ++a) {
                    CoproductTerm t;
                    t.left = raw.left;
                    t.left.interior.insert(t.left.interior.end(), (size_t)lp, 0);
                    t.gaps = raw.gaps;
                    IWord& top = t.gaps.back();
                    top.interior.insert(top.interior.end(), (size_t)a, 0);
                    add_term(rhs, std::move(t), 1, vanishing_enabled);
                }
            }
        }
        if (lhs != rhs) {
            rep.ok = false;
            rep.witness = w;
            return rep;
        }
    }
    return rep;
}

}  // namespace mhs
