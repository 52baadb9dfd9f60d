#include "mhs/hopf.hpp"

#include <functional>
#include <sstream>

namespace mhs {

namespace {

void shuffle_rec(const Word& u, size_t i, const Word& v, size_t j, Word& acc, NCSeries& out) {
    if (i == u.size() && j == v.size()) {
        out.add_to(acc, CycNum::one(out.level()));
        return;
    }
    if (i < u.size()) {
        acc.letters.push_back(u.letters[i]);
        shuffle_rec(u, i + 1, v, j, acc, out);
        acc.letters.pop_back();
    }
    if (j < v.size()) {
        acc.letters.push_back(v.letters[j]);
        shuffle_rec(u, i, v, j + 1, acc, out);
        acc.letters.pop_back();
    }
}

int level_of(const Word& u, const Word& v) {
    return std::max(1, std::max(u.max_index(), v.max_index()));
}

}  // namespace

NCSeries shuffle(const Word& u, const Word& v, int level) {
    if (u.has_inverted() || v.has_inverted()) throw localized_letter();
    if (level == 0) level = level_of(u, v);
    NCSeries out(level, (int)(u.weight() + v.weight()));
    Word acc;
    acc.letters.reserve(u.size() + v.size());
    shuffle_rec(u, 0, v, 0, acc, out);
    return out;
}

NCSeries shuffle_mul(const NCSeries& f, const NCSeries& g) {
    f.check_compatible(g);
    NCSeries r(f.level(), f.cap());
    for (const auto& [u, cu] : f.terms()) {
        for (const auto& [v, cv] : g.terms()) {
            if (u.weight() + v.weight() > f.cap()) continue;
            CycNum c = cu * cv;
            NCSeries sh = shuffle(u, v, f.level());
            for (const auto& [w, m] : sh.terms()) r.add_to(w, m * c);
        }
    }
    return r;
}

std::vector<std::pair<Word, Word>> deconcat(const Word& w) {
    std::vector<std::pair<Word, Word>> out;
    out.reserve(w.size() + 1);
    for (size_t k = 0; k <= w.size(); ++k) out.emplace_back(w.prefix(k), w.suffix_from(k));
    return out;
}

void IndexSum::add(const HarIndex& idx, const CycNum& c) {
    auto it = terms.find(idx);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(idx, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

std::string IndexSum::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, c] : terms) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ") " << idx.str();
    }
    return out.str();
}

namespace {

struct Entry {
    long expo;
    int ratio;
};

// Stuffle on entry sequences in ascending order, recursing on the last
// (largest-variable) entries.
void stuffle_rec(std::vector<Entry>& a, std::vector<Entry>& b, std::vector<Entry>& acc,
                 int level, const HarIndex& proto, IndexSum& out) {
    if (a.empty() && b.empty()) {
        HarIndex idx = proto;
        idx.exponents.clear();
        idx.ratios.clear();
        for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
            idx.exponents.push_back(it->expo);
            idx.ratios.push_back(it->ratio);
        }
        out.add(idx, CycNum::one(level));
        return;
    }
    if (!a.empty()) {
        Entry e = a.back();
        a.pop_back();
        acc.push_back(e);
        stuffle_rec(a, b, acc, level, proto, out);
        acc.pop_back();
        a.push_back(e);
    }
    if (!b.empty()) {
        Entry e = b.back();
        b.pop_back();
        acc.push_back(e);
        stuffle_rec(a, b, acc, level, proto, out);
        acc.pop_back();
        b.push_back(e);
    }
    if (!a.empty() && !b.empty()) {
        Entry ea = a.back(), eb = b.back();
        a.pop_back();
        b.pop_back();
        acc.push_back(Entry{ea.expo + eb.expo, (ea.ratio + eb.ratio) % level});
        stuffle_rec(a, b, acc, level, proto, out);
        acc.pop_back();
        a.push_back(ea);
        b.push_back(eb);
    }
}

}  // namespace

IndexSum quasi_shuffle(const HarIndex& a, const HarIndex& b) {
    if (a.level != b.level) throw mixed_levels(a.level, b.level);
    std::vector<Entry> ea, eb;
    for (size_t j = 0; j < a.depth(); ++j) ea.push_back(Entry{a.exponents[j], a.ratios[j]});
    for (size_t j = 0; j < b.depth(); ++j) eb.push_back(Entry{b.exponents[j], b.ratios[j]});
    HarIndex proto;
    proto.level = a.level;
    proto.outer = (a.outer + b.outer) % a.level;
    proto.generalized = a.generalized || b.generalized;
    IndexSum out;
    std::vector<Entry> acc;
    stuffle_rec(ea, eb, acc, a.level, proto, out);
    return out;
}

bool is_grouplike(const NCSeries& f, std::pair<Word, Word>* witness) {
    if (f.coeff(Word{}) != CycNum::one(f.level())) {
        if (witness) *witness = {Word{}, Word{}};
        return false;
    }
    // enumerate all words of weight 1..cap-1 over the alphabet
    std::vector<Word> words;
    std::function<void(Word&, int)> gen = [&](Word& w, int rem) {
        if (!w.empty()) words.push_back(w);
        if (rem == 0) return;
        for (int i = 0; i <= f.level(); ++i) {
            w.letters.push_back(ez(i));
            gen(w, rem - 1);
            w.letters.pop_back();
        }
    };
    Word w;
    gen(w, f.cap() - 1);
    for (const Word& u : words) {
        for (const Word& v : words) {
            if (v < u) continue;
            if (u.weight() + v.weight() > f.cap()) continue;
            NCSeries sh = shuffle(u, v, f.level());
            CycNum lhs = CycNum::zero(f.level());
            for (const auto& [x, m] : sh.terms()) lhs += f.coeff(x) * m;
            if (lhs != f.coeff(u) * f.coeff(v)) {
                if (witness) *witness = {u, v};
                return false;
            }
        }
    }
    return true;
}

bool is_grouplike(const NCSeries& f) { return is_grouplike(f, nullptr); }

NCSeries exp_sh(const NCSeries& x) {
    if (!x.coeff(Word{}).is_zero()) throw nonzero_constant_term();
    NCSeries acc = NCSeries::unit(x.level(), x.cap());
    NCSeries pow = NCSeries::unit(x.level(), x.cap());
    Rat fact(1);
    for (int n = 1; n <= x.cap(); ++n) {
        pow = shuffle_mul(pow, x);
        if (pow.is_zero()) break;
        fact *= n;
        acc = acc + pow.scaled(Rat(1) / fact);
    }
    return acc;
}

NCSeries exp_concat(const NCSeries& x) {
    if (!x.coeff(Word{}).is_zero()) throw nonzero_constant_term();
    NCSeries acc = NCSeries::unit(x.level(), x.cap());
    NCSeries pow = NCSeries::unit(x.level(), x.cap());
    Rat fact(1);
    for (int n = 1; n <= x.cap(); ++n) {
        pow = concat_mul(pow, x);
        if (pow.is_zero()) break;
        fact *= n;
        acc = acc + pow.scaled(Rat(1) / fact);
    }
    return acc;
}

NCSeries lie_bracket(const NCSeries& a, const NCSeries& b) {
    return concat_mul(a, b) - concat_mul(b, a);
}

}  // namespace mhs
