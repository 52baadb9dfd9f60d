#include "mhs/word.hpp"

#include <algorithm>
#include <sstream>

namespace mhs {

long Word::signed_weight() const {
    long w = 0;
    for (const Letter& l : letters) w += l.inverted ? -1 : 1;
    return w;
}

long Word::depth() const {
    long d = 0;
    for (const Letter& l : letters)
        if (!l.is_e0() && !l.inverted) ++d;
    return d;
}

bool Word::has_inverted() const {
    for (const Letter& l : letters)
        if (l.inverted) return true;
    return false;
}

int Word::max_index() const {
    int m = 0;
    for (const Letter& l : letters) m = std::max(m, (int)l.index);
    return m;
}

Word Word::concat(const Word& o) const {
    Word r = *this;
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r;
}

Word Word::reversed() const {
    Word r = *this;
    std::reverse(r.letters.begin(), r.letters.end());
    return r;
}

bool Word::operator<(const Word& o) const {
    if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
    return std::lexicographical_compare(letters.begin(), letters.end(),
                                        o.letters.begin(), o.letters.end());
}

std::string Word::str() const {
    if (letters.empty()) return "(empty)";
    std::string s;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) s += ' ';
        const Letter& l = letters[i];
        if (l.index == 0)
            s += "e0";
        else if (l.index == 1)
            s += "e1";
        else
            s += "ez" + std::to_string((int)l.index);
        if (l.inverted) s += "^-1";
    }
    return s;
}

Word Word::parse(const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "(empty)" || tok == "1") continue;
        bool inv = false;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            inv = true;
            tok = tok.substr(0, tok.size() - 3);
        }
        int idx;
        if (tok == "e0")
            idx = 0;
        else if (tok == "e1")
            idx = 1;
        else if (tok.rfind("ez", 0) == 0)
            idx = std::stoi(tok.substr(2));
        else
            throw bad_index("cannot parse letter '" + tok + "'");
        if (idx < 0 || idx > 255) throw bad_index("letter index out of range");
        w.letters.push_back(Letter{(uint8_t)idx, inv});
    }
    return w;
}

HarIndex HarIndex::from_display(std::vector<long> display, int level) {
    for (long s : display)
        if (s < 1) throw bad_index("classical index needs all exponents >= 1");
    HarIndex idx = generalized_from_display(std::move(display), level);
    idx.generalized = false;
    return idx;
}

HarIndex HarIndex::generalized_from_display(std::vector<long> display, int level) {
    HarIndex idx;
    idx.level = level;
    idx.generalized = true;
    std::reverse(display.begin(), display.end());
    idx.exponents = std::move(display);
    idx.ratios.assign(idx.exponents.size(), 0);
    idx.outer = 0;
    return idx;
}

long HarIndex::weight() const {
    long w = 0;
    for (long s : exponents) w += s;
    return w;
}

bool HarIndex::classical() const {
    if (generalized)
        for (long s : exponents)
            if (s < 1) return false;
    return true;
}

std::vector<int> HarIndex::labels() const {
    // L_{d+1} = outer, L_j = L_{j+1} - y_j (as xi-exponents mod N)
    size_t d = depth();
    std::vector<int> lab(d + 1);
    int cur = outer;
    lab[d] = cur;
    for (size_t j = d; j-- > 0;) {
        cur = (int)(((cur - ratios[j]) % level + level) % level);
        lab[j] = cur;
    }
    return lab;
}

HarIndex HarIndex::reversed() const {
    if (level != 1) throw bad_index("reversed() is defined for N=1 indices");
    HarIndex r = *this;
    std::reverse(r.exponents.begin(), r.exponents.end());
    return r;
}

bool HarIndex::operator==(const HarIndex& o) const {
    return level == o.level && exponents == o.exponents && ratios == o.ratios &&
           outer == o.outer;
}

bool HarIndex::operator<(const HarIndex& o) const {
    if (level != o.level) return level < o.level;
    if (exponents != o.exponents) return exponents < o.exponents;
    if (ratios != o.ratios) return ratios < o.ratios;
    return outer < o.outer;
}

std::string HarIndex::str() const {
    std::ostringstream out;
    out << '(';
    size_t d = depth();
    if (level == 1) {
        for (size_t j = d; j-- > 0;) {
            out << exponents[j];
            if (j) out << ',';
        }
    } else {
        std::vector<int> lab = labels();
        for (size_t j = d + 1; j-- > 0;) {
            out << "xi^" << lab[j] << ':' << (j > 0 ? exponents[j - 1] : 1);
            if (j) out << ", ";
        }
    }
    out << ')';
    return out.str();
}

namespace {

std::vector<std::string> split_commas(const std::string& inner) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : inner) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!isspace((unsigned char)c)) {
            cur += c;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

}  // namespace

HarIndex HarIndex::parse(const std::string& text, int level) {
    std::string s = text;
    auto l = s.find('(');
    auto r = s.rfind(')');
    if (l == std::string::npos || r == std::string::npos || r < l)
        throw bad_index("index literal needs surrounding parentheses: " + text);
    std::vector<std::string> parts = split_commas(s.substr(l + 1, r - l - 1));
    if (parts.empty()) {
        HarIndex idx;
        idx.level = level;
        return idx;
    }
    if (parts[0].find(':') == std::string::npos) {
        std::vector<long> display;
        for (const std::string& p : parts) display.push_back(std::stol(p));
        bool classical = std::all_of(display.begin(), display.end(), [](long x) { return x >= 1; });
        return classical ? from_display(display, level)
                         : generalized_from_display(display, level);
    }
    // cyclotomic syntax: (xi^a:s_d, ..., xi^a:s_1, xi^a:1)
    std::vector<int> lab_display;
    std::vector<long> exp_display;
    for (const std::string& p : parts) {
        auto colon = p.find(':');
        std::string root = p.substr(0, colon);
        if (root.rfind("xi^", 0) != 0) throw bad_index("bad root label '" + root + "'");
        lab_display.push_back(std::stoi(root.substr(3)));
        exp_display.push_back(std::stol(p.substr(colon + 1)));
    }
    if (exp_display.back() != 1)
        throw bad_index("cyclotomic index literal must end with the sentinel ':1'");
    size_t d = parts.size() - 1;
    HarIndex idx;
    idx.level = level;
    idx.exponents.resize(d);
    idx.ratios.resize(d);
    // display lists j = d+1 down to 1
    for (size_t j = 0; j < d; ++j) idx.exponents[d - 1 - j] = exp_display[j];
    std::vector<int> lab(d + 1);
    for (size_t j = 0; j <= d; ++j) lab[d - j] = ((lab_display[j] % level) + level) % level;
    for (size_t j = 0; j < d; ++j)
        idx.ratios[j] = (int)(((lab[j + 1] - lab[j]) % level + level) % level);
    idx.outer = lab[d];
    for (long s : idx.exponents)
        if (s < 1) idx.generalized = true;
    return idx;
}

Word index_to_word(const HarIndex& idx, WordConvention convention) {
    for (long s : idx.exponents)
        if (s < 1) throw bad_index("index_to_word needs all s_i >= 1");
    size_t d = idx.depth();
    Word w;
    if (convention == WordConvention::N1) {
        if (idx.level != 1) throw bad_index("N1 word convention requires level 1");
        for (size_t j = d; j-- > 0;) {
            for (long k = 1; k < idx.exponents[j]; ++k) w.letters.push_back(e0());
            w.letters.push_back(ez(1));
        }
        return w;
    }
    // cyclotomic: e_{z_{i_{d+1}}} e_0^{s_d-1} e_{z_{i_d}} ... e_0^{s_1-1} e_{z_{i_1}}
    std::vector<int> lab = idx.labels();
    auto letter_of = [&](int cls) {
        int i = ((cls - 1) % idx.level + idx.level) % idx.level + 1;  // xi^i with i in 1..N
        return ez(i);
    };
    w.letters.push_back(letter_of(lab[d]));
    for (size_t j = d; j-- > 0;) {
        for (long k = 1; k < idx.exponents[j]; ++k) w.letters.push_back(e0());
        w.letters.push_back(letter_of(lab[j]));
    }
    return w;
}

HarIndex word_to_index(const Word& w, WordConvention convention, int level) {
    if (w.has_inverted()) throw bad_index("word_to_index: inverted letters not allowed");
    if (convention == WordConvention::N1) {
        if (w.empty()) {
            HarIndex idx;
            idx.level = 1;
            return idx;
        }
        if (w.letters.back().is_e0()) throw bad_index("not an admissible N1 word (ends in e0)");
        std::vector<long> display;  // built s_d first
        long zeros = 0;
        for (const Letter& l : w.letters) {
            if (l.is_e0()) {
                ++zeros;
            } else {
                if (l.index != 1) throw bad_index("N1 word may only use e0/e1");
                display.push_back(zeros + 1);
                zeros = 0;
            }
        }
        return HarIndex::from_display(display, 1);
    }
    // cyclotomic: first and last letters are non-e0
    if (w.empty()) {
        HarIndex idx;
        idx.level = level;
        return idx;
    }
    if (w.letters.front().is_e0() || w.letters.back().is_e0())
        throw bad_index("not an admissible cyclotomic word");
    std::vector<int> lab_display;   // z_{i_{d+1}}, z_{i_d}, ..., z_{i_1}
    std::vector<long> exp_display;  // s_d, ..., s_1
    long zeros = 0;
    bool first = true;
    for (const Letter& l : w.letters) {
        if (l.is_e0()) {
            ++zeros;
        } else {
            if (l.index > level) throw bad_index("letter index exceeds level");
            if (!first) exp_display.push_back(zeros + 1);
            lab_display.push_back(l.index % level);
            zeros = 0;
            first = false;
        }
    }
    if (zeros != 0) throw bad_index("not an admissible cyclotomic word");
    size_t d = exp_display.size();
    HarIndex idx;
    idx.level = level;
    idx.exponents.resize(d);
    idx.ratios.resize(d);
    for (size_t j = 0; j < d; ++j) idx.exponents[d - 1 - j] = exp_display[j];
    std::vector<int> lab(d + 1);
    for (size_t j = 0; j <= d; ++j) lab[d - j] = lab_display[j];
    for (size_t j = 0; j < d; ++j)
        idx.ratios[j] = (int)(((lab[j + 1] - lab[j]) % level + level) % level);
    idx.outer = lab[d];
    return idx;
}

}  // namespace mhs
