#include "mhs/series.hpp"

#include <sstream>

namespace mhs {

NCSeries NCSeries::monomial(int level, int cap, const Word& w, const CycNum& c) {
    NCSeries f(level, cap);
    f.set(w, c);
    return f;
}

void NCSeries::check_word(const Word& w) const {
    if (!localized_ && w.has_inverted()) throw localized_letter();
    if (w.max_index() > level_)
        throw bad_index("letter index exceeds series level " + std::to_string(level_));
}

CycNum NCSeries::coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? CycNum::zero(level_) : it->second;
}

void NCSeries::set(const Word& w, const CycNum& c) {
    check_word(w);
    if (w.weight() > cap_) return;
    if (c.is_zero())
        t_.erase(w);
    else
        t_[w] = c;
}

void NCSeries::add_to(const Word& w, const CycNum& c) {
    check_word(w);
    if (w.weight() > cap_) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        if (!c.is_zero()) t_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

NCSeries NCSeries::weight_part(long s) const {
    NCSeries r(level_, cap_, localized_);
    for (const auto& [w, c] : t_)
        if (w.weight() == s) r.set(w, c);
    return r;
}

NCSeries NCSeries::operator+(const NCSeries& o) const {
    check_compatible(o);
    NCSeries r = *this;
    r.localized_ = localized_ || o.localized_;
    for (const auto& [w, c] : o.t_) r.add_to(w, c);
    return r;
}

NCSeries NCSeries::operator-(const NCSeries& o) const { return *this + (-o); }

NCSeries NCSeries::operator-() const {
    NCSeries r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
}

NCSeries NCSeries::scaled(const CycNum& c) const {
    NCSeries r(level_, cap_, localized_);
    if (c.is_zero()) return r;
    for (const auto& [w, x] : t_) r.set(w, x * c);
    return r;
}

std::string NCSeries::str() const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : t_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        if (!w.empty()) out << " " << w.str();
    }
    return out.str();
}

NCSeries concat_mul(const NCSeries& f, const NCSeries& g) {
    f.check_compatible(g);
    NCSeries r(f.level(), f.cap(), f.localized() || g.localized());
    for (const auto& [u, cu] : f.terms()) {
        for (const auto& [v, cv] : g.terms()) {
            if (u.weight() + v.weight() > f.cap()) continue;
            r.add_to(u.concat(v), cu * cv);
        }
    }
    return r;
}

NCSeries concat_inverse(const NCSeries& f) {
    if (f.coeff(Word{}) != CycNum::one(f.level()))
        throw error("concat_inverse: constant term must be 1");
    NCSeries rest = f;
    rest.set(Word{}, CycNum::zero(f.level()));  // f = 1 + rest
    NCSeries acc = NCSeries::unit(f.level(), f.cap());
    NCSeries pow = NCSeries::unit(f.level(), f.cap());
    for (int k = 1; k <= f.cap(); ++k) {
        pow = concat_mul(pow, rest);
        if (pow.is_zero()) break;
        acc = (k % 2) ? acc - pow : acc + pow;
    }
    return acc;
}

NCSeries concat_pow(const NCSeries& f, long e) {
    NCSeries r = NCSeries::unit(f.level(), f.cap());
    for (long i = 0; i < e; ++i) r = concat_mul(r, f);
    return r;
}

}  // namespace mhs
