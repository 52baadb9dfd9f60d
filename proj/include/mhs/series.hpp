#pragma once

#include <map>
#include <string>

#include "mhs/word.hpp"

namespace mhs {

// Weight-truncated noncommutative series with exact coefficients.  The cap is
// explicit and mandatory: operations never extend precision, so every series
// identity is quantified up to the cap and nowhere else.  Absent words mean
// coefficient zero; zero coefficients are never stored.
class NCSeries {
  public:
    NCSeries(int level, int cap, bool localized = false)
        : level_(level), cap_(cap), localized_(localized) {}

    static NCSeries unit(int level, int cap) {
        NCSeries f(level, cap);
        f.set(Word{}, CycNum::one(level));
        return f;
    }
    static NCSeries monomial(int level, int cap, const Word& w, const CycNum& c);

    int level() const { return level_; }
    int cap() const { return cap_; }
    bool localized() const { return localized_; }

    const std::map<Word, CycNum>& terms() const { return t_; }
    CycNum coeff(const Word& w) const;
    void set(const Word& w, const CycNum& c);
    void add_to(const Word& w, const CycNum& c);

    bool is_zero() const { return t_.empty(); }
    NCSeries weight_part(long s) const;

    NCSeries operator+(const NCSeries& o) const;
    NCSeries operator-(const NCSeries& o) const;
    NCSeries operator-() const;
    NCSeries scaled(const CycNum& c) const;
    NCSeries scaled(const Rat& q) const { return scaled(CycNum(q, level_)); }

    bool operator==(const NCSeries& o) const {
        return level_ == o.level_ && cap_ == o.cap_ && t_ == o.t_;
    }
    bool operator!=(const NCSeries& o) const { return !(*this == o); }

    std::string str() const;

    void check_compatible(const NCSeries& o) const {
        if (level_ != o.level_) throw mixed_levels(level_, o.level_);
        if (cap_ != o.cap_) throw cap_mismatch(cap_, o.cap_);
    }

  private:
    int level_;
    int cap_;
    bool localized_;
    std::map<Word, CycNum> t_;

    void check_word(const Word& w) const;
};

// Concatenation product; terms of weight > cap are discarded.
NCSeries concat_mul(const NCSeries& f, const NCSeries& g);

// Inverse for the concatenation product; needs constant term 1.
NCSeries concat_inverse(const NCSeries& f);

// f^e under concatenation, e >= 0.
NCSeries concat_pow(const NCSeries& f, long e);

}  // namespace mhs
