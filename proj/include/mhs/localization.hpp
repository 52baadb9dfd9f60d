#pragma once

#include "mhs/word.hpp"

namespace mhs {

// Truncated power series in z with exact cyclotomic coefficients, the home
// of series expansions of hyperlogarithms at 0.  Genuine log terms are not
// modeled: integrating a nonzero constant term against dz/z raises instead.
// Operators that need the (unknown) coefficient above the cap lower the cap
// of their result; binary operations truncate to the smaller cap.
class ZSeries {
  public:
    ZSeries(int level, int order_cap)
        : level_(level), c_((size_t)order_cap + 1, CycNum::zero(level)) {}

    static ZSeries one(int level, int order_cap) {
        ZSeries f(level, order_cap);
        f.c_[0] = CycNum::one(level);
        return f;
    }

    int level() const { return level_; }
    int order_cap() const { return (int)c_.size() - 1; }
    const CycNum& coeff(long n) const { return c_[(size_t)n]; }
    void set_coeff(long n, const CycNum& v) { c_[(size_t)n] = v; }
    CycNum at_zero() const { return c_[0]; }

    ZSeries truncated(int new_cap) const;
    ZSeries operator+(const ZSeries& o) const;
    ZSeries operator-(const ZSeries& o) const;
    ZSeries operator*(const ZSeries& o) const;
    ZSeries scaled(const CycNum& k) const;
    ZSeries derivative() const;  // cap drops by one

    bool operator==(const ZSeries& o) const { return level_ == o.level_ && c_ == o.c_; }

  private:
    int level_;
    std::vector<CycNum> c_;  // c_[n] is the z^n coefficient

    void check_level(const ZSeries& o) const {
        if (level_ != o.level_) throw mixed_levels(level_, o.level_);
    }
};

enum class KernelConvention {
    normalized,  // e_{z_i} integrates against dz/(z_i - z): positive displays
    raw,         // dz/(z - z_i), the literal kernel
};

// Letters as operators on ZSeries:
//   e_0          f -> sum c_n z^n / n       (needs c_0 = 0, else log_required)
//   e_{z_i}      f -> the kernel integral; prefix sums twisted by xi^i
//   e_0^{-1}     f -> z f'
//   e_{z_i}^{-1} f -> (z_i - z) f'  (normalized) or (z - z_i) f'  (raw)
// Inverse letters at i != 0 lower the cap by one.
ZSeries apply_letter(const Letter& l, const ZSeries& f,
                     KernelConvention kernel = KernelConvention::normalized);

// Fold of apply_letter over the word, rightmost letter first, starting from
// the constant series 1.
ZSeries li_loc(const Word& w, int level, int order_cap,
               KernelConvention kernel = KernelConvention::normalized);

// The N=1 word e_0^{l-1} e_1 e_0^{s_d-1} e_1 ... e_0^{s_1-1} e_1 of a
// generalized index, negative exponent blocks realized by inverted letters;
// l = 0 omits the prefix block.
Word generalized_word_n1(long l, const HarIndex& idx);

// First Corollary 4.5 display: the n-th divided derivative of
// li_loc(word of (l, idx)) at 0, i.e. its z^n coefficient; must equal
// sigma_n(idx) / n^l.  (d/dz = e_0^{-1} - e_1^{-1} under the raw kernel.)
CycNum taylor_eval_sigma(long n, long l, const HarIndex& idx, int order_cap);

// Second display: the cumulative sum over m <= n of divided derivatives at
// 0.  Under the strict < bound of the sums this reproduces sigma_{n+1}, not
// sigma_n; the boundary flag says which comparison to make.
enum class CumulativeBoundary { reproduces_next, reproduces_same };
CycNum taylor_eval_sigma_cumulative(long n, const HarIndex& idx, int order_cap);
bool cumulative_boundary_check(long n, const HarIndex& idx, int order_cap,
                               CumulativeBoundary boundary);

}  // namespace mhs
