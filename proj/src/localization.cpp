#include "mhs/localization.hpp"

#include "mhs/harmonic.hpp"

namespace mhs {

ZSeries ZSeries::truncated(int new_cap) const {
    if (new_cap >= order_cap()) return *this;
    ZSeries r(level_, new_cap);
    for (long n = 0; n <= new_cap; ++n) r.set_coeff(n, c_[(size_t)n]);
    return r;
}

ZSeries ZSeries::operator+(const ZSeries& o) const {
    check_level(o);
    int cap = std::min(order_cap(), o.order_cap());
    ZSeries r(level_, cap);
    for (long n = 0; n <= cap; ++n) r.set_coeff(n, c_[(size_t)n] + o.c_[(size_t)n]);
    return r;
}

ZSeries ZSeries::operator-(const ZSeries& o) const {
    check_level(o);
    int cap = std::min(order_cap(), o.order_cap());
    ZSeries r(level_, cap);
    for (long n = 0; n <= cap; ++n) r.set_coeff(n, c_[(size_t)n] - o.c_[(size_t)n]);
    return r;
}

ZSeries ZSeries::operator*(const ZSeries& o) const {
    check_level(o);
    int cap = std::min(order_cap(), o.order_cap());
    ZSeries r(level_, cap);
    for (long i = 0; i <= cap; ++i) {
        if (c_[(size_t)i].is_zero()) continue;
        for (long j = 0; i + j <= cap; ++j) {
            if (o.c_[(size_t)j].is_zero()) continue;
            r.set_coeff(i + j, r.coeff(i + j) + c_[(size_t)i] * o.c_[(size_t)j]);
        }
    }
    return r;
}

ZSeries ZSeries::scaled(const CycNum& k) const {
    ZSeries r(level_, order_cap());
    for (long n = 0; n <= order_cap(); ++n) r.set_coeff(n, c_[(size_t)n] * k);
    return r;
}

ZSeries ZSeries::derivative() const {
    if (order_cap() == 0) throw cap_too_small("derivative of an order-0 series");
    ZSeries r(level_, order_cap() - 1);
    for (long n = 0; n < order_cap(); ++n)
        r.set_coeff(n, c_[(size_t)n + 1].scaled(Rat(n + 1)));
    return r;
}

ZSeries apply_letter(const Letter& l, const ZSeries& f, KernelConvention kernel) {
    const int N = f.level();
    const int cap = f.order_cap();
    if (!l.inverted) {
        if (l.index == 0) {
            if (!f.at_zero().is_zero()) throw log_required();
            ZSeries r(N, cap);
            for (long n = 1; n <= cap; ++n) r.set_coeff(n, f.coeff(n).scaled(rat(1, n)));
            return r;
        }
        // c'_m = (1/m) sum_{k<m} c_k xi^{i(k-m)}; raw kernel flips the sign
        ZSeries r(N, cap);
        CycNum acc = CycNum::zero(N);  // running sum of c_k xi^{ik}
        for (long m = 1; m <= cap; ++m) {
            CycNum prev = f.coeff(m - 1);
            if (N > 1)
                prev = prev * CycNum::root_power(N, (long)l.index * (m - 1));
            acc += prev;
            CycNum v = acc.scaled(rat(1, m));
            if (N > 1) v = v * CycNum::root_power(N, -(long)l.index * m);
            if (kernel == KernelConvention::raw) v = -v;
            r.set_coeff(m, v);
        }
        return r;
    }
    if (l.index == 0) {
        // z f': exact at every kept order
        ZSeries r(N, cap);
        for (long n = 1; n <= cap; ++n) r.set_coeff(n, f.coeff(n).scaled(Rat(n)));
        return r;
    }
    // (z_i - z) f' normalized, (z - z_i) f' raw; cap drops by one
    ZSeries d = f.derivative();
    ZSeries zd(N, d.order_cap());
    for (long n = 1; n <= zd.order_cap(); ++n) zd.set_coeff(n, d.coeff(n - 1));
    CycNum a = CycNum::root_power(N, l.index);
    ZSeries r = d.scaled(a) - zd;
    if (kernel == KernelConvention::raw) r = zd - d.scaled(a);
    return r;
}

ZSeries li_loc(const Word& w, int level, int order_cap, KernelConvention kernel) {
    ZSeries f = ZSeries::one(level, order_cap);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        f = apply_letter(*it, f, kernel);
    return f;
}

Word generalized_word_n1(long l, const HarIndex& idx) {
    if (idx.level != 1) throw mixed_levels(idx.level, 1);
    Word w;
    auto push_e0_block = [&w](long count) {
        for (long k = 0; k < count; ++k) w.letters.push_back(e0());
        for (long k = 0; k > count; --k) w.letters.push_back(Letter{0, true});
    };
    if (l > 0) {
        push_e0_block(l - 1);
        w.letters.push_back(ez(1));
    }
    for (size_t j = idx.depth(); j-- > 0;) {
        push_e0_block(idx.exponents[j] - 1);
        w.letters.push_back(ez(1));
    }
    return w;
}

namespace {

// One application of the divided-difference step: d/dz as the operator
// difference e_0^{-1} - e_1^{-1} under the raw kernel.
ZSeries ddz_via_letters(const ZSeries& f) {
    ZSeries a = apply_letter(Letter{0, true}, f, KernelConvention::raw);
    ZSeries b = apply_letter(Letter{1, true}, f, KernelConvention::raw);
    return a - b;
}

}  // namespace

CycNum taylor_eval_sigma(long n, long l, const HarIndex& idx, int order_cap) {
    if (n < 1 || l < 1) throw error("taylor_eval_sigma: needs n, l >= 1");
    if (order_cap < n) throw cap_too_small("taylor_eval_sigma: order_cap < n");
    ZSeries f = li_loc(generalized_word_n1(l, idx), 1, order_cap);
    Rat fact(1);
    for (long m = 1; m <= n; ++m) {
        f = ddz_via_letters(f);
        fact *= m;
    }
    return f.at_zero().scaled(Rat(1) / fact);
}

CycNum taylor_eval_sigma_cumulative(long n, const HarIndex& idx, int order_cap) {
    if (n < 1) throw error("taylor_eval_sigma_cumulative: needs n >= 1");
    if (order_cap < n) throw cap_too_small("taylor_eval_sigma_cumulative: order_cap < n");
    ZSeries f = li_loc(generalized_word_n1(0, idx), 1, order_cap);
    CycNum total = CycNum::zero(1);
    Rat fact(1);
    for (long m = 1; m <= n; ++m) {
        f = ddz_via_letters(f);
        fact *= m;
        total += f.at_zero().scaled(Rat(1) / fact);
    }
    return total;
}

bool cumulative_boundary_check(long n, const HarIndex& idx, int order_cap,
                               CumulativeBoundary boundary) {
    CycNum v = taylor_eval_sigma_cumulative(n, idx, order_cap);
    CycNum target =
        boundary == CumulativeBoundary::reproduces_next ? sigma(n + 1, idx) : sigma(n, idx);
    return v == target;
}

}  // namespace mhs
