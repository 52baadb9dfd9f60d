#include "mhs/ihara.hpp"

namespace mhs {

NCSeries tau_scale(const Rat& lambda, const NCSeries& f) {
    NCSeries r(f.level(), f.cap(), f.localized());
    for (const auto& [w, c] : f.terms()) r.set(w, c.scaled(rat_pow(lambda, w.weight())));
    return r;
}

NCSeries rotation_pushforward(int root_index, const NCSeries& g) {
    const int N = g.level();
    NCSeries r(N, g.cap(), g.localized());
    for (const auto& [w, c] : g.terms()) {
        Word rw = w;
        for (Letter& l : rw.letters) {
            if (l.index == 0) continue;
            l.index = (uint8_t)(((int)l.index + root_index - 1) % N + 1);
        }
        r.add_to(rw, c);
    }
    return r;
}

NCSeries ihara_substitute(const std::vector<NCSeries>& tuple, const NCSeries& f) {
    const int N = f.level();
    if ((long)tuple.size() != N) throw error("ihara_substitute: tuple size must equal the level");
    for (const NCSeries& g : tuple) f.check_compatible(g);
    // per-letter substitution series: e_0 -> e_0, e_{z_i} -> g_i^{-1} e_{z_i} g_i
    std::vector<NCSeries> sub;
    sub.reserve(N + 1);
    sub.push_back(NCSeries::monomial(N, f.cap(), Word({e0()}), CycNum::one(N)));
    for (int i = 1; i <= N; ++i) {
        const NCSeries& g = tuple[i - 1];
        NCSeries mid = NCSeries::monomial(N, f.cap(), Word({ez(i)}), CycNum::one(N));
        sub.push_back(concat_mul(concat_mul(concat_inverse(g), mid), g));
    }
    NCSeries out(N, f.cap());
    for (const auto& [w, c] : f.terms()) {
        NCSeries prod = NCSeries::unit(N, f.cap());
        for (const Letter& l : w.letters) {
            prod = concat_mul(prod, sub[l.index]);
            if (prod.is_zero()) break;
        }
        out = out + prod.scaled(c);
    }
    return out;
}

NCSeries ihara_action(const NCSeries& g, const NCSeries& f, IharaVariant variant) {
    g.check_compatible(f);
    const int N = g.level();
    std::vector<NCSeries> tuple;
    for (int i = 1; i <= N; ++i)
        tuple.push_back(i == N ? g : rotation_pushforward(i, g));
    NCSeries subst = ihara_substitute(tuple, f);
    return variant == IharaVariant::on_00 ? subst : concat_mul(g, subst);
}

NCSeries sigma_inv_dr(const Word& w, const Rat& lambda, int level, int cap) {
    if (w.weight() > cap) throw cap_too_small("sigma_inv_dr: weight(w) > cap");
    NCSeries r(level, cap);
    Rat lp(1);
    for (long l = 0; l + w.weight() <= cap; ++l) {
        r.add_to(word_e0_pow(l).concat(w), CycNum(lp, level));
        lp *= lambda;
    }
    return r;
}

CycNum adjoint_coeff(const NCSeries& phi, int root_index, const Word& w) {
    const int N = phi.level();
    if (w.weight() + 1 > phi.cap()) throw cap_too_small("adjoint_coeff: weight(w) + 1 > cap");
    NCSeries rotated = rotation_pushforward(root_index, phi);
    NCSeries mid = NCSeries::monomial(N, phi.cap(), Word({ez(root_index)}), CycNum::one(N));
    NCSeries ad = concat_mul(concat_mul(concat_inverse(rotated), mid), rotated);
    CycNum acc = CycNum::zero(N);
    for (long l = 0; l + w.weight() <= phi.cap(); ++l)
        acc += ad.coeff(word_e0_pow(l).concat(w));
    return acc;
}

CycNum har_mot_eval(const NCSeries& phi, const HarIndex& idx) {
    const int N = phi.level();
    if (idx.level != N) throw mixed_levels(idx.level, N);
    Word w = index_to_word(idx, WordConvention::cyclotomic);
    CycNum acc = CycNum::zero(N);
    for (int i = 1; i <= N; ++i) {
        CycNum zinv = CycNum::root_power(N, -(long)i);
        acc += zinv * adjoint_coeff(phi, i, w);
    }
    if (idx.depth() % 2 == 1) acc = -acc;
    return acc;
}

NCSeries ConstSeries::expand() const {
    NCSeries r(level, cap);
    for (const auto& [w, c] : coeffs)
        for (long l = 0; l + w.weight() <= cap; ++l) r.add_to(word_e0_pow(l).concat(w), c);
    return r;
}

ConstSeries ConstSeries::constant_one(int level, int cap) {
    ConstSeries f;
    f.level = level;
    f.cap = cap;
    f.coeffs[Word{}] = CycNum::one(level);
    return f;
}

bool HarmonicActionResult::all_stabilized() const {
    for (const auto& e : entries)
        if (!e.value) return false;
    return true;
}

namespace {

// e_0-stripped words of weight <= cap over the level alphabet.
std::vector<Word> stripped_words(int level, int cap) {
    std::vector<Word> out{Word{}};
    std::function<void(Word&, int)> gen = [&](Word& w, int rem) {
        if (!w.empty() && !w.letters.front().is_e0()) out.push_back(w);
        if (rem == 0) return;
        for (int i = 0; i <= level; ++i) {
            if (w.empty() && i == 0) continue;
            w.letters.push_back(ez(i));
            gen(w, rem - 1);
            w.letters.pop_back();
        }
    };
    Word w;
    gen(w, cap);
    return out;
}

}  // namespace

HarmonicActionResult harmonic_action_dr_rt(const std::vector<NCSeries>& tuple,
                                           const std::function<ConstSeries(long)>& F,
                                           long n_max, int window) {
    if (tuple.empty()) throw error("harmonic_action_dr_rt: empty tuple");
    const int N = tuple.front().level();
    const int cap = tuple.front().cap();
    if (window < 1) throw window_too_small("stabilization window must be >= 1");
    HarmonicActionResult res;
    for (long n = 1; n <= n_max; ++n) {
        std::vector<NCSeries> twisted;
        for (const NCSeries& g : tuple) twisted.push_back(tau_scale(Rat(n), g));
        ConstSeries fn = F(n);
        NCSeries h = ihara_substitute(twisted, fn.expand());
        HarmonicActionEntry entry;
        entry.n = n;
        ConstSeries out;
        out.level = N;
        out.cap = cap;
        bool ok = true;
        for (const Word& w : stripped_words(N, cap)) {
            long lmax = cap - w.weight();
            long lmin = std::max(0L, lmax - window + 1);
            CycNum tail = h.coeff(word_e0_pow(lmax).concat(w));
            for (long l = lmin; l < lmax; ++l) {
                if (h.coeff(word_e0_pow(l).concat(w)) != tail) {
                    entry.witness = w;
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
            if (!tail.is_zero()) out.coeffs[w] = tail;
        }
        if (ok) entry.value = std::move(out);
        res.entries.push_back(std::move(entry));
    }
    return res;
}

uint64_t GrouplikeGen::next() {
    // splitmix64
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long GrouplikeGen::next_in(long lo, long hi) {
    return lo + (long)(next() % (uint64_t)(hi - lo + 1));
}

NCSeries GrouplikeGen::point(int level, int cap, bool zero_e0) {
    NCSeries acc = NCSeries::unit(level, cap);
    int pieces = (int)next_in(2, 4);
    for (int k = 0; k < pieces; ++k) {
        int a = (int)next_in(zero_e0 ? 1 : 0, level);
        Rat c = rat(next_in(-3, 3), next_in(1, 3));
        NCSeries x(level, cap);
        if (next() % 2 == 0) {
            x.set(Word({ez(a)}), CycNum(c, level));
        } else {
            // brackets may involve e_0 freely: only the weight-1 coefficient
            // must vanish for the g[e_0] = 0 variants
            int b = (int)next_in(0, level);
            if (a == b) b = (b + 1) % (level + 1);
            NCSeries la = NCSeries::monomial(level, cap, Word({ez(a)}), CycNum::one(level));
            NCSeries lb = NCSeries::monomial(level, cap, Word({ez(b)}), CycNum::one(level));
            x = lie_bracket(la, lb).scaled(c);
        }
        acc = concat_mul(acc, exp_concat(x));
    }
    return acc;
}

}  // namespace mhs
