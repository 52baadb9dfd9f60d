#pragma once

#include <optional>

#include "mhs/hopf.hpp"

namespace mhs {

// Weight action tau(lambda): multiply the coefficient of every word by
// lambda^{weight}.  lambda = 1 is the identity; with a formal variable the
// lambda-degree coincides with the weight, so rational evaluations determine
// the polynomial identities.
NCSeries tau_scale(const Rat& lambda, const NCSeries& f);

// Letter relabeling e_{z_j} -> e_{z_i z_j} induced by x -> z_i x; e_0 fixed.
NCSeries rotation_pushforward(int root_index, const NCSeries& g);

enum class IharaVariant {
    on_00,  // f(e_0, g_{z_1}^{-1} e_{z_1} g_{z_1}, ..., g_{z_N}^{-1} e_{z_N} g_{z_N})
    on_z0,  // g * (the same substitution)
};

// Twisted-substitution Ihara product on truncated grouplike series.  The
// rotations g_{z_i} are derived from g (g = g_{z_N}).
NCSeries ihara_action(const NCSeries& g, const NCSeries& f, IharaVariant variant);

// As above with an explicit tuple (g_{z_1}, ..., g_{z_N}); used by the
// harmonic action, where the tuple is tau(n)-twisted first.
NCSeries ihara_substitute(const std::vector<NCSeries>& tuple, const NCSeries& f);

// sum_{l <= cap - weight(w)} lambda^l e_0^l w.
NCSeries sigma_inv_dr(const Word& w, const Rat& lambda, int level, int cap);

// <Phi^{(z),-1} e_z Phi^{(z)}, sum_l e_0^l w> with Phi^{(z)} the rotation
// pushforward of Phi by z; summed over l <= cap - weight(w).
CycNum adjoint_coeff(const NCSeries& phi, int root_index, const Word& w);

// The full symbolic evaluator: (-1)^d sum_{z in mu_N} z^{-1} Ad_{Phi^(z)}(e_z)
// applied to 1/(1-e_0) w for w the cyclotomic word of idx.
CycNum har_mot_eval(const NCSeries& phi, const HarIndex& idx);

// Series whose coefficient on e_0^l w is independent of l: stored on the
// e_0-stripped words only.
struct ConstSeries {
    int level = 1;
    int cap = 0;
    std::map<Word, CycNum> coeffs;  // keys never start with e_0

    bool operator==(const ConstSeries& o) const {
        return level == o.level && cap == o.cap && coeffs == o.coeffs;
    }
    // The full truncated series sum_{l,w} coeffs[w] e_0^l w.
    NCSeries expand() const;
    static ConstSeries constant_one(int level, int cap);
};

struct HarmonicActionEntry {
    long n = 0;
    std::optional<ConstSeries> value;  // empty when not stabilized
    Word witness;                      // offending stripped word when not stabilized
};

struct HarmonicActionResult {
    std::vector<HarmonicActionEntry> entries;
    bool all_stabilized() const;
};

// The De Rham-rational harmonic action at finite cap: for each n, form the
// tau(n)-twisted adjoint substitution of F(n) and extract, for every
// e_0-stripped word, the coefficient of e_0^l w once it is constant over the
// trailing `window` values of l available under the cap.  A true limit is
// not computable at finite precision, so NotStabilized is an outcome carried
// in the result, not an exception.
HarmonicActionResult harmonic_action_dr_rt(const std::vector<NCSeries>& tuple,
                                           const std::function<ConstSeries(long)>& F,
                                           long n_max, int window);

// Deterministic generator of grouplike points: a product of concatenation
// exponentials of random Lie elements (letters and brackets).
struct GrouplikeGen {
    uint64_t state;
    explicit GrouplikeGen(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next();
    long next_in(long lo, long hi);  // inclusive bounds
    // Random grouplike point; with zero_e0 the letter e_0 gets coefficient 0.
    NCSeries point(int level, int cap, bool zero_e0 = false);
};

}  // namespace mhs
