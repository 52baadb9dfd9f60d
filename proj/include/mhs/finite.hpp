#pragma once

#include "mhs/harmonic.hpp"

namespace mhs {

// A finite multiple zeta value: the family of residues sigma_p(idx) mod p
// over a prime window.
struct FiniteMZV {
    HarIndex index;
    std::vector<long> window;    // sorted primes
    std::vector<ModInt> residues;

    bool all_zero() const;
    std::string str() const;
};

FiniteMZV finite_mzv(const HarIndex& idx, const std::vector<long>& window);

// Coefficients of (1 - L^2) / (1 - L^2 - L^3): the conjectured dimensions
// of the weight-graded pieces of the finite MZV algebra.
std::vector<long> kz_dims(long s_max);

struct RankRow {
    long weight = 0;
    long index_count = 0;
    long rank = 0;        // exact rank over Q of the residue-lift matrix
    long conjectured = 0; // c_s from the generating function
};

// Heuristic detector of Q-linear congruence families: rows are the residue
// vectors of all weight-s compositions lifted to [0, p), columns the window
// primes; the exact rank over Q is reported against c_s.  A mismatch is a
// conjecture status, never a test failure.
RankRow weight_rank(long s, const std::vector<long>& window);

// sigma_p(idx) = (-1)^weight sigma_p(reversed idx) mod p on the window,
// via the change of variable n_i -> p - n_{d+1-i}.
bool reversal_check(const HarIndex& idx, const std::vector<long>& window);

// Primes in [max(lo, 5), hi], the default scan window shape.
std::vector<long> default_window(long weight, long pmax);

}  // namespace mhs
