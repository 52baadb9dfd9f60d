#pragma once

#include <optional>

#include "mhs/hopf.hpp"

namespace mhs {

// Projection onto the subspace of words whose rightmost letter is not e_0:
// each word u e_0^l with u ending in a non-e_0 letter is sent to the
// binomial-weighted sum distributing l over the e_0 exponents of u; pure
// e_0 powers (l >= 1) go to 0.  Weight is preserved, so no truncation
// happens.  Idempotent, identity on star words.
NCSeries star_projection(const NCSeries& f);

// shft_*(w) = (1/(1+e_0) sh w)(1+e_0), truncated at cap; w must be a star
// word.  Equals the substitution e_a -> (1+e_0)^{-1} e_a applied to w.
NCSeries shft_star(const Word& w, int cap);

// The geometric series sum (-lambda)^l e_0^l, i.e. 1/(1 + lambda e_0).
NCSeries geometric_e0(const Rat& lambda, int level, int cap);

// Checks 1/(1+e_0) sh w = w(e_a -> (1+e_0)^{-1} e_a) * 1/(1+e_0) at the cap.
bool fact_a5_holds(const Word& w, int cap);

// Remark A.5's factorization with one formal variable per letter, checked
// exactly at a rational assignment (each word carries the single monomial
// given by its letter multidegree, so generic rational points pin the
// Laurent identity).
bool remark_a5_holds(int level, int cap, const std::vector<Rat>& lambda_by_letter);

// The transfer equation: x sh w = w(x e_0, x e_{z_1}, ...) x for all words
// w.  Returns the first word of weight <= cap - 1 where it fails, if any.
std::optional<Word> transfer_equation_witness(const NCSeries& x, int cap);

struct TransferReport {
    // x_0 = 0 branch: y -> y sh e_z injective per weight forces x = 0.
    bool zero_branch_forced = false;
    // x_0 = 1 branch: for each weight k >= 2, the letter constraints
    // determine x_k from x_1 uniquely.
    std::vector<bool> unique_given_x1;  // index k - 2
    // sampled geometric candidates 1/(1 - x_1) satisfy the full equation
    bool geometric_solves = false;
    long free_parameters = 0;  // the weight-1 coefficients
};

// Affine structure of the solution set of the transfer equation at the cap:
// {0} union {sum x_1^k : x_1 of weight 1}, certified by exact rank
// computations plus a full re-check of the equation on sampled x_1.
TransferReport solve_transfer_equation(int cap, int level, uint64_t seed = 1);

}  // namespace mhs
