#pragma once

#include <vector>

#include "mhs/hopf.hpp"

namespace mhs {

// sigma_n(idx): the unweighted multiple harmonic sum with strict upper bound
//   sum_{0 < n_1 < ... < n_d < n} prod_j y_j^{n_j} / n_j^{s_j} * xi^{-o n}
// where y_j are the consecutive-label ratios and o the outer label of idx.
// Generalized integer exponents are allowed.  The empty index gives 1.
CycNum sigma(long n, const HarIndex& idx);

// Boundary variant with n_d <= n (used by the second display of the
// Corollary 4.5 extraction under an explicit flag).
CycNum sigma_leq(long n, const HarIndex& idx);

// har_n(idx) = n^{weight(idx)} sigma_n(idx); classical indices only.
CycNum har(long n, const HarIndex& idx);

// Value of quasi_shuffle output under sigma_n / har_n.
CycNum sigma_of_sum(long n, const IndexSum& s);
CycNum har_of_sum(long n, const IndexSum& s);

// sigma_p(idx) mod p for N = 1 indices, computed entirely in modular
// arithmetic by a prefix-sum dynamic program over the depth: O(d p) time.
ModInt sigma_mod(long p, const HarIndex& idx);

struct MonotonicityReport {
    bool pass = true;
    long witness = -1;       // first n with har_n >= har_{n+1} past the plateau
    long distinct_values = 0;
    long plateau_length = 0;  // leading zeros (empty summation ranges)
    bool degenerate = false;  // empty index: constant 1
};

// Checks har_n(idx) < har_{n+1}(idx) for 1 <= n < n_max by exact comparison
// of rationals; the initial zero plateau of a depth-d index (n <= d) is
// reported, not flagged as a violation.  Requires N = 1 (positive reals).
MonotonicityReport monotonicity_scan(const HarIndex& idx, long n_max);

struct DegreeCheckReport {
    bool pass = true;
    // degree in T_{d+1} of P_{s,n}, or -1 when the polynomial is zero
    std::vector<std::pair<long, long>> degrees;
};

// The polynomials P_{s,n}(T_1,...,T_{d+1}) have degree exactly n in T_{d+1}
// whenever the summation range is nonempty (n > d), so their degrees over a
// range are pairwise distinct.  Established symbolically; the brute-force
// expansion lives in the tests.
DegreeCheckReport poly_degree_check(const HarIndex& idx, long n_lo, long n_hi);

// All classical N=1 indices of the given weight (2^{s-1} compositions).
std::vector<HarIndex> compositions(long weight);
// All classical N=1 indices of weight in [1, max_weight].
std::vector<HarIndex> compositions_up_to(long max_weight);

}  // namespace mhs
