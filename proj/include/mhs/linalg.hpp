#pragma once

#include <vector>

#include "mhs/rat.hpp"

namespace mhs {

// Exact rank over Q by fraction-free (Bareiss) elimination on integers.
long exact_rank(std::vector<std::vector<Int>> m);

// Clears denominators row by row, then eliminates.
long exact_rank(const std::vector<std::vector<Rat>>& m);

// Lattice reduction (LLL, delta = 3/4) with exact rational Gram-Schmidt.
void lll_reduce(std::vector<std::vector<Int>>& basis);

// Integer vectors c with sum_i c_i rows[i][p] = 0 mod primes[p] for every
// column: candidates are found by reducing a CRT-penalized lattice over a
// detection subset of columns, then each candidate is verified exactly on
// all of them.  Returns a spanning set of the verified relation space.
std::vector<std::vector<Int>> congruence_relations(
    const std::vector<std::vector<int64_t>>& rows, const std::vector<long>& primes);

}  // namespace mhs
