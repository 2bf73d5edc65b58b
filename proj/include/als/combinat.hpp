#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "als/family.hpp"
#include "als/natural.hpp"

namespace als {

// Exact C(n, k); 0 when k > n.
Natural binomial(uint64_t n, uint64_t k);

// Number of n-bit strings with at most 2^i + 1 runs:
//   R(n, i) = 2 * sum_{j=0}^{2^i} C(n-1, j).
// Requires n >= 1.
Natural capacity(uint64_t n, uint32_t i);

// Codeword length for a run-bounded n-bit row: L(n, i) = ceil(lg R(n, i)).
uint32_t codeword_len(uint64_t n, uint32_t i);

// Colexicographic rank of an ascending position set within [0, universe):
// rank = sum_t C(p_t, t), t = 1..|S|. The inverse reconstructs the set.
Natural subset_rank(const std::vector<uint64_t>& ascending, uint64_t universe);
std::vector<uint64_t> subset_unrank(const Natural& rank, size_t size, uint64_t universe);

// Binary entropy H(alpha) = -a lg a - (1-a) lg(1-a); domain (0, 1).
double entropy(double alpha);

// H_bar(alpha) = sum_{j>=0} H(alpha / 2^j), truncated once a term drops
// below 1e-12. Domain (0, 1/2].
double entropy_bar(double alpha);

// Counting lower bound (in bits) on any labeling scheme for the family:
//   directed n, undirected/tournament ceil(n/2), bipartite ceil(n/4);
// one more bit when the scheme is required to be indexing.
uint64_t lower_bound(Family family, uint64_t n, bool indexing);

// Human-readable version including the fractional refinement that applies
// to indexing schemes once n >= 200.
std::string lower_bound_report(Family family, uint64_t n, bool indexing);

}  // namespace als
