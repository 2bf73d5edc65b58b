#pragma once

#include <cstdint>
#include <vector>

#include "als/bitstring.hpp"
#include "als/graph.hpp"
#include "als/params.hpp"

namespace als {

// Circular half-row tags: vertex with index i remembers its adjacency to
// the floor(n/2) vertices that follow it around the circle. Tag position
// d in [1, floor(n/2)] holds the bit for the vertex of index (i + d) mod n.
std::vector<BitString> moon_encode(const Graph& g, const std::vector<uint64_t>& ind);
int moon_edge(uint64_t ind_a, const BitString& adj_a, uint64_t ind_b, const BitString& adj_b,
              uint64_t n);

// Encodes every vertex of g under the given parameters. Labels come back in
// original vertex order (bipartite: U side first), each exactly
// p.label_bits long, pairwise distinct.
std::vector<BitString> encode_labels(const Graph& g, const SchemeParams& p);

// Adjacency from two labels alone.
//   directed:    1 iff the edge x -> y exists
//   undirected:  symmetric 0/1
//   tournament:  1 iff the tournament edge runs x -> y (0 means y -> x)
//   bipartite:   symmetric 0/1; same-side pairs answer 0
// Malformed labels throw; see universal_adjacent for the totalized version.
int edge_query(const BitString& x, const BitString& y, const SchemeParams& p);

// The per-graph-injective index stored in a label.
uint64_t parsed_index(const BitString& label, const SchemeParams& p);

}  // namespace als
