#pragma once

#include <doctest.h>

#include "als/graphio.hpp"
#include "als/schemes.hpp"

namespace als::testing {

// Every pair answered from labels must match the graph; indices must be a
// bijection (injective over the encoded range).
inline void check_roundtrip(const Graph& g, const SchemeParams& p) {
    std::vector<BitString> labels = encode_labels(g, p);
    REQUIRE(labels.size() == g.n());
    std::vector<bool> seen(p.n_enc, false);
    for (const BitString& l : labels) {
        REQUIRE(l.size() == p.label_bits);
        uint64_t ind = parsed_index(l, p);
        REQUIRE(ind < p.n_enc);
        REQUIRE_FALSE(seen[ind]);
        seen[ind] = true;
    }
    if (p.family == Family::bipartite) {
        for (uint64_t u = 0; u < g.n_u(); ++u)
            for (uint64_t v = 0; v < g.n_v(); ++v) {
                int want = g.edge(u, v) ? 1 : 0;
                REQUIRE(edge_query(labels[u], labels[g.n_u() + v], p) == want);
                REQUIRE(edge_query(labels[g.n_u() + v], labels[u], p) == want);
            }
        for (uint64_t u = 0; u + 1 < g.n_u(); ++u)
            REQUIRE(edge_query(labels[u], labels[u + 1], p) == 0);
        for (uint64_t v = 0; v + 1 < g.n_v(); ++v)
            REQUIRE(edge_query(labels[g.n_u() + v], labels[g.n_u() + v + 1], p) == 0);
        return;
    }
    for (uint64_t u = 0; u < g.n(); ++u)
        for (uint64_t v = 0; v < g.n(); ++v) {
            if (u == v) continue;
            REQUIRE(edge_query(labels[u], labels[v], p) == (g.edge(u, v) ? 1 : 0));
        }
}

inline void check_deterministic(const Graph& g, const SchemeParams& p) {
    CHECK(encode_labels(g, p) == encode_labels(g, p));
}

}  // namespace als::testing
