#include <doctest.h>

#include "test_helpers.hpp"

using namespace als;
using testing::check_roundtrip;

namespace {

Graph transitive_tournament(uint64_t n, bool reversed) {
    Graph g = Graph::tournament(n);
    for (uint64_t u = 0; u < n; ++u)
        for (uint64_t v = u + 1; v < n; ++v)
            if (reversed)
                g.add_edge(v, u);
            else
                g.add_edge(u, v);
    return g;
}

// u -> v iff (v - u) mod n lands in [1, ceil(n/2)); needs odd n to be a
// tournament.
Graph rotational_tournament(uint64_t n) {
    Graph g = Graph::tournament(n);
    for (uint64_t u = 0; u < n; ++u)
        for (uint64_t v = 0; v < n; ++v) {
            if (u == v) continue;
            uint64_t d = (v + n - u) % n;
            if (d >= 1 && d < (n + 1) / 2) g.add_edge(u, v);
        }
    return g;
}

}  // namespace

TEST_CASE("tournament structured instances") {
    SchemeParams p = params_for(Family::tournament, 400, Mode::standard);
    CHECK(p.label_bits == 206);
    check_roundtrip(transitive_tournament(400, false), p);
    check_roundtrip(transitive_tournament(400, true), p);
    check_roundtrip(rotational_tournament(401),
                    params_for(Family::tournament, 401, Mode::standard));
}

TEST_CASE("tournament random round trip, both modes") {
    Graph g = random_graph(Family::tournament, 400, 0.5, 77);
    g.validate();
    for (Mode mode : {Mode::standard, Mode::tight})
        check_roundtrip(g, params_for(Family::tournament, 400, mode));
}

TEST_CASE("tournament edge answers are antisymmetric") {
    Graph g = random_graph(Family::tournament, 401, 0.5, 5);
    SchemeParams p = params_for(Family::tournament, 401, Mode::tight);
    auto labels = encode_labels(g, p);
    for (uint64_t u = 0; u < 40; ++u)
        for (uint64_t v = u + 1; v < 40; ++v)
            CHECK(edge_query(labels[u], labels[v], p) !=
                  edge_query(labels[v], labels[u], p));
}

TEST_CASE("reversing the tournament flips every answer") {
    Graph g = random_graph(Family::tournament, 400, 0.5, 123);
    Graph rev = Graph::tournament(400);
    for (uint64_t u = 0; u < 400; ++u)
        for (uint64_t v = 0; v < 400; ++v)
            if (u != v && g.edge(u, v)) rev.add_edge(v, u);
    SchemeParams p = params_for(Family::tournament, 400, Mode::standard);
    auto lg = encode_labels(g, p);
    auto lr = encode_labels(rev, p);
    for (uint64_t u = 0; u < 60; ++u)
        for (uint64_t v = 0; v < 60; ++v)
            if (u != v)
                CHECK(edge_query(lg[u], lg[v], p) == edge_query(lr[v], lr[u], p));
}

TEST_CASE("tournament naive mode") {
    SchemeParams p = params_for(Family::tournament, 10, Mode::automatic);
    CHECK(p.mode == Mode::naive);
    check_roundtrip(random_graph(Family::tournament, 10, 0.5, 2), p);
    Graph bad = Graph::tournament(3);
    bad.add_edge(0, 1);
    CHECK_THROWS_AS(encode_labels(bad, params_for(Family::tournament, 3, Mode::naive)),
                    std::invalid_argument);
}
