#include <doctest.h>

#include "als/graphio.hpp"
#include "als/schemes.hpp"

using namespace als;

TEST_CASE("graph text parsing") {
    Graph g = parse_graph_text("undirected 3\n0 1\n");
    CHECK(g.n() == 3);
    CHECK(g.edge(0, 1));
    CHECK(g.edge(1, 0));
    CHECK_FALSE(g.edge(1, 2));

    Graph b = parse_graph_text("bipartite 2 3\n0 2\n# comment\n\n1 0\n");
    CHECK(b.edge(0, 2));
    CHECK(b.edge(1, 0));
    CHECK_FALSE(b.edge(0, 0));

    Graph dup = parse_graph_text("directed 4\n1 2\n1 2\n");
    CHECK(dup.edge(1, 2));

    CHECK_THROWS_AS(parse_graph_text("widgets 3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("undirected 3\n0 7\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("directed 3\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("bipartite 2 3\n2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("tournament 3\n0 1\n"), ParseError);  // incomplete
    CHECK_THROWS_AS(parse_graph_text(""), ParseError);
}

TEST_CASE("graph text round trip") {
    Graph g = random_graph(Family::directed, 17, 0.3, 5);
    Graph h = parse_graph_text(write_graph(g));
    for (uint64_t u = 0; u < 17; ++u)
        for (uint64_t v = 0; v < 17; ++v)
            if (u != v) CHECK(g.edge(u, v) == h.edge(u, v));
    Graph b = random_bipartite(6, 11, 0.4, 6);
    Graph b2 = parse_graph_text(write_graph(b));
    for (uint64_t u = 0; u < 6; ++u)
        for (uint64_t v = 0; v < 11; ++v) CHECK(b.edge(u, v) == b2.edge(u, v));
}

TEST_CASE("seeded generator is deterministic and honors p") {
    Graph a = random_graph(Family::undirected, 10, 0.5, 42);
    Graph b = random_graph(Family::undirected, 10, 0.5, 42);
    for (uint64_t u = 0; u < 10; ++u)
        for (uint64_t v = 0; v < 10; ++v)
            if (u != v) CHECK(a.edge(u, v) == b.edge(u, v));

    Graph empty = random_graph(Family::directed, 12, 0.0, 1);
    Graph full = random_graph(Family::directed, 12, 1.0, 1);
    for (uint64_t u = 0; u < 12; ++u)
        for (uint64_t v = 0; v < 12; ++v)
            if (u != v) {
                CHECK_FALSE(empty.edge(u, v));
                CHECK(full.edge(u, v));
            }
    random_graph(Family::tournament, 9, 0.0, 3).validate();
}

TEST_CASE("label files round trip byte for byte") {
    Graph g = random_graph(Family::directed, 100, 0.5, 8);
    SchemeParams p = params_for(Family::directed, 100, Mode::standard);
    auto labels = encode_labels(g, p);
    auto bytes = write_labels(labels, p);
    CHECK(bytes.size() == 26 + 100 * 13);  // header + 100 records of ceil(104/8)
    LabelFile f = read_labels(bytes);
    CHECK(f.params.family == Family::directed);
    CHECK(f.params.mode == Mode::standard);
    CHECK(f.params.label_bits == 104);
    CHECK(f.labels == labels);
    CHECK(write_labels(f.labels, f.params) == bytes);

    auto truncated = bytes;
    truncated.pop_back();
    CHECK_THROWS_AS(read_labels(truncated), std::runtime_error);
    auto bad = bytes;
    bad[0] = 'X';
    CHECK_THROWS_AS(read_labels(bad), std::runtime_error);
}

TEST_CASE("label files carry bipartite sides and naive modes") {
    Graph g = random_bipartite(20, 80, 0.5, 3);
    SchemeParams p = params_for_bipartite(20, 80, Mode::standard);
    LabelFile f = read_labels(write_labels(encode_labels(g, p), p));
    CHECK(f.params.n_u == 20);
    CHECK(f.params.n_v == 80);
    CHECK(f.params.label_bits == p.label_bits);

    Graph one = Graph::directed(1);
    SchemeParams p1 = params_for(Family::directed, 1, Mode::naive);
    LabelFile f1 = read_labels(write_labels(encode_labels(one, p1), p1));
    CHECK(f1.labels.size() == 1);
    CHECK(f1.labels[0].empty());
}
