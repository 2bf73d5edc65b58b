#include <doctest.h>

#include <random>
#include <sstream>

#include "als/graphio.hpp"
#include "als/schemes.hpp"
#include "als/universal.hpp"

using namespace als;

TEST_CASE("universal graph sizes") {
    SchemeParams moon4 = params_for(Family::undirected, 4, Mode::naive);
    CHECK(moon4.label_bits == 4);
    CHECK(universal_size(moon4) == 16);

    SchemeParams big = params_for(Family::undirected, 400, Mode::standard);
    CHECK(universal_size(big) == Natural(1) << 206);

    SchemeParams tiny = params_for(Family::directed, 2, Mode::naive);  // 1 + 1 bits
    CHECK(universal_size(tiny) == 4);
}

TEST_CASE("every labeled 4-vertex undirected graph embeds") {
    SchemeParams p = params_for(Family::undirected, 4, Mode::naive);
    for (unsigned mask = 0; mask < 64; ++mask) {
        Graph g = Graph::undirected(4);
        unsigned bit = 0;
        for (uint64_t u = 0; u < 4; ++u)
            for (uint64_t v = u + 1; v < 4; ++v, ++bit)
                if (mask & (1u << bit)) g.add_edge(u, v);
        EmbeddingCertificate cert = verify_induced(g, p);
        CHECK(cert.ok);
        CHECK_FALSE(cert.violation.has_value());
    }
}

TEST_CASE("every 4-vertex tournament embeds under the naive reduction") {
    SchemeParams p = params_for(Family::tournament, 4, Mode::naive);
    for (unsigned mask = 0; mask < 64; ++mask) {
        Graph g = Graph::tournament(4);
        unsigned bit = 0;
        for (uint64_t u = 0; u < 4; ++u)
            for (uint64_t v = u + 1; v < 4; ++v, ++bit)
                if (mask & (1u << bit))
                    g.add_edge(u, v);
                else
                    g.add_edge(v, u);
        CHECK(verify_induced(g, p).ok);
    }
}

TEST_CASE("totalization: ids outside any encoding are isolated") {
    SchemeParams p = params_for(Family::undirected, 3, Mode::naive);  // 2 + 1 bits
    CHECK(universal_size(p) == 8);
    // index bits "11" name vertex 3 of 3: no encoding produces it
    Natural bogus = BitString("111").to_natural();
    for (uint64_t y = 0; y < 8; ++y) CHECK(universal_adjacent(bogus, Natural(y), p) == 0);
    for (uint64_t x = 0; x < 8; ++x) CHECK(universal_adjacent(Natural(x), Natural(x), p) == 0);
}

TEST_CASE("universal adjacency is symmetric for undirected parameters") {
    SchemeParams p = params_for(Family::undirected, 5, Mode::naive);
    uint64_t size = uint64_t(1) << p.label_bits;
    for (uint64_t x = 0; x < size; ++x)
        for (uint64_t y = x + 1; y < size; ++y)
            CHECK(universal_adjacent(Natural(x), Natural(y), p) ==
                  universal_adjacent(Natural(y), Natural(x), p));

    // full-scale parameters, randomized ids (mostly ids no encoding emits)
    SchemeParams big = params_for(Family::undirected, 400, Mode::standard);
    std::mt19937_64 rng(3);
    auto random_id = [&]() {
        BitString s(big.label_bits);
        for (size_t i = 0; i < big.label_bits; ++i) s.set(i, rng() & 1);
        return s.to_natural();
    };
    Graph g = random_graph(Family::undirected, 400, 0.5, 1);
    auto labels = encode_labels(g, big);
    size_t asym = 0;
    for (int t = 0; t < 100000; ++t) {
        Natural x = (t % 3 == 0) ? labels[rng() % 400].to_natural() : random_id();
        Natural y = (t % 5 == 0) ? labels[rng() % 400].to_natural() : random_id();
        if (universal_adjacent(x, y, big) != universal_adjacent(y, x, big)) ++asym;
    }
    CHECK(asym == 0);
}

TEST_CASE("materialized edge list matches the adjacency oracle") {
    SchemeParams p = params_for(Family::undirected, 3, Mode::naive);
    std::string text = materialize_universal(p);
    CHECK(text.find("# universal graph") == 0);
    std::istringstream in(text);
    Graph g = parse_graph(in);
    CHECK(g.n() == 8);
    for (uint64_t x = 0; x < 8; ++x)
        for (uint64_t y = 0; y < 8; ++y)
            if (x != y)
                CHECK((g.edge(x, y) ? 1 : 0) == universal_adjacent(Natural(x), Natural(y), p));
    CHECK_THROWS_AS(materialize_universal(params_for(Family::undirected, 400, Mode::standard)),
                    std::invalid_argument);
}

TEST_CASE("a random directed graph certifies under the real scheme") {
    Graph g = random_graph(Family::directed, 100, 0.5, 15);
    SchemeParams p = params_for(Family::directed, 100, Mode::standard);
    EmbeddingCertificate cert = verify_induced(g, p);
    CHECK(cert.ok);
    CHECK(cert.phi.size() == 100);
}
