#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "als/combinat.hpp"
#include "als/graphio.hpp"
#include "als/schemes.hpp"
#include "als/universal.hpp"

namespace {

using namespace als;

SchemeParams params_of(const Graph& g, Mode mode) {
    if (g.family() == Family::bipartite) return params_for_bipartite(g.n_u(), g.n_v(), mode);
    return params_for(g.family(), g.n(), mode);
}

int cmd_encode(const std::string& family_s, const std::string& mode_s,
               const std::string& input, const std::string& output) {
    Family family = family_from_string(family_s);
    Mode mode = mode_from_string(mode_s);
    std::vector<uint8_t> raw = read_file(input);
    Graph g = parse_graph_text(std::string(raw.begin(), raw.end()));
    if (g.family() != family)
        throw std::runtime_error("input file is " + to_string(g.family()) + ", not " + family_s);
    SchemeParams p = params_of(g, mode);
    write_file(output, write_labels(encode_labels(g, p), p));
    std::cout << "encoded " << p.n << " vertices, " << p.label_bits << " bits per label ("
              << to_string(p.mode) << " mode)\n";
    return 0;
}

int cmd_query(const std::string& labels_path, uint64_t u, uint64_t v) {
    LabelFile f = read_labels(read_file(labels_path));
    if (u >= f.labels.size() || v >= f.labels.size())
        throw std::runtime_error("vertex id out of range");
    if (f.params.family == Family::tournament) {
        if (u == v) throw std::runtime_error("tournament query needs two distinct vertices");
        int bit = edge_query(f.labels[u], f.labels[v], f.params);
        if (bit)
            std::cout << u << "->" << v << '\n';
        else
            std::cout << v << "->" << u << '\n';
        return 0;
    }
    std::cout << edge_query(f.labels[u], f.labels[v], f.params) << '\n';
    return 0;
}

int cmd_stats(const std::string& labels_path) {
    LabelFile f = read_labels(read_file(labels_path));
    const SchemeParams& p = f.params;
    std::cout << "family: " << to_string(p.family) << '\n';
    std::cout << "mode: " << to_string(p.mode) << '\n';
    std::cout << "n: " << p.n << '\n';
    if (p.family == Family::bipartite)
        std::cout << "sides: " << p.n_u << ' ' << p.n_v << '\n';
    std::cout << "label_bits: " << p.label_bits << '\n';
    std::cout << "record_bytes: " << (p.label_bits + 7) / 8 << '\n';
    if (p.mode != Mode::naive) {
        if (p.family == Family::directed) {
            std::cout << "k: " << p.dir.k << '\n';
            if (p.mode == Mode::standard) std::cout << "delta: " << spread_delta(p) << '\n';
        } else if (p.family != Family::bipartite) {
            std::cout << "k: " << p.und.k << '\n';
            if (p.mode == Mode::standard) std::cout << "delta: " << spread_delta(p) << '\n';
        } else {
            std::cout << "regime: "
                      << (p.bip.regime == BipRegime::biased ? "biased" : "near-balanced") << '\n';
            std::cout << "r: " << p.bip.r << '\n';
            if (p.bip.regime == BipRegime::biased)
                std::cout << "tag_bits: " << p.bip.tag_bits << '\n';
        }
    }
    std::cout << "lower_bound_indexing: " << lower_bound(p.family, p.n, true) << '\n';
    return 0;
}

int cmd_bounds(const std::string& family_s, uint64_t n, bool indexing, bool report) {
    Family family = family_from_string(family_s);
    std::cout << lower_bound(family, n, indexing) << '\n';
    if (report) std::cerr << lower_bound_report(family, n, indexing) << '\n';
    return 0;
}

int cmd_universal(const std::string& family_s, uint64_t n, const std::string& mode_s,
                  const std::string& output, uint64_t max_bits) {
    Family family = family_from_string(family_s);
    SchemeParams p = params_for(family, n, mode_from_string(mode_s));
    std::cout << "universal graph on 2^" << p.label_bits << " = " << universal_size(p)
              << " vertices\n";
    if (!output.empty()) {
        max_bits = std::min<uint64_t>(max_bits, 24);  // hard materialization cap
        if (p.label_bits <= max_bits) {
            write_file(output, materialize_universal(p));
            std::cout << "materialized to " << output << '\n';
        } else {
            std::cerr << "note: 2^" << p.label_bits
                      << " vertices exceed the materialization limit, nothing written\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& family_s, uint64_t n, uint64_t trials, uint64_t seed, double p_edge,
               const std::string& mode_s) {
    Family family = family_from_string(family_s);
    uint64_t pairs = 0;
    for (uint64_t t = 0; t < trials; ++t) {
        Graph g = random_graph(family, n, p_edge, seed + t);
        SchemeParams p = params_of(g, mode_from_string(mode_s));
        std::vector<BitString> labels = encode_labels(g, p);
        auto fail = [&](uint64_t u, uint64_t v) {
            std::cerr << "error: trial " << t << " pair (" << u << "," << v
                      << ") disagrees with the input graph\n";
            return 3;
        };
        switch (family) {
            case Family::directed:
                for (uint64_t u = 0; u < n; ++u)
                    for (uint64_t v = 0; v < n; ++v) {
                        if (u == v) continue;
                        ++pairs;
                        if (edge_query(labels[u], labels[v], p) != (g.edge(u, v) ? 1 : 0))
                            return fail(u, v);
                    }
                break;
            case Family::undirected:
            case Family::tournament:
                for (uint64_t u = 0; u < n; ++u)
                    for (uint64_t v = u + 1; v < n; ++v) {
                        ++pairs;
                        if (edge_query(labels[u], labels[v], p) != (g.edge(u, v) ? 1 : 0))
                            return fail(u, v);
                        if (edge_query(labels[v], labels[u], p) != (g.edge(v, u) ? 1 : 0))
                            return fail(v, u);
                    }
                break;
            case Family::bipartite:
                for (uint64_t u = 0; u < g.n_u(); ++u)
                    for (uint64_t v = 0; v < g.n_v(); ++v) {
                        ++pairs;
                        if (edge_query(labels[u], labels[g.n_u() + v], p) !=
                            (g.edge(u, v) ? 1 : 0))
                            return fail(u, g.n_u() + v);
                    }
                break;
        }
    }
    std::cout << "ok trials=" << trials << " pairs=" << pairs << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adjacency labeling schemes for directed, undirected, tournament and "
                 "bipartite graphs"};
    app.require_subcommand(1);

    std::string family, mode = "auto", input, output, labels_path;
    uint64_t n = 0, u = 0, v = 0, trials = 0, seed = 0, max_bits = 24;
    double p_edge = 0.5;
    bool indexing = false, report = false;

    auto* enc = app.add_subcommand("encode", "label a graph file");
    enc->add_option("--family", family)->required();
    enc->add_option("--mode", mode)->check(CLI::IsMember({"auto", "standard", "tight", "naive"}));
    enc->add_option("--input", input)->required();
    enc->add_option("--output", output)->required();

    auto* q = app.add_subcommand("query", "adjacency of two vertices from a label file");
    q->add_option("--labels", labels_path)->required();
    q->add_option("--u", u)->required();
    q->add_option("--v", v)->required();

    auto* st = app.add_subcommand("stats", "describe a label file");
    st->add_option("--labels", labels_path)->required();

    auto* bd = app.add_subcommand("bounds", "counting lower bound on the label length");
    bd->add_option("--family", family)->required();
    bd->add_option("--n", n)->required();
    bd->add_flag("--indexing", indexing);
    bd->add_flag("--report", report);

    auto* un = app.add_subcommand("universal", "size (and small edge lists) of the induced-universal graph");
    un->add_option("--family", family)->required();
    un->add_option("--n", n)->required();
    un->add_option("--mode", mode)->check(CLI::IsMember({"auto", "standard", "tight", "naive"}));
    un->add_option("--output", output);
    un->add_option("--materialize-max-bits", max_bits);

    auto* vf = app.add_subcommand("verify", "round-trip random graphs against their labels");
    vf->add_option("--family", family)->required();
    vf->add_option("--n", n)->required();
    vf->add_option("--trials", trials)->required();
    vf->add_option("--seed", seed)->required();
    vf->add_option("--p", p_edge);
    vf->add_option("--mode", mode)->check(CLI::IsMember({"auto", "standard", "tight", "naive"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (enc->parsed()) return cmd_encode(family, mode, input, output);
        if (q->parsed()) return cmd_query(labels_path, u, v);
        if (st->parsed()) return cmd_stats(labels_path);
        if (bd->parsed()) return cmd_bounds(family, n, indexing, report);
        if (un->parsed()) return cmd_universal(family, n, mode, output, max_bits);
        if (vf->parsed()) return cmd_verify(family, n, trials, seed, p_edge, mode);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
