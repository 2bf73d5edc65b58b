// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "als/combinat.hpp"
#include "als/graphio.hpp"
#include "als/schemes.hpp"
#include "als/spread.hpp"
#include "als/universal.hpp"

using namespace als;

namespace {

int failures = 0;

struct Criterion {
    int id;
    std::string name;
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail.str(what);
        } else if (!cond) {
            (void)what;
        }
    }
};

void run(int id, const std::string& name, const std::function<void(Criterion&)>& body) {
    Criterion c{id, name};
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail.str(std::string("exception: ") + e.what());
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << "criterion " << id << " [" << name << "]: " << (c.ok ? "PASS" : "FAIL");
    if (!c.detail.str().empty()) line << " (" << c.detail.str() << ")";
    line.precision(1);
    line << "  [" << std::fixed << secs << "s]";
    std::cout << line.str() << std::endl;
    if (!c.ok) ++failures;
}

uint64_t mix_seed(uint64_t n, int p_idx, int trial) {
    return n * 1000003ull + uint64_t(p_idx) * 10007ull + uint64_t(trial);
}

const double kProbs[3] = {0.1, 0.5, 0.9};

bool roundtrip_all_pairs(const Graph& g, const SchemeParams& p, Criterion& c) {
    std::vector<BitString> labels = encode_labels(g, p);
    for (const BitString& l : labels)
        if (l.size() != p.label_bits) {
            c.require(false, "label length mismatch");
            return false;
        }
    if (p.family == Family::bipartite) {
        for (uint64_t u = 0; u < g.n_u(); ++u)
            for (uint64_t v = 0; v < g.n_v(); ++v)
                if (edge_query(labels[u], labels[g.n_u() + v], p) != (g.edge(u, v) ? 1 : 0)) {
                    c.require(false, "adjacency mismatch");
                    return false;
                }
        return true;
    }
    for (uint64_t u = 0; u < g.n(); ++u)
        for (uint64_t v = 0; v < g.n(); ++v) {
            if (u == v) continue;
            if (edge_query(labels[u], labels[v], p) != (g.edge(u, v) ? 1 : 0)) {
                c.require(false, "adjacency mismatch at n=" + std::to_string(g.n()));
                return false;
            }
        }
    return true;
}

void criterion1(Criterion& c) {
    for (uint64_t n : {100ull, 128ull, 200ull, 257ull}) {
        SchemeParams std_p = params_for(Family::directed, n, Mode::standard);
        SchemeParams tight_p = params_for(Family::directed, n, Mode::tight);
        c.require(std_p.label_bits == n + 4, "standard length != n+4 at n=" + std::to_string(n));
        c.require(tight_p.label_bits == n + 3, "tight length != n+3 at n=" + std::to_string(n));
        for (int pi = 0; pi < 3; ++pi)
            for (int t = 0; t < 20; ++t) {
                Graph g = random_graph(Family::directed, n, kProbs[pi], mix_seed(n, pi, t));
                if (!roundtrip_all_pairs(g, std_p, c)) return;
                if (!roundtrip_all_pairs(g, tight_p, c)) return;
            }
    }
}

void criterion2(Criterion& c) {
    for (uint64_t n : {400ull, 512ull, 777ull}) {
        SchemeParams std_p = params_for(Family::undirected, n, Mode::standard);
        SchemeParams tight_p = params_for(Family::undirected, n, Mode::tight);
        c.require(std_p.label_bits == n / 2 + 6, "standard length != floor(n/2)+6");
        c.require(tight_p.label_bits == (n + 1) / 2 + 4, "tight length != ceil(n/2)+4");
        for (int pi = 0; pi < 3; ++pi)
            for (int t = 0; t < 20; ++t) {
                Graph g = random_graph(Family::undirected, n, kProbs[pi], mix_seed(n, pi, t));
                if (!roundtrip_all_pairs(g, std_p, c)) return;
                if (!roundtrip_all_pairs(g, tight_p, c)) return;
            }
    }
}

void criterion3(Criterion& c) {
    for (uint64_t n : {400ull, 401ull, 512ull}) {
        SchemeParams std_p = params_for(Family::tournament, n, Mode::standard);
        SchemeParams tight_p = params_for(Family::tournament, n, Mode::tight);
        c.require(std_p.label_bits == n / 2 + 6, "standard length != floor(n/2)+6");
        c.require(tight_p.label_bits == (n + 1) / 2 + 4, "tight length != ceil(n/2)+4");

        std::vector<Graph> instances;
        Graph fwd = Graph::tournament(n), rev = Graph::tournament(n), rot = Graph::tournament(n);
        for (uint64_t u = 0; u < n; ++u)
            for (uint64_t v = 0; v < n; ++v) {
                if (u == v) continue;
                if (u < v) fwd.add_edge(u, v);
                if (u > v) rev.add_edge(u, v);
                uint64_t d = (v + n - u) % n;
                if (d >= 1 && d < (n + 1) / 2) rot.add_edge(u, v);
                if (n % 2 == 0 && 2 * d == n && u < v) rot.add_edge(u, v);
            }
        instances.push_back(std::move(fwd));
        instances.push_back(std::move(rev));
        instances.push_back(std::move(rot));
        for (int t = 0; t < 10; ++t)
            instances.push_back(random_graph(Family::tournament, n, 0.5, mix_seed(n, 0, t)));
        for (const Graph& g : instances) {
            g.validate();
            if (!roundtrip_all_pairs(g, std_p, c)) return;
            if (!roundtrip_all_pairs(g, tight_p, c)) return;
        }
    }
}

void criterion4(Criterion& c) {
    // (a) biased 20/80: the per-vertex adjacency tag is exactly 16 bits.
    SchemeParams biased = params_for_bipartite(20, 80, Mode::standard);
    c.require(biased.bip.regime == BipRegime::biased, "(20,80) not in the biased regime");
    c.require(biased.bip.tag_bits == 16, "(20,80) tag is not 16 bits");
    for (int t = 0; t < 5; ++t)
        if (!roundtrip_all_pairs(random_bipartite(20, 80, 0.5, mix_seed(100, 0, t)), biased, c))
            return;

    // (b) balanced and near-balanced grid; label slack over ceil(n/4) must
    // not depend on n.
    std::vector<int64_t> slacks;
    for (uint64_t n : {512ull, 1024ull}) {
        uint64_t lg = 63 - uint64_t(__builtin_clzll(n));
        uint64_t rmax = uint64_t(std::floor(std::sqrt(double(2 * n * lg)))) - 1;
        for (uint64_t r : {uint64_t(0), uint64_t(1), uint64_t(8), rmax}) {
            SchemeParams p = params_for_bipartite(n / 2 - r, n / 2 + r, Mode::standard);
            c.require(p.bip.regime == BipRegime::near_balanced,
                      "grid point left the near-balanced regime");
            slacks.push_back(int64_t(p.label_bits) - int64_t((n + 3) / 4));
            for (int t = 0; t < 3; ++t) {
                Graph g = random_bipartite(n / 2 - r, n / 2 + r, 0.5, mix_seed(n, int(r), t));
                if (!roundtrip_all_pairs(g, p, c)) return;
            }
        }
    }
    for (int64_t s : slacks)
        c.require(s == slacks.front(), "label slack varies across the grid");
    c.detail << "C_bip = " << slacks.front();
}

void criterion5(Criterion& c) {
    // gray column sort run bounds, 10^3 random matrices
    std::mt19937_64 rng(4711);
    for (int t = 0; t < 1000; ++t) {
        uint64_t k = 1 + rng() % 8, m = 1 + rng() % 64;
        BlockMatrix a(k, m);
        for (uint64_t i = 0; i < k; ++i)
            for (uint64_t j = 0; j < m; ++j) a.set(i, j, rng() & 1);
        GraySorted gs = gray_sort(a);
        for (uint64_t i = 0; i < k; ++i)
            c.require(count_runs(gs.sorted.row(i)) <= (uint64_t(1) << i) + 1,
                      "run bound violated");
    }
    // run codec bijective, exhaustively
    for (uint64_t m = 1; m <= 12; ++m)
        for (uint32_t i = 0; i <= 2; ++i) {
            uint64_t budget = (uint64_t(1) << i) + 1;
            for (uint64_t w = 0; w < (uint64_t(1) << m); ++w) {
                BitString s(m);
                for (uint64_t b = 0; b < m; ++b) s.set(b, (w >> (m - 1 - b)) & 1);
                if (count_runs(s) > budget) continue;
                BitString code = encode_row(s, i);
                c.require(code.size() == codeword_len(m, i), "codeword length drifted");
                c.require(decode_row(code, m, i) == s, "codec not bijective");
            }
        }
    // spreading: locate vs apply, exhaustive positions, randomized plans
    for (uint64_t k = 1; k <= 6; ++k)
        for (uint64_t m = 1; m <= 40; ++m)
            for (int rep = 0; rep < 2; ++rep) {
                std::vector<uint64_t> ell(k);
                for (auto& l : ell) l = rng() % (m + 1);
                SpreadPlan plan = make_plan(ell, m, rng() % (m + 1));
                BlockMatrix a(k, m);
                for (uint64_t i = 0; i < k; ++i)
                    for (uint64_t j = 0; j < m; ++j) a.set(i, j, rng() & 1);
                SpreadTags tags = spread_apply(a, plan);
                for (uint64_t i = 0; i < k; ++i)
                    for (uint64_t j = 0; j < m; ++j) {
                        BitLocation loc = spread_locate(i, j, plan);
                        bool bit = loc.on_v ? tags.v_tags[j].get(loc.pos)
                                            : tags.u_tags[i].get(loc.pos);
                        c.require(bit == a.get(i, j), "spread location disagrees");
                    }
            }
    // index codec: bijective and prefix-free for all n <= 4096
    for (uint64_t n = 1; n <= 4096; ++n) {
        std::vector<std::string> words;
        words.reserve(n);
        for (uint64_t i = 0; i < n; ++i) {
            BitString code = index_encode(i, n);
            BitCursor cur(code);
            c.require(index_decode(cur, n) == i && cur.remaining() == 0,
                      "index codec not bijective");
            words.push_back(code.to_string());
        }
        std::sort(words.begin(), words.end());
        for (size_t i = 0; i + 1 < words.size(); ++i)
            c.require(words[i + 1].compare(0, words[i].size(), words[i]) != 0,
                      "index code not prefix-free");
    }
}

void criterion6(Criterion& c) {
    c.require(std::abs(entropy_bar(0.25) - 2.15635) < 1e-4, "entropy_bar(1/4) off");
    c.require(std::abs(entropy_bar(0.125) - 1.34507) < 1e-4, "entropy_bar(1/8) off");
    uint32_t worst_dir = 0, worst_und = 0;
    for (uint64_t n = 100; n <= 5000; ++n) {
        uint32_t d = spread_delta(params_for(Family::directed, n, Mode::standard));
        worst_dir = std::max(worst_dir, d);
        if (d > 3) {
            c.require(false, "directed delta > 3 at n=" + std::to_string(n));
            return;
        }
    }
    for (uint64_t n = 400; n <= 5000; ++n) {
        uint32_t d = spread_delta(params_for(Family::undirected, n, Mode::standard));
        worst_und = std::max(worst_und, d);
        if (d > 3) {
            c.require(false, "undirected delta > 3 at n=" + std::to_string(n));
            return;
        }
    }
    c.detail << "max delta: directed " << worst_dir << ", undirected " << worst_und;
}

void criterion7(Criterion& c) {
    auto check = [&](Family f, uint64_t n, const SchemeParams& p, uint64_t max_gap) {
        uint64_t lb = lower_bound(f, n, true);
        c.require(lb <= p.label_bits, "lower bound exceeds achieved length");
        if (max_gap)
            c.require(p.label_bits - lb <= max_gap,
                      "gap over " + std::to_string(max_gap) + " at n=" + std::to_string(n));
    };
    for (uint64_t n : {100ull, 128ull, 200ull, 257ull}) {
        check(Family::directed, n, params_for(Family::directed, n, Mode::standard), 4);
        check(Family::directed, n, params_for(Family::directed, n, Mode::tight), 0);
    }
    for (uint64_t n : {400ull, 512ull, 777ull}) {
        check(Family::undirected, n, params_for(Family::undirected, n, Mode::standard), 6);
        check(Family::undirected, n, params_for(Family::undirected, n, Mode::tight), 0);
    }
    for (uint64_t n : {400ull, 401ull, 512ull})
        check(Family::tournament, n, params_for(Family::tournament, n, Mode::standard), 6);
    check(Family::bipartite, 100, params_for_bipartite(20, 80, Mode::standard), 0);
    for (uint64_t n : {512ull, 1024ull})
        check(Family::bipartite, n, params_for_bipartite(n / 2, n / 2, Mode::standard), 0);
}

void criterion8(Criterion& c) {
    SchemeParams moon4 = params_for(Family::undirected, 4, Mode::naive);
    c.require(universal_size(moon4) == 16, "4-vertex circular scheme is not 2^4");
    for (unsigned mask = 0; mask < 64; ++mask) {
        Graph g = Graph::undirected(4);
        unsigned bit = 0;
        for (uint64_t u = 0; u < 4; ++u)
            for (uint64_t v = u + 1; v < 4; ++v, ++bit)
                if (mask & (1u << bit)) g.add_edge(u, v);
        if (!verify_induced(g, moon4).ok) {
            c.require(false, "a 4-vertex graph failed to embed");
            return;
        }
    }
    SchemeParams big = params_for(Family::undirected, 400, Mode::standard);
    std::ostringstream os;
    os << "2^" << big.label_bits;
    c.require(os.str() == "2^206", "undirected n=400 universal size is not 2^206");
    c.require(universal_size(big) == Natural(1) << 206, "universal size mismatch");
    c.detail << "universal(undirected 400) = " << os.str();
}

}  // namespace

int main() {
    run(1, "directed round-trip + length", criterion1);
    run(2, "undirected round-trip + length", criterion2);
    run(3, "tournament directions + length", criterion3);
    run(4, "bipartite regimes + constant slack", criterion4);
    run(5, "building blocks", criterion5);
    run(6, "constants and delta bound", criterion6);
    run(7, "lower-bound sandwich", criterion7);
    run(8, "induced-universal graphs", criterion8);
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
