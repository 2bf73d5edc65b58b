#include "als/graphio.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace als {

namespace {

struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

// floor(p * 2^64) as the inclusion threshold; p >= 1 means "always".
std::optional<uint64_t> edge_threshold(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_graph: p outside [0, 1]");
    if (p >= 1.0) return std::nullopt;
    return uint64_t(std::floor(std::ldexp(p, 64)));
}

}  // namespace

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Graph parse_graph(std::istream& in) {
    std::string line;
    size_t lineno = 0;
    std::optional<Graph> g;
    uint64_t n_u = 0, n_v = 0;
    Family family = Family::directed;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (!g) {
            try {
                family = family_from_string(first);
            } catch (const std::exception&) {
                throw ParseError(lineno, "expected a family header, got '" + first + "'");
            }
            uint64_t a = 0, b = 0;
            if (!(ls >> a)) throw ParseError(lineno, "missing vertex count");
            if (family == Family::bipartite) {
                if (!(ls >> b)) throw ParseError(lineno, "bipartite header needs two side sizes");
                n_u = a;
                n_v = b;
                g = Graph::bipartite(a, b);
            } else {
                switch (family) {
                    case Family::directed: g = Graph::directed(a); break;
                    case Family::undirected: g = Graph::undirected(a); break;
                    default: g = Graph::tournament(a); break;
                }
            }
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after header");
            continue;
        }
        uint64_t u, v;
        {
            std::istringstream es(line);
            if (!(es >> u >> v)) throw ParseError(lineno, "expected 'u v'");
            std::string extra;
            if (es >> extra) throw ParseError(lineno, "trailing tokens after edge");
        }
        try {
            g->add_edge(u, v);
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
        (void)n_u;
        (void)n_v;
    }
    if (!g) throw ParseError(lineno, "empty input");
    try {
        g->validate();
    } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
    }
    return *g;
}

std::string write_graph(const Graph& g) {
    std::ostringstream os;
    if (g.family() == Family::bipartite) {
        os << "bipartite " << g.n_u() << ' ' << g.n_v() << '\n';
        for (uint64_t u = 0; u < g.n_u(); ++u)
            for (uint64_t v = 0; v < g.n_v(); ++v)
                if (g.edge(u, v)) os << u << ' ' << v << '\n';
        return os.str();
    }
    os << to_string(g.family()) << ' ' << g.n() << '\n';
    bool ordered = g.family() != Family::undirected;
    for (uint64_t u = 0; u < g.n(); ++u)
        for (uint64_t v = ordered ? 0 : u + 1; v < g.n(); ++v)
            if (u != v && g.edge(u, v)) os << u << ' ' << v << '\n';
    return os.str();
}

Graph random_graph(Family family, uint64_t n, double p, uint64_t seed) {
    if (family == Family::bipartite) return random_bipartite(n / 2, n - n / 2, p, seed);
    auto thr = edge_threshold(p);
    SplitMix64 rng(seed);
    switch (family) {
        case Family::directed: {
            Graph g = Graph::directed(n);
            for (uint64_t u = 0; u < n; ++u)
                for (uint64_t v = 0; v < n; ++v) {
                    if (u == v) continue;
                    uint64_t draw = rng.next();
                    if (!thr || draw < *thr) g.add_edge(u, v);
                }
            return g;
        }
        case Family::undirected: {
            Graph g = Graph::undirected(n);
            for (uint64_t u = 0; u < n; ++u)
                for (uint64_t v = u + 1; v < n; ++v) {
                    uint64_t draw = rng.next();
                    if (!thr || draw < *thr) g.add_edge(u, v);
                }
            return g;
        }
        case Family::tournament: {
            Graph g = Graph::tournament(n);
            for (uint64_t u = 0; u < n; ++u)
                for (uint64_t v = u + 1; v < n; ++v) {
                    if (rng.next() & 1)
                        g.add_edge(u, v);
                    else
                        g.add_edge(v, u);
                }
            return g;
        }
        default:
            throw std::logic_error("random_graph: unreachable");
    }
}

Graph random_bipartite(uint64_t n_u, uint64_t n_v, double p, uint64_t seed) {
    auto thr = edge_threshold(p);
    SplitMix64 rng(seed);
    Graph g = Graph::bipartite(n_u, n_v);
    for (uint64_t u = 0; u < n_u; ++u)
        for (uint64_t v = 0; v < n_v; ++v) {
            uint64_t draw = rng.next();
            if (!thr || draw < *thr) g.add_edge(u, v);
        }
    return g;
}

namespace {

void put_u64le(std::vector<uint8_t>& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(uint8_t(v >> (8 * i)));
}

void put_u32le(std::vector<uint8_t>& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(uint8_t(v >> (8 * i)));
}

uint64_t get_u64le(const std::vector<uint8_t>& in, size_t at) {
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | in[at + i];
    return v;
}

uint32_t get_u32le(const std::vector<uint8_t>& in, size_t at) {
    uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | in[at + i];
    return v;
}

constexpr char kMagic[4] = {'A', 'L', 'S', '1'};
constexpr size_t kHeaderBytes = 4 + 1 + 1 + 8 + 8 + 4;

}  // namespace

std::vector<uint8_t> write_labels(const std::vector<BitString>& labels, const SchemeParams& p) {
    if (labels.size() != p.n) throw std::invalid_argument("write_labels: label count mismatch");
    std::vector<uint8_t> out;
    size_t rec = (p.label_bits + 7) / 8;
    out.reserve(kHeaderBytes + rec * labels.size());
    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(uint8_t(p.family));
    out.push_back(uint8_t(p.mode));
    put_u64le(out, p.n);
    put_u64le(out, p.family == Family::bipartite ? p.n_u : 0);
    put_u32le(out, p.label_bits);
    for (const BitString& l : labels) {
        if (l.size() != p.label_bits)
            throw std::invalid_argument("write_labels: label length mismatch");
        out.insert(out.end(), l.bytes().begin(), l.bytes().end());
    }
    return out;
}

LabelFile read_labels(const std::vector<uint8_t>& bytes) {
    if (bytes.size() < kHeaderBytes || !std::equal(kMagic, kMagic + 4, bytes.begin()))
        throw std::runtime_error("label file: bad magic");
    uint8_t family_code = bytes[4], mode_code = bytes[5];
    if (family_code > 3) throw std::runtime_error("label file: bad family code");
    if (mode_code > 2) throw std::runtime_error("label file: bad mode code");
    uint64_t n = get_u64le(bytes, 6);
    uint64_t n_u = get_u64le(bytes, 14);
    uint32_t bits = get_u32le(bytes, 22);

    Family family = Family(family_code);
    Mode mode = Mode(mode_code);
    SchemeParams p;
    try {
        p = family == Family::bipartite ? params_for_bipartite(n_u, n - n_u, mode)
                                        : params_for(family, n, mode);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("label file: header does not describe a valid "
                                             "scheme: ") +
                                 e.what());
    }
    if (p.label_bits != bits)
        throw std::runtime_error("label file: header label length mismatch");

    size_t rec = (bits + 7) / 8;
    if (bytes.size() != kHeaderBytes + rec * n)
        throw std::runtime_error("label file: truncated or oversized record section");
    LabelFile out{std::move(p), {}};
    out.labels.reserve(n);
    for (uint64_t i = 0; i < n; ++i)
        out.labels.push_back(
            BitString::from_bytes(bytes.data() + kHeaderBytes + i * rec, rec, bits));
    return out;
}

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return std::vector<uint8_t>(std::istreambuf_iterator<char>(in),
                                std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::vector<uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace als
