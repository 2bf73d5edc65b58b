#include "als/universal.hpp"

#include <sstream>
#include <stdexcept>

#include "als/schemes.hpp"

namespace als {

Natural universal_size(const SchemeParams& p) { return Natural(1) << p.label_bits; }

int universal_adjacent(const Natural& x, const Natural& y, const SchemeParams& p) {
    Natural size = universal_size(p);
    if (x >= size || y >= size) throw std::out_of_range("universal_adjacent: id out of range");
    if (x == y) return 0;
    BitString lx = BitString::from_natural(x, p.label_bits);
    BitString ly = BitString::from_natural(y, p.label_bits);
    try {
        return edge_query(lx, ly, p);
    } catch (const std::exception&) {
        return 0;  // ids no encoding produces are isolated
    }
}

EmbeddingCertificate verify_induced(const Graph& g, const SchemeParams& p) {
    EmbeddingCertificate cert;
    std::vector<BitString> labels = encode_labels(g, p);
    cert.phi.reserve(labels.size());
    for (const BitString& l : labels) cert.phi.push_back(l.to_natural());
    uint64_t n = labels.size();
    for (uint64_t u = 0; u < n; ++u)
        for (uint64_t v = 0; v < n; ++v) {
            if (u == v) continue;
            if (cert.phi[u] == cert.phi[v]) {
                cert.violation = {u, v};
                return cert;
            }
            int got = universal_adjacent(cert.phi[u], cert.phi[v], p);
            int want;
            switch (p.family) {
                case Family::directed:
                case Family::tournament:
                    want = g.edge(u, v) ? 1 : 0;
                    break;
                case Family::undirected:
                    want = g.edge(u, v) ? 1 : 0;
                    break;
                case Family::bipartite: {
                    bool xu = u < g.n_u(), yu = v < g.n_u();
                    want = (xu == yu) ? 0
                                      : (xu ? g.edge(u, v - g.n_u()) : g.edge(v, u - g.n_u()));
                    break;
                }
                default:
                    throw std::logic_error("verify_induced: unknown family");
            }
            if (got != want) {
                cert.violation = {u, v};
                return cert;
            }
        }
    cert.ok = true;
    return cert;
}

std::string materialize_universal(const SchemeParams& p) {
    if (p.label_bits > 24)
        throw std::invalid_argument("materialize_universal: 2^" +
                                    std::to_string(p.label_bits) + " vertices is too many");
    uint64_t size = uint64_t(1) << p.label_bits;
    bool ordered = p.family == Family::directed || p.family == Family::tournament;
    std::ostringstream os;
    os << "# universal graph: family=" << to_string(p.family) << " mode=" << to_string(p.mode)
       << " n=" << p.n;
    if (p.family == Family::bipartite) os << " nU=" << p.n_u << " nV=" << p.n_v;
    os << " label_bits=" << p.label_bits << '\n';
    os << (ordered ? "directed " : "undirected ") << size << '\n';
    for (uint64_t x = 0; x < size; ++x)
        for (uint64_t y = ordered ? 0 : x + 1; y < size; ++y) {
            if (x == y) continue;
            if (universal_adjacent(Natural(x), Natural(y), p)) os << x << ' ' << y << '\n';
        }
    return os.str();
}

}  // namespace als
