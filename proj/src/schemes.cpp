#include "als/schemes.hpp"

#include <algorithm>
#include <stdexcept>

#include "als/combinat.hpp"
#include "als/runenc.hpp"
#include "als/spread.hpp"
#include "schemes_internal.hpp"

namespace als {

namespace detail {

BitString encode_index(uint64_t ind, const SchemeParams& p) {
    if (p.econ_index) return index_encode(ind, p.n_enc);
    return BitString::from_u64(ind, p.index_bits);
}

uint64_t decode_index(BitCursor& cur, const SchemeParams& p) {
    uint64_t ind = p.econ_index ? index_decode(cur, p.n_enc) : cur.read_u64(p.index_bits);
    if (ind >= p.n_enc) throw std::out_of_range("label: index out of range");
    return ind;
}

size_t index_width(uint64_t ind, const SchemeParams& p) {
    return p.econ_index ? index_len(ind, p.n_enc) : p.index_bits;
}

BitString zero_pad(const BitString& s, size_t width) {
    if (s.size() > width) throw std::logic_error("zero_pad: tag over field width");
    if (s.size() == width) return s;
    BitString out = s;
    while (out.size() < width) out.push_back(false);
    return out;
}

}  // namespace detail

using detail::zero_pad;

// ---------------------------------------------------------------------------
// Circular half-row tags.

std::vector<BitString> moon_encode(const Graph& g, const std::vector<uint64_t>& ind) {
    uint64_t n = g.n();
    if (ind.size() != n) throw std::invalid_argument("moon_encode: index table size mismatch");
    std::vector<uint64_t> inv(n, n);
    for (uint64_t u = 0; u < n; ++u) {
        if (ind[u] >= n || inv[ind[u]] != n)
            throw std::invalid_argument("moon_encode: indices are not a bijection");
        inv[ind[u]] = u;
    }
    uint64_t w = n / 2;
    std::vector<BitString> tags(n);
    for (uint64_t u = 0; u < n; ++u) {
        BitString tag(w);
        for (uint64_t d = 1; d <= w; ++d) tag.set(d - 1, g.edge(u, inv[(ind[u] + d) % n]));
        tags[u] = tag;
    }
    return tags;
}

int moon_edge(uint64_t ind_a, const BitString& adj_a, uint64_t ind_b, const BitString& adj_b,
              uint64_t n) {
    if (adj_a.size() != n / 2 || adj_b.size() != n / 2)
        throw std::invalid_argument("moon_edge: tag length mismatch");
    if (ind_a >= n || ind_b >= n) throw std::out_of_range("moon_edge: index out of range");
    if (ind_a == ind_b) return 0;
    uint64_t d = (ind_b + n - ind_a) % n;
    // The antipodal bit is stored twice; the smaller index holds the
    // canonical copy, which keeps the answer symmetric in the arguments.
    if (2 * d == n) return (ind_a < ind_b ? adj_a : adj_b).get(d - 1) ? 1 : 0;
    if (d < n - d) return adj_a.get(d - 1) ? 1 : 0;
    return adj_b.get(n - d - 1) ? 1 : 0;
}

namespace {

// Circular tags over a local vertex set, with an optional per-vertex flag
// that drops the duplicated antipodal bit (even n only; the dropped slot is
// the last one). `adj` and `dropped` take local indices.
template <typename Adj, typename Dropped>
std::vector<BitString> moon_tags_local(uint64_t n, Adj&& adj, Dropped&& dropped) {
    std::vector<BitString> tags(n);
    for (uint64_t l = 0; l < n; ++l) {
        uint64_t w = n / 2 - (dropped(l) ? 1 : 0);
        BitString tag(w);
        for (uint64_t d = 1; d <= w; ++d) tag.set(d - 1, adj(l, (l + d) % n));
        tags[l] = tag;
    }
    return tags;
}

// Reads the circular-scheme bit for locals (la, lb). `bit` fetches tag bit
// `pos` of a local vertex; `dropped` as above.
template <typename BitAt, typename Dropped>
int moon_query_local(uint64_t la, uint64_t lb, uint64_t n, BitAt&& bit, Dropped&& dropped) {
    if (la == lb) return 0;
    uint64_t d = (lb + n - la) % n;
    if (2 * d == n) {
        // Antipodal pair: read whichever copy survives (with drops) or the
        // canonical smaller-index copy; either way the answer is symmetric.
        uint64_t keeper = dropped(la) ? lb : dropped(lb) ? la : std::min(la, lb);
        return bit(keeper, n / 2 - 1) ? 1 : 0;
    }
    if (d < n - d) return bit(la, d - 1) ? 1 : 0;
    return bit(lb, (n - d) - 1) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Naive layouts: fixed-width index followed by the vertex's raw tag.

std::vector<BitString> naive_encode(const Graph& g, const SchemeParams& p) {
    uint64_t n = p.n;
    std::vector<BitString> labels;
    labels.reserve(n);
    auto finish = [&](uint64_t ind, const BitString& tag) {
        BitString lab = BitString::from_u64(ind, p.index_bits);
        lab.append(tag);
        labels.push_back(zero_pad(lab, p.label_bits));
    };
    switch (p.family) {
        case Family::directed:
            for (uint64_t u = 0; u < n; ++u) {
                BitString row(n - 1);
                for (uint64_t v = 0; v < n; ++v)
                    if (v != u) row.set(v < u ? v : v - 1, g.edge(u, v));
                finish(u, row);
            }
            break;
        case Family::undirected: {
            std::vector<uint64_t> ident(n);
            for (uint64_t u = 0; u < n; ++u) ident[u] = u;
            auto tags = moon_encode(g, ident);
            for (uint64_t u = 0; u < n; ++u) finish(u, tags[u]);
            break;
        }
        case Family::tournament: {
            // Underlying undirected graph: edge present iff the tournament
            // edge runs from the lower original index to the higher.
            auto tags = moon_tags_local(
                n,
                [&](uint64_t a, uint64_t b) {
                    return a < b ? g.edge(a, b) : (a > b ? g.edge(b, a) : false);
                },
                [](uint64_t) { return false; });
            for (uint64_t u = 0; u < n; ++u) finish(u, tags[u]);
            break;
        }
        case Family::bipartite: {
            uint64_t w = std::max(g.n_u(), g.n_v());
            for (uint64_t u = 0; u < g.n_u(); ++u) {
                BitString row(g.n_v());
                for (uint64_t v = 0; v < g.n_v(); ++v) row.set(v, g.edge(u, v));
                finish(u, zero_pad(row, w));
            }
            for (uint64_t v = 0; v < g.n_v(); ++v) {
                BitString col(g.n_u());
                for (uint64_t u = 0; u < g.n_u(); ++u) col.set(u, g.edge(u, v));
                finish(g.n_u() + v, zero_pad(col, w));
            }
            break;
        }
    }
    return labels;
}

int naive_query(const BitString& x, const BitString& y, const SchemeParams& p) {
    uint64_t n = p.n;
    uint64_t ix = x.read_u64(0, p.index_bits);
    uint64_t iy = y.read_u64(0, p.index_bits);
    if (ix >= n || iy >= n) throw std::out_of_range("label: index out of range");
    if (ix == iy) return 0;
    size_t off = p.index_bits;
    switch (p.family) {
        case Family::directed:
            return x.get(off + (iy < ix ? iy : iy - 1)) ? 1 : 0;
        case Family::undirected:
            return moon_edge(ix, x.slice(off, n / 2), iy, y.slice(off, n / 2), n);
        case Family::tournament: {
            int bit = moon_edge(ix, x.slice(off, n / 2), iy, y.slice(off, n / 2), n);
            return ((bit == 1) == (ix < iy)) ? 1 : 0;
        }
        case Family::bipartite: {
            bool xu = ix < p.n_u, yu = iy < p.n_u;
            if (xu == yu) return 0;
            uint64_t other = yu ? iy : iy - p.n_u;
            return x.get(off + other) ? 1 : 0;
        }
    }
    throw std::logic_error("naive_query: unknown family");
}

// ---------------------------------------------------------------------------
// Directed labels.
//
// A vertex of the small set A = [0, k):
//   [index][row codeword: ell_i][kept B->A bits: m - ell'_i][A out-row: k-1][pad]
// A vertex of the large set B (new index k + j):
//   [index][received B->A bits: cap(j)][B out-row: m-1][pad]

std::vector<BitString> directed_encode(const Graph& g, const SchemeParams& p) {
    const DirectedLayout& d = p.dir;
    uint64_t n = p.n, k = d.k, m = d.m;

    BlockMatrix fwd(k, m);
    for (uint64_t i = 0; i < k; ++i)
        for (uint64_t j = 0; j < m; ++j) fwd.set(i, j, g.edge(i, k + j));
    GraySorted gs = gray_sort(fwd);

    std::vector<BitString> codewords(k);
    for (uint64_t i = 0; i < k; ++i) codewords[i] = encode_row(gs.sorted.row(i), uint32_t(i));

    BlockMatrix back(k, m);
    for (uint64_t i = 0; i < k; ++i)
        for (uint64_t j = 0; j < m; ++j) back.set(i, j, g.edge(k + gs.perm[j], i));
    SpreadTags tags = spread_apply(back, d.back);

    std::vector<BitString> labels(n);
    for (uint64_t u = 0; u < n; ++u) {
        BitString lab;
        if (u < k) {
            lab = detail::encode_index(u, p);
            lab.append(codewords[u]);
            lab.append(tags.u_tags[u]);
            BitString row(k - 1);
            for (uint64_t w = 0; w < k; ++w)
                if (w != u) row.set(w < u ? w : w - 1, g.edge(u, w));
            lab.append(row);
        } else {
            uint64_t j = gs.new_index[u - k];
            lab = detail::encode_index(k + j, p);
            lab.append(tags.v_tags[j]);
            BitString row(m - 1);
            for (uint64_t w = 0; w < m; ++w)
                if (w != j) row.set(w < j ? w : w - 1, g.edge(u, k + gs.perm[w]));
            lab.append(row);
        }
        labels[u] = zero_pad(lab, p.label_bits);
    }
    return labels;
}

int directed_query(const BitString& x, const BitString& y, const SchemeParams& p) {
    const DirectedLayout& d = p.dir;
    BitCursor cx(x), cy(y);
    uint64_t ix = detail::decode_index(cx, p);
    uint64_t iy = detail::decode_index(cy, p);
    if (ix == iy) return 0;
    uint64_t k = d.k, m = d.m;
    bool xa = ix < k, ya = iy < k;
    if (xa && ya)  // inside A: x's out-row
        return x.get(cx.position() + d.ell[ix] + (m - d.back.ell[ix]) +
                     (iy < ix ? iy : iy - 1))
                   ? 1
                   : 0;
    if (!xa && !ya) {  // inside B
        uint64_t jx = ix - k, jy = iy - k;
        return x.get(cx.position() + d.back.cap(jx) + (jy < jx ? jy : jy - 1)) ? 1 : 0;
    }
    if (xa) {  // A -> B: decode x's row codeword
        BitString row = decode_row(cx.read_bits(d.ell[ix]), m, uint32_t(ix));
        return row.get(iy - k) ? 1 : 0;
    }
    // B -> A: locate the spread bit.
    uint64_t i = iy, j = ix - k;
    BitLocation loc = spread_locate(i, j, d.back);
    if (loc.on_v) return x.get(cx.position() + loc.pos) ? 1 : 0;
    return y.get(cy.position() + d.ell[i] + loc.pos) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Undirected labels.
//
// Vertices split by new index into A0 [0,k), B0 [k, half), A1 [half, half+k),
// B1 [half+k, n), half = ceil(n/2).
// A-side vertex (side s, row i):
//   [index][row codeword field: ell_i][kept cross bits field: m0 - ell'_i]
//   [circle tag over A0+A1: k][pad]
// B-side vertex (side s, new index j):
//   [index][received cross bits][circle tag over B0+B1][pad]

struct UndirectedRegions {
    uint64_t k, half, m0, m1;
    uint64_t region(uint64_t ind) const {  // 0 = A0, 1 = B0, 2 = A1, 3 = B1
        if (ind < k) return 0;
        if (ind < half) return 1;
        if (ind < half + k) return 2;
        return 3;
    }
    uint64_t local(uint64_t ind) const {
        switch (region(ind)) {
            case 0: return ind;
            case 1: return ind - k;
            case 2: return ind - half;
            default: return ind - half - k;
        }
    }
};

UndirectedRegions regions_of(const SchemeParams& p) {
    return {p.und.k, (p.n + 1) / 2, p.und.m0, p.und.m1};
}

// Receive-field width of B-side vertex j on side s (0 = B0, 1 = B1).
uint64_t recv_width(const SchemeParams& p, int s, uint64_t j) {
    if (p.mode == Mode::standard) return p.und.recv_width_std;
    return s == 0 ? p.und.to_b0.cap(j) : p.und.to_b1.cap(j);
}

bool moon_dropped(const SchemeParams& p, uint64_t moon_local) {
    if (!p.und.drop_moon) return false;
    uint64_t m = p.und.m1;
    return moon_local < m ? (moon_local < p.und.drop_split)
                          : (moon_local - m >= p.und.drop_split);
}

struct UndirectedEncoding {
    std::vector<BitString> labels;
    std::vector<uint64_t> ind;  // original vertex -> new index
};

// Index assignment alone (the column sorts of the two diagonal blocks).
std::vector<uint64_t> undirected_indices(const Graph& g, const SchemeParams& p) {
    UndirectedRegions r = regions_of(p);
    uint64_t n = p.n;
    BlockMatrix fwd0(r.k, r.m0), fwd1(r.k, r.m1);
    for (uint64_t i = 0; i < r.k; ++i) {
        for (uint64_t j = 0; j < r.m0; ++j) fwd0.set(i, j, g.edge(i, r.k + j));
        for (uint64_t j = 0; j < r.m1; ++j) fwd1.set(i, j, g.edge(r.half + i, r.half + r.k + j));
    }
    GraySorted gs0 = gray_sort(fwd0), gs1 = gray_sort(fwd1);
    std::vector<uint64_t> ind(n);
    for (uint64_t u = 0; u < n; ++u) {
        switch (r.region(u)) {
            case 0: ind[u] = u; break;
            case 1: ind[u] = r.k + gs0.new_index[u - r.k]; break;
            case 2: ind[u] = u; break;
            default: ind[u] = r.half + r.k + gs1.new_index[u - r.half - r.k]; break;
        }
    }
    return ind;
}

UndirectedEncoding undirected_encode(const Graph& g, const SchemeParams& p) {
    const UndirectedLayout& ul = p.und;
    UndirectedRegions r = regions_of(p);
    uint64_t n = p.n;

    BlockMatrix fwd0(r.k, r.m0), fwd1(r.k, r.m1);
    for (uint64_t i = 0; i < r.k; ++i) {
        for (uint64_t j = 0; j < r.m0; ++j) fwd0.set(i, j, g.edge(i, r.k + j));
        for (uint64_t j = 0; j < r.m1; ++j) fwd1.set(i, j, g.edge(r.half + i, r.half + r.k + j));
    }
    GraySorted gs0 = gray_sort(fwd0), gs1 = gray_sort(fwd1);

    std::vector<BitString> cw0(r.k), cw1(r.k);
    for (uint64_t i = 0; i < r.k; ++i) {
        cw0[i] = encode_row(gs0.sorted.row(i), uint32_t(i));
        cw1[i] = zero_pad(encode_row(gs1.sorted.row(i), uint32_t(i)), ul.ell[i]);
    }

    // Cross blocks, columns in new order.
    BlockMatrix cross0(r.k, r.m0);  // rows A1, cols B0
    BlockMatrix cross1(r.k, r.m1);  // rows A0, cols B1
    for (uint64_t i = 0; i < r.k; ++i) {
        for (uint64_t j = 0; j < r.m0; ++j)
            cross0.set(i, j, g.edge(r.half + i, r.k + gs0.perm[j]));
        for (uint64_t j = 0; j < r.m1; ++j)
            cross1.set(i, j, g.edge(i, r.half + r.k + gs1.perm[j]));
    }
    SpreadTags tags0 = spread_apply(cross0, ul.to_b0);
    SpreadTags tags1 = spread_apply(cross1, ul.to_b1);

    // New-index inverse per B side, for the circle tags.
    std::vector<uint64_t> b0_orig(r.m0), b1_orig(r.m1);
    for (uint64_t c = 0; c < r.m0; ++c) b0_orig[gs0.new_index[c]] = r.k + c;
    for (uint64_t c = 0; c < r.m1; ++c) b1_orig[gs1.new_index[c]] = r.half + r.k + c;

    auto a_orig = [&](uint64_t l) { return l < r.k ? l : r.half + (l - r.k); };
    auto moon_a = moon_tags_local(
        2 * r.k, [&](uint64_t a, uint64_t b) { return g.edge(a_orig(a), a_orig(b)); },
        [](uint64_t) { return false; });

    uint64_t nb = n - 2 * r.k;
    auto b_orig = [&](uint64_t l) { return l < r.m0 ? b0_orig[l] : b1_orig[l - r.m0]; };
    auto moon_b = moon_tags_local(
        nb, [&](uint64_t a, uint64_t b) { return g.edge(b_orig(a), b_orig(b)); },
        [&](uint64_t l) { return moon_dropped(p, l); });

    UndirectedEncoding out;
    out.labels.assign(n, BitString());
    out.ind.assign(n, 0);
    for (uint64_t u = 0; u < n; ++u) {
        uint64_t reg = r.region(u);
        BitString lab;
        if (reg == 0 || reg == 2) {
            uint64_t i = r.local(u);
            uint64_t ind = u;  // A keeps original positions
            lab = detail::encode_index(ind, p);
            lab.append(reg == 0 ? cw0[i] : cw1[i]);
            const BitString& keep = reg == 0 ? tags1.u_tags[i] : tags0.u_tags[i];
            lab.append(zero_pad(keep, r.m0 - ul.to_b0.ell[i]));
            lab.append(moon_a[reg == 0 ? i : r.k + i]);
            out.ind[u] = ind;
        } else {
            uint64_t c = r.local(u);
            uint64_t j = reg == 1 ? gs0.new_index[c] : gs1.new_index[c];
            uint64_t ind = reg == 1 ? r.k + j : r.half + r.k + j;
            int side = reg == 1 ? 0 : 1;
            lab = detail::encode_index(ind, p);
            const BitString& rv = side == 0 ? tags0.v_tags[j] : tags1.v_tags[j];
            lab.append(zero_pad(rv, recv_width(p, side, j)));
            lab.append(moon_b[side == 0 ? j : r.m0 + j]);
            out.ind[u] = ind;
        }
        out.labels[u] = zero_pad(lab, p.label_bits);
    }
    return out;
}

int undirected_query(const BitString& x, const BitString& y, const SchemeParams& p) {
    const UndirectedLayout& ul = p.und;
    UndirectedRegions r = regions_of(p);
    BitCursor cx(x), cy(y);
    uint64_t ix = detail::decode_index(cx, p);
    uint64_t iy = detail::decode_index(cy, p);
    if (ix == iy) return 0;
    uint64_t rx = r.region(ix), ry = r.region(iy);
    bool x_is_a = rx == 0 || rx == 2, y_is_a = ry == 0 || ry == 2;

    auto a_moon_off = [&](uint64_t i, const BitCursor& c) {
        return c.position() + ul.ell[i] + (r.m0 - ul.to_b0.ell[i]);
    };
    if (x_is_a && y_is_a) {
        uint64_t lx = (rx == 0 ? 0 : r.k) + r.local(ix);
        uint64_t ly = (ry == 0 ? 0 : r.k) + r.local(iy);
        size_t offx = a_moon_off(r.local(ix), cx);
        size_t offy = a_moon_off(r.local(iy), cy);
        return moon_query_local(
            lx, ly, 2 * r.k,
            [&](uint64_t l, uint64_t pos) {
                return l == lx ? x.get(offx + pos) : y.get(offy + pos);
            },
            [](uint64_t) { return false; });
    }
    if (!x_is_a && !y_is_a) {
        uint64_t nb = p.n - 2 * r.k;
        uint64_t lx = (rx == 1 ? 0 : r.m0) + r.local(ix);
        uint64_t ly = (ry == 1 ? 0 : r.m0) + r.local(iy);
        size_t offx = cx.position() + recv_width(p, rx == 1 ? 0 : 1, r.local(ix));
        size_t offy = cy.position() + recv_width(p, ry == 1 ? 0 : 1, r.local(iy));
        return moon_query_local(
            lx, ly, nb,
            [&](uint64_t l, uint64_t pos) {
                return l == lx ? x.get(offx + pos) : y.get(offy + pos);
            },
            [&](uint64_t l) { return moon_dropped(p, l); });
    }

    // One vertex on the A side, one on the B side.
    const BitString& a = x_is_a ? x : y;
    const BitString& b = x_is_a ? y : x;
    uint64_t ia = x_is_a ? ix : iy, ib = x_is_a ? iy : ix;
    BitCursor& ca = x_is_a ? cx : cy;
    BitCursor& cb = x_is_a ? cy : cx;
    uint64_t ra = r.region(ia), rb = r.region(ib);
    uint64_t i = r.local(ia), j = r.local(ib);

    if ((ra == 0 && rb == 1) || (ra == 2 && rb == 3)) {
        // Diagonal block: decode the A row codeword.
        uint64_t m = ra == 0 ? r.m0 : r.m1;
        uint32_t len = ra == 0 ? ul.ell[i] : ul.ell_b1[i];
        BitString row = decode_row(a.slice(ca.position(), len), m, uint32_t(i));
        return row.get(j) ? 1 : 0;
    }
    // Cross block: spread lookup.
    const SpreadPlan& plan = rb == 1 ? ul.to_b0 : ul.to_b1;
    BitLocation loc = spread_locate(i, j, plan);
    if (loc.on_v) return b.get(cb.position() + loc.pos) ? 1 : 0;
    return a.get(ca.position() + ul.ell[i] + loc.pos) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Tournaments: relabel with the undirected scheme applied to the graph
// "edge runs from lower to higher index", then re-encode under the new
// indices. The index assignment only depends on the diagonal blocks, which
// the relabeling does not change, so both passes agree.

std::vector<BitString> tournament_encode(const Graph& g, const SchemeParams& p) {
    uint64_t n = p.n;
    Graph g1 = Graph::undirected(n);
    for (uint64_t u = 0; u < n; ++u)
        for (uint64_t v = u + 1; v < n; ++v)
            if (g.edge(u, v)) g1.add_edge(u, v);
    std::vector<uint64_t> ind1 = undirected_indices(g1, p);

    Graph g2 = Graph::undirected(n);
    for (uint64_t u = 0; u < n; ++u)
        for (uint64_t v = u + 1; v < n; ++v) {
            bool low_to_high = ind1[u] < ind1[v] ? g.edge(u, v) : g.edge(v, u);
            if (low_to_high) g2.add_edge(u, v);
        }
    UndirectedEncoding enc = undirected_encode(g2, p);
    if (enc.ind != ind1)
        throw std::logic_error("tournament: relabeling changed the index assignment");
    return std::move(enc.labels);
}

int tournament_query(const BitString& x, const BitString& y, const SchemeParams& p) {
    BitCursor cx(x), cy(y);
    uint64_t ix = detail::decode_index(cx, p);
    uint64_t iy = detail::decode_index(cy, p);
    if (ix == iy) return 0;
    int bit = undirected_query(x, y, p);
    return ((bit == 1) == (ix < iy)) ? 1 : 0;
}

void check_graph(const Graph& g, const SchemeParams& p) {
    if (g.family() != p.family) throw std::invalid_argument("encode: family mismatch");
    if (g.n() != p.n) throw std::invalid_argument("encode: vertex count mismatch");
    if (p.family == Family::bipartite && (g.n_u() != p.n_u || g.n_v() != p.n_v))
        throw std::invalid_argument("encode: side size mismatch");
    g.validate();
}

}  // namespace

std::vector<BitString> encode_labels(const Graph& g, const SchemeParams& p) {
    check_graph(g, p);
    if (p.mode == Mode::naive) return naive_encode(g, p);
    switch (p.family) {
        case Family::directed: return directed_encode(g, p);
        case Family::undirected: return undirected_encode(g, p).labels;
        case Family::tournament: return tournament_encode(g, p);
        case Family::bipartite: return detail::bipartite_encode(g, p);
    }
    throw std::logic_error("encode_labels: unknown family");
}

int edge_query(const BitString& x, const BitString& y, const SchemeParams& p) {
    if (x.size() != p.label_bits || y.size() != p.label_bits)
        throw std::invalid_argument("edge_query: label length mismatch");
    if (p.mode == Mode::naive) return naive_query(x, y, p);
    switch (p.family) {
        case Family::directed: return directed_query(x, y, p);
        case Family::undirected: return undirected_query(x, y, p);
        case Family::tournament: return tournament_query(x, y, p);
        case Family::bipartite: return detail::bipartite_query(x, y, p);
    }
    throw std::logic_error("edge_query: unknown family");
}

uint64_t parsed_index(const BitString& label, const SchemeParams& p) {
    if (label.size() != p.label_bits)
        throw std::invalid_argument("parsed_index: label length mismatch");
    if (p.family == Family::bipartite && p.mode != Mode::naive)
        return detail::bipartite_parsed_index(label, p);
    BitCursor cur(label);
    return detail::decode_index(cur, p);
}

}  // namespace als
