#include <functional>
#include <stdexcept>

#include "als/combinat.hpp"
#include "als/runenc.hpp"
#include "als/schemes.hpp"
#include "als/spread.hpp"
#include "schemes_internal.hpp"

// Bipartite labels, one regime flag up front:
//
//   biased        [1][role][index: b][r: b][tag: T][pad]
//   near-balanced, ordinary vertex of the balanced core
//                 [0][role][0][core index: b_c][core tags][w0 kept cross bits][pad]
//   near-balanced, special vertex
//                 [0][role][1][index: b][r: b][cross tag: a'/b'][U1xV1 share][pad]
//
// role 0 is the small side. Inside the core each side splits into
// A.0 [0,k), B.0 [k,k+q0), A.1 [.,.+k), B.1 [.,p); the core tag order is
//   A rows:  [row codeword][kept spread bits][2k out-bits, left side only]
//   B rows:  [received spread bits][two half-block fields]

namespace als::detail {

namespace {

struct CoreFields {
    int reg;          // 0 A.0, 1 B.0, 2 A.1, 3 B.1 within one side
    uint64_t local;   // row index for A, new column index for B
    size_t run = 0, keep = 0, naive = 0;
    size_t recv = 0, f1 = 0, f2 = 0;
    uint32_t run_len = 0;
    uint64_t keep_len = 0;
};

int core_region(const BalancedCore& c, uint64_t side_local) {
    if (side_local < c.k_c) return 0;
    if (side_local < c.k_c + c.q0) return 1;
    if (side_local < 2 * c.k_c + c.q0) return 2;
    return 3;
}

uint64_t core_local(const BalancedCore& c, uint64_t side_local) {
    switch (core_region(c, side_local)) {
        case 0: return side_local;
        case 1: return side_local - c.k_c;
        case 2: return side_local - c.k_c - c.q0;
        default: return side_local - 2 * c.k_c - c.q0;
    }
}

// Offsets of the core tag fields, relative to the label; `base` points just
// past the core index field.
CoreFields core_fields(const BalancedCore& c, bool v_side, uint64_t side_local, size_t base) {
    CoreFields f;
    f.reg = core_region(c, side_local);
    f.local = core_local(c, side_local);
    size_t at = base;
    if (f.reg == 0 || f.reg == 2) {
        uint64_t i = f.local;
        uint64_t ellp = c.ell[i] + c.extra;
        // A.0 spreads into the opposite B.1 (width q1), A.1 into B.0 (q0).
        uint64_t m_keep = f.reg == 0 ? c.q1 : c.q0;
        f.run = at;
        f.run_len = c.ell[i];
        f.keep = f.run + f.run_len;
        f.keep_len = m_keep - ellp;
        f.naive = f.keep + f.keep_len;  // width 2k_c on the U side, 0 on V
        return f;
    }
    uint64_t j = f.local;
    const SpreadPlan& in = !v_side ? (f.reg == 1 ? c.sp_into_b00 : c.sp_into_b10)
                                   : (f.reg == 1 ? c.sp_into_b01 : c.sp_into_b11);
    f.recv = at;
    f.f1 = f.recv + in.cap(j);
    if (!v_side) {
        f.f2 = f.f1 + (f.reg == 1 ? c.keep_bb00_b01 : c.keep_bb10_b01);
    } else {
        f.f2 = f.f1 + (f.reg == 1 ? c.bb00_b01.cap(j) : c.bb00_b11.cap(j));
    }
    return f;
}

// Combined width of the core tag fields (everything after the core index).
size_t core_tags_len(const BalancedCore& c, bool v_side, uint64_t side_local) {
    CoreFields f = core_fields(c, v_side, side_local, 0);
    if (f.reg == 0 || f.reg == 2) return f.naive + (v_side ? 0 : 2 * c.k_c);
    if (!v_side) return f.f2 + (f.reg == 1 ? c.keep_bb00_b11 : c.keep_bb10_b11);
    return f.f2 + (f.reg == 1 ? c.bb10_b01.cap(f.local) : c.bb10_b11.cap(f.local));
}

struct CoreEncoding {
    std::vector<uint64_t> ind_u, ind_v;          // original side-local -> core index
    std::vector<BitString> content_u, content_v; // [core index][core tags]
};

using CrossFn = std::function<bool(uint64_t, uint64_t)>;  // (u side-local, v side-local)

CoreEncoding core_encode(const CrossFn& cc, const BalancedCore& c) {
    uint64_t p = c.p, k = c.k_c, q0 = c.q0, q1 = c.q1;
    auto u_a0 = [&](uint64_t i) { return i; };
    auto u_b0 = [&](uint64_t j) { return k + j; };           // original order
    auto u_a1 = [&](uint64_t i) { return k + q0 + i; };
    auto u_b1 = [&](uint64_t j) { return 2 * k + q0 + j; };

    // Diagonal run-encoded blocks fix the B orders.
    BlockMatrix m_b01(k, q0), m_b11(k, q1), m_b00(k, q0), m_b10(k, q1);
    for (uint64_t i = 0; i < k; ++i) {
        for (uint64_t j = 0; j < q0; ++j) {
            m_b01.set(i, j, cc(u_a0(i), u_b0(j)));   // rows A00 x cols B01
            m_b00.set(i, j, cc(u_b0(j), u_a0(i)));   // rows A01 x cols B00
        }
        for (uint64_t j = 0; j < q1; ++j) {
            m_b11.set(i, j, cc(u_a1(i), u_b1(j)));   // rows A10 x cols B11
            m_b10.set(i, j, cc(u_b1(j), u_a1(i)));   // rows A11 x cols B10
        }
    }
    GraySorted g_b01 = gray_sort(m_b01), g_b11 = gray_sort(m_b11);
    GraySorted g_b00 = gray_sort(m_b00), g_b10 = gray_sort(m_b10);

    std::vector<BitString> cw_a00(k), cw_a10(k), cw_a01(k), cw_a11(k);
    for (uint64_t i = 0; i < k; ++i) {
        cw_a00[i] = encode_row(g_b01.sorted.row(i), uint32_t(i));
        cw_a01[i] = encode_row(g_b00.sorted.row(i), uint32_t(i));
        cw_a10[i] = zero_pad(encode_row(g_b11.sorted.row(i), uint32_t(i)), c.ell[i]);
        cw_a11[i] = zero_pad(encode_row(g_b10.sorted.row(i), uint32_t(i)), c.ell[i]);
    }

    // Cross spreads, columns in the new order.
    BlockMatrix x_b11(k, q1), x_b01(k, q0), x_b10(k, q1), x_b00(k, q0);
    for (uint64_t i = 0; i < k; ++i) {
        for (uint64_t j = 0; j < q1; ++j) {
            x_b11.set(i, j, cc(u_a0(i), u_b1(g_b11.perm[j])));
            x_b10.set(i, j, cc(u_b1(g_b10.perm[j]), u_a0(i)));  // rows A01 (V side)
        }
        for (uint64_t j = 0; j < q0; ++j) {
            x_b01.set(i, j, cc(u_a1(i), u_b0(g_b01.perm[j])));
            x_b00.set(i, j, cc(u_b0(g_b00.perm[j]), u_a1(i)));  // rows A11 (V side)
        }
    }
    SpreadTags t_b11 = spread_apply(x_b11, c.sp_into_b11);
    SpreadTags t_b01 = spread_apply(x_b01, c.sp_into_b01);
    SpreadTags t_b10 = spread_apply(x_b10, c.sp_into_b10);
    SpreadTags t_b00 = spread_apply(x_b00, c.sp_into_b00);

    // Big half-and-half blocks, both orders new.
    BlockMatrix bb01(q0, q0), bb11(q0, q1), bb21(q1, q0), bb31(q1, q1);
    for (uint64_t i = 0; i < q0; ++i) {
        for (uint64_t j = 0; j < q0; ++j)
            bb01.set(i, j, cc(u_b0(g_b00.perm[i]), u_b0(g_b01.perm[j])));
        for (uint64_t j = 0; j < q1; ++j)
            bb11.set(i, j, cc(u_b0(g_b00.perm[i]), u_b1(g_b11.perm[j])));
    }
    for (uint64_t i = 0; i < q1; ++i) {
        for (uint64_t j = 0; j < q0; ++j)
            bb21.set(i, j, cc(u_b1(g_b10.perm[i]), u_b0(g_b01.perm[j])));
        for (uint64_t j = 0; j < q1; ++j)
            bb31.set(i, j, cc(u_b1(g_b10.perm[i]), u_b1(g_b11.perm[j])));
    }
    SpreadTags h_bb00_b01 = spread_apply(bb01, c.bb00_b01);
    SpreadTags h_bb00_b11 = spread_apply(bb11, c.bb00_b11);
    SpreadTags h_bb10_b01 = spread_apply(bb21, c.bb10_b01);
    SpreadTags h_bb10_b11 = spread_apply(bb31, c.bb10_b11);

    CoreEncoding out;
    out.ind_u.resize(p);
    out.ind_v.resize(p);
    out.content_u.resize(p);
    out.content_v.resize(p);
    for (uint64_t s = 0; s < p; ++s) {
        // U side.
        {
            int reg = core_region(c, s);
            uint64_t side_new;
            BitString body;
            if (reg == 0 || reg == 2) {
                uint64_t i = core_local(c, s);
                side_new = s;
                body.append(reg == 0 ? cw_a00[i] : cw_a10[i]);
                const BitString& keep = reg == 0 ? t_b11.u_tags[i] : t_b01.u_tags[i];
                body.append(keep);
                BitString naive(2 * k);
                for (uint64_t t = 0; t < k; ++t) {
                    naive.set(t, cc(s, u_a0(t)));          // vs A01
                    naive.set(k + t, cc(s, u_a1(t)));      // vs A11
                }
                body.append(naive);
            } else {
                uint64_t cjold = core_local(c, s);
                uint64_t j = reg == 1 ? g_b00.new_index[cjold] : g_b10.new_index[cjold];
                side_new = (reg == 1 ? k : 2 * k + q0) + j;
                if (reg == 1) {
                    body.append(t_b00.v_tags[j]);
                    body.append(h_bb00_b01.u_tags[j]);
                    body.append(h_bb00_b11.u_tags[j]);
                } else {
                    body.append(t_b10.v_tags[j]);
                    body.append(h_bb10_b01.u_tags[j]);
                    body.append(h_bb10_b11.u_tags[j]);
                }
            }
            out.ind_u[s] = side_new;
            BitString content = BitString::from_u64(side_new, c.b_c);
            content.append(body);
            out.content_u[s] = std::move(content);
        }
        // V side.
        {
            int reg = core_region(c, s);
            uint64_t side_new;
            BitString body;
            if (reg == 0 || reg == 2) {
                uint64_t i = core_local(c, s);
                side_new = s;
                body.append(reg == 0 ? cw_a01[i] : cw_a11[i]);
                const BitString& keep = reg == 0 ? t_b10.u_tags[i] : t_b00.u_tags[i];
                body.append(keep);
            } else {
                uint64_t cjold = core_local(c, s);
                uint64_t j = reg == 1 ? g_b01.new_index[cjold] : g_b11.new_index[cjold];
                side_new = (reg == 1 ? k : 2 * k + q0) + j;
                if (reg == 1) {
                    body.append(t_b01.v_tags[j]);
                    body.append(h_bb00_b01.v_tags[j]);
                    body.append(h_bb10_b01.v_tags[j]);
                } else {
                    body.append(t_b11.v_tags[j]);
                    body.append(h_bb00_b11.v_tags[j]);
                    body.append(h_bb10_b11.v_tags[j]);
                }
            }
            out.ind_v[s] = c.p + side_new;
            BitString content = BitString::from_u64(c.p + side_new, c.b_c);
            content.append(body);
            out.content_v[s] = std::move(content);
        }
    }
    return out;
}

// Adjacency between two core-labeled vertices; `base` offsets point at the
// core index fields inside the full labels.
int core_query(const BitString& lu, size_t base_u, uint64_t su, const BitString& lv,
               size_t base_v, uint64_t sv, const BalancedCore& c) {
    CoreFields fu = core_fields(c, false, su, base_u);
    CoreFields fv = core_fields(c, true, sv, base_v);
    bool u_is_a = fu.reg == 0 || fu.reg == 2;
    bool v_is_a = fv.reg == 0 || fv.reg == 2;

    if (u_is_a && v_is_a) {
        // Tiny blocks ride on the U side: first k bits vs A.0, next k vs A.1.
        size_t pos = (fv.reg == 0 ? 0 : c.k_c) + fv.local;
        return lu.get(fu.naive + pos) ? 1 : 0;
    }
    if (u_is_a && !v_is_a) {
        if ((fu.reg == 0) == (fv.reg == 1)) {
            // Diagonal: decode u's row codeword.
            uint64_t m = fu.reg == 0 ? c.q0 : c.q1;
            uint32_t len = fu.reg == 0 ? c.ell[fu.local] : c.ell_q1[fu.local];
            BitString row = decode_row(lu.slice(fu.run, len), m, uint32_t(fu.local));
            return row.get(fv.local) ? 1 : 0;
        }
        const SpreadPlan& plan = fu.reg == 0 ? c.sp_into_b11 : c.sp_into_b01;
        BitLocation loc = spread_locate(fu.local, fv.local, plan);
        if (loc.on_v) return lv.get(fv.recv + loc.pos) ? 1 : 0;
        return lu.get(fu.keep + loc.pos) ? 1 : 0;
    }
    if (!u_is_a && v_is_a) {
        if ((fv.reg == 0) == (fu.reg == 1)) {
            uint64_t m = fv.reg == 0 ? c.q0 : c.q1;
            uint32_t len = fv.reg == 0 ? c.ell[fv.local] : c.ell_q1[fv.local];
            BitString row = decode_row(lv.slice(fv.run, len), m, uint32_t(fv.local));
            return row.get(fu.local) ? 1 : 0;
        }
        const SpreadPlan& plan = fv.reg == 0 ? c.sp_into_b10 : c.sp_into_b00;
        BitLocation loc = spread_locate(fv.local, fu.local, plan);
        if (loc.on_v) return lu.get(fu.recv + loc.pos) ? 1 : 0;
        return lv.get(fv.keep + loc.pos) ? 1 : 0;
    }
    // Two big-block vertices. The V-side fields are ordered (from B.0, from
    // B.1); the U-side keeps are ordered (vs B.0, vs B.1).
    const SpreadPlan& plan = fu.reg == 1 ? (fv.reg == 1 ? c.bb00_b01 : c.bb00_b11)
                                         : (fv.reg == 1 ? c.bb10_b01 : c.bb10_b11);
    BitLocation loc = spread_locate(fu.local, fv.local, plan);
    if (loc.on_v) return lv.get((fu.reg == 1 ? fv.f1 : fv.f2) + loc.pos) ? 1 : 0;
    return lu.get((fv.reg == 1 ? fu.f1 : fu.f2) + loc.pos) ? 1 : 0;
}

struct BipParsed {
    bool biased = false, v_role = false, special = false;
    uint64_t index = 0;  // ordinary: core index; otherwise global index
    uint64_t r = 0;
    size_t payload = 0;
};

BipParsed bip_parse(const BitString& l, const SchemeParams& p) {
    const BipartiteLayout& bl = p.bip;
    BipParsed out;
    BitCursor cur(l);
    out.biased = cur.read_bit();
    out.v_role = cur.read_bit();
    if ((out.biased) != (bl.regime == BipRegime::biased))
        throw std::invalid_argument("bipartite label: regime mismatch");
    if (out.biased) {
        out.index = cur.read_u64(p.index_bits);
        out.r = cur.read_u64(p.index_bits);
        if (out.r != bl.r) throw std::invalid_argument("bipartite label: bias mismatch");
        if (out.index >= p.n_enc || out.v_role != (out.index >= bl.small))
            throw std::out_of_range("bipartite label: index out of range");
        out.payload = cur.position();
        return out;
    }
    out.special = cur.read_bit();
    const BalancedCore& c = bl.core;
    if (out.special) {
        out.index = cur.read_u64(p.index_bits);
        out.r = cur.read_u64(p.index_bits);
        if (out.r != bl.r) throw std::invalid_argument("bipartite label: bias mismatch");
        uint64_t u1 = bl.big_r - bl.r;
        uint64_t lo = c.n_c + (out.v_role ? u1 : 0);
        uint64_t hi = out.v_role ? p.n_enc : c.n_c + u1;
        if (out.index < lo || out.index >= hi)
            throw std::out_of_range("bipartite label: special index out of range");
    } else {
        out.index = cur.read_u64(c.b_c);
        if (out.index >= c.n_c || out.v_role != (out.index >= c.p))
            throw std::out_of_range("bipartite label: core index out of range");
    }
    out.payload = cur.position();
    return out;
}

}  // namespace

std::vector<BitString> bipartite_encode(const Graph& g, const SchemeParams& p) {
    const BipartiteLayout& bl = p.bip;
    uint64_t small = bl.small, big = bl.big;
    auto cross = [&](uint64_t su, uint64_t sv) -> bool {
        if (bl.padded && su == small - 1) return false;
        return bl.swap_sides ? g.edge(sv, su) : g.edge(su, sv);
    };
    // Internal (role, local) -> output slot, or skip for the phantom.
    std::vector<BitString> labels(p.n);
    auto emit = [&](bool v_role, uint64_t local, BitString lab) {
        if (!v_role && bl.padded && local == small - 1) return;  // phantom
        uint64_t slot;
        if (!v_role)
            slot = bl.swap_sides ? g.n_u() + local : local;
        else
            slot = bl.swap_sides ? local : g.n_u() + local;
        labels[slot] = zero_pad(std::move(lab), p.label_bits);
    };

    if (bl.regime == BipRegime::biased) {
        BlockMatrix m(small, big);
        for (uint64_t i = 0; i < small; ++i)
            for (uint64_t j = 0; j < big; ++j) m.set(i, j, cross(i, j));
        SpreadTags tags = spread_apply(m, bl.biased_plan);
        for (uint64_t i = 0; i < small; ++i) {
            BitString lab("10");
            lab.append(BitString::from_u64(i, p.index_bits));
            lab.append(BitString::from_u64(bl.r, p.index_bits));
            lab.append(tags.u_tags[i]);  // exactly tag_bits
            emit(false, i, std::move(lab));
        }
        for (uint64_t j = 0; j < big; ++j) {
            BitString lab("11");
            lab.append(BitString::from_u64(small + j, p.index_bits));
            lab.append(BitString::from_u64(bl.r, p.index_bits));
            lab.append(zero_pad(tags.v_tags[j], bl.tag_bits));
            emit(true, j, std::move(lab));
        }
        return labels;
    }

    const BalancedCore& c = bl.core;
    uint64_t pc = c.p;
    uint64_t u1 = bl.big_r - bl.r, v1 = bl.big_r + bl.r;
    CoreEncoding core = core_encode(cross, c);

    std::vector<uint64_t> orig_u0(pc), orig_v0(pc);
    for (uint64_t s = 0; s < pc; ++s) {
        orig_u0[core.ind_u[s]] = s;
        orig_v0[core.ind_v[s] - pc] = s;
    }

    BlockMatrix m_v0u1(pc, u1);  // rows V0 (core order), cols U1
    BlockMatrix m_u0v1(pc, v1);
    BlockMatrix m_u1v1(u1, v1);
    for (uint64_t i = 0; i < pc; ++i) {
        for (uint64_t t = 0; t < u1; ++t) m_v0u1.set(i, t, cross(pc + t, orig_v0[i]));
        for (uint64_t t = 0; t < v1; ++t) m_u0v1.set(i, t, cross(orig_u0[i], pc + t));
    }
    for (uint64_t s = 0; s < u1; ++s)
        for (uint64_t t = 0; t < v1; ++t) m_u1v1.set(s, t, cross(pc + s, pc + t));
    SpreadTags t_v0u1 = spread_apply(m_v0u1, bl.v0_to_u1);
    SpreadTags t_u0v1 = spread_apply(m_u0v1, bl.u0_to_v1);
    SpreadTags t_u1v1 = spread_apply(m_u1v1, bl.u1_v1);

    for (uint64_t s = 0; s < pc; ++s) {
        BitString lab_u("000");
        lab_u.append(core.content_u[s]);
        lab_u.append(t_u0v1.u_tags[core.ind_u[s]]);  // w0 bits
        emit(false, s, std::move(lab_u));

        BitString lab_v("010");
        lab_v.append(core.content_v[s]);
        lab_v.append(t_v0u1.u_tags[core.ind_v[s] - pc]);
        emit(true, s, std::move(lab_v));
    }
    for (uint64_t t = 0; t < u1; ++t) {
        BitString lab("001");
        lab.append(BitString::from_u64(c.n_c + t, p.index_bits));
        lab.append(BitString::from_u64(bl.r, p.index_bits));
        lab.append(t_v0u1.v_tags[t]);   // a' bits
        lab.append(t_u1v1.u_tags[t]);   // t_keep bits
        emit(false, pc + t, std::move(lab));
    }
    for (uint64_t t = 0; t < v1; ++t) {
        BitString lab("011");
        lab.append(BitString::from_u64(c.n_c + u1 + t, p.index_bits));
        lab.append(BitString::from_u64(bl.r, p.index_bits));
        lab.append(t_u0v1.v_tags[t]);   // b' bits
        lab.append(t_u1v1.v_tags[t]);
        emit(true, pc + t, std::move(lab));
    }
    return labels;
}

int bipartite_query(const BitString& x, const BitString& y, const SchemeParams& p) {
    const BipartiteLayout& bl = p.bip;
    BipParsed px = bip_parse(x, p), py = bip_parse(y, p);
    if (px.v_role == py.v_role) return 0;
    const BitString& u = px.v_role ? y : x;
    const BitString& v = px.v_role ? x : y;
    const BipParsed& pu = px.v_role ? py : px;
    const BipParsed& pv = px.v_role ? px : py;

    if (bl.regime == BipRegime::biased) {
        uint64_t i = pu.index, j = pv.index - bl.small;
        BitLocation loc = spread_locate(i, j, bl.biased_plan);
        if (loc.on_v) return v.get(pv.payload + loc.pos) ? 1 : 0;
        return u.get(pu.payload + loc.pos) ? 1 : 0;
    }

    const BalancedCore& c = bl.core;
    uint64_t u1 = bl.big_r - bl.r;
    if (!pu.special && !pv.special)
        return core_query(u, pu.payload, pu.index, v, pv.payload, pv.index - c.p, c);
    if (!pu.special && pv.special) {
        uint64_t i = pu.index;                       // U0 core row
        uint64_t t = pv.index - c.n_c - u1;          // V1 local
        BitLocation loc = spread_locate(i, t, bl.u0_to_v1);
        if (loc.on_v) return v.get(pv.payload + loc.pos) ? 1 : 0;
        size_t w0_off = pu.payload + core_tags_len(c, false, pu.index);
        return u.get(w0_off + loc.pos) ? 1 : 0;
    }
    if (pu.special && !pv.special) {
        uint64_t i = pv.index - c.p;                 // V0 core row
        uint64_t t = pu.index - c.n_c;               // U1 local
        BitLocation loc = spread_locate(i, t, bl.v0_to_u1);
        if (loc.on_v) return u.get(pu.payload + loc.pos) ? 1 : 0;
        size_t w0_off = pv.payload + core_tags_len(c, true, pv.index - c.p);
        return v.get(w0_off + loc.pos) ? 1 : 0;
    }
    uint64_t s = pu.index - c.n_c;
    uint64_t t = pv.index - c.n_c - u1;
    BitLocation loc = spread_locate(s, t, bl.u1_v1);
    if (loc.on_v) return v.get(pv.payload + bl.b_bits + loc.pos) ? 1 : 0;
    return u.get(pu.payload + bl.a_bits + loc.pos) ? 1 : 0;
}

uint64_t bipartite_parsed_index(const BitString& label, const SchemeParams& p) {
    return bip_parse(label, p).index;
}

}  // namespace als::detail
