#include "als/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "als/combinat.hpp"
#include "als/natural.hpp"

namespace als {

namespace {

uint64_t econ_c(uint64_t n) {
    // n = 2^(b-1) + c with 0 < c <= 2^(b-1).
    size_t b = ceil_log2_u64(n);
    return n - (uint64_t(1) << (b - 1));
}

size_t idx_width(uint64_t i, uint64_t n, bool econ) {
    return econ ? index_len(i, n) : ceil_log2_u64(n);
}

std::vector<uint32_t> ell_table(uint64_t m, unsigned k) {
    std::vector<uint32_t> ell(k);
    for (unsigned i = 0; i < k; ++i) ell[i] = codeword_len(m, i);
    return ell;
}

uint64_t floor_log2(uint64_t n) {
    uint64_t b = 0;
    while (n >>= 1) ++b;
    return b;
}

uint64_t isqrt(uint64_t x) {
    if (x == 0) return 0;
    uint64_t r = uint64_t(std::sqrt(double(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// ceil(n^(4/5)).
uint64_t ceil_pow45(uint64_t n) {
    uint64_t r = uint64_t(std::llround(std::pow(double(n), 0.8)));
    auto ge = [&](uint64_t v) {  // v^5 >= n^4
        Natural lhs = Natural(v) * v * v * v * v;
        Natural rhs = Natural(n) * n * n * n;
        return lhs >= rhs;
    };
    while (r > 0 && ge(r - 1)) --r;
    while (!ge(r)) ++r;
    return r;
}

SchemeParams naive_params(Family family, uint64_t n, uint64_t n_u, uint64_t n_v) {
    SchemeParams p;
    p.family = family;
    p.mode = Mode::naive;
    p.n = n;
    p.n_u = n_u;
    p.n_v = n_v;
    p.n_enc = n;
    p.index_bits = unsigned(ceil_log2_u64(n));
    switch (family) {
        case Family::directed:
            p.label_bits = uint32_t(p.index_bits + (n - 1));
            break;
        case Family::undirected:
        case Family::tournament:
            p.label_bits = uint32_t(p.index_bits + n / 2);
            break;
        case Family::bipartite:
            p.label_bits = uint32_t(p.index_bits + std::max(n_u, n_v));
            break;
    }
    return p;
}

SchemeParams directed_params(uint64_t n, Mode mode) {
    if (n < 100)
        throw std::invalid_argument("directed " + to_string(mode) + " mode requires n >= 100");
    SchemeParams p;
    p.family = Family::directed;
    p.mode = mode;
    p.n = p.n_enc = n;
    p.index_bits = unsigned(ceil_log2_u64(n));
    p.econ_index = (mode == Mode::tight);
    p.label_bits = uint32_t(n + (mode == Mode::tight ? 3 : 4));

    DirectedLayout& d = p.dir;
    d.k = p.index_bits - 2;
    d.m = n - d.k;
    d.ell = ell_table(d.m, d.k);
    std::vector<uint64_t> ellp(d.k);
    for (unsigned i = 0; i < d.k; ++i) {
        ellp[i] = uint64_t(d.k) - 1 + d.ell[i];
        if (ellp[i] > d.m) throw std::runtime_error("directed: ell' exceeds block width");
    }
    uint64_t offset = 0;
    if (mode == Mode::tight) offset = std::min<uint64_t>(2 * econ_c(n), d.m);
    d.back = make_plan(std::move(ellp), d.m, offset);

    for (uint64_t j = 0; j < d.m; ++j) {
        size_t bits = idx_width(d.k + j, n, p.econ_index) + d.back.cap(j) + (d.m - 1);
        if (bits > p.label_bits) throw std::runtime_error("directed: large-side label over budget");
    }
    for (uint64_t i = 0; i < d.k; ++i) {
        size_t bits = idx_width(i, n, p.econ_index) + d.m;
        if (bits > p.label_bits) throw std::runtime_error("directed: small-side label over budget");
    }
    return p;
}

// Exact final maximum of fill + received bits when `demand` bits are poured
// onto columns of starting fill `fills`, least-filled first.
uint64_t water_max(std::vector<uint64_t> fills, uint64_t demand) {
    uint64_t mx = *std::max_element(fills.begin(), fills.end());
    if (demand == 0) return mx;
    std::sort(fills.begin(), fills.end());
    std::vector<uint64_t> prefix(fills.size() + 1, 0);
    for (size_t i = 0; i < fills.size(); ++i) prefix[i + 1] = prefix[i] + fills[i];
    auto below = [&](uint64_t h) {  // sum_j max(0, h - f_j)
        size_t cnt = size_t(std::upper_bound(fills.begin(), fills.end(), h - 1) - fills.begin());
        return h * cnt - prefix[cnt];
    };
    uint64_t lo = fills.front() + 1, hi = fills.front() + demand;
    while (lo < hi) {
        uint64_t mid = lo + (hi - lo) / 2;
        if (below(mid) >= demand)
            hi = mid;
        else
            lo = mid + 1;
    }
    return std::max(mx, lo);
}

SchemeParams undirected_params(Family family, uint64_t n, Mode mode) {
    if (n < 400)
        throw std::invalid_argument(to_string(family) + " " + to_string(mode) +
                                    " mode requires n >= 400");
    SchemeParams p;
    p.family = family;
    p.mode = mode;
    p.n = p.n_enc = n;
    p.index_bits = unsigned(ceil_log2_u64(n));
    p.econ_index = (mode == Mode::tight);
    p.label_bits = uint32_t(mode == Mode::tight ? (n + 1) / 2 + 4 : n / 2 + 6);

    UndirectedLayout& u = p.und;
    u.k = p.index_bits - 3;
    u.m0 = (n + 1) / 2 - u.k;
    u.m1 = n / 2 - u.k;
    u.ell = ell_table(u.m0, u.k);
    u.ell_b1 = ell_table(u.m1, u.k);
    std::vector<uint64_t> ellp(u.k);
    for (unsigned i = 0; i < u.k; ++i) {
        ellp[i] = uint64_t(u.k) + u.ell[i];
        if (ellp[i] > u.m1) throw std::runtime_error("undirected: ell' exceeds block width");
    }

    if (mode == Mode::standard) {
        u.to_b0 = make_plan(ellp, u.m0, 0);
        u.to_b1 = make_plan(ellp, u.m1, 0);
        u.recv_width_std = uint32_t(u.to_b1.base_len);
        if (u.to_b0.base_len > u.recv_width_std)
            throw std::runtime_error("undirected: uneven receive widths");
        if (p.index_bits + u.recv_width_std + u.m1 > p.label_bits)
            throw std::runtime_error("undirected: large-side label over budget");
        return p;
    }

    // Tight mode: prefix-free indices; the spreading starts at the vertices
    // whose tags come up short so that long index encodings and long tags
    // never meet in one label.
    uint64_t c2 = 2 * econ_c(n);
    uint64_t half = (n + 1) / 2;
    if (n % 2 == 1) {
        uint64_t long0 = std::clamp<uint64_t>(c2 > u.k ? c2 - u.k : 0, 0, u.m0);
        uint64_t long1 =
            std::clamp<uint64_t>(c2 > half + u.k ? c2 - half - u.k : 0, 0, u.m1);
        u.to_b0 = make_plan(ellp, u.m0, long0);
        u.to_b1 = make_plan(ellp, u.m1, long1);
        for (uint64_t j = 0; j < u.m0; ++j) {
            size_t bits = idx_width(u.k + j, n, true) + u.to_b0.cap(j) + u.m1;
            if (bits > p.label_bits) throw std::runtime_error("undirected: B0 label over budget");
        }
        for (uint64_t j = 0; j < u.m1; ++j) {
            size_t bits = idx_width(half + u.k + j, n, true) + u.to_b1.cap(j) + u.m1;
            if (bits > p.label_bits) throw std::runtime_error("undirected: B1 label over budget");
        }
    } else {
        // Even circular block: each antipodal adjacency bit is stored twice;
        // one copy per pair is dropped, split between the two halves so each
        // side can absorb its share of the spread bits.
        u.drop_moon = true;
        uint64_t m = u.m1;  // == m0
        uint64_t demand = 0;
        for (uint64_t l : ellp) demand += l;
        auto fills_for = [&](uint64_t x0, bool side_b1) {
            std::vector<uint64_t> fills(m);
            for (uint64_t j = 0; j < m; ++j) {
                uint64_t global = side_b1 ? half + u.k + j : u.k + j;
                bool dropped = side_b1 ? (j >= x0) : (j < x0);
                fills[j] = idx_width(global, n, true) + (m - (dropped ? 1 : 0));
            }
            return fills;
        };
        uint64_t best_x0 = 0, best = UINT64_MAX;
        for (uint64_t x0 = 0; x0 <= m; ++x0) {
            uint64_t w = std::max(water_max(fills_for(x0, false), demand),
                                  water_max(fills_for(x0, true), demand));
            if (w < best) {
                best = w;
                best_x0 = x0;
            }
        }
        u.drop_split = best_x0;
        u.to_b0 = make_filled_plan(ellp, m, fills_for(best_x0, false));
        u.to_b1 = make_filled_plan(ellp, m, fills_for(best_x0, true));
        for (uint64_t j = 0; j < m; ++j) {
            if (u.to_b0.fills[j] + u.to_b0.recv[j] > p.label_bits)
                throw std::runtime_error("undirected: B0 label over budget");
            if (u.to_b1.fills[j] + u.to_b1.recv[j] > p.label_bits)
                throw std::runtime_error("undirected: B1 label over budget");
        }
    }
    for (uint64_t i = 0; i < u.k; ++i) {
        size_t bits = std::max(idx_width(i, n, true), idx_width(half + i, n, true)) + u.m0;
        if (bits > p.label_bits) throw std::runtime_error("undirected: A label over budget");
    }
    return p;
}

bool biased_regime(uint64_t r, uint64_t n_enc) {
    return Natural(r) * r >= Natural(2) * n_enc * floor_log2(n_enc);
}

BalancedCore make_core(uint64_t n_c) {
    BalancedCore c;
    c.n_c = n_c;
    c.p = n_c / 2;
    c.b_c = unsigned(ceil_log2_u64(n_c));
    if (c.b_c < 5) throw std::runtime_error("bipartite: core too small");
    c.k_c = c.b_c - 4;
    if (c.p / 2 <= c.k_c) throw std::runtime_error("bipartite: core too small");
    c.q0 = (c.p + 1) / 2 - c.k_c;
    c.q1 = c.p / 2 - c.k_c;
    c.ell = ell_table(c.q0, c.k_c);
    c.ell_q1 = ell_table(c.q1, c.k_c);
    c.extra = 2 * c.k_c;
    std::vector<uint64_t> ellp(c.k_c);
    for (unsigned i = 0; i < c.k_c; ++i) {
        ellp[i] = c.ell[i] + c.extra;
        if (ellp[i] > c.q1) throw std::runtime_error("bipartite: core ell' exceeds block width");
    }
    if ((uint64_t(1) << c.k_c) > c.k_c + c.q1)
        throw std::runtime_error("bipartite: core run block too tall");

    c.sp_into_b11 = make_plan(ellp, c.q1, 0);  // rows A00
    c.sp_into_b01 = make_plan(ellp, c.q0, 0);  // rows A10
    c.sp_into_b10 = make_plan(ellp, c.q1, 0);  // rows A01
    c.sp_into_b00 = make_plan(ellp, c.q0, 0);  // rows A11

    c.keep_bb00_b01 = (c.q0 + 1) / 2;
    c.keep_bb00_b11 = (c.q1 + 1) / 2;
    c.keep_bb10_b01 = (c.q0 + 1) / 2;
    c.keep_bb10_b11 = (c.q1 + 1) / 2;
    c.bb00_b01 = make_plan(std::vector<uint64_t>(c.q0, c.q0 - c.keep_bb00_b01), c.q0, 0);
    c.bb00_b11 = make_plan(std::vector<uint64_t>(c.q0, c.q1 - c.keep_bb00_b11), c.q1, 0);
    c.bb10_b01 = make_plan(std::vector<uint64_t>(c.q1, c.q0 - c.keep_bb10_b01), c.q0, 0);
    c.bb10_b11 = make_plan(std::vector<uint64_t>(c.q1, c.q1 - c.keep_bb10_b11), c.q1, 0);

    uint64_t contents[8] = {
        c.b_c + c.q1 + 0,                    // A00: run + keep + 2k naive collapses
        c.b_c + c.q0 + 0,                    // A10
        c.b_c + c.q1 - c.extra,              // A01
        c.b_c + c.q0 - c.extra,              // A11
        c.b_c + c.sp_into_b00.base_len + c.keep_bb00_b01 + c.keep_bb00_b11,
        c.b_c + c.sp_into_b01.base_len + c.bb00_b01.base_len + c.bb10_b01.base_len,
        c.b_c + c.sp_into_b10.base_len + c.keep_bb10_b01 + c.keep_bb10_b11,
        c.b_c + c.sp_into_b11.base_len + c.bb00_b11.base_len + c.bb10_b11.base_len,
    };
    c.content_bits = uint32_t(*std::max_element(contents, contents + 8));
    return c;
}

SchemeParams near_balanced_params(SchemeParams p);

SchemeParams bipartite_standard(uint64_t n_u, uint64_t n_v) {
    uint64_t n = n_u + n_v;
    SchemeParams p;
    p.family = Family::bipartite;
    p.mode = Mode::standard;
    p.n = n;
    p.n_u = n_u;
    p.n_v = n_v;
    p.label_bits = uint32_t((n + 3) / 4 + kBipartiteSlack);

    BipartiteLayout& bl = p.bip;
    bl.swap_sides = n_u > n_v;
    uint64_t small = std::min(n_u, n_v), big = std::max(n_u, n_v);
    bl.padded = (n % 2) != 0;
    if (bl.padded) ++small;
    bl.small = small;
    bl.big = big;
    p.n_enc = small + big;
    p.index_bits = unsigned(ceil_log2_u64(p.n_enc));
    bl.r = (big - small) / 2;

    auto build_biased = [&]() {
        bl.regime = BipRegime::biased;
        bl.tag_bits = (small * big + p.n_enc - 1) / p.n_enc;
        bl.biased_plan =
            make_plan(std::vector<uint64_t>(small, big - bl.tag_bits), big, 0);
        if (bl.biased_plan.base_len > bl.tag_bits)
            throw std::runtime_error("bipartite: biased receive width over tag");
        if (2 + 2 * uint64_t(p.index_bits) + bl.tag_bits > p.label_bits)
            throw std::runtime_error("bipartite: biased label over budget");
        return p;
    };
    // The near-balanced split needs room for a balanced core; when the
    // vertex count is too small for that, the explicit-bias layout still
    // fits the budget and is used for every r.
    if (biased_regime(bl.r, p.n_enc)) return build_biased();
    try {
        return near_balanced_params(p);
    } catch (const std::exception&) {
        return build_biased();
    }
}

SchemeParams near_balanced_params(SchemeParams p) {
    BipartiteLayout& bl = p.bip;
    bl.regime = BipRegime::near_balanced;
    uint64_t half = p.n_enc / 2;
    uint64_t x = 2 * p.n_enc * floor_log2(p.n_enc);
    uint64_t r_max = isqrt(x - 1);
    bl.big_r = std::max(ceil_pow45(p.n_enc), 2 * r_max + 4);
    if (half <= bl.big_r + 32) throw std::runtime_error("bipartite: no room for a balanced core");
    uint64_t pc = half - bl.big_r;
    bl.core = make_core(2 * pc);
    bl.w0 = bl.big_r / 2 + 1;
    uint64_t u1 = bl.big_r - bl.r, v1 = bl.big_r + bl.r;
    if (bl.w0 > u1) throw std::runtime_error("bipartite: bias too large for the split");

    bl.v0_to_u1 = make_plan(std::vector<uint64_t>(pc, u1 - bl.w0), u1, 0);
    bl.u0_to_v1 = make_plan(std::vector<uint64_t>(pc, v1 - bl.w0), v1, 0);
    bl.a_bits = bl.v0_to_u1.base_len;
    bl.b_bits = bl.u0_to_v1.base_len;

    uint64_t fixed_u = 3 + 2 * uint64_t(p.index_bits) + bl.a_bits;
    uint64_t fixed_v = 3 + 2 * uint64_t(p.index_bits) + bl.b_bits;
    uint64_t best_t = 0, best = UINT64_MAX;
    for (uint64_t t = 0; t <= v1; ++t) {
        uint64_t recv = (u1 * (v1 - t) + v1 - 1) / v1;
        uint64_t w = std::max(fixed_u + t, fixed_v + recv);
        if (w < best) {
            best = w;
            best_t = t;
        }
    }
    bl.t_keep = best_t;
    bl.u1_v1 = make_plan(std::vector<uint64_t>(u1, v1 - bl.t_keep), v1, 0);

    uint64_t contents[3] = {
        3 + uint64_t(bl.core.content_bits) + bl.w0,
        fixed_u + bl.t_keep,
        fixed_v + bl.u1_v1.base_len,
    };
    for (uint64_t bits : contents)
        if (bits > p.label_bits) throw std::runtime_error("bipartite: label over budget");
    return p;
}

}  // namespace

SchemeParams params_for_bipartite(uint64_t n_u, uint64_t n_v, Mode mode) {
    uint64_t n = n_u + n_v;
    if (n < 1) throw std::invalid_argument("params: need at least one vertex");
    switch (mode) {
        case Mode::naive:
            return naive_params(Family::bipartite, n, n_u, n_v);
        case Mode::standard:
            return bipartite_standard(n_u, n_v);
        case Mode::tight:
            throw std::invalid_argument("bipartite has no tight mode");
        case Mode::automatic: {
            SchemeParams nv = naive_params(Family::bipartite, n, n_u, n_v);
            try {
                SchemeParams st = bipartite_standard(n_u, n_v);
                if (st.label_bits <= nv.label_bits) return st;
            } catch (const std::exception&) {
            }
            return nv;
        }
    }
    throw std::invalid_argument("params: unknown mode");
}

SchemeParams params_for(Family family, uint64_t n, Mode mode) {
    if (n < 1) throw std::invalid_argument("params: need at least one vertex");
    if (family == Family::bipartite) return params_for_bipartite(n / 2, n - n / 2, mode);
    switch (mode) {
        case Mode::naive:
            return naive_params(family, n, n, n);
        case Mode::standard:
        case Mode::tight:
            return family == Family::directed ? directed_params(n, mode)
                                              : undirected_params(family, n, mode);
        case Mode::automatic: {
            for (Mode m : {Mode::tight, Mode::standard}) {
                try {
                    return params_for(family, n, m);
                } catch (const std::exception&) {
                }
            }
            return naive_params(family, n, n, n);
        }
    }
    throw std::invalid_argument("params: unknown mode");
}

uint32_t spread_delta(const SchemeParams& p) {
    if (p.mode != Mode::standard)
        throw std::invalid_argument("spread_delta: standard mode only");
    if (p.family == Family::directed) return uint32_t(p.dir.back.base_len);
    if (p.family == Family::undirected || p.family == Family::tournament)
        return p.und.recv_width_std;
    throw std::invalid_argument("spread_delta: no single delta for this family");
}

}  // namespace als
