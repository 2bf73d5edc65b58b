#pragma once

#include <cstdint>
#include <vector>

#include "als/family.hpp"
#include "als/spread.hpp"

namespace als {

// Directed label layout. Vertices split into a small set A of size k and a
// large set B; the A->B block is run-encoded, the B->A block is spread with
// ell'_i = (k-1) + ell_i, and the inside-A / inside-B edges are stored as
// plain out-rows.
struct DirectedLayout {
    unsigned k = 0;
    uint64_t m = 0;                 // n - k
    std::vector<uint32_t> ell;      // run codeword bits per A row
    SpreadPlan back;                // B->A spreading (rows indexed by A)
};

// Undirected label layout. Vertices split into A0, B0, A1, B1; diagonal
// blocks A0xB0 / A1xB1 are run-encoded, cross blocks are spread with
// ell'_i = k + ell_i, and the inside-A / inside-B graphs use the circular
// half-row scheme.
struct UndirectedLayout {
    unsigned k = 0;
    uint64_t m0 = 0, m1 = 0;        // |B0| = ceil(n/2)-k, |B1| = floor(n/2)-k
    std::vector<uint32_t> ell;      // L(m0, i), shared field widths
    std::vector<uint32_t> ell_b1;   // L(m1, i), actual A1 codeword bits
    SpreadPlan to_b0, to_b1;        // rows = A1 and A0 respectively
    uint32_t recv_width_std = 0;    // uniform receive field width (standard)
    bool drop_moon = false;         // tight mode, even circular block
    uint64_t drop_split = 0;        // antipodal pairs [0, drop_split) shed on the B0 side
};

enum class BipRegime : uint8_t { biased = 0, near_balanced = 1 };

// Balanced two-sided core over sides of size p. Each side splits into
// A.0, B.0, A.1, B.1 (sizes k_c, q0, k_c, q1); the four A-vs-opposite-B.same
// blocks are run-encoded, the four A-vs-opposite-B.other blocks are spread
// with ell'_i = ell_i + extra, the four big BxB blocks are split roughly in
// half by spreading, and the tiny AxA blocks ride along as out-rows on the
// left side.
struct BalancedCore {
    uint64_t n_c = 0, p = 0;
    unsigned k_c = 0, b_c = 0;
    uint64_t q0 = 0, q1 = 0;
    std::vector<uint32_t> ell;      // L(q0, i)
    std::vector<uint32_t> ell_q1;   // L(q1, i)
    unsigned extra = 0;
    SpreadPlan sp_into_b00, sp_into_b01, sp_into_b10, sp_into_b11;
    uint64_t keep_bb00_b01 = 0, keep_bb00_b11 = 0, keep_bb10_b01 = 0, keep_bb10_b11 = 0;
    SpreadPlan bb00_b01, bb00_b11, bb10_b01, bb10_b11;
    uint32_t content_bits = 0;      // widest core label content
};

struct BipartiteLayout {
    BipRegime regime = BipRegime::biased;
    uint64_t r = 0;
    uint64_t small = 0, big = 0;    // internal role sizes after padding
    bool swap_sides = false;        // input U side plays the big role
    bool padded = false;            // phantom isolated vertex on the small role side
    // biased regime
    uint64_t tag_bits = 0;
    SpreadPlan biased_plan;         // rows = small role side
    // near-balanced regime
    uint64_t big_r = 0;             // R
    uint64_t w0 = 0;                // kept cross bits per ordinary vertex
    BalancedCore core;
    SpreadPlan v0_to_u1, u0_to_v1, u1_v1;
    uint64_t a_bits = 0, b_bits = 0, t_keep = 0;
};

// Every layout constant of a scheme, fully determined by
// (family, vertex counts, mode). Encoding the same graph twice under equal
// parameters yields byte-identical labels.
struct SchemeParams {
    Family family = Family::directed;
    Mode mode = Mode::naive;        // resolved; never `automatic`
    uint64_t n = 0;                 // input vertex count
    uint64_t n_u = 0, n_v = 0;      // bipartite input sides
    uint64_t n_enc = 0;             // n, or n+1 when bipartite padding kicks in
    unsigned index_bits = 0;        // ceil(lg n_enc)
    bool econ_index = false;        // tight modes use the prefix-free index code
    uint32_t label_bits = 0;

    DirectedLayout dir;
    UndirectedLayout und;
    BipartiteLayout bip;
};

// Constant slack of the bipartite labels above ceil(n/4). The special
// vertices of the near-balanced regime carry an index and the bias, which
// at these sizes costs a bit over 2*ceil(lg n); every bipartite label is
// padded to ceil(n/4) + kBipartiteSlack so lengths stay independent of the
// bias and of n.
inline constexpr uint32_t kBipartiteSlack = 26;

SchemeParams params_for(Family family, uint64_t n, Mode mode);
SchemeParams params_for_bipartite(uint64_t n_u, uint64_t n_v, Mode mode);

// Uniform per-vertex tag length produced by the spreading step of the
// standard directed/undirected schemes (the Delta of the layout).
uint32_t spread_delta(const SchemeParams& p);

}  // namespace als
