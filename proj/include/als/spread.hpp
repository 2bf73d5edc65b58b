#pragma once

#include <cstdint>
#include <vector>

#include "als/bitstring.hpp"
#include "als/runenc.hpp"

namespace als {

// Plan for moving ell[i] bits out of row i of a k x m block into per-column
// tags, round-robin over the columns starting at column `offset`. Column
// tags have capacity L for indices < offset and L + 1 otherwise, where
//   L = ceil((sum ell + offset) / m) - 1      (offset > 0)
//   L = ceil(sum ell / m), uniformly          (offset == 0).
//
// A plan may instead carry per-column starting fills; bits then go to the
// least-filled column first (ties by column index), which subsumes the
// offset form and lets columns of unequal prior length end up level.
struct SpreadPlan {
    uint64_t k = 0, m = 0;
    std::vector<uint64_t> ell;
    uint64_t offset = 0;              // C
    std::vector<uint64_t> start;      // s_i, size k+1; start[k] is the wrap end
    std::vector<uint64_t> cum;        // s-bar_i, size k+1; cum[k] = total moved
    uint64_t total = 0;
    uint64_t base_len = 0;            // L above (offset form only)

    std::vector<uint64_t> fills;      // empty unless the filled form is used
    // Filled form lookup tables, aligned per row, columns in move order.
    std::vector<std::vector<uint64_t>> moved_cols;
    std::vector<std::vector<uint64_t>> moved_pos;
    std::vector<uint64_t> recv;       // per-column received-bit count

    bool filled() const { return !fills.empty(); }

    // Tag capacity of column j.
    uint64_t cap(uint64_t j) const;
};

SpreadPlan make_plan(std::vector<uint64_t> ell, uint64_t m, uint64_t offset);

// Filled form; fills.size() == m. Throws if some row window would visit the
// same column twice (the plan is then not decodable).
SpreadPlan make_filled_plan(std::vector<uint64_t> ell, uint64_t m,
                            std::vector<uint64_t> fills);

struct SpreadTags {
    std::vector<BitString> u_tags;  // row i keeps m - ell[i] bits, ascending column order
    std::vector<BitString> v_tags;  // column j: received bits in arrival order, zero-padded to cap(j)
};

SpreadTags spread_apply(const BlockMatrix& a, const SpreadPlan& plan);

struct BitLocation {
    bool on_v;      // false: row tag of u_i; true: column tag of v_j
    uint64_t pos;
};

// Where bit (i, j) of the block lives after spreading.
BitLocation spread_locate(uint64_t i, uint64_t j, const SpreadPlan& plan);

// Prefix-free index encoding over [0, n). With n = 2^(b-1) + c,
// 0 < c <= 2^(b-1), b = ceil(lg n): indices below 2c take b bits, the rest
// take b - 1. Falls back to the empty string when n == 1.
BitString index_encode(uint64_t i, uint64_t n);
uint64_t index_decode(BitCursor& cursor, uint64_t n);
size_t index_len(uint64_t i, uint64_t n);

}  // namespace als
