#include "als/spread.hpp"

#include <algorithm>
#include <stdexcept>

#include "als/natural.hpp"

namespace als {

uint64_t SpreadPlan::cap(uint64_t j) const {
    if (j >= m) throw std::out_of_range("SpreadPlan::cap: column past end");
    if (filled()) return recv[j];
    if (offset == 0) return base_len;
    return base_len + (j >= offset ? 1 : 0);
}

namespace {

void check_ell(const std::vector<uint64_t>& ell, uint64_t m) {
    for (uint64_t l : ell)
        if (l > m) throw std::invalid_argument("spread plan: ell out of range");
}

void fill_cum(SpreadPlan& p) {
    uint64_t k = p.k;
    p.cum.assign(k + 1, 0);
    for (uint64_t i = 0; i < k; ++i) p.cum[i + 1] = p.cum[i] + p.ell[i];
    p.total = p.cum[k];
}

}  // namespace

SpreadPlan make_plan(std::vector<uint64_t> ell, uint64_t m, uint64_t offset) {
    if (m == 0) {
        for (uint64_t l : ell)
            if (l != 0) throw std::invalid_argument("spread plan: no columns to move into");
        if (offset != 0) throw std::invalid_argument("spread plan: offset out of range");
    }
    if (m > 0 && offset > m) throw std::invalid_argument("spread plan: offset out of range");
    check_ell(ell, m);

    SpreadPlan p;
    p.k = ell.size();
    p.m = m;
    p.ell = std::move(ell);
    p.offset = offset;
    fill_cum(p);
    p.start.assign(p.k + 1, 0);
    if (m > 0) {
        p.start[0] = offset % m;
        for (uint64_t i = 0; i < p.k; ++i) p.start[i + 1] = (p.start[i] + p.ell[i]) % m;
        p.base_len = (offset == 0) ? (p.total + m - 1) / m
                                   : (p.total + offset + m - 1) / m - 1;
    }
    return p;
}

SpreadPlan make_filled_plan(std::vector<uint64_t> ell, uint64_t m,
                            std::vector<uint64_t> fills) {
    if (fills.size() != m) throw std::invalid_argument("spread plan: fills size mismatch");
    check_ell(ell, m);

    SpreadPlan p;
    p.k = ell.size();
    p.m = m;
    p.ell = std::move(ell);
    p.fills = std::move(fills);
    fill_cum(p);
    p.start.assign(p.k + 1, 0);
    p.recv.assign(m, 0);
    p.moved_cols.assign(p.k, {});
    p.moved_pos.assign(p.k, {});
    if (p.total == 0) return p;
    if (m == 0) throw std::invalid_argument("spread plan: no columns to move into");

    // Walk slots level by level: slot (j, level) exists once level >= fills[j];
    // its position inside j's tag is level - fills[j]. Row i takes the slots
    // numbered [cum[i], cum[i+1]).
    uint64_t level = *std::min_element(p.fills.begin(), p.fills.end());
    uint64_t row = 0;
    while (row < p.k && p.ell[row] == 0) ++row;
    uint64_t consumed = 0;
    while (consumed < p.total) {
        for (uint64_t j = 0; j < m && consumed < p.total; ++j) {
            if (p.fills[j] > level) continue;
            while (row < p.k && consumed == p.cum[row + 1]) ++row;
            p.moved_cols[row].push_back(j);
            p.moved_pos[row].push_back(level - p.fills[j]);
            ++p.recv[j];
            ++consumed;
        }
        ++level;
    }
    for (uint64_t i = 0; i < p.k; ++i) {
        std::vector<uint64_t> sorted = p.moved_cols[i];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("spread plan: row window revisits a column");
    }
    return p;
}

namespace {

// For the offset form: is column j among the ell[i] columns moved out of
// row i (the wrapped window [s_i, s_i + ell[i]))?
bool in_window(uint64_t i, uint64_t j, const SpreadPlan& p) {
    if (p.ell[i] == 0) return false;
    uint64_t rel = (j + p.m - p.start[i]) % p.m;
    return rel < p.ell[i];
}

}  // namespace

SpreadTags spread_apply(const BlockMatrix& a, const SpreadPlan& plan) {
    if (a.rows() != plan.k || a.cols() != plan.m)
        throw std::invalid_argument("spread_apply: block does not match plan");
    SpreadTags out;
    out.u_tags.reserve(plan.k);
    out.v_tags.assign(plan.m, BitString());
    for (uint64_t j = 0; j < plan.m; ++j) out.v_tags[j] = BitString(plan.cap(j));

    for (uint64_t i = 0; i < plan.k; ++i) {
        std::vector<uint8_t> moved(plan.m, 0);
        if (plan.filled()) {
            for (size_t t = 0; t < plan.moved_cols[i].size(); ++t) {
                uint64_t j = plan.moved_cols[i][t];
                moved[j] = 1;
                out.v_tags[j].set(plan.moved_pos[i][t], a.get(i, j));
            }
        } else {
            for (uint64_t t = 0; t < plan.ell[i]; ++t) {
                uint64_t j = (plan.start[i] + t) % plan.m;
                moved[j] = 1;
                out.v_tags[j].set((plan.cum[i] + t) / plan.m, a.get(i, j));
            }
        }
        BitString keep(plan.m - plan.ell[i]);
        uint64_t pos = 0;
        for (uint64_t j = 0; j < plan.m; ++j)
            if (!moved[j]) keep.set(pos++, a.get(i, j));
        out.u_tags.push_back(std::move(keep));
    }
    return out;
}

BitLocation spread_locate(uint64_t i, uint64_t j, const SpreadPlan& plan) {
    if (i >= plan.k || j >= plan.m) throw std::out_of_range("spread_locate: out of range");
    if (plan.filled()) {
        const auto& cols = plan.moved_cols[i];
        for (size_t t = 0; t < cols.size(); ++t)
            if (cols[t] == j) return {true, plan.moved_pos[i][t]};
        uint64_t before = 0;
        for (uint64_t c : cols)
            if (c < j) ++before;
        return {false, j - before};
    }
    if (in_window(i, j, plan)) {
        uint64_t rel = (j + plan.m - plan.start[i]) % plan.m;
        return {true, (plan.cum[i] + rel) / plan.m};
    }
    // Kept bits sit in ascending column order; three cases depending on how
    // the moved window wraps.
    uint64_t si = plan.start[i], se = plan.start[i + 1];
    if (plan.ell[i] == 0) return {false, j};
    if (plan.ell[i] == plan.m) throw std::logic_error("spread_locate: nothing kept");
    if (si < se) return {false, j < si ? j : j - plan.ell[i]};
    return {false, j - se};
}

BitString index_encode(uint64_t i, uint64_t n) {
    if (i >= n) throw std::out_of_range("index_encode: index out of range");
    size_t b = ceil_log2_u64(n);
    if (b == 0) return BitString();
    uint64_t c = n - (uint64_t(1) << (b - 1));
    if (i < 2 * c) return BitString::from_u64(i, b);
    return BitString::from_u64(i - c, b - 1);
}

uint64_t index_decode(BitCursor& cursor, uint64_t n) {
    size_t b = ceil_log2_u64(n);
    if (b == 0) return 0;
    uint64_t c = n - (uint64_t(1) << (b - 1));
    uint64_t head = cursor.read_u64(b - 1);
    if (head < c) return 2 * head + uint64_t(cursor.read_bit());
    return head + c;
}

size_t index_len(uint64_t i, uint64_t n) {
    if (i >= n) throw std::out_of_range("index_len: index out of range");
    size_t b = ceil_log2_u64(n);
    if (b == 0) return 0;
    uint64_t c = n - (uint64_t(1) << (b - 1));
    return i < 2 * c ? b : b - 1;
}

}  // namespace als
