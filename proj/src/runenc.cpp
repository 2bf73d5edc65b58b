#include "als/runenc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "als/combinat.hpp"

namespace als {

BitString BlockMatrix::row(uint64_t i) const {
    BitString out(cols_);
    for (uint64_t j = 0; j < cols_; ++j) out.set(j, get(i, j));
    return out;
}

BitString BlockMatrix::column(uint64_t j) const {
    BitString out(rows_);
    for (uint64_t i = 0; i < rows_; ++i) out.set(i, get(i, j));
    return out;
}

uint64_t gray_key(const BitString& column) {
    size_t k = column.size();
    if (k > 63) throw std::invalid_argument("gray_key: more than 63 rows");
    uint64_t key = 0;
    bool acc = false;
    for (size_t i = 0; i < k; ++i) {
        acc ^= column.get(i);
        key = (key << 1) | uint64_t(acc);
    }
    return key;
}

GraySorted gray_sort(const BlockMatrix& a) {
    uint64_t m = a.cols();
    std::vector<uint64_t> keys(m);
    for (uint64_t j = 0; j < m; ++j) keys[j] = gray_key(a.column(j));

    GraySorted out;
    out.perm.resize(m);
    std::iota(out.perm.begin(), out.perm.end(), 0);
    std::stable_sort(out.perm.begin(), out.perm.end(),
                     [&](uint64_t x, uint64_t y) { return keys[x] < keys[y]; });

    out.new_index.resize(m);
    out.sorted = BlockMatrix(a.rows(), m);
    for (uint64_t j = 0; j < m; ++j) {
        out.new_index[out.perm[j]] = j;
        for (uint64_t i = 0; i < a.rows(); ++i) out.sorted.set(i, j, a.get(i, out.perm[j]));
    }
    return out;
}

namespace {

// sum_{j=0}^{min(2^i, m-1)} C(m-1, j): half of capacity(m, i).
Natural half_capacity(uint64_t m, uint32_t i) { return capacity(m, i) / 2; }

uint64_t run_budget(uint64_t m, uint32_t i) {
    // Max |S| = 2^i, capped by m-1 possible run starts.
    return (i >= 63) ? (m - 1) : std::min<uint64_t>(uint64_t(1) << i, m - 1);
}

}  // namespace

BitString encode_row(const BitString& s, uint32_t i) {
    uint64_t m = s.size();
    if (m == 0) throw std::invalid_argument("encode_row: empty row");
    std::vector<uint64_t> starts;  // run starts, shifted down by one
    for (uint64_t p = 1; p < m; ++p)
        if (s.get(p) != s.get(p - 1)) starts.push_back(p - 1);
    if (starts.size() > run_budget(m, i))
        throw std::invalid_argument("encode_row: too many runs for this row index");

    Natural rank = 0;
    if (s.get(0)) rank += half_capacity(m, i);
    for (size_t j = 0; j < starts.size(); ++j) rank += binomial(m - 1, j);
    rank += subset_rank(starts, m - 1);
    return BitString::from_natural(rank, codeword_len(m, i));
}

BitString decode_row(const BitString& code, uint64_t m, uint32_t i) {
    if (m == 0) throw std::invalid_argument("decode_row: empty row");
    if (code.size() != codeword_len(m, i))
        throw std::invalid_argument("decode_row: codeword length mismatch");
    Natural rank = code.to_natural();
    Natural half = half_capacity(m, i);
    if (rank >= 2 * half) throw std::out_of_range("decode_row: rank out of range");

    bool first = rank >= half;
    if (first) rank -= half;
    size_t t = 0;
    Natural block = 1;  // C(m-1, 0)
    while (rank >= block) {
        rank -= block;
        block = block * (m - 1 - t) / (t + 1);
        ++t;
    }
    std::vector<uint64_t> starts = subset_unrank(rank, t, m - 1);

    BitString out(m);
    bool cur = first;
    size_t next = 0;
    for (uint64_t p = 0; p < m; ++p) {
        if (next < starts.size() && p == starts[next] + 1) {
            cur = !cur;
            ++next;
        }
        out.set(p, cur);
    }
    return out;
}

UnbalancedLabeling unbalanced_label(const BlockMatrix& block) {
    uint64_t k = block.rows(), m = block.cols();
    uint64_t n = k + m;
    if (k > 63 || (uint64_t(1) << k) > n)
        throw std::invalid_argument("unbalanced_label: block too tall (k > lg n)");
    GraySorted gs = gray_sort(block);
    UnbalancedLabeling out;
    out.perm = std::move(gs.perm);
    out.ind2 = std::move(gs.new_index);
    out.adj1.reserve(k);
    for (uint64_t i = 0; i < k; ++i) out.adj1.push_back(encode_row(gs.sorted.row(i), uint32_t(i)));
    return out;
}

int unbalanced_query(uint32_t ind1, const BitString& adj1, uint64_t ind2, uint64_t m) {
    if (ind2 >= m) throw std::out_of_range("unbalanced_query: column index past end");
    BitString row = decode_row(adj1, m, ind1);
    return row.get(ind2) ? 1 : 0;
}

}  // namespace als
