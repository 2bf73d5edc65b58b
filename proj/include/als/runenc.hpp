#pragma once

#include <cstdint>
#include <vector>

#include "als/bitstring.hpp"
#include "als/natural.hpp"

namespace als {

// Dense 0/1 matrix; rows and columns are 0-based.
class BlockMatrix {
public:
    BlockMatrix() = default;
    BlockMatrix(uint64_t rows, uint64_t cols)
        : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

    uint64_t rows() const { return rows_; }
    uint64_t cols() const { return cols_; }

    bool get(uint64_t i, uint64_t j) const { return bits_[i * cols_ + j] != 0; }
    void set(uint64_t i, uint64_t j, bool b) { bits_[i * cols_ + j] = b ? 1 : 0; }

    BitString row(uint64_t i) const;
    BitString column(uint64_t j) const;

    bool operator==(const BlockMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
    }

private:
    uint64_t rows_ = 0, cols_ = 0;
    std::vector<uint8_t> bits_;
};

// Rank of a k-bit column pattern in the k-bit reflected gray sequence.
// Row 0 supplies the most significant bit. Requires k <= 63.
uint64_t gray_key(const BitString& column);

struct GraySorted {
    // Column `j` of `sorted` equals column `perm[j]` of the input.
    std::vector<uint64_t> perm;
    // new_index[c] = position of input column c after sorting.
    std::vector<uint64_t> new_index;
    BlockMatrix sorted;
};

// Stable sort of the columns by gray_key. Row i of the result has at most
// 2^i + 1 runs.
GraySorted gray_sort(const BlockMatrix& a);

// Fixed-width codec for rows with at most 2^i + 1 runs. A row maps to
// (first bit b, set S of run starts in [1, m-1]); its rank is
//   b*T + sum_{j<|S|} C(m-1, j) + colex(S - 1),   T = sum_{j<=2^i} C(m-1, j),
// emitted as exactly codeword_len(m, i) bits.
BitString encode_row(const BitString& s, uint32_t i);
BitString decode_row(const BitString& code, uint64_t m, uint32_t i);

// Labeling of one short-and-wide bipartite block: permutes the columns into
// gray order (assigning each column vertex a new index) and encodes row i in
// codeword_len(m, i) bits.
struct UnbalancedLabeling {
    std::vector<uint64_t> perm;       // as in GraySorted
    std::vector<uint64_t> ind2;       // original column -> new index
    std::vector<BitString> adj1;      // adj1[i]: codeword for row i
};

UnbalancedLabeling unbalanced_label(const BlockMatrix& block);

// Reads the adjacency bit for (row ind1, column with new index ind2).
int unbalanced_query(uint32_t ind1, const BitString& adj1, uint64_t ind2, uint64_t m);

}  // namespace als
