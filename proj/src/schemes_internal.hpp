#pragma once

#include "als/params.hpp"
#include "als/schemes.hpp"

namespace als::detail {

BitString encode_index(uint64_t ind, const SchemeParams& p);
uint64_t decode_index(BitCursor& cur, const SchemeParams& p);
size_t index_width(uint64_t ind, const SchemeParams& p);

std::vector<BitString> bipartite_encode(const Graph& g, const SchemeParams& p);
int bipartite_query(const BitString& x, const BitString& y, const SchemeParams& p);
uint64_t bipartite_parsed_index(const BitString& label, const SchemeParams& p);

// Pads a tag to `width` with zero bits.
BitString zero_pad(const BitString& s, size_t width);

}  // namespace als::detail
