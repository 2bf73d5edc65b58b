#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "als/bitstring.hpp"
#include "als/graph.hpp"
#include "als/params.hpp"

namespace als {

// Text format: header "<family> <n>" (or "bipartite <nU> <nV>"), then one
// "u v" edge per line; '#' starts a comment. Bipartite edge lines index the
// two sides separately: u in [0, nU), v in [0, nV).
struct ParseError : std::runtime_error {
    size_t line;
    ParseError(size_t line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
std::string write_graph(const Graph& g);

// Deterministic generator: one splitmix64 draw per candidate pair, in a
// fixed documented order (directed: ordered pairs row by row; undirected
// and tournament: u < v; bipartite: U x V row by row); a pair is present
// when draw < floor(p * 2^64). Tournaments ignore p and orient each pair by
// the low bit of its draw.
Graph random_graph(Family family, uint64_t n, double p, uint64_t seed);
Graph random_bipartite(uint64_t n_u, uint64_t n_v, double p, uint64_t seed);

// Binary label file:
//   magic "ALS1" | family u8 | mode u8 | n u64le | nU u64le | L u32le |
//   n records of ceil(L/8) bytes, original vertex order, MSB-first bits.
std::vector<uint8_t> write_labels(const std::vector<BitString>& labels, const SchemeParams& p);

struct LabelFile {
    SchemeParams params;
    std::vector<BitString> labels;
};

LabelFile read_labels(const std::vector<uint8_t>& bytes);

std::vector<uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, const std::vector<uint8_t>& bytes);
void write_file(const std::string& path, const std::string& text);

}  // namespace als
