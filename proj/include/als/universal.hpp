#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "als/graph.hpp"
#include "als/natural.hpp"
#include "als/params.hpp"

namespace als {

// The scheme's labels induce a graph on all 2^L bit strings: two strings
// are adjacent exactly when the decoder says so. Every graph the scheme
// handles embeds into it as an induced subgraph via its own labels.

// Exact 2^L.
Natural universal_size(const SchemeParams& p);

// Adjacency of two vertex ids (the integer values of L-bit strings). Total:
// strings the encoder can never produce are isolated.
int universal_adjacent(const Natural& x, const Natural& y, const SchemeParams& p);

struct EmbeddingCertificate {
    bool ok = false;
    std::vector<Natural> phi;                           // vertex -> universal id
    std::optional<std::pair<uint64_t, uint64_t>> violation;
};

// Encodes g, maps each vertex to its label value, and checks that the
// universal graph induces exactly g on the image.
EmbeddingCertificate verify_induced(const Graph& g, const SchemeParams& p);

// Edge list of the full universal graph in the text graph format, with the
// parameters recorded in a header comment. Only sensible for small L.
std::string materialize_universal(const SchemeParams& p);

}  // namespace als
