#pragma once

#include <cstdint>
#include <vector>

#include "als/family.hpp"

namespace als {

// Dense graph over vertex set [0, n). Directed, undirected and tournament
// graphs store a full n x n matrix (undirected symmetric, tournament
// antisymmetric and complete); bipartite graphs store their nU x nV block
// and address vertices per side.
class Graph {
public:
    static Graph directed(uint64_t n) { return Graph(Family::directed, n, n); }
    static Graph undirected(uint64_t n) { return Graph(Family::undirected, n, n); }
    static Graph tournament(uint64_t n) { return Graph(Family::tournament, n, n); }
    static Graph bipartite(uint64_t n_u, uint64_t n_v) {
        return Graph(Family::bipartite, n_u, n_v);
    }

    Family family() const { return family_; }
    uint64_t n() const {
        return family_ == Family::bipartite ? rows_ + cols_ : rows_;
    }
    uint64_t n_u() const { return rows_; }
    uint64_t n_v() const { return cols_; }

    // Directed/tournament: edge u -> v. Undirected: symmetric. Bipartite:
    // u indexes the U side, v the V side.
    bool edge(uint64_t u, uint64_t v) const;
    void add_edge(uint64_t u, uint64_t v);
    void remove_edge(uint64_t u, uint64_t v);

    // Tournament completeness; throws unless every pair has exactly one
    // direction set.
    void validate() const;

private:
    Graph(Family f, uint64_t rows, uint64_t cols)
        : family_(f), rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

    void check_pair(uint64_t u, uint64_t v) const;

    Family family_;
    uint64_t rows_, cols_;
    std::vector<uint8_t> bits_;
};

}  // namespace als
