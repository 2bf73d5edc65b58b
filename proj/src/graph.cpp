#include "als/graph.hpp"

#include <stdexcept>

namespace als {

std::string to_string(Family f) {
    switch (f) {
        case Family::directed: return "directed";
        case Family::undirected: return "undirected";
        case Family::tournament: return "tournament";
        case Family::bipartite: return "bipartite";
    }
    throw std::invalid_argument("to_string: unknown family");
}

std::string to_string(Mode m) {
    switch (m) {
        case Mode::standard: return "standard";
        case Mode::tight: return "tight";
        case Mode::naive: return "naive";
        case Mode::automatic: return "auto";
    }
    throw std::invalid_argument("to_string: unknown mode");
}

Family family_from_string(std::string_view s) {
    if (s == "directed") return Family::directed;
    if (s == "undirected") return Family::undirected;
    if (s == "tournament") return Family::tournament;
    if (s == "bipartite") return Family::bipartite;
    throw std::invalid_argument("unknown family: " + std::string(s));
}

Mode mode_from_string(std::string_view s) {
    if (s == "standard") return Mode::standard;
    if (s == "tight") return Mode::tight;
    if (s == "naive") return Mode::naive;
    if (s == "auto") return Mode::automatic;
    throw std::invalid_argument("unknown mode: " + std::string(s));
}

void Graph::check_pair(uint64_t u, uint64_t v) const {
    if (u >= rows_ || v >= cols_) throw std::out_of_range("Graph: vertex out of range");
    if (family_ != Family::bipartite && u == v)
        throw std::invalid_argument("Graph: self-loops are not allowed");
}

bool Graph::edge(uint64_t u, uint64_t v) const {
    if (u >= rows_ || v >= cols_) throw std::out_of_range("Graph: vertex out of range");
    if (family_ != Family::bipartite && u == v) return false;
    return bits_[u * cols_ + v] != 0;
}

void Graph::add_edge(uint64_t u, uint64_t v) {
    check_pair(u, v);
    bits_[u * cols_ + v] = 1;
    if (family_ == Family::undirected) bits_[v * cols_ + u] = 1;
    if (family_ == Family::tournament) bits_[v * cols_ + u] = 0;
}

void Graph::remove_edge(uint64_t u, uint64_t v) {
    check_pair(u, v);
    bits_[u * cols_ + v] = 0;
    if (family_ == Family::undirected) bits_[v * cols_ + u] = 0;
}

void Graph::validate() const {
    if (family_ != Family::tournament) return;
    for (uint64_t u = 0; u < rows_; ++u)
        for (uint64_t v = u + 1; v < rows_; ++v)
            if (edge(u, v) == edge(v, u))
                throw std::invalid_argument("Graph: tournament pair without exactly one direction");
}

}  // namespace als
