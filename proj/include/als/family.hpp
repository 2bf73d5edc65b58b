#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace als {

enum class Family : uint8_t {
    directed = 0,
    undirected = 1,
    tournament = 2,
    bipartite = 3,
};

enum class Mode : uint8_t {
    standard = 0,
    tight = 1,
    naive = 2,
    automatic = 3,  // resolved before any label is produced
};

std::string to_string(Family f);
std::string to_string(Mode m);
Family family_from_string(std::string_view s);
Mode mode_from_string(std::string_view s);

}  // namespace als
