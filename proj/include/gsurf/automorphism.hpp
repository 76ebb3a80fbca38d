#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gsurf/group.hpp"

namespace gsurf {

/// Search for an automorphism of g satisfying img(first) = second for every
/// constraint pair. Backtracking with closure propagation: once the images of
/// a generating set are fixed, all other images are forced, so the search
/// only branches when the constrained elements generate a proper subgroup.
/// Intended for |G| <= a few hundred; cost grows with |Aut(G)| branching.
std::optional<std::vector<int32_t>> find_automorphism(
    const Group& g, const std::vector<std::pair<int32_t, int32_t>>& constraints);

bool automorphism_exists(
    const Group& g, const std::vector<std::pair<int32_t, int32_t>>& constraints);

}  // namespace gsurf
