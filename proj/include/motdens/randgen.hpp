#pragma once

#include "motdens/resgraph.hpp"

#include <random>

namespace motdens {

// Random connected admissible dual graph: tree-shaped with occasional duplicate
// edges, multiplicities in [1, max_mult], rates q = 1 + j/m with m*q integral, and
// no two adjacent q = 1 vertices. Deterministic in the engine state.
DualGraph random_admissible_graph(std::mt19937_64& rng, int max_vertices = 6,
                                  int max_mult = 6);

}  // namespace motdens
