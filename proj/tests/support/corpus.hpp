#pragma once

#include <vector>

#include "fixtures.hpp"

namespace symqaoa::testing {

/// The instance set the acceptance suite sweeps: every connected graph on
/// up to 6 vertices, sampled connected 7-vertex graphs, sparse random
/// graphs up to 16 vertices, the structured families (complete graphs,
/// cycles, stars, wrapped grids, Petersen) and a handful of weighted
/// variants.
std::vector<NamedGraph> acceptance_corpus();

}  // namespace symqaoa::testing
