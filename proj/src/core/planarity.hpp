#pragma once

#include "core/graph.hpp"

namespace planex {

/// Planarity by exhaustive K_5 / K_{3,3} minor search over edge contractions.
/// Exponential; restricted to n <= 10 and meant for labeling small fixtures.
bool is_planar_small(const Graph& g);

}  // namespace planex
