#pragma once

#include "hdense/hypergraph.hpp"

#include <cstddef>
#include <cstdint>

namespace hdense::synthetic {

/// m edges with sizes uniform in [min_size, max_size], members uniform over
/// n vertices (distinct within an edge). Vertices may end up isolated.
Hypergraph uniform(std::size_t n, std::size_t m, std::size_t min_size, std::size_t max_size, std::uint64_t seed);

/// Heavy-tailed degrees: vertex i is drawn with weight (i + 1)^(-alpha).
/// Edge sizes are 2 + a geometric variable with the given mean excess,
/// capped at max_size. Real co-membership data looks like this, and it gives
/// decompositions with many empty layers near the top.
Hypergraph power_law(std::size_t n, std::size_t m, double alpha, double mean_extra, std::size_t max_size,
                     std::uint64_t seed);

}  // namespace hdense::synthetic
