#pragma once

#include "hdense/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace fixtures {

using hdense::Hypergraph;
using hdense::VertexId;

// toy H5, 0-based: {0,1} {0,3} {1,2} {1,2,3,4}
inline Hypergraph toy_h5() {
    return Hypergraph(5, {{0, 1}, {0, 3}, {1, 2}, {1, 2, 3, 4}});
}

// delta = 1 orientation of toy_h5 used in the walkthrough: e0 -> 0, e1 -> 0,
// e2 -> 1, e3 -> 1. Indegrees (2, 2, 0, 0, 0).
inline std::vector<std::vector<VertexId>> figure2_heads() {
    return {{0}, {0}, {1}, {1}};
}

// Small instance for oracle comparisons: n <= 7, m <= 6, |e| <= 4.
inline Hypergraph random_small(std::mt19937_64& rng) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const auto m = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const auto cap = std::min<std::size_t>(4, n);
    std::uniform_int_distribution<std::size_t> size(1, cap);
    std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(n - 1));
    std::vector<std::vector<VertexId>> edges(m);
    for (auto& e : edges) {
        const auto s = size(rng);
        while (e.size() < s) {
            const auto u = vertex(rng);
            if (std::find(e.begin(), e.end(), u) == e.end()) {
                e.push_back(u);
            }
        }
    }
    return Hypergraph(n, std::move(edges));
}

// All subsets of {0..n-1} as ascending vectors (n small).
inline std::vector<std::vector<VertexId>> all_subsets(std::size_t n) {
    std::vector<std::vector<VertexId>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<VertexId> s;
        for (VertexId u = 0; u < n; ++u) {
            if (mask >> u & 1u) {
                s.push_back(u);
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace fixtures
