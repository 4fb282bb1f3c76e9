#include "hdense/synthetic.hpp"

#include "hdense/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace hdense::synthetic {

Hypergraph uniform(std::size_t n, std::size_t m, std::size_t min_size, std::size_t max_size, std::uint64_t seed) {
    if (min_size < 1 || min_size > max_size || max_size > n) {
        throw ParameterError("bad edge size range");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size_dist(min_size, max_size);
    std::uniform_int_distribution<VertexId> vertex_dist(0, static_cast<VertexId>(n - 1));
    std::vector<std::vector<VertexId>> edges(m);
    for (auto& e : edges) {
        const auto size = size_dist(rng);
        while (e.size() < size) {
            const auto u = vertex_dist(rng);
            if (std::find(e.begin(), e.end(), u) == e.end()) {
                e.push_back(u);
            }
        }
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph power_law(std::size_t n, std::size_t m, double alpha, double mean_extra, std::size_t max_size,
                     std::uint64_t seed) {
    if (n < 2 || max_size < 2 || max_size > n) {
        throw ParameterError("bad power-law parameters");
    }
    std::mt19937_64 rng(seed);
    std::vector<double> weight(n);
    for (std::size_t i = 0; i < n; ++i) {
        weight[i] = std::pow(static_cast<double>(i + 1), -alpha);
    }
    std::discrete_distribution<VertexId> pick(weight.begin(), weight.end());
    std::geometric_distribution<std::size_t> extra(1.0 / (1.0 + mean_extra));
    std::vector<std::vector<VertexId>> edges(m);
    for (auto& e : edges) {
        const auto size = std::min(max_size, 2 + extra(rng));
        while (e.size() < size) {
            const auto u = pick(rng);
            if (std::find(e.begin(), e.end(), u) == e.end()) {
                e.push_back(u);
            }
        }
    }
    return Hypergraph(n, std::move(edges));
}

}  // namespace hdense::synthetic
