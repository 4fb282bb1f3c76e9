#include "hdense/hypergraph.hpp"

#include "hdense/error.hpp"

#include <algorithm>
#include <string>

namespace hdense {

Hypergraph::Hypergraph(std::size_t vertex_count, std::vector<std::vector<VertexId>> edges)
    : vertex_count_(vertex_count) {
    edge_offsets_.clear();
    edge_offsets_.reserve(edges.size() + 1);
    edge_offsets_.push_back(0);

    std::vector<std::size_t> degree(vertex_count, 0);
    min_edge_size_ = edges.empty() ? 0 : static_cast<std::size_t>(-1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto& members = edges[e];
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (members.empty()) {
            throw ParameterError("hyperedge " + std::to_string(e) + " is empty");
        }
        if (members.back() >= vertex_count) {
            throw ParameterError("hyperedge " + std::to_string(e) + " references vertex " +
                                 std::to_string(members.back()) + " >= " + std::to_string(vertex_count));
        }
        for (VertexId u : members) {
            ++degree[u];
        }
        edge_members_.insert(edge_members_.end(), members.begin(), members.end());
        edge_offsets_.push_back(edge_members_.size());
        max_edge_size_ = std::max(max_edge_size_, members.size());
        min_edge_size_ = std::min(min_edge_size_, members.size());
    }

    vertex_offsets_.assign(vertex_count + 1, 0);
    for (std::size_t u = 0; u < vertex_count; ++u) {
        vertex_offsets_[u + 1] = vertex_offsets_[u] + degree[u];
        max_degree_ = std::max(max_degree_, degree[u]);
    }
    vertex_edges_.resize(edge_members_.size());
    std::vector<std::size_t> cursor(vertex_offsets_.begin(), vertex_offsets_.end() - 1);
    for (EdgeId e = 0; e + 1 < edge_offsets_.size(); ++e) {
        for (VertexId u : edge(e)) {
            vertex_edges_[cursor[u]++] = e;
        }
    }
}

double Hypergraph::avg_edge_size() const noexcept {
    const std::size_t m = edge_count();
    return m == 0 ? 0.0 : static_cast<double>(edge_members_.size()) / static_cast<double>(m);
}

std::vector<std::vector<VertexId>> Hypergraph::edge_lists() const {
    std::vector<std::vector<VertexId>> out;
    out.reserve(edge_count());
    for (EdgeId e = 0; e < edge_count(); ++e) {
        auto members = edge(e);
        out.emplace_back(members.begin(), members.end());
    }
    return out;
}

InducedSubhypergraph induced_subhypergraph(const Hypergraph& h, std::span<const VertexId> vertices) {
    InducedSubhypergraph out;
    out.remap.to_sub.assign(h.vertex_count(), kNoVertex);
    std::vector<VertexId> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (VertexId u : sorted) {
        if (u >= h.vertex_count()) {
            throw ParameterError("vertex " + std::to_string(u) + " is not in the hypergraph");
        }
        out.remap.to_sub[u] = static_cast<VertexId>(out.remap.to_parent.size());
        out.remap.to_parent.push_back(u);
    }

    // An edge is inside iff every member is kept; visit each edge from its
    // smallest member only.
    std::vector<std::vector<VertexId>> edges;
    for (VertexId u : sorted) {
        for (EdgeId e : h.incident(u)) {
            auto members = h.edge(e);
            if (members.front() != u) {
                continue;
            }
            bool inside = std::all_of(members.begin(), members.end(),
                                      [&](VertexId w) { return out.remap.to_sub[w] != kNoVertex; });
            if (inside) {
                std::vector<VertexId> mapped;
                mapped.reserve(members.size());
                for (VertexId w : members) {
                    mapped.push_back(out.remap.to_sub[w]);
                }
                edges.push_back(std::move(mapped));
                out.parent_edges.push_back(e);
            }
        }
    }
    // Keep parent edge order.
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return out.parent_edges[a] < out.parent_edges[b]; });
    std::vector<std::vector<VertexId>> ordered;
    std::vector<EdgeId> ordered_parents;
    ordered.reserve(edges.size());
    for (std::size_t i : order) {
        ordered.push_back(std::move(edges[i]));
        ordered_parents.push_back(out.parent_edges[i]);
    }
    out.parent_edges = std::move(ordered_parents);
    out.graph = Hypergraph(sorted.size(), std::move(ordered));
    return out;
}

}  // namespace hdense
