#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hdense {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

/// Immutable undirected hypergraph stored as two CSR arrays: edge -> sorted
/// member list, and vertex -> incident edges in ascending EdgeId order.
///
/// Duplicate hyperedges are kept as distinct edges. Vertices in no hyperedge
/// are allowed and have degree zero.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Builds from raw member lists. Each list is sorted and deduplicated.
    /// Throws ParameterError on an empty edge or a vertex id >= vertex_count.
    Hypergraph(std::size_t vertex_count, std::vector<std::vector<VertexId>> edges);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edge_offsets_.empty() ? 0 : edge_offsets_.size() - 1; }

    std::span<const VertexId> edge(EdgeId e) const noexcept {
        return {edge_members_.data() + edge_offsets_[e], edge_members_.data() + edge_offsets_[e + 1]};
    }
    std::size_t edge_size(EdgeId e) const noexcept { return edge_offsets_[e + 1] - edge_offsets_[e]; }

    std::span<const EdgeId> incident(VertexId u) const noexcept {
        return {vertex_edges_.data() + vertex_offsets_[u], vertex_edges_.data() + vertex_offsets_[u + 1]};
    }
    std::size_t degree(VertexId u) const noexcept { return vertex_offsets_[u + 1] - vertex_offsets_[u]; }

    std::size_t max_edge_size() const noexcept { return max_edge_size_; }
    std::size_t min_edge_size() const noexcept { return min_edge_size_; }
    double avg_edge_size() const noexcept;
    std::size_t max_degree() const noexcept { return max_degree_; }

    /// Sum of |e| over all edges, equal to the sum of vertex degrees.
    std::size_t total_incidence() const noexcept { return edge_members_.size(); }

    /// Members of every edge as separate vectors.
    std::vector<std::vector<VertexId>> edge_lists() const;

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::size_t> edge_offsets_{0};
    std::vector<VertexId> edge_members_;
    std::vector<std::size_t> vertex_offsets_{0};
    std::vector<EdgeId> vertex_edges_;
    std::size_t max_edge_size_ = 0;
    std::size_t min_edge_size_ = 0;
    std::size_t max_degree_ = 0;
};

/// Maps between the subgraph and parent vertex id spaces.
struct VertexRemap {
    std::vector<VertexId> to_parent;  // indexed by subgraph id
    std::vector<VertexId> to_sub;     // indexed by parent id, kNoVertex if absent
};

struct InducedSubhypergraph {
    Hypergraph graph;
    VertexRemap remap;
    std::vector<EdgeId> parent_edges;  // parent id of each kept edge
};

/// Keeps every vertex of `vertices` and exactly the hyperedges of `h` contained
/// in it. Subgraph ids follow ascending parent id.
InducedSubhypergraph induced_subhypergraph(const Hypergraph& h, std::span<const VertexId> vertices);

}  // namespace hdense
