#pragma once

#include "hdense/orientation.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hdense {

/// Directed network with integer capacities, solved by Dinic's blocking-flow
/// method. Arcs are stored in pairs: arc i and its residual twin i ^ 1.
class FlowNetwork {
public:
    struct Arc {
        std::uint32_t to;
        std::int64_t cap;   // residual capacity
        std::int64_t flow;  // flow on a forward arc; negative on twins
    };

    explicit FlowNetwork(std::size_t nodes = 0);

    std::uint32_t add_node();
    /// Returns the id of the forward arc.
    std::uint32_t add_arc(std::uint32_t from, std::uint32_t to, std::int64_t cap);

    std::size_t node_count() const noexcept { return head_.size(); }
    /// Forward arcs only.
    std::size_t arc_count() const noexcept { return arcs_.size() / 2; }
    const Arc& arc(std::uint32_t id) const { return arcs_[id]; }
    std::uint32_t arc_from(std::uint32_t id) const { return arcs_[id ^ 1].to; }

    /// Maximum flow from s to t. Leaves the flow on the arcs.
    std::int64_t max_flow(std::uint32_t s, std::uint32_t t);

    /// True if t is reachable from s in the residual network.
    bool has_augmenting_path(std::uint32_t s, std::uint32_t t) const;

    std::uint32_t source = 0;
    std::uint32_t sink = 0;
    std::int64_t pivot = 0;
    std::size_t phases = 0;

private:
    bool bfs(std::uint32_t s, std::uint32_t t);
    std::int64_t dfs(std::uint32_t u, std::uint32_t t, std::int64_t limit);
    void build_csr();

    std::vector<Arc> arcs_;
    std::vector<std::uint32_t> from_;  // tail node of every arc (both directions)
    std::vector<std::uint32_t> head_;  // per node arc count before build_csr
    std::vector<std::uint32_t> offset_;
    std::vector<std::uint32_t> order_;  // arc ids grouped by tail
    std::vector<std::uint32_t> level_;
    std::vector<std::uint32_t> cursor_;
};

/// Reorientation network at pivot d = k - 1. Node u (< n) is vertex u, node
/// n + e is edge e, then source and sink. Tail u of e gives u -> e, head u
/// gives e -> u, both of capacity 1. The source feeds every vertex below the
/// pivot with d - indeg, the sink drains every vertex above it with indeg - d.
/// Removed edges still own a node but have no arcs.
FlowNetwork build_flow_network(const Orientation& o, int k);

/// Swaps roles along every unit of flow through an edge node: a tail whose
/// arc into the edge is saturated becomes a head, a head whose arc out of the
/// edge is saturated becomes a tail. Pairing follows arc order.
void apply_flow(Orientation& o, const FlowNetwork& net);

}  // namespace hdense
