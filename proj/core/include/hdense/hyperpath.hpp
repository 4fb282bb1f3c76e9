#pragma once

#include "hdense/orientation.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace hdense {

using VertexPredicate = std::function<bool(VertexId)>;

/// Scratch state for breadth-first searches over one Orientation. Searches
/// only read the orientation; give each thread its own HyperpathSearch.
///
/// Forward steps go tail -> head inside an edge, backward steps head -> tail.
/// Each edge is expanded at most once per search, so returned paths never
/// repeat an edge. Vertices are seeded in ascending id order.
class HyperpathSearch {
public:
    explicit HyperpathSearch(const Orientation& o) : o_(&o) {}

    /// Some path s ~> t with sources(s), targets(t) and
    /// indeg[t] - indeg[s] >= 2. Sources are tried by ascending indegree,
    /// then id; a vertex already reached from an earlier source is not
    /// reseeded, since that source had no larger indegree.
    std::optional<Hyperpath> find_reversible(const VertexPredicate& sources, const VertexPredicate& targets);

    /// Like find_reversible, but keeps going after a hit: every path found is
    /// handed to on_path (which may reverse it) and the search moves on to the
    /// next unreached source. Returns the number of paths found; zero means
    /// no reversible path exists.
    std::size_t reversible_pass(const VertexPredicate& sources, const VertexPredicate& targets,
                                const std::function<void(const Hyperpath&)>& on_path);

    /// Backward search from `target`: nearest s with accept(s) that can reach
    /// it. Returns the path s ~> target.
    std::optional<Hyperpath> find_into(VertexId target, const VertexPredicate& accept);

    /// Backward search over the whole region that can reach `target`; returns
    /// a path from the accepted vertex of lowest indegree (ties: first found).
    std::optional<Hyperpath> find_lowest_into(VertexId target, const VertexPredicate& accept);

    /// Forward search from `source`: nearest t with accept(t).
    std::optional<Hyperpath> find_from(VertexId source, const VertexPredicate& accept);

    /// seeds plus every vertex that can reach one of them.
    std::vector<VertexId> reachable_to(std::span<const VertexId> seeds);

    /// seeds plus every vertex reachable from one of them.
    std::vector<VertexId> reachable_from(std::span<const VertexId> seeds);

    /// Like reachable_to but as a membership mask over all vertices.
    std::vector<char> reachable_to_mask(std::span<const VertexId> seeds);

private:
    enum class Dir { forward, backward };

    void begin();
    bool seen(VertexId u) const { return vmark_[u] == epoch_; }
    void visit(VertexId u, VertexId parent, EdgeId via);
    bool expanded(EdgeId e) const { return emark_[e] == epoch_; }
    void expand_edge(EdgeId e) { emark_[e] = epoch_; }

    // Appends the unseen neighbours of u (in the given direction) to the queue.
    void relax(VertexId u, Dir dir);
    Hyperpath trace_forward(VertexId t) const;
    Hyperpath trace_backward(VertexId s) const;

    const Orientation* o_;
    std::uint32_t epoch_ = 0;
    std::vector<std::uint32_t> vmark_;
    std::vector<std::uint32_t> emark_;
    std::vector<VertexId> parent_;
    std::vector<EdgeId> via_;
    std::vector<VertexId> queue_;
};

}  // namespace hdense
