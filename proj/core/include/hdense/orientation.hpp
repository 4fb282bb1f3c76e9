#pragma once

#include "hdense/hypergraph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hdense {

/// u_0, e_0, u_1, ..., e_{l-1}, u_l. Step i leaves tail u_i of e_i and enters
/// head u_{i+1}. vertices.size() == edges.size() + 1 unless the path is empty.
struct Hyperpath {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    bool empty() const noexcept { return vertices.empty(); }
    std::size_t length() const noexcept { return edges.size(); }
    VertexId source() const { return vertices.front(); }
    VertexId target() const { return vertices.back(); }

    /// The path that undoes this one once it has been reversed.
    Hyperpath reversed() const;
};

/// Mutable oriented hypergraph. Every edge keeps its members in one array with
/// the heads first, so role tests and swaps are O(1) given a slot.
///
/// Each edge has a quota: the number of heads it must carry. For a plain
/// delta-orientation the quota is min(delta, |e|); the divide-and-conquer
/// driver also builds orientations with smaller per-edge quotas.
///
/// Edges can be added and removed (the dynamic module needs both). Removed
/// edges become tombstones; ids are never reused.
class Orientation {
public:
    struct Incidence {
        EdgeId edge;
        std::uint32_t slot;  // position of the vertex inside the edge's member array
    };

    Orientation() = default;

    /// Arbitrary orientation: heads are the last min(delta, |e|) members in
    /// sorted order.
    Orientation(const Hypergraph& h, int delta);

    /// Heads are the last quotas[e] members. Each quota must be in [0, |e|].
    static Orientation with_quotas(const Hypergraph& h, int delta, std::span<const std::uint32_t> quotas);

    /// Explicit head sets, one per edge. Each must be a subset of the edge of
    /// size min(delta, |e|).
    static Orientation from_heads(const Hypergraph& h, int delta, const std::vector<std::vector<VertexId>>& heads);

    int delta() const noexcept { return delta_; }
    std::size_t vertex_count() const noexcept { return indeg_.size(); }
    /// Number of edge ids ever issued, including removed ones.
    std::size_t edge_capacity() const noexcept { return edges_.size(); }
    std::size_t edge_count() const noexcept { return live_edges_; }
    bool alive(EdgeId e) const noexcept { return e < edges_.size() && edges_[e].alive; }

    std::uint32_t indeg(VertexId u) const noexcept { return indeg_[u]; }
    const std::vector<std::uint32_t>& indegrees() const noexcept { return indeg_; }
    std::uint32_t max_indegree() const noexcept;
    std::uint64_t total_indegree() const noexcept;

    std::uint32_t quota(EdgeId e) const noexcept { return edges_[e].quota; }
    std::size_t edge_size(EdgeId e) const noexcept { return edges_[e].members.size(); }
    std::span<const VertexId> members(EdgeId e) const noexcept { return edges_[e].members; }
    std::span<const VertexId> heads(EdgeId e) const noexcept {
        return std::span<const VertexId>(edges_[e].members).first(edges_[e].quota);
    }
    std::span<const VertexId> tails(EdgeId e) const noexcept {
        return std::span<const VertexId>(edges_[e].members).subspan(edges_[e].quota);
    }
    bool is_head_slot(EdgeId e, std::uint32_t slot) const noexcept { return slot < edges_[e].quota; }
    bool is_head(VertexId u, EdgeId e) const;

    std::span<const Incidence> incident(VertexId u) const noexcept { return inc_[u]; }

    /// Grows the vertex set; new vertices have no incident edges.
    void ensure_vertex_count(std::size_t n);

    /// Adds an edge whose heads are `heads` (must be a subset of `members`
    /// of size quota). Returns the new id.
    EdgeId add_edge(std::vector<VertexId> members, const std::vector<VertexId>& heads);

    /// Removes a live edge; its heads lose one indegree each.
    void remove_edge(EdgeId e);

    /// Makes tail `u` a head of e and head `w` a tail.
    void swap_roles(EdgeId e, VertexId u, VertexId w);

    /// Reverses every step of p. Throws InvariantViolation if some step does
    /// not go from a tail to a head of its edge.
    void reverse(const Hyperpath& p);

    /// Recomputes everything from scratch and throws InvariantViolation on
    /// any mismatch.
    void check_invariants() const;

    /// One line per live edge: "e: h1 h2 ...", heads ascending.
    std::string snapshot() const;

    /// Head sets of all edge ids, sorted; empty for removed edges.
    std::vector<std::vector<VertexId>> head_sets() const;

private:
    struct EdgeRec {
        std::vector<VertexId> members;
        std::vector<std::uint32_t> back;  // back[i]: index of this edge in inc_[members[i]]
        std::uint32_t quota = 0;
        bool alive = true;
    };

    void place(EdgeRec& rec, EdgeId e);
    void swap_slots(EdgeId e, std::uint32_t a, std::uint32_t b);
    std::uint32_t slot_of(EdgeId e, VertexId u) const;

    int delta_ = 1;
    std::vector<EdgeRec> edges_;
    std::vector<std::vector<Incidence>> inc_;
    std::vector<std::uint32_t> indeg_;
    std::size_t live_edges_ = 0;
};

/// Heads chosen edge by edge in id order: the min(delta, |e|) members with the
/// lowest current indegree, ties to the smaller id.
Orientation greedy_orientation(const Hypergraph& h, int delta);

/// Quota of an edge of size `size` under delta.
inline std::uint32_t head_quota(std::size_t size, int delta) {
    return static_cast<std::uint32_t>(size < static_cast<std::size_t>(delta) ? size : static_cast<std::size_t>(delta));
}

}  // namespace hdense
