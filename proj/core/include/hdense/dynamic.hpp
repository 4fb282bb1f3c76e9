#pragma once

#include "hdense/hypergraph.hpp"
#include "hdense/orientation.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hdense {

struct UpdateStats {
    std::size_t reversals = 0;
    std::size_t searches = 0;
    std::size_t region = 0;  // vertices whose idn was recomputed
};

/// Egalitarian orientations and idn maps for a few deltas, kept current
/// under edge insertion and deletion.
///
/// Edge ids continue those of the initial hypergraph: edge i of the input is
/// id i, each insertion takes the next id, deleted ids are never reused.
class DynamicState {
public:
    /// Default deltas: the single value floor(average edge size), at least 1.
    explicit DynamicState(const Hypergraph& h, std::vector<int> deltas = {});

    /// Vertex ids beyond the current range extend the vertex set.
    EdgeId insert_edge(std::vector<VertexId> members);

    /// Throws NotFoundError for an unknown or already deleted id.
    void delete_edge(EdgeId e);

    const std::vector<int>& deltas() const noexcept { return deltas_; }
    const std::vector<int>& idn(int delta) const { return track(delta).idn; }
    const Orientation& orientation(int delta) const { return track(delta).o; }
    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return live_; }
    bool has_edge(EdgeId e) const noexcept { return e < edges_.size() && edges_[e].has_value(); }

    /// Live edges in id order, as a static hypergraph.
    Hypergraph current_graph() const;
    std::vector<EdgeId> live_edge_ids() const;

    /// Totals over all deltas for the most recent update.
    const UpdateStats& last_update() const noexcept { return last_; }

private:
    struct Track {
        int delta = 1;
        Orientation o;
        std::vector<int> idn;
    };

    Track& track(int delta);
    const Track& track(int delta) const;

    // Reverses paths until none is reversible, then recomputes idn on every
    // vertex that can reach a touched one.
    void settle(Track& t, std::vector<VertexId> touched);

    std::vector<int> deltas_;
    std::vector<Track> tracks_;
    std::vector<std::optional<std::vector<VertexId>>> edges_;
    std::size_t n_ = 0;
    std::size_t live_ = 0;
    UpdateStats last_;
};

}  // namespace hdense
