#pragma once

#include "hdense/hypergraph.hpp"
#include "hdense/orientation.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hdense {

/// Per-vertex integral dense numbers for one delta. Vertex u lies in D_k
/// exactly when idn[u] >= k, so the layers D_k \ D_{k+1} partition V.
struct Decomposition {
    int delta = 1;
    int k_max = 0;
    std::vector<int> idn;
    std::size_t dsm_calls = 0;
    /// Egalitarian orientation of the whole hypergraph, when the driver
    /// produced one (dsd does, dsd_plus does not).
    std::optional<Orientation> witness;

    /// {u : idn[u] >= k}, ascending.
    std::vector<VertexId> dense_set(int k) const;
    /// {u : idn[u] == k}, ascending.
    std::vector<VertexId> layer(int k) const;
    /// Sizes of layers 0..k_max.
    std::vector<std::size_t> layer_sizes() const;
};

/// One DIVIDE call of dsd_plus, recorded in visiting order.
struct DivideStep {
    int k_lower = 0;
    int k_upper = 0;
    int k_mid = 0;                 // 0 when the interval was not split
    std::size_t lower_size = 0;    // |D_{k_lower}|
    std::size_t upper_size = 0;    // |D_{k_upper}|
    std::size_t mid_size = 0;      // |D_{k_mid}| when split
    std::size_t subproblem_vertices = 0;  // |D_{k_lower} \ D_{k_upper}|
    bool collapsed = false;        // boundaries equal, nothing in between
};

struct DivideTrace {
    std::vector<DivideStep> steps;
    std::vector<int> probes;  // k values tried by the k_max search
};

/// Layer-by-layer driver: dsm_all for k = 1, 2, ... on one orientation until
/// D_k is empty. The final orientation is egalitarian and kept as witness.
Decomposition dsd(const Hypergraph& h, int delta);

/// Largest k with D_k non-empty; 0 for a hypergraph without edges.
int find_k_max(const Hypergraph& h, int delta, std::size_t* dsm_calls = nullptr);

/// Divide and conquer over k. Each midpoint layer is mined on the part of the
/// hypergraph between the two boundary sets only.
Decomposition dsd_plus(const Hypergraph& h, int delta, DivideTrace* trace = nullptr);

enum class Driver { dsd, dsd_plus };

/// One decomposition per delta in `deltas` (default 1..d_e_max), up to
/// `threads` at a time.
std::vector<Decomposition> decompose_all(const Hypergraph& h, Driver driver, std::vector<int> deltas = {},
                                         unsigned threads = 1);

}  // namespace hdense
