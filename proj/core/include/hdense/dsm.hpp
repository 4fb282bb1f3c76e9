#pragma once

#include "hdense/hypergraph.hpp"
#include "hdense/orientation.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hdense {

enum class Miner { path, flow, flow_plus, all };

std::string_view miner_name(Miner m);
/// Accepts "path", "flow", "flow+", "all". Throws ParameterError otherwise.
Miner parse_miner(std::string_view name);

struct MinerStats {
    std::size_t searches = 0;   // hyperpath searches issued
    std::size_t reversals = 0;  // hyperpaths (or single swaps) reversed
    std::size_t evictions = 0;  // dsm_all members dropped from the candidate set
    std::int64_t flow = 0;      // flow miners: max-flow value
    std::size_t phases = 0;     // flow miners: blocking-flow phases

    MinerStats& operator+=(const MinerStats& o);
};

struct DenseResult {
    int k = 0;
    int delta = 1;
    std::vector<VertexId> vertices;  // D, ascending
    std::vector<VertexId> core;      // {u : indeg >= k} in the witness, ascending
    Orientation witness;
    MinerStats stats;
};

DenseResult dsm_path(const Hypergraph& h, int k, int delta);
DenseResult dsm_flow(const Hypergraph& h, int k, int delta);
DenseResult dsm_flow_plus(const Hypergraph& h, int k, int delta);
DenseResult dsm_all(const Hypergraph& h, int k, int delta);
DenseResult mine(const Hypergraph& h, int k, int delta, Miner algo);

/// Runs the dsm_all repair loop on `o` in place, so a caller can reuse one
/// orientation across increasing k. Afterwards no hyperpath leads from a
/// vertex of indegree <= k - 2 to one of indegree >= k.
MinerStats dsm_all_inplace(Orientation& o, int k);

/// {u : indeg >= k} plus every vertex that can reach it.
std::vector<VertexId> dense_closure(const Orientation& o, int k, std::vector<VertexId>* core = nullptr);

}  // namespace hdense
