#pragma once

#include "hdense/hypergraph.hpp"

#include <cstdint>
#include <vector>

namespace hdense::oracle {

// Exhaustive reference implementation for tiny instances. Deliberately shares
// no code with Orientation, HyperpathSearch or the miners.

inline constexpr std::uint64_t kMaxOrientations = 1'000'000;

/// Number of delta-orientations of h, saturating just above the guard.
std::uint64_t orientation_count(const Hypergraph& h, int delta);

struct OracleOrientation {
    std::vector<std::vector<VertexId>> heads;  // per edge, ascending
    std::vector<int> indeg;
    bool fallback_used = false;  // the lexicographic minimum failed its check
};

/// Enumerates every delta-orientation and returns one whose indegree vector,
/// sorted descending, is lexicographically smallest; verified to admit no
/// reversible hyperpath. Throws SizeGuardError above kMaxOrientations.
OracleOrientation egalitarian(const Hypergraph& h, int delta);

/// reach[s][t]: a hyperpath s ~> t exists (reflexive).
std::vector<std::vector<char>> reachability(const Hypergraph& h, const std::vector<std::vector<VertexId>>& heads);

/// True if no pair s, t with reach[s][t] has indeg[t] - indeg[s] >= 2.
bool is_egalitarian(const Hypergraph& h, const std::vector<std::vector<VertexId>>& heads);

/// D_{k,delta}, ascending.
std::vector<VertexId> dense(const Hypergraph& h, int k, int delta);

/// Same, from a precomputed oracle orientation.
std::vector<VertexId> dense(const Hypergraph& h, const OracleOrientation& o, int k);

/// Per-vertex integral dense numbers.
std::vector<int> idn(const Hypergraph& h, int delta);

}  // namespace hdense::oracle
