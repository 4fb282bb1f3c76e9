#pragma once

#include "hdense/decomp.hpp"
#include "hdense/hypergraph.hpp"
#include "hdense/orientation.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hdense {

/// Exact non-negative fraction, kept reduced.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Ratio of(std::int64_t num, std::int64_t den);
    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;

    friend bool operator==(const Ratio& a, const Ratio& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(const Ratio& a, const Ratio& b);
    friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
    friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
    friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }
};

/// Sum of indegrees over x, divided by |x|. Throws DomainError on empty x.
Ratio indegree_density(const Orientation& o, std::span<const VertexId> x);

/// Sum of |e| over edges inside x, divided by |x|. Throws DomainError on empty x.
Ratio degree_density(const Hypergraph& h, std::span<const VertexId> x);

/// Edges inside x divided by |x|. Throws DomainError on empty x.
Ratio edge_vertex_ratio(const Hypergraph& h, std::span<const VertexId> x);

/// Share of the indegree of x contributed by edges inside x; 0 if x has no
/// indegree at all. Throws DomainError on empty x.
Ratio internalization(const Orientation& o, std::span<const VertexId> x);

struct DensityGuarantee {
    int k = 0;
    std::size_t size = 0;       // |D_k|
    std::size_t core_size = 0;  // members with indegree >= k
    Ratio f_k;                  // core_size / size
    Ratio rho_d;                // indegree density of D_k
    Ratio rho;                  // degree density of D_k
    Ratio theta;                // internalization of D_k
    bool indegree_bound_ok = false;  // rho_d >= (k - 1) + f_k
    bool degree_bound_ok = false;    // rho >= theta * ((k - 1) + f_k)
};

/// Evaluates both lower bounds for D_k (given as `dense`) under witness o.
/// Throws DomainError on empty dense.
DensityGuarantee density_guarantee_check(const Hypergraph& h, const Orientation& o, int k,
                                         std::span<const VertexId> dense);

struct ConductanceCheck {
    std::size_t boundary = 0;  // edges with members on both sides
    std::int64_t volume = 0;   // sum of full degrees over x
    Ratio phi;                 // boundary / volume
    Ratio bound;               // 1 - rho(x) / (volume / |x|)
    bool ok = false;           // phi <= bound
};

/// Throws DomainError on empty x or zero volume.
Ratio conductance_bound(const Hypergraph& h, std::span<const VertexId> x);
ConductanceCheck conductance_check(const Hypergraph& h, std::span<const VertexId> x);

struct LayerMetrics {
    int k = 0;
    std::size_t layer_size = 0;  // |D_k \ D_{k+1}|
    std::size_t dense_size = 0;  // |D_k|
    Ratio layer_rho_d;           // indegree density of the layer; 0/1 when empty
    bool layer_density_ok = true;  // k - 1 < layer_rho_d <= k, or layer empty
    Ratio edge_vertex;           // |E[D_k]| / |D_k|
    DensityGuarantee guarantee;
    ConductanceCheck conductance;
};

struct LayerQualityReport {
    int delta = 1;
    int k_max = 0;
    double non_empty_ratio = 0.0;
    double avg_jaccard_distance = 1.0;
    bool jaccard_defined = false;  // false with fewer than two non-empty layers
    double sat = 0.0;
    double cont = 1.0;
    bool cont_defined = false;     // false when k_max < 2
    std::vector<LayerMetrics> layers;  // k = 1..k_max

    /// Number of failed bound checks across all layers.
    std::size_t violations() const;
};

/// Metrics for one decomposition. `witness` must be an egalitarian
/// orientation of h for the same delta.
LayerQualityReport layer_quality(const Hypergraph& h, const Decomposition& d, const Orientation& witness);

/// One report per decomposition; decompositions without a witness get one
/// from dsd.
std::vector<LayerQualityReport> layer_quality(const Hypergraph& h, const std::vector<Decomposition>& suite);

}  // namespace hdense
