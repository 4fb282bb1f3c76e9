#include "hdense/metrics.hpp"

#include "hdense/error.hpp"

#include <algorithm>
#include <numeric>

namespace hdense {

Ratio Ratio::of(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw DomainError("zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const auto g = std::gcd(num < 0 ? -num : num, den);
    return {num / (g == 0 ? 1 : g), den / (g == 0 ? 1 : g)};
}

bool operator<(const Ratio& a, const Ratio& b) {
    __extension__ typedef __int128 wide;
    return static_cast<wide>(a.num) * b.den < static_cast<wide>(b.num) * a.den;
}

std::string Ratio::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

void require_nonempty(std::span<const VertexId> x, const char* what) {
    if (x.empty()) {
        throw DomainError(std::string(what) + " of an empty vertex set");
    }
}

std::vector<char> mask_of(std::size_t n, std::span<const VertexId> x) {
    std::vector<char> mask(n, 0);
    for (VertexId u : x) {
        if (u >= n) {
            throw ParameterError("vertex " + std::to_string(u) + " out of range");
        }
        mask[u] = 1;
    }
    return mask;
}

std::size_t distinct(std::span<const VertexId> x) {
    std::vector<VertexId> v(x.begin(), x.end());
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

// Edges fully inside x: count and total size.
std::pair<std::int64_t, std::int64_t> inside_edges(const Hypergraph& h, const std::vector<char>& mask) {
    std::int64_t count = 0;
    std::int64_t size = 0;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        auto m = h.edge(e);
        if (std::all_of(m.begin(), m.end(), [&](VertexId u) { return mask[u] != 0; })) {
            ++count;
            size += static_cast<std::int64_t>(m.size());
        }
    }
    return {count, size};
}

}  // namespace

Ratio indegree_density(const Orientation& o, std::span<const VertexId> x) {
    require_nonempty(x, "indegree density");
    auto mask = mask_of(o.vertex_count(), x);
    std::int64_t sum = 0;
    for (VertexId u = 0; u < mask.size(); ++u) {
        if (mask[u]) {
            sum += o.indeg(u);
        }
    }
    return Ratio::of(sum, static_cast<std::int64_t>(distinct(x)));
}

Ratio degree_density(const Hypergraph& h, std::span<const VertexId> x) {
    require_nonempty(x, "degree density");
    auto [count, size] = inside_edges(h, mask_of(h.vertex_count(), x));
    (void)count;
    return Ratio::of(size, static_cast<std::int64_t>(distinct(x)));
}

Ratio edge_vertex_ratio(const Hypergraph& h, std::span<const VertexId> x) {
    require_nonempty(x, "edge-vertex ratio");
    auto [count, size] = inside_edges(h, mask_of(h.vertex_count(), x));
    (void)size;
    return Ratio::of(count, static_cast<std::int64_t>(distinct(x)));
}

Ratio internalization(const Orientation& o, std::span<const VertexId> x) {
    require_nonempty(x, "internalization");
    auto mask = mask_of(o.vertex_count(), x);
    std::int64_t total = 0;
    for (VertexId u = 0; u < mask.size(); ++u) {
        if (mask[u]) {
            total += o.indeg(u);
        }
    }
    std::int64_t internal = 0;
    for (EdgeId e = 0; e < o.edge_capacity(); ++e) {
        if (!o.alive(e)) {
            continue;
        }
        auto m = o.members(e);
        if (std::all_of(m.begin(), m.end(), [&](VertexId u) { return mask[u] != 0; })) {
            internal += o.quota(e);
        }
    }
    return total == 0 ? Ratio{0, 1} : Ratio::of(internal, total);
}

DensityGuarantee density_guarantee_check(const Hypergraph& h, const Orientation& o, int k,
                                         std::span<const VertexId> dense) {
    require_nonempty(dense, "density guarantee");
    DensityGuarantee g;
    g.k = k;
    g.size = distinct(dense);
    for (VertexId u : dense) {
        if (static_cast<std::int64_t>(o.indeg(u)) >= k) {
            ++g.core_size;
        }
    }
    const auto size = static_cast<std::int64_t>(g.size);
    g.f_k = Ratio::of(static_cast<std::int64_t>(g.core_size), size);
    g.rho_d = indegree_density(o, dense);
    g.rho = degree_density(h, dense);
    g.theta = internalization(o, dense);
    // (k - 1) + f_k = ((k - 1) * |D| + |S|) / |D|
    const Ratio floor_bound =
        Ratio::of(static_cast<std::int64_t>(k - 1) * size + static_cast<std::int64_t>(g.core_size), size);
    g.indegree_bound_ok = g.rho_d >= floor_bound;
    const Ratio scaled = Ratio::of(g.theta.num * floor_bound.num, g.theta.den * floor_bound.den);
    g.degree_bound_ok = g.rho >= scaled;
    return g;
}

Ratio conductance_bound(const Hypergraph& h, std::span<const VertexId> x) {
    return conductance_check(h, x).bound;
}

ConductanceCheck conductance_check(const Hypergraph& h, std::span<const VertexId> x) {
    require_nonempty(x, "conductance");
    auto mask = mask_of(h.vertex_count(), x);
    ConductanceCheck c;
    for (VertexId u = 0; u < mask.size(); ++u) {
        if (mask[u]) {
            c.volume += static_cast<std::int64_t>(h.degree(u));
        }
    }
    if (c.volume == 0) {
        throw DomainError("conductance of a set with zero volume");
    }
    std::int64_t inside_size = 0;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        auto m = h.edge(e);
        const auto in = std::count_if(m.begin(), m.end(), [&](VertexId u) { return mask[u] != 0; });
        if (in == static_cast<std::ptrdiff_t>(m.size())) {
            inside_size += in;
        } else if (in > 0) {
            ++c.boundary;
        }
    }
    c.phi = Ratio::of(static_cast<std::int64_t>(c.boundary), c.volume);
    // 1 - rho / (vol / |x|) = 1 - inside_size / vol
    c.bound = Ratio::of(c.volume - inside_size, c.volume);
    c.ok = c.phi <= c.bound;
    return c;
}

std::size_t LayerQualityReport::violations() const {
    std::size_t bad = 0;
    for (const auto& l : layers) {
        bad += !l.layer_density_ok;
        bad += !l.guarantee.indegree_bound_ok;
        bad += !l.guarantee.degree_bound_ok;
        bad += !l.conductance.ok;
    }
    return bad;
}

LayerQualityReport layer_quality(const Hypergraph& h, const Decomposition& d, const Orientation& witness) {
    if (witness.vertex_count() != h.vertex_count()) {
        throw ParameterError("witness does not match the hypergraph");
    }
    LayerQualityReport r;
    r.delta = d.delta;
    r.k_max = d.k_max;

    std::size_t truncated = 0;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        truncated += h.edge_size(e) > static_cast<std::size_t>(d.delta);
    }
    r.sat = h.edge_count() == 0 ? 0.0 : static_cast<double>(truncated) / static_cast<double>(h.edge_count());

    const auto sizes = d.layer_sizes();
    std::vector<std::size_t> dense_sizes(sizes.size() + 1, 0);
    for (std::size_t k = sizes.size(); k-- > 0;) {
        dense_sizes[k] = dense_sizes[k + 1] + sizes[k];
    }

    std::size_t non_empty = 0;
    std::vector<int> non_empty_ks;
    for (int k = 1; k <= d.k_max; ++k) {
        const auto layer = d.layer(k);
        const auto dense = d.dense_set(k);
        LayerMetrics lm;
        lm.k = k;
        lm.layer_size = layer.size();
        lm.dense_size = dense.size();
        if (!layer.empty()) {
            ++non_empty;
            non_empty_ks.push_back(k);
            lm.layer_rho_d = indegree_density(witness, layer);
            lm.layer_density_ok = Ratio{k - 1, 1} < lm.layer_rho_d && lm.layer_rho_d <= Ratio{k, 1};
        }
        lm.edge_vertex = edge_vertex_ratio(h, dense);
        lm.guarantee = density_guarantee_check(h, witness, k, dense);
        lm.conductance = conductance_check(h, dense);
        r.layers.push_back(std::move(lm));
    }
    r.non_empty_ratio = d.k_max == 0 ? 0.0 : static_cast<double>(non_empty) / d.k_max;

    // Layers are disjoint, so adjacent non-empty layers always have distance 1.
    if (non_empty_ks.size() >= 2) {
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < non_empty_ks.size(); ++i) {
            auto a = d.layer(non_empty_ks[i]);
            auto b = d.layer(non_empty_ks[i + 1]);
            std::vector<VertexId> both;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
            const double uni = static_cast<double>(a.size() + b.size() - both.size());
            total += 1.0 - static_cast<double>(both.size()) / uni;
        }
        r.avg_jaccard_distance = total / static_cast<double>(non_empty_ks.size() - 1);
        r.jaccard_defined = true;
    }

    if (d.k_max >= 2) {
        double total = 0.0;
        for (int k = 1; k < d.k_max; ++k) {
            total += static_cast<double>(dense_sizes[k + 1]) / static_cast<double>(dense_sizes[k]);
        }
        r.cont = total / (d.k_max - 1);
        r.cont_defined = true;
    }
    return r;
}

std::vector<LayerQualityReport> layer_quality(const Hypergraph& h, const std::vector<Decomposition>& suite) {
    if (suite.empty()) {
        throw ParameterError("empty decomposition suite");
    }
    std::vector<LayerQualityReport> out;
    for (const auto& d : suite) {
        if (d.witness) {
            out.push_back(layer_quality(h, d, *d.witness));
        } else {
            auto full = dsd(h, d.delta);
            out.push_back(layer_quality(h, d, *full.witness));
        }
    }
    return out;
}

}  // namespace hdense
