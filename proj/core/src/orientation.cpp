#include "hdense/orientation.hpp"

#include "hdense/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hdense {

namespace {

void check_delta(int delta) {
    if (delta < 1) {
        throw ParameterError("delta must be >= 1, got " + std::to_string(delta));
    }
}

}  // namespace

Hyperpath Hyperpath::reversed() const {
    // After reversal each e_i has u_i as a head and u_{i+1} as a tail, so the
    // walk back from u_l is valid again.
    Hyperpath out;
    out.vertices.assign(vertices.rbegin(), vertices.rend());
    out.edges.assign(edges.rbegin(), edges.rend());
    return out;
}

Orientation::Orientation(const Hypergraph& h, int delta) : delta_(delta) {
    check_delta(delta);
    indeg_.assign(h.vertex_count(), 0);
    inc_.assign(h.vertex_count(), {});
    for (VertexId u = 0; u < h.vertex_count(); ++u) {
        inc_[u].reserve(h.degree(u));
    }
    edges_.reserve(h.edge_count());
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        auto m = h.edge(e);
        const auto q = head_quota(m.size(), delta);
        EdgeRec rec;
        // last q members become heads, moved to the front
        rec.members.assign(m.end() - q, m.end());
        rec.members.insert(rec.members.end(), m.begin(), m.end() - q);
        rec.quota = q;
        place(rec, e);
        edges_.push_back(std::move(rec));
    }
    live_edges_ = edges_.size();
}

Orientation Orientation::with_quotas(const Hypergraph& h, int delta, std::span<const std::uint32_t> quotas) {
    check_delta(delta);
    if (quotas.size() != h.edge_count()) {
        throw ParameterError("quota count does not match edge count");
    }
    Orientation o;
    o.delta_ = delta;
    o.indeg_.assign(h.vertex_count(), 0);
    o.inc_.assign(h.vertex_count(), {});
    o.edges_.reserve(h.edge_count());
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        auto m = h.edge(e);
        const auto q = quotas[e];
        if (q > m.size()) {
            throw ParameterError("quota of edge " + std::to_string(e) + " exceeds its size");
        }
        EdgeRec rec;
        rec.members.assign(m.end() - q, m.end());
        rec.members.insert(rec.members.end(), m.begin(), m.end() - q);
        rec.quota = q;
        o.place(rec, e);
        o.edges_.push_back(std::move(rec));
    }
    o.live_edges_ = o.edges_.size();
    return o;
}

Orientation Orientation::from_heads(const Hypergraph& h, int delta, const std::vector<std::vector<VertexId>>& heads) {
    check_delta(delta);
    if (heads.size() != h.edge_count()) {
        throw ParameterError("head set count does not match edge count");
    }
    Orientation o;
    o.delta_ = delta;
    o.indeg_.assign(h.vertex_count(), 0);
    o.inc_.assign(h.vertex_count(), {});
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        auto m = h.edge(e);
        o.add_edge(std::vector<VertexId>(m.begin(), m.end()), heads[e]);
    }
    return o;
}

void Orientation::place(EdgeRec& rec, EdgeId e) {
    rec.back.resize(rec.members.size());
    for (std::uint32_t i = 0; i < rec.members.size(); ++i) {
        const VertexId u = rec.members[i];
        rec.back[i] = static_cast<std::uint32_t>(inc_[u].size());
        inc_[u].push_back({e, i});
        if (i < rec.quota) {
            ++indeg_[u];
        }
    }
}

bool Orientation::is_head(VertexId u, EdgeId e) const {
    return slot_of(e, u) < edges_[e].quota;
}

std::uint32_t Orientation::slot_of(EdgeId e, VertexId u) const {
    const auto& m = edges_[e].members;
    auto it = std::find(m.begin(), m.end(), u);
    if (it == m.end()) {
        throw InvariantViolation("vertex " + std::to_string(u) + " is not in edge " + std::to_string(e));
    }
    return static_cast<std::uint32_t>(it - m.begin());
}

std::uint32_t Orientation::max_indegree() const noexcept {
    return indeg_.empty() ? 0 : *std::max_element(indeg_.begin(), indeg_.end());
}

std::uint64_t Orientation::total_indegree() const noexcept {
    return std::accumulate(indeg_.begin(), indeg_.end(), std::uint64_t{0});
}

void Orientation::ensure_vertex_count(std::size_t n) {
    if (n > indeg_.size()) {
        indeg_.resize(n, 0);
        inc_.resize(n);
    }
}

EdgeId Orientation::add_edge(std::vector<VertexId> members, const std::vector<VertexId>& heads) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) {
        throw ParameterError("cannot add an empty edge");
    }
    ensure_vertex_count(static_cast<std::size_t>(members.back()) + 1);
    const auto q = head_quota(members.size(), delta_);
    std::vector<VertexId> hs(heads);
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    if (hs.size() != q || !std::includes(members.begin(), members.end(), hs.begin(), hs.end())) {
        throw ParameterError("head set must be a subset of the edge of size " + std::to_string(q));
    }
    EdgeRec rec;
    rec.members = hs;
    std::set_difference(members.begin(), members.end(), hs.begin(), hs.end(), std::back_inserter(rec.members));
    rec.quota = q;
    const auto e = static_cast<EdgeId>(edges_.size());
    place(rec, e);
    edges_.push_back(std::move(rec));
    ++live_edges_;
    return e;
}

void Orientation::remove_edge(EdgeId e) {
    if (!alive(e)) {
        throw NotFoundError("edge " + std::to_string(e) + " does not exist");
    }
    auto& rec = edges_[e];
    for (std::uint32_t i = 0; i < rec.members.size(); ++i) {
        const VertexId u = rec.members[i];
        auto& list = inc_[u];
        const auto pos = rec.back[i];
        const Incidence moved = list.back();
        list[pos] = moved;
        edges_[moved.edge].back[moved.slot] = pos;
        list.pop_back();
        if (i < rec.quota) {
            --indeg_[u];
        }
    }
    rec.members.clear();
    rec.back.clear();
    rec.quota = 0;
    rec.alive = false;
    --live_edges_;
}

void Orientation::swap_slots(EdgeId e, std::uint32_t a, std::uint32_t b) {
    auto& rec = edges_[e];
    std::swap(rec.members[a], rec.members[b]);
    std::swap(rec.back[a], rec.back[b]);
    inc_[rec.members[a]][rec.back[a]].slot = a;
    inc_[rec.members[b]][rec.back[b]].slot = b;
}

void Orientation::swap_roles(EdgeId e, VertexId u, VertexId w) {
    const auto su = slot_of(e, u);
    const auto sw = slot_of(e, w);
    const auto q = edges_[e].quota;
    if (su < q || sw >= q) {
        throw InvariantViolation("swap_roles: " + std::to_string(u) + " must be a tail and " + std::to_string(w) +
                                 " a head of edge " + std::to_string(e));
    }
    swap_slots(e, su, sw);
    ++indeg_[u];
    --indeg_[w];
}

void Orientation::reverse(const Hyperpath& p) {
    if (p.empty()) {
        return;
    }
    if (p.vertices.size() != p.edges.size() + 1) {
        throw InvariantViolation("malformed hyperpath");
    }
    // validate every step before touching anything
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        const EdgeId e = p.edges[i];
        if (!alive(e)) {
            throw InvariantViolation("hyperpath uses missing edge " + std::to_string(e));
        }
        const auto q = edges_[e].quota;
        if (slot_of(e, p.vertices[i]) < q || slot_of(e, p.vertices[i + 1]) >= q) {
            throw InvariantViolation("hyperpath step " + std::to_string(i) + " is not tail to head");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (p.edges[j] == e) {
                throw InvariantViolation("hyperpath repeats edge " + std::to_string(e));
            }
        }
    }
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        const EdgeId e = p.edges[i];
        swap_slots(e, slot_of(e, p.vertices[i]), slot_of(e, p.vertices[i + 1]));
    }
    // interior vertices gain and lose one head each
    ++indeg_[p.source()];
    --indeg_[p.target()];
}

void Orientation::check_invariants() const {
    std::vector<std::uint32_t> deg(indeg_.size(), 0);
    std::size_t live = 0;
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        const auto& rec = edges_[e];
        if (!rec.alive) {
            continue;
        }
        ++live;
        if (rec.quota > rec.members.size() || rec.back.size() != rec.members.size()) {
            throw InvariantViolation("edge " + std::to_string(e) + " has a bad quota or back array");
        }
        for (std::uint32_t i = 0; i < rec.members.size(); ++i) {
            const VertexId u = rec.members[i];
            if (u >= inc_.size() || rec.back[i] >= inc_[u].size()) {
                throw InvariantViolation("edge " + std::to_string(e) + " has a dangling member");
            }
            const auto& inc = inc_[u][rec.back[i]];
            if (inc.edge != e || inc.slot != i) {
                throw InvariantViolation("incidence of vertex " + std::to_string(u) + " is stale");
            }
            if (i < rec.quota) {
                ++deg[u];
            }
        }
    }
    if (live != live_edges_) {
        throw InvariantViolation("live edge count is stale");
    }
    for (VertexId u = 0; u < indeg_.size(); ++u) {
        if (deg[u] != indeg_[u]) {
            throw InvariantViolation("indegree of vertex " + std::to_string(u) + " is stale");
        }
        for (const auto& inc : inc_[u]) {
            if (!alive(inc.edge) || edges_[inc.edge].members[inc.slot] != u) {
                throw InvariantViolation("incidence list of vertex " + std::to_string(u) + " is stale");
            }
        }
    }
}

std::vector<std::vector<VertexId>> Orientation::head_sets() const {
    std::vector<std::vector<VertexId>> out(edges_.size());
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        if (edges_[e].alive) {
            auto hs = heads(e);
            out[e].assign(hs.begin(), hs.end());
            std::sort(out[e].begin(), out[e].end());
        }
    }
    return out;
}

std::string Orientation::snapshot() const {
    std::ostringstream os;
    auto hs = head_sets();
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        if (!edges_[e].alive) {
            continue;
        }
        os << e << ':';
        for (VertexId u : hs[e]) {
            os << ' ' << u;
        }
        os << '\n';
    }
    return os.str();
}

Orientation greedy_orientation(const Hypergraph& h, int delta) {
    check_delta(delta);
    std::vector<std::uint32_t> indeg(h.vertex_count(), 0);
    std::vector<std::vector<VertexId>> heads(h.edge_count());
    std::vector<VertexId> order;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        auto m = h.edge(e);
        const auto q = head_quota(m.size(), delta);
        order.assign(m.begin(), m.end());
        std::partial_sort(order.begin(), order.begin() + q, order.end(), [&](VertexId a, VertexId b) {
            return indeg[a] != indeg[b] ? indeg[a] < indeg[b] : a < b;
        });
        heads[e].assign(order.begin(), order.begin() + q);
        for (VertexId u : heads[e]) {
            ++indeg[u];
        }
    }
    return Orientation::from_heads(h, delta, heads);
}

}  // namespace hdense
