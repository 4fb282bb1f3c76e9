#include "hdense/dynamic.hpp"

#include "hdense/decomp.hpp"
#include "hdense/error.hpp"
#include "hdense/hyperpath.hpp"

#include <algorithm>
#include <cmath>

namespace hdense {

namespace {

void add_path(const Orientation& o, const Hyperpath& p, std::vector<VertexId>& touched) {
    touched.insert(touched.end(), p.vertices.begin(), p.vertices.end());
    for (EdgeId e : p.edges) {
        auto m = o.members(e);
        touched.insert(touched.end(), m.begin(), m.end());
    }
}

}  // namespace

DynamicState::DynamicState(const Hypergraph& h, std::vector<int> deltas) : deltas_(std::move(deltas)) {
    if (deltas_.empty()) {
        deltas_.push_back(std::max(1, static_cast<int>(std::floor(h.avg_edge_size()))));
    }
    std::sort(deltas_.begin(), deltas_.end());
    deltas_.erase(std::unique(deltas_.begin(), deltas_.end()), deltas_.end());
    n_ = h.vertex_count();
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        auto m = h.edge(e);
        edges_.emplace_back(std::vector<VertexId>(m.begin(), m.end()));
    }
    live_ = h.edge_count();
    for (int d : deltas_) {
        if (d < 1) {
            throw ParameterError("delta must be >= 1, got " + std::to_string(d));
        }
        auto dec = dsd(h, d);
        tracks_.push_back({d, std::move(*dec.witness), std::move(dec.idn)});
    }
}

DynamicState::Track& DynamicState::track(int delta) {
    for (auto& t : tracks_) {
        if (t.delta == delta) {
            return t;
        }
    }
    throw NotFoundError("delta " + std::to_string(delta) + " is not maintained");
}

const DynamicState::Track& DynamicState::track(int delta) const {
    return const_cast<DynamicState*>(this)->track(delta);
}

EdgeId DynamicState::insert_edge(std::vector<VertexId> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) {
        throw ParameterError("cannot insert an empty edge");
    }
    n_ = std::max<std::size_t>(n_, static_cast<std::size_t>(members.back()) + 1);
    last_ = {};
    const auto id = static_cast<EdgeId>(edges_.size());
    for (auto& t : tracks_) {
        t.o.ensure_vertex_count(n_);
        t.idn.resize(n_, 0);
        // heads: the lowest indegrees, ties to the smaller id
        std::vector<VertexId> order(members);
        std::stable_sort(order.begin(), order.end(),
                         [&](VertexId a, VertexId b) { return t.o.indeg(a) < t.o.indeg(b); });
        order.resize(head_quota(members.size(), t.delta));
        const auto e = t.o.add_edge(members, order);
        if (e != id) {
            throw InvariantViolation("edge ids diverged between deltas");
        }
        std::vector<VertexId> touched(members);
        HyperpathSearch search(t.o);
        for (VertexId v : order) {
            if (static_cast<int>(t.o.indeg(v)) != t.idn[v] + 1) {
                continue;
            }
            ++last_.searches;
            auto p = search.find_into(v, [&](VertexId s) { return t.o.indeg(s) + 2 <= t.o.indeg(v); });
            if (p) {
                t.o.reverse(*p);
                ++last_.reversals;
                add_path(t.o, *p, touched);
            }
        }
        settle(t, std::move(touched));
    }
    edges_.emplace_back(std::move(members));
    ++live_;
    return id;
}

void DynamicState::delete_edge(EdgeId e) {
    if (!has_edge(e)) {
        throw NotFoundError("edge " + std::to_string(e) + " does not exist");
    }
    last_ = {};
    for (auto& t : tracks_) {
        auto hs = t.o.heads(e);
        std::vector<VertexId> former(hs.begin(), hs.end());
        t.o.remove_edge(e);
        std::vector<VertexId> touched(*edges_[e]);
        HyperpathSearch search(t.o);
        for (VertexId v : former) {
            if (static_cast<int>(t.o.indeg(v)) + 2 != t.idn[v]) {
                continue;
            }
            ++last_.searches;
            auto p = search.find_from(v, [&](VertexId s) { return t.o.indeg(v) + 2 <= t.o.indeg(s); });
            if (p) {
                t.o.reverse(*p);
                ++last_.reversals;
                add_path(t.o, *p, touched);
            }
        }
        settle(t, std::move(touched));
    }
    edges_[e].reset();
    --live_;
}

void DynamicState::settle(Track& t, std::vector<VertexId> touched) {
    auto& o = t.o;
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    HyperpathSearch search(o);
    std::vector<char> mark(o.vertex_count(), 0);
    for (VertexId u : touched) {
        mark[u] = 1;
    }
    auto touch = [&](VertexId u) {
        if (!mark[u]) {
            mark[u] = 1;
            touched.push_back(u);
        }
    };

    // Before the update nothing was reversible, so any reversible path now
    // starts at a vertex that can reach a touched vertex and ends at one
    // reachable from a touched vertex.
    while (true) {
        ++last_.searches;
        auto before = search.reachable_to_mask(touched);
        auto after_list = search.reachable_from(touched);
        std::vector<char> after(o.vertex_count(), 0);
        for (VertexId u : after_list) {
            after[u] = 1;
        }
        auto p = search.find_reversible([&](VertexId u) { return before[u] != 0; },
                                        [&](VertexId u) { return after[u] != 0; });
        if (!p) {
            break;
        }
        o.reverse(*p);
        ++last_.reversals;
        for (VertexId u : p->vertices) {
            touch(u);
        }
        for (EdgeId e : p->edges) {
            for (VertexId u : o.members(e)) {
                touch(u);
            }
        }
    }

    // idn[u] is the largest indegree u can reach. Only vertices that reach a
    // touched vertex can have changed.
    auto region = search.reachable_to(touched);
    last_.region += region.size();
    std::vector<char> in_region(o.vertex_count(), 0);
    for (VertexId u : region) {
        in_region[u] = 1;
    }
    std::vector<int> val(o.vertex_count(), 0);
    for (VertexId x : region) {
        int best = static_cast<int>(o.indeg(x));
        for (const auto& inc : o.incident(x)) {
            if (o.is_head_slot(inc.edge, inc.slot)) {
                continue;
            }
            for (VertexId w : o.heads(inc.edge)) {
                if (!in_region[w]) {
                    best = std::max(best, t.idn[w]);
                }
            }
        }
        val[x] = best;
    }
    std::stable_sort(region.begin(), region.end(), [&](VertexId a, VertexId b) { return val[a] > val[b]; });
    std::vector<char> done(o.vertex_count(), 0);
    std::vector<VertexId> queue;
    for (VertexId x : region) {
        if (done[x]) {
            continue;
        }
        done[x] = 1;
        t.idn[x] = val[x];
        queue.assign(1, x);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const VertexId y = queue[i];
            for (const auto& inc : o.incident(y)) {
                if (!o.is_head_slot(inc.edge, inc.slot)) {
                    continue;
                }
                for (VertexId w : o.tails(inc.edge)) {
                    if (in_region[w] && !done[w]) {
                        done[w] = 1;
                        t.idn[w] = val[x];
                        queue.push_back(w);
                    }
                }
            }
        }
    }
}

Hypergraph DynamicState::current_graph() const {
    std::vector<std::vector<VertexId>> edges;
    for (const auto& e : edges_) {
        if (e) {
            edges.push_back(*e);
        }
    }
    return Hypergraph(n_, std::move(edges));
}

std::vector<EdgeId> DynamicState::live_edge_ids() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        if (edges_[e]) {
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace hdense
