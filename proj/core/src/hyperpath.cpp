#include "hdense/hyperpath.hpp"

#include <algorithm>
#include <limits>

namespace hdense {

void HyperpathSearch::begin() {
    const auto n = o_->vertex_count();
    const auto m = o_->edge_capacity();
    if (vmark_.size() < n) {
        vmark_.resize(n, 0);
        parent_.resize(n, kNoVertex);
        via_.resize(n, kNoEdge);
    }
    if (emark_.size() < m) {
        emark_.resize(m, 0);
    }
    if (++epoch_ == 0) {
        std::fill(vmark_.begin(), vmark_.end(), 0);
        std::fill(emark_.begin(), emark_.end(), 0);
        epoch_ = 1;
    }
    queue_.clear();
}

void HyperpathSearch::visit(VertexId u, VertexId parent, EdgeId via) {
    vmark_[u] = epoch_;
    parent_[u] = parent;
    via_[u] = via;
    queue_.push_back(u);
}

void HyperpathSearch::relax(VertexId u, Dir dir) {
    for (const auto& inc : o_->incident(u)) {
        const bool head = o_->is_head_slot(inc.edge, inc.slot);
        // forward leaves u as a tail; backward leaves u as a head
        if ((dir == Dir::forward) == head || expanded(inc.edge)) {
            continue;
        }
        expand_edge(inc.edge);
        auto next = dir == Dir::forward ? o_->heads(inc.edge) : o_->tails(inc.edge);
        for (VertexId w : next) {
            if (!seen(w)) {
                visit(w, u, inc.edge);
            }
        }
    }
}

Hyperpath HyperpathSearch::trace_forward(VertexId t) const {
    Hyperpath p;
    for (VertexId v = t; v != kNoVertex; v = parent_[v]) {
        p.vertices.push_back(v);
        if (via_[v] != kNoEdge) {
            p.edges.push_back(via_[v]);
        }
    }
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

Hyperpath HyperpathSearch::trace_backward(VertexId s) const {
    // parents point toward the search root, which is the path target
    Hyperpath p;
    for (VertexId v = s; v != kNoVertex; v = parent_[v]) {
        p.vertices.push_back(v);
        if (via_[v] != kNoEdge) {
            p.edges.push_back(via_[v]);
        }
    }
    return p;
}

std::optional<Hyperpath> HyperpathSearch::find_reversible(const VertexPredicate& sources,
                                                          const VertexPredicate& targets) {
    const auto n = static_cast<VertexId>(o_->vertex_count());
    std::vector<VertexId> order;
    for (VertexId u = 0; u < n; ++u) {
        if (sources(u)) {
            order.push_back(u);
        }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return o_->indeg(a) < o_->indeg(b); });

    begin();
    for (VertexId s : order) {
        if (seen(s)) {
            continue;
        }
        const auto need = static_cast<std::uint64_t>(o_->indeg(s)) + 2;
        std::size_t head = queue_.size();
        visit(s, kNoVertex, kNoEdge);
        while (head < queue_.size()) {
            const VertexId u = queue_[head++];
            if (o_->indeg(u) >= need && targets(u)) {
                return trace_forward(u);
            }
            relax(u, Dir::forward);
        }
    }
    return std::nullopt;
}

std::size_t HyperpathSearch::reversible_pass(const VertexPredicate& sources, const VertexPredicate& targets,
                                             const std::function<void(const Hyperpath&)>& on_path) {
    const auto n = static_cast<VertexId>(o_->vertex_count());
    std::vector<VertexId> order;
    for (VertexId u = 0; u < n; ++u) {
        if (sources(u)) {
            order.push_back(u);
        }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return o_->indeg(a) < o_->indeg(b); });

    // Marks survive across sources, as in find_reversible. A reversal makes
    // the marks stale, which can only hide paths; the caller repeats the pass
    // until it finds nothing.
    begin();
    std::size_t found = 0;
    for (VertexId s : order) {
        if (seen(s)) {
            continue;
        }
        const auto need = static_cast<std::uint64_t>(o_->indeg(s)) + 2;
        std::size_t head = queue_.size();
        visit(s, kNoVertex, kNoEdge);
        while (head < queue_.size()) {
            const VertexId u = queue_[head++];
            if (o_->indeg(u) >= need && targets(u)) {
                on_path(trace_forward(u));
                ++found;
                break;
            }
            relax(u, Dir::forward);
        }
    }
    return found;
}

std::optional<Hyperpath> HyperpathSearch::find_into(VertexId target, const VertexPredicate& accept) {
    begin();
    visit(target, kNoVertex, kNoEdge);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const VertexId u = queue_[head];
        if (u != target && accept(u)) {
            return trace_backward(u);
        }
        relax(u, Dir::backward);
    }
    return std::nullopt;
}

std::optional<Hyperpath> HyperpathSearch::find_lowest_into(VertexId target, const VertexPredicate& accept) {
    begin();
    visit(target, kNoVertex, kNoEdge);
    VertexId best = kNoVertex;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const VertexId u = queue_[head];
        if (u != target && accept(u) && (best == kNoVertex || o_->indeg(u) < o_->indeg(best))) {
            best = u;
        }
        relax(u, Dir::backward);
    }
    if (best == kNoVertex) {
        return std::nullopt;
    }
    return trace_backward(best);
}

std::optional<Hyperpath> HyperpathSearch::find_from(VertexId source, const VertexPredicate& accept) {
    begin();
    visit(source, kNoVertex, kNoEdge);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const VertexId u = queue_[head];
        if (u != source && accept(u)) {
            return trace_forward(u);
        }
        relax(u, Dir::forward);
    }
    return std::nullopt;
}

std::vector<VertexId> HyperpathSearch::reachable_to(std::span<const VertexId> seeds) {
    begin();
    for (VertexId s : seeds) {
        if (!seen(s)) {
            visit(s, kNoVertex, kNoEdge);
        }
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        relax(queue_[head], Dir::backward);
    }
    std::vector<VertexId> out(queue_.begin(), queue_.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> HyperpathSearch::reachable_from(std::span<const VertexId> seeds) {
    begin();
    for (VertexId s : seeds) {
        if (!seen(s)) {
            visit(s, kNoVertex, kNoEdge);
        }
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        relax(queue_[head], Dir::forward);
    }
    std::vector<VertexId> out(queue_.begin(), queue_.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<char> HyperpathSearch::reachable_to_mask(std::span<const VertexId> seeds) {
    std::vector<char> mask(o_->vertex_count(), 0);
    for (VertexId u : reachable_to(seeds)) {
        mask[u] = 1;
    }
    return mask;
}

}  // namespace hdense
