#include "hdense/flow.hpp"

#include "hdense/error.hpp"

#include <algorithm>
#include <limits>

namespace hdense {

namespace {
constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
}

FlowNetwork::FlowNetwork(std::size_t nodes) : head_(nodes, 0) {}

std::uint32_t FlowNetwork::add_node() {
    head_.push_back(0);
    return static_cast<std::uint32_t>(head_.size() - 1);
}

std::uint32_t FlowNetwork::add_arc(std::uint32_t from, std::uint32_t to, std::int64_t cap) {
    if (from >= head_.size() || to >= head_.size() || cap < 0) {
        throw ParameterError("bad arc");
    }
    const auto id = static_cast<std::uint32_t>(arcs_.size());
    arcs_.push_back({to, cap, 0});
    arcs_.push_back({from, 0, 0});
    from_.push_back(from);
    from_.push_back(to);
    ++head_[from];
    ++head_[to];
    return id;
}

void FlowNetwork::build_csr() {
    const auto n = head_.size();
    offset_.assign(n + 1, 0);
    for (std::uint32_t a = 0; a < arcs_.size(); ++a) {
        ++offset_[from_[a] + 1];
    }
    for (std::size_t u = 0; u < n; ++u) {
        offset_[u + 1] += offset_[u];
    }
    order_.assign(arcs_.size(), 0);
    std::vector<std::uint32_t> fill(offset_.begin(), offset_.end() - 1);
    for (std::uint32_t a = 0; a < arcs_.size(); ++a) {
        order_[fill[from_[a]]++] = a;
    }
}

bool FlowNetwork::bfs(std::uint32_t s, std::uint32_t t) {
    level_.assign(head_.size(), kUnreached);
    std::vector<std::uint32_t> queue{s};
    level_[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const auto u = queue[i];
        for (auto k = offset_[u]; k < offset_[u + 1]; ++k) {
            const auto& a = arcs_[order_[k]];
            if (a.cap > 0 && level_[a.to] == kUnreached) {
                level_[a.to] = level_[u] + 1;
                queue.push_back(a.to);
            }
        }
    }
    return level_[t] != kUnreached;
}

std::int64_t FlowNetwork::max_flow(std::uint32_t s, std::uint32_t t) {
    source = s;
    sink = t;
    if (s == t) {
        throw ParameterError("source equals sink");
    }
    build_csr();
    std::int64_t total = 0;
    std::vector<std::uint32_t> path;  // arc ids from s
    while (bfs(s, t)) {
        ++phases;
        cursor_.assign(offset_.begin(), offset_.end() - 1);
        path.clear();
        std::uint32_t u = s;
        while (true) {
            if (u == t) {
                std::int64_t push = std::numeric_limits<std::int64_t>::max();
                for (auto a : path) {
                    push = std::min(push, arcs_[a].cap);
                }
                for (auto a : path) {
                    arcs_[a].cap -= push;
                    arcs_[a].flow += push;
                    arcs_[a ^ 1].cap += push;
                    arcs_[a ^ 1].flow -= push;
                }
                total += push;
                // retreat to the tail of the first saturated arc
                std::size_t keep = 0;
                while (keep < path.size() && arcs_[path[keep]].cap > 0) {
                    ++keep;
                }
                path.resize(keep);
                u = keep == 0 ? s : arcs_[path.back()].to;
                continue;
            }
            bool advanced = false;
            while (cursor_[u] < offset_[u + 1]) {
                const auto id = order_[cursor_[u]];
                const auto& a = arcs_[id];
                if (a.cap > 0 && level_[a.to] == level_[u] + 1) {
                    path.push_back(id);
                    u = a.to;
                    advanced = true;
                    break;
                }
                ++cursor_[u];
            }
            if (advanced) {
                continue;
            }
            // dead end
            level_[u] = kUnreached;
            if (path.empty()) {
                break;
            }
            const auto back = path.back();
            path.pop_back();
            u = from_[back];
            ++cursor_[u];
        }
    }
    return total;
}

bool FlowNetwork::has_augmenting_path(std::uint32_t s, std::uint32_t t) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::uint32_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        if (u == t) {
            return true;
        }
        for (std::uint32_t a = 0; a < arcs_.size(); ++a) {
            if (from_[a] == u && arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                seen[arcs_[a].to] = 1;
                stack.push_back(arcs_[a].to);
            }
        }
    }
    return false;
}

FlowNetwork build_flow_network(const Orientation& o, int k) {
    if (k < 1) {
        throw ParameterError("flow network needs k >= 1");
    }
    const auto n = o.vertex_count();
    const auto m = o.edge_capacity();
    FlowNetwork net(n + m + 2);
    net.source = static_cast<std::uint32_t>(n + m);
    net.sink = static_cast<std::uint32_t>(n + m + 1);
    net.pivot = k - 1;
    for (EdgeId e = 0; e < m; ++e) {
        if (!o.alive(e)) {
            continue;
        }
        const auto node = static_cast<std::uint32_t>(n + e);
        for (VertexId u : o.heads(e)) {
            net.add_arc(node, u, 1);
        }
        for (VertexId u : o.tails(e)) {
            net.add_arc(u, node, 1);
        }
    }
    for (VertexId u = 0; u < n; ++u) {
        const auto d = static_cast<std::int64_t>(o.indeg(u));
        if (d < net.pivot) {
            net.add_arc(net.source, u, net.pivot - d);
        } else if (d > net.pivot) {
            net.add_arc(u, net.sink, d - net.pivot);
        }
    }
    return net;
}

void apply_flow(Orientation& o, const FlowNetwork& net) {
    const auto n = o.vertex_count();
    const auto m = o.edge_capacity();
    if (net.node_count() != n + m + 2) {
        throw InvariantViolation("flow network does not match the orientation");
    }
    // incidence arcs come first and are grouped by edge, in build order
    std::vector<VertexId> in;
    std::vector<VertexId> out;
    std::uint32_t a = 0;
    for (EdgeId e = 0; e < m; ++e) {
        if (!o.alive(e)) {
            continue;
        }
        in.clear();
        out.clear();
        const auto size = o.edge_size(e);
        for (std::size_t i = 0; i < size; ++i, a += 2) {
            const auto& arc = net.arc(a);
            if (arc.flow <= 0) {
                continue;
            }
            if (net.arc_from(a) == n + e) {
                out.push_back(arc.to);
            } else {
                in.push_back(net.arc_from(a));
            }
        }
        if (in.size() != out.size()) {
            throw InvariantViolation("flow is not conserved at edge " + std::to_string(e));
        }
        for (std::size_t i = 0; i < in.size(); ++i) {
            o.swap_roles(e, in[i], out[i]);
        }
    }
}

}  // namespace hdense
