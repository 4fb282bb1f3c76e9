#include "hdense/oracle.hpp"

#include "hdense/error.hpp"

#include <algorithm>
#include <functional>

namespace hdense::oracle {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        c = c * (n - r + i) / i;
    }
    return c;
}

std::size_t quota(std::size_t size, int delta) {
    return std::min(size, static_cast<std::size_t>(delta));
}

// All r-subsets of `items` in lexicographic order.
std::vector<std::vector<VertexId>> subsets(const std::vector<VertexId>& items, std::size_t r) {
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (cur.size() == r) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < items.size(); ++i) {
            cur.push_back(items[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace

std::uint64_t orientation_count(const Hypergraph& h, int delta) {
    std::uint64_t total = 1;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        total *= binomial(h.edge_size(e), quota(h.edge_size(e), delta));
        if (total > kMaxOrientations) {
            return kMaxOrientations + 1;
        }
    }
    return total;
}

std::vector<std::vector<char>> reachability(const Hypergraph& h, const std::vector<std::vector<VertexId>>& heads) {
    const auto n = h.vertex_count();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (std::size_t u = 0; u < n; ++u) {
        reach[u][u] = 1;
    }
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        for (VertexId x : h.edge(e)) {
            const bool is_head = std::find(heads[e].begin(), heads[e].end(), x) != heads[e].end();
            if (is_head) {
                continue;
            }
            for (VertexId y : heads[e]) {
                reach[x][y] = 1;
            }
        }
    }
    // Warshall closure
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!reach[i][m]) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (reach[m][j]) {
                    reach[i][j] = 1;
                }
            }
        }
    }
    return reach;
}

bool is_egalitarian(const Hypergraph& h, const std::vector<std::vector<VertexId>>& heads) {
    std::vector<int> indeg(h.vertex_count(), 0);
    for (const auto& hs : heads) {
        for (VertexId u : hs) {
            ++indeg[u];
        }
    }
    auto reach = reachability(h, heads);
    for (std::size_t s = 0; s < indeg.size(); ++s) {
        for (std::size_t t = 0; t < indeg.size(); ++t) {
            if (reach[s][t] && indeg[t] - indeg[s] >= 2) {
                return false;
            }
        }
    }
    return true;
}

OracleOrientation egalitarian(const Hypergraph& h, int delta) {
    if (delta < 1) {
        throw ParameterError("delta must be >= 1");
    }
    if (orientation_count(h, delta) > kMaxOrientations) {
        throw SizeGuardError("more than " + std::to_string(kMaxOrientations) + " orientations");
    }
    const auto m = h.edge_count();
    std::vector<std::vector<std::vector<VertexId>>> choices(m);
    for (EdgeId e = 0; e < m; ++e) {
        auto members = h.edge(e);
        choices[e] = subsets({members.begin(), members.end()}, quota(members.size(), delta));
    }

    // odometer over all choice combinations
    std::vector<std::size_t> pick(m, 0);
    std::vector<int> indeg(h.vertex_count(), 0);
    std::vector<int> key;
    std::vector<int> best_key;
    std::vector<std::size_t> best_pick;
    std::vector<std::vector<std::size_t>> passing;  // only filled on fallback
    auto current_heads = [&](const std::vector<std::size_t>& p) {
        std::vector<std::vector<VertexId>> heads(m);
        for (EdgeId e = 0; e < m; ++e) {
            heads[e] = choices[e][p[e]];
        }
        return heads;
    };
    auto visit_all = [&](const std::function<void()>& fn) {
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            fn();
            std::size_t e = 0;
            while (e < m && ++pick[e] == choices[e].size()) {
                pick[e] = 0;
                ++e;
            }
            if (e == m) {
                break;
            }
        }
    };

    visit_all([&] {
        std::fill(indeg.begin(), indeg.end(), 0);
        for (EdgeId e = 0; e < m; ++e) {
            for (VertexId u : choices[e][pick[e]]) {
                ++indeg[u];
            }
        }
        key = indeg;
        std::sort(key.begin(), key.end(), std::greater<>());
        if (best_pick.empty() || key < best_key) {
            best_key = key;
            best_pick = pick;
        }
    });

    OracleOrientation out;
    out.heads = current_heads(best_pick);
    if (!is_egalitarian(h, out.heads)) {
        out.fallback_used = true;
        bool found = false;
        visit_all([&] {
            if (!found) {
                auto heads = current_heads(pick);
                if (is_egalitarian(h, heads)) {
                    out.heads = std::move(heads);
                    found = true;
                }
            }
        });
        if (!found) {
            throw InvariantViolation("no egalitarian orientation exists");
        }
    }
    out.indeg.assign(h.vertex_count(), 0);
    for (auto& hs : out.heads) {
        std::sort(hs.begin(), hs.end());
        for (VertexId u : hs) {
            ++out.indeg[u];
        }
    }
    return out;
}

std::vector<VertexId> dense(const Hypergraph& h, const OracleOrientation& o, int k) {
    if (k < 0) {
        throw ParameterError("k must be >= 0");
    }
    auto reach = reachability(h, o.heads);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        for (VertexId s = 0; s < h.vertex_count(); ++s) {
            if (reach[v][s] && o.indeg[s] >= k) {
                out.push_back(v);
                break;
            }
        }
    }
    return out;
}

std::vector<VertexId> dense(const Hypergraph& h, int k, int delta) {
    return dense(h, egalitarian(h, delta), k);
}

std::vector<int> idn(const Hypergraph& h, int delta) {
    auto o = egalitarian(h, delta);
    std::vector<int> out(h.vertex_count(), 0);
    for (int k = 1;; ++k) {
        auto d = dense(h, o, k);
        if (d.empty()) {
            break;
        }
        for (VertexId v : d) {
            out[v] = k;
        }
    }
    return out;
}

}  // namespace hdense::oracle
