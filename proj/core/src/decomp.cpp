#include "hdense/decomp.hpp"

#include "hdense/dsm.hpp"
#include "hdense/error.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace hdense {

std::vector<VertexId> Decomposition::dense_set(int k) const {
    std::vector<VertexId> out;
    for (VertexId u = 0; u < idn.size(); ++u) {
        if (idn[u] >= k) {
            out.push_back(u);
        }
    }
    return out;
}

std::vector<VertexId> Decomposition::layer(int k) const {
    std::vector<VertexId> out;
    for (VertexId u = 0; u < idn.size(); ++u) {
        if (idn[u] == k) {
            out.push_back(u);
        }
    }
    return out;
}

std::vector<std::size_t> Decomposition::layer_sizes() const {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(k_max) + 1, 0);
    for (int r : idn) {
        ++sizes[static_cast<std::size_t>(r)];
    }
    return sizes;
}

namespace {

void check_delta(int delta) {
    if (delta < 1) {
        throw ParameterError("delta must be >= 1, got " + std::to_string(delta));
    }
}

std::vector<VertexId> touched_vertices(const Hypergraph& h) {
    std::vector<VertexId> out;
    for (VertexId u = 0; u < h.vertex_count(); ++u) {
        if (h.degree(u) > 0) {
            out.push_back(u);
        }
    }
    return out;
}

// Binary search for k_max on one reused orientation. D_1 is every vertex of
// positive degree, so it needs no miner call. Any orientation's maximum
// indegree bounds k_max from above.
struct KMaxSearch {
    int k_max = 0;
    std::size_t calls = 0;
    std::map<int, std::vector<VertexId>> found;  // non-empty D_k seen on the way
    std::vector<int> probes;
};

KMaxSearch search_k_max(const Hypergraph& h, int delta) {
    check_delta(delta);
    KMaxSearch s;
    if (h.edge_count() == 0) {
        return s;
    }
    Orientation o = greedy_orientation(h, delta);
    int lo = 1;
    int hi = static_cast<int>(o.max_indegree()) + 1;  // D_hi known empty
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        s.probes.push_back(mid);
        dsm_all_inplace(o, mid);
        ++s.calls;
        auto d = dense_closure(o, mid);
        if (d.empty()) {
            hi = mid;
        } else {
            lo = mid;
            s.found.emplace(mid, std::move(d));
        }
        hi = std::min(hi, static_cast<int>(o.max_indegree()) + 1);
    }
    s.k_max = lo;
    return s;
}

}  // namespace

Decomposition dsd(const Hypergraph& h, int delta) {
    check_delta(delta);
    Decomposition out;
    out.delta = delta;
    out.idn.assign(h.vertex_count(), 0);
    Orientation o(h, delta);
    for (int k = 1;; ++k) {
        dsm_all_inplace(o, k);
        ++out.dsm_calls;
        auto d = dense_closure(o, k);
        if (d.empty()) {
            break;
        }
        for (VertexId u : d) {
            out.idn[u] = k;
        }
        out.k_max = k;
    }
    out.witness = std::move(o);
    return out;
}

int find_k_max(const Hypergraph& h, int delta, std::size_t* dsm_calls) {
    auto s = search_k_max(h, delta);
    if (dsm_calls != nullptr) {
        *dsm_calls = s.calls;
    }
    return s.k_max;
}

namespace {

class Divider {
public:
    Divider(const Hypergraph& h, int delta, Decomposition& out, DivideTrace* trace)
        : h_(h), delta_(delta), out_(out), trace_(trace), in_lower_(h.vertex_count(), 0),
          in_upper_(h.vertex_count(), 0), local_(h.vertex_count(), kNoVertex), edge_mark_(h.edge_count(), 0) {}

    std::map<int, std::vector<VertexId>> sets;

    void divide(int kl, int ku) {
        const auto& lower = sets.at(kl);
        const auto& upper = sets.at(ku);
        DivideStep step;
        step.k_lower = kl;
        step.k_upper = ku;
        step.lower_size = lower.size();
        step.upper_size = upper.size();
        step.subproblem_vertices = lower.size() - upper.size();
        if (ku - kl <= 1 || lower.size() == upper.size()) {
            step.collapsed = lower.size() == upper.size();
            record(step);
            return;
        }
        const int km = (ku + kl + 1) / 2;
        // the k_max search may already have mined this level
        if (sets.find(km) == sets.end()) {
            sets.emplace(km, mine_between(kl, ku, km));
        }
        step.k_mid = km;
        step.mid_size = sets.at(km).size();
        record(step);
        for (VertexId u : sets.at(km)) {
            out_.idn[u] = std::max(out_.idn[u], km);
        }
        divide(kl, km);
        divide(km, ku);
    }

private:
    void record(const DivideStep& step) {
        if (trace_ != nullptr) {
            trace_->steps.push_back(step);
        }
    }

    // D_km for D_ku <= D_km <= D_kl. Vertices of D_ku are fixed inside and
    // vertices outside D_kl fixed outside, which leaves a smaller problem on
    // W = D_kl \ D_ku: edge e keeps e & W, and its quota drops by the members
    // outside D_kl (those heads can never count) capped at |e & W|.
    std::vector<VertexId> mine_between(int kl, int ku, int km) {
        const auto& lower = sets.at(kl);
        const auto& upper = sets.at(ku);
        for (VertexId u : lower) {
            in_lower_[u] = 1;
        }
        for (VertexId u : upper) {
            in_upper_[u] = 1;
        }
        std::vector<VertexId> w;
        for (VertexId u : lower) {
            if (!in_upper_[u]) {
                local_[u] = static_cast<VertexId>(w.size());
                w.push_back(u);
            }
        }
        ++epoch_;
        std::vector<std::vector<VertexId>> edges;
        std::vector<std::uint32_t> quotas;
        for (VertexId u : w) {
            for (EdgeId e : h_.incident(u)) {
                if (edge_mark_[e] == epoch_) {
                    continue;
                }
                edge_mark_[e] = epoch_;
                std::vector<VertexId> inside;
                std::int64_t outside = 0;
                for (VertexId x : h_.edge(e)) {
                    if (!in_lower_[x]) {
                        ++outside;
                    } else if (!in_upper_[x]) {
                        inside.push_back(local_[x]);
                    }
                }
                const std::int64_t q = static_cast<std::int64_t>(head_quota(h_.edge_size(e), delta_)) - outside;
                const std::int64_t cap = std::min<std::int64_t>(q, static_cast<std::int64_t>(inside.size()));
                if (cap > 0) {
                    edges.push_back(std::move(inside));
                    quotas.push_back(static_cast<std::uint32_t>(cap));
                }
            }
        }
        for (VertexId u : lower) {
            in_lower_[u] = 0;
            in_upper_[u] = 0;
            local_[u] = kNoVertex;
        }

        Hypergraph sub(w.size(), std::move(edges));
        auto o = Orientation::with_quotas(sub, delta_, quotas);
        dsm_all_inplace(o, km);
        ++out_.dsm_calls;
        auto found = dense_closure(o, km);
        std::vector<VertexId> result(upper.begin(), upper.end());
        for (VertexId x : found) {
            result.push_back(w[x]);
        }
        std::sort(result.begin(), result.end());
        return result;
    }

    const Hypergraph& h_;
    int delta_;
    Decomposition& out_;
    DivideTrace* trace_;
    std::vector<char> in_lower_;
    std::vector<char> in_upper_;
    std::vector<VertexId> local_;
    std::vector<std::uint32_t> edge_mark_;
    std::uint32_t epoch_ = 0;
};

}  // namespace

Decomposition dsd_plus(const Hypergraph& h, int delta, DivideTrace* trace) {
    check_delta(delta);
    Decomposition out;
    out.delta = delta;
    out.idn.assign(h.vertex_count(), 0);
    auto search = search_k_max(h, delta);
    out.k_max = search.k_max;
    out.dsm_calls = search.calls;
    if (trace != nullptr) {
        trace->probes = search.probes;
    }
    if (out.k_max == 0) {
        return out;
    }
    Divider divider(h, delta, out, trace);
    divider.sets = std::move(search.found);
    divider.sets[1] = touched_vertices(h);
    for (const auto& [k, set] : divider.sets) {
        for (VertexId u : set) {
            out.idn[u] = std::max(out.idn[u], k);
        }
    }
    divider.divide(1, out.k_max);
    return out;
}

std::vector<Decomposition> decompose_all(const Hypergraph& h, Driver driver, std::vector<int> deltas,
                                         unsigned threads) {
    if (deltas.empty()) {
        for (int d = 1; d <= static_cast<int>(std::max<std::size_t>(h.max_edge_size(), 1)); ++d) {
            deltas.push_back(d);
        }
    }
    for (int d : deltas) {
        check_delta(d);
    }
    std::vector<Decomposition> out(deltas.size());
    auto run = [&](std::size_t i) {
        out[i] = driver == Driver::dsd ? dsd(h, deltas[i]) : dsd_plus(h, deltas[i]);
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(deltas.size())));
    if (threads == 1) {
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            run(i);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < deltas.size(); i = next++) {
                try {
                    run(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

}  // namespace hdense
