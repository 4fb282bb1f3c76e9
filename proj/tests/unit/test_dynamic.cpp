#include "hdense/decomp.hpp"
#include "hdense/dynamic.hpp"
#include "hdense/error.hpp"
#include "hdense/oracle.hpp"

#include "fixtures.hpp"

#include "doctest.h"

#include <random>

using namespace hdense;

namespace {

void check_static(const DynamicState& s) {
    auto g = s.current_graph();
    for (int delta : s.deltas()) {
        CAPTURE(delta);
        CHECK(s.idn(delta) == dsd(g, delta).idn);
        CHECK(oracle::is_egalitarian(g, [&] {
            std::vector<std::vector<VertexId>> heads;
            const auto& o = s.orientation(delta);
            for (EdgeId e : s.live_edge_ids()) {
                auto hs = o.heads(e);
                heads.emplace_back(hs.begin(), hs.end());
            }
            return heads;
        }()));
        s.orientation(delta).check_invariants();
    }
}

}  // namespace

TEST_CASE("insert into an empty state") {
    DynamicState s(Hypergraph(2, {}), {1});
    s.insert_edge({0, 1});
    CHECK(s.orientation(1).total_indegree() == 1);
    CHECK(s.idn(1) == std::vector<int>{1, 1});
    s.delete_edge(0);
    CHECK(s.orientation(1).total_indegree() == 0);
    CHECK(s.idn(1) == std::vector<int>{0, 0});
    CHECK_THROWS_AS(s.delete_edge(0), NotFoundError);
    CHECK_THROWS_AS(s.delete_edge(7), NotFoundError);
}

TEST_CASE("default delta is the floor of the average edge size") {
    DynamicState s(fixtures::toy_h5());
    CHECK(s.deltas() == std::vector<int>{2});
    CHECK_THROWS_AS(s.idn(1), NotFoundError);
}

TEST_CASE("building toy H5 edge by edge in any order") {
    auto toy = fixtures::toy_h5();
    auto edges = toy.edge_lists();
    std::vector<std::size_t> order{0, 1, 2, 3};
    do {
        DynamicState s(Hypergraph(5, {}), {1, 2, 3});
        for (auto i : order) {
            s.insert_edge(edges[i]);
            check_static(s);
        }
        for (int delta = 1; delta <= 3; ++delta) {
            CHECK(s.idn(delta) == oracle::idn(toy, delta));
        }
    } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("duplicate insertion adds the full quota") {
    DynamicState s(fixtures::toy_h5(), {3});
    const auto before = s.orientation(3).total_indegree();
    s.insert_edge({1, 2, 3, 4});
    CHECK(s.orientation(3).total_indegree() == before + 3);
    check_static(s);
}

TEST_CASE("insert then delete restores idn") {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 50; ++round) {
        auto h = fixtures::random_small(rng);
        DynamicState s(h, {1, 2, 3});
        std::vector<std::vector<int>> saved;
        for (int d = 1; d <= 3; ++d) {
            saved.push_back(s.idn(d));
        }
        auto e = s.insert_edge({0, static_cast<VertexId>(h.vertex_count() - 1)});
        s.delete_edge(e);
        for (int d = 1; d <= 3; ++d) {
            CHECK(s.idn(d) == saved[d - 1]);
        }
    }
}

TEST_CASE("new vertices extend the state") {
    DynamicState s(Hypergraph(2, {{0, 1}}), {1});
    s.insert_edge({1, 5});
    CHECK(s.vertex_count() == 6);
    CHECK(s.idn(1).size() == 6);
    check_static(s);
}

TEST_CASE("random mixed updates match static decomposition") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 60; ++round) {
        auto h = fixtures::random_small(rng);
        DynamicState s(h, {1, 2, 3});
        const auto n = static_cast<VertexId>(h.vertex_count());
        for (int step = 0; step < 20; ++step) {
            auto live = s.live_edge_ids();
            if (!live.empty() && rng() % 2 == 0) {
                s.delete_edge(live[rng() % live.size()]);
            } else {
                std::vector<VertexId> m;
                const auto size = 1 + rng() % std::min<VertexId>(4, n);
                while (m.size() < size) {
                    VertexId u = static_cast<VertexId>(rng() % n);
                    if (std::find(m.begin(), m.end(), u) == m.end()) {
                        m.push_back(u);
                    }
                }
                s.insert_edge(m);
            }
            check_static(s);
        }
    }
}
