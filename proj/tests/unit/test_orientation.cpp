#include "hdense/error.hpp"
#include "hdense/hyperpath.hpp"
#include "hdense/oracle.hpp"
#include "hdense/orientation.hpp"

#include "fixtures.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace hdense;

namespace {

std::vector<std::uint32_t> sorted_desc(std::vector<std::uint32_t> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

}  // namespace

TEST_CASE("head quotas and conservation") {
    auto toy = fixtures::toy_h5();
    CHECK(Orientation(toy, 1).total_indegree() == 4);
    CHECK(Orientation(toy, 3).total_indegree() == 9);
    Orientation o(toy, 2);
    for (EdgeId e = 0; e < toy.edge_count(); ++e) {
        CHECK(o.heads(e).size() == std::min<std::size_t>(2, toy.edge_size(e)));
    }
    o.check_invariants();
    CHECK_THROWS_AS(Orientation(toy, 0), ParameterError);
}

TEST_CASE("greedy orientation") {
    Hypergraph one(2, {{0, 1}});
    auto g = greedy_orientation(one, 1);
    CHECK(g.indeg(0) == 1);
    CHECK(g.indeg(1) == 0);

    Hypergraph twice(2, {{0, 1}, {0, 1}});
    auto g2 = greedy_orientation(twice, 1);
    CHECK(g2.indeg(0) == 1);
    CHECK(g2.indeg(1) == 1);

    auto toy = greedy_orientation(fixtures::toy_h5(), 1);
    CHECK(sorted_desc(toy.indegrees()) == std::vector<std::uint32_t>{1, 1, 1, 1, 0});
}

TEST_CASE("from_heads validates") {
    auto toy = fixtures::toy_h5();
    auto o = Orientation::from_heads(toy, 1, fixtures::figure2_heads());
    CHECK(o.indegrees() == std::vector<std::uint32_t>{2, 2, 0, 0, 0});
    CHECK(o.is_head(0, 1));
    CHECK_FALSE(o.is_head(3, 1));
    CHECK_THROWS_AS(Orientation::from_heads(toy, 1, {{0}, {0}, {1}, {1, 2}}), ParameterError);
    CHECK_THROWS_AS(Orientation::from_heads(toy, 1, {{0}, {1}, {1}, {1}}), ParameterError);
}

TEST_CASE("reversing a single step and its inverse") {
    Hypergraph one(2, {{0, 1}});
    auto o = Orientation::from_heads(one, 1, {{1}});
    Hyperpath p{{0, 1}, {0}};
    o.reverse(p);
    CHECK(o.indeg(0) == 1);
    CHECK(o.indeg(1) == 0);
    o.reverse(p.reversed());
    CHECK(o.indeg(1) == 1);
    CHECK_THROWS_AS(o.reverse(p.reversed()), InvariantViolation);
}

TEST_CASE("figure 2 walkthrough") {
    auto toy = fixtures::toy_h5();
    auto o = Orientation::from_heads(toy, 1, fixtures::figure2_heads());
    HyperpathSearch search(o);
    auto low = [&](VertexId u) { return o.indeg(u) == 0; };
    auto high = [&](VertexId u) { return o.indeg(u) >= 2; };

    // u4 ~> u1 through e2 and u5 ~> u2 through e4 are both reversible
    auto a = search.find_into(0, [&](VertexId s) { return s == 3; });
    REQUIRE(a);
    CHECK(a->edges == std::vector<EdgeId>{1});
    auto b = search.find_into(1, [&](VertexId s) { return s == 4; });
    REQUIRE(b);
    CHECK(b->edges == std::vector<EdgeId>{3});

    o.reverse(*a);
    o.reverse(*b);
    o.check_invariants();
    CHECK(o.indegrees() == std::vector<std::uint32_t>{1, 1, 0, 1, 1});
    CHECK_FALSE(search.find_reversible(low, high));
    CHECK(oracle::is_egalitarian(toy, o.head_sets()));

    // closure of {indeg >= 1} picks up u3 through e3
    std::vector<VertexId> seeds{0, 1, 3, 4};
    auto closed = search.reachable_to(seeds);
    std::sort(closed.begin(), closed.end());
    CHECK(closed == std::vector<VertexId>{0, 1, 2, 3, 4});
}

TEST_CASE("equal indegrees admit no reversible path") {
    Hypergraph cyc(3, {{0, 1}, {1, 2}, {0, 2}});
    auto o = Orientation::from_heads(cyc, 1, {{1}, {2}, {0}});
    HyperpathSearch search(o);
    auto any = [](VertexId) { return true; };
    CHECK_FALSE(search.find_reversible(any, any));
}

TEST_CASE("search agrees with brute-force reachability") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        auto h = fixtures::random_small(rng);
        const int delta = 1 + round % 3;
        Orientation o(h, delta);
        auto reach = oracle::reachability(h, o.head_sets());
        HyperpathSearch search(o);
        for (VertexId s = 0; s < h.vertex_count(); ++s) {
            std::vector<VertexId> seed{s};
            auto fwd = search.reachable_from(seed);
            std::vector<char> got(h.vertex_count(), 0);
            for (VertexId t : fwd) {
                got[t] = 1;
            }
            for (VertexId t = 0; t < h.vertex_count(); ++t) {
                CHECK(got[t] == reach[s][t]);
                if (reach[s][t] && t != s) {
                    auto p = search.find_from(s, [&](VertexId x) { return x == t; });
                    REQUIRE(p);
                    CHECK(p->source() == s);
                    CHECK(p->target() == t);
                    // every step leaves a tail and enters a head of the same edge
                    for (std::size_t i = 0; i < p->edges.size(); ++i) {
                        CHECK_FALSE(o.is_head(p->vertices[i], p->edges[i]));
                        CHECK(o.is_head(p->vertices[i + 1], p->edges[i]));
                    }
                    auto sorted = p->edges;
                    std::sort(sorted.begin(), sorted.end());
                    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
                }
            }
        }
        const bool reversible = !oracle::is_egalitarian(h, o.head_sets());
        auto any = [](VertexId) { return true; };
        CHECK(search.find_reversible(any, any).has_value() == reversible);
    }
}

TEST_CASE("dynamic edge bookkeeping") {
    auto toy = fixtures::toy_h5();
    Orientation o(toy, 2);
    const auto before = o.total_indegree();
    CHECK_THROWS_AS(o.add_edge({0, 4}, {4}), ParameterError);
    auto e = o.add_edge({0, 4, 2}, {4, 2});
    CHECK(o.total_indegree() == before + 2);
    CHECK(o.indeg(4) >= 1);
    o.remove_edge(1);
    CHECK_FALSE(o.alive(1));
    CHECK(o.edge_count() == 4);
    o.check_invariants();
    o.remove_edge(e);
    CHECK(o.total_indegree() == before - 2);
    CHECK_THROWS_AS(o.remove_edge(e), NotFoundError);
    o.ensure_vertex_count(8);
    CHECK(o.vertex_count() == 8);
    o.check_invariants();
}
