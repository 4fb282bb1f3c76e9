#include "hdense/dsm.hpp"
#include "hdense/error.hpp"
#include "hdense/hyperpath.hpp"
#include "hdense/oracle.hpp"

#include "fixtures.hpp"

#include "doctest.h"

#include <random>

using namespace hdense;

namespace {

constexpr Miner kMiners[] = {Miner::path, Miner::flow, Miner::flow_plus, Miner::all};

// Checks the witness properties every miner promises.
void check_witness(const Hypergraph& h, const DenseResult& r) {
    r.witness.check_invariants();
    auto closed = dense_closure(r.witness, r.k);
    CHECK(closed == r.vertices);
    std::vector<char> in(h.vertex_count(), 0);
    for (VertexId u : r.vertices) {
        in[u] = 1;
        CHECK(static_cast<int>(r.witness.indeg(u)) >= r.k - 1);
    }
    for (VertexId u = 0; u < h.vertex_count(); ++u) {
        if (!in[u]) {
            CHECK(static_cast<int>(r.witness.indeg(u)) <= r.k - 1);
        }
    }
    for (VertexId u : r.core) {
        CHECK(static_cast<int>(r.witness.indeg(u)) >= r.k);
    }
}

}  // namespace

TEST_CASE("miner names") {
    for (Miner m : kMiners) {
        CHECK(parse_miner(miner_name(m)) == m);
    }
    CHECK(miner_name(Miner::flow_plus) == "flow+");
    CHECK_THROWS_AS(parse_miner("fast"), ParameterError);
}

TEST_CASE("miners on the walkthrough hypergraph") {
    auto toy = fixtures::toy_h5();
    for (Miner m : kMiners) {
        CAPTURE(miner_name(m));
        CHECK(mine(toy, 0, 1, m).vertices.size() == 5);
        CHECK(mine(toy, 1, 1, m).vertices == std::vector<VertexId>{0, 1, 2, 3, 4});
        CHECK(mine(toy, 2, 1, m).vertices.empty());
        CHECK(mine(toy, 2, 2, m).vertices == std::vector<VertexId>{0, 1, 2, 3});
        CHECK(mine(toy, 9, 2, m).vertices.empty());
    }
    // the greedy seed is already egalitarian here
    CHECK(dsm_flow_plus(toy, 2, 1).stats.flow == 0);
}

TEST_CASE("single edge") {
    Hypergraph one(2, {{0, 1}});
    for (Miner m : kMiners) {
        for (int k = 2; k <= 4; ++k) {
            CHECK(mine(one, k, 1, m).vertices.empty());
        }
    }
}

TEST_CASE("bad parameters") {
    auto toy = fixtures::toy_h5();
    CHECK_THROWS_AS(dsm_path(toy, -1, 1), ParameterError);
    CHECK_THROWS_AS(dsm_all(toy, 1, 0), ParameterError);
}

TEST_CASE("all miners match the oracle") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 150; ++round) {
        auto h = fixtures::random_small(rng);
        for (int delta = 1; delta <= 3; ++delta) {
            auto eg = oracle::egalitarian(h, delta);
            for (int k = 0; k <= 5; ++k) {
                const auto expect = oracle::dense(h, eg, k);
                for (Miner m : kMiners) {
                    auto r = mine(h, k, delta, m);
                    CAPTURE(miner_name(m));
                    CAPTURE(k);
                    CAPTURE(delta);
                    CHECK(r.vertices == expect);
                    check_witness(h, r);
                }
            }
        }
    }
}

TEST_CASE("miners agree on mid-sized graphs") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 20; ++round) {
        std::vector<std::vector<VertexId>> edges;
        const std::size_t n = 40;
        std::uniform_int_distribution<VertexId> v(0, n - 1);
        std::uniform_int_distribution<int> s(1, 5);
        for (int e = 0; e < 150; ++e) {
            std::vector<VertexId> m;
            for (int i = s(rng); i > 0; --i) {
                m.push_back(v(rng) % (round % 2 ? n : n / 3));
            }
            edges.push_back(m);
        }
        Hypergraph h(n, edges);
        for (int delta = 1; delta <= 3; ++delta) {
            for (int k = 1; k <= 12; ++k) {
                auto ref = dsm_path(h, k, delta).vertices;
                for (Miner m : {Miner::flow, Miner::flow_plus, Miner::all}) {
                    auto r = mine(h, k, delta, m);
                    CHECK(r.vertices == ref);
                    check_witness(h, r);
                }
            }
        }
    }
}

TEST_CASE("nesting over k") {
    std::mt19937_64 rng(8);
    for (int round = 0; round < 50; ++round) {
        auto h = fixtures::random_small(rng);
        for (int delta = 1; delta <= 3; ++delta) {
            std::vector<VertexId> prev = dsm_all(h, 0, delta).vertices;
            for (int k = 1; k <= 6; ++k) {
                auto cur = dsm_all(h, k, delta).vertices;
                CHECK(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
                prev = cur;
            }
        }
    }
}
