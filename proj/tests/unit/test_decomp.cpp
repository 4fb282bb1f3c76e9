#include "hdense/decomp.hpp"
#include "hdense/dsm.hpp"
#include "hdense/error.hpp"
#include "hdense/oracle.hpp"
#include "hdense/synthetic.hpp"

#include "fixtures.hpp"

#include "doctest.h"

#include <random>

using namespace hdense;

TEST_CASE("single edge decomposition") {
    Hypergraph one(2, {{0, 1}});
    auto d = dsd(one, 1);
    CHECK(d.k_max == 1);
    CHECK(d.idn == std::vector<int>{1, 1});
    CHECK(find_k_max(one, 1) == 1);
    CHECK(dsd_plus(one, 1).idn == d.idn);
}

TEST_CASE("toy H5 decompositions") {
    auto toy = fixtures::toy_h5();
    for (int delta = 1; delta <= 3; ++delta) {
        CAPTURE(delta);
        auto a = dsd(toy, delta);
        auto b = dsd_plus(toy, delta);
        CHECK(a.idn == oracle::idn(toy, delta));
        CHECK(b.idn == a.idn);
        CHECK(a.k_max == b.k_max);
        CHECK(find_k_max(toy, delta) == a.k_max);
        REQUIRE(a.witness);
        CHECK(oracle::is_egalitarian(toy, a.witness->head_sets()));
    }
    auto d1 = dsd(toy, 1);
    CHECK(d1.k_max == 1);
    CHECK(d1.dsm_calls == 2);
    auto d2 = dsd(toy, 2);
    CHECK(d2.layer_sizes() == std::vector<std::size_t>{0, 1, 4});
    CHECK(d2.dense_set(2) == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(d2.layer(1) == std::vector<VertexId>{4});
    CHECK(d2.dense_set(0).size() == 5);
}

TEST_CASE("isolated vertices get idn 0") {
    Hypergraph h(4, {{0, 1}, {0, 1}});
    auto d = dsd(h, 1);
    CHECK(d.idn == std::vector<int>{1, 1, 0, 0});
    CHECK(dsd_plus(h, 1).idn == d.idn);
}

TEST_CASE("drivers match the oracle on random instances") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 200; ++round) {
        auto h = fixtures::random_small(rng);
        for (int delta = 1; delta <= 3; ++delta) {
            const auto expect = oracle::idn(h, delta);
            auto a = dsd(h, delta);
            auto b = dsd_plus(h, delta);
            CHECK(a.idn == expect);
            CHECK(b.idn == expect);
            CHECK(find_k_max(h, delta) == a.k_max);
        }
    }
}

TEST_CASE("saturated delta repeats the top decomposition") {
    auto h = synthetic::uniform(60, 200, 1, 4, 5);
    auto top = dsd(h, 4).idn;
    CHECK(dsd(h, 5).idn == top);
    CHECK(dsd(h, 9).idn == top);
}

TEST_CASE("drivers agree on synthetic graphs") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        auto h = synthetic::power_law(400, 3000, 0.8, 1.0, 8, seed);
        for (int delta : {1, 2, 3}) {
            DivideTrace trace;
            auto a = dsd(h, delta);
            auto b = dsd_plus(h, delta, &trace);
            CHECK(a.idn == b.idn);
            CHECK(a.k_max == b.k_max);
            CHECK(a.dsm_calls == static_cast<std::size_t>(a.k_max) + 1);
            CHECK_FALSE(trace.probes.empty());
            for (int k = 1; k <= a.k_max + 1; k += 3) {
                CHECK(a.dense_set(k) == dsm_all(h, k, delta).vertices);
            }
        }
    }
}

TEST_CASE("divide trace is consistent") {
    auto h = synthetic::power_law(300, 2500, 0.9, 1.5, 6, 12);
    DivideTrace trace;
    auto d = dsd_plus(h, 2, &trace);
    REQUIRE_FALSE(trace.steps.empty());
    const auto& root = trace.steps.front();
    CHECK(root.k_lower == 1);
    CHECK(root.k_upper == d.k_max);
    CHECK(root.lower_size == d.dense_set(1).size());
    CHECK(root.upper_size == d.dense_set(d.k_max).size());
    for (const auto& s : trace.steps) {
        CHECK(s.lower_size >= s.upper_size);
        CHECK(s.subproblem_vertices == s.lower_size - s.upper_size);
        if (s.k_mid != 0) {
            CHECK(s.k_mid == (s.k_lower + s.k_upper + 1) / 2);
            CHECK(s.mid_size == d.dense_set(s.k_mid).size());
        }
    }
}

TEST_CASE("decompose_all runs every delta in parallel") {
    auto h = synthetic::uniform(50, 150, 1, 4, 3);
    auto serial = decompose_all(h, Driver::dsd);
    auto par = decompose_all(h, Driver::dsd_plus, {}, 4);
    REQUIRE(serial.size() == h.max_edge_size());
    REQUIRE(par.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].delta == static_cast<int>(i) + 1);
        CHECK(par[i].idn == serial[i].idn);
    }
    CHECK_THROWS_AS(decompose_all(h, Driver::dsd, {0}), ParameterError);
}
