#include "hdense/error.hpp"
#include "hdense/hypergraph.hpp"
#include "hdense/io.hpp"

#include "fixtures.hpp"

#include "doctest.h"

#include <sstream>

using namespace hdense;

TEST_CASE("hypergraph sorts and transposes") {
    Hypergraph h(4, {{2, 1}, {3, 1, 2}, {0}});
    CHECK(h.vertex_count() == 4);
    CHECK(h.edge_count() == 3);
    auto e0 = h.edge(0);
    CHECK(std::vector<VertexId>(e0.begin(), e0.end()) == std::vector<VertexId>{1, 2});
    CHECK(h.degree(1) == 2);
    CHECK(h.degree(0) == 1);
    CHECK(h.max_edge_size() == 3);
    CHECK(h.min_edge_size() == 1);
    CHECK(h.avg_edge_size() == doctest::Approx(2.0));
    CHECK(h.max_degree() == 2);
    for (VertexId u = 0; u < h.vertex_count(); ++u) {
        for (EdgeId e : h.incident(u)) {
            auto m = h.edge(e);
            CHECK(std::find(m.begin(), m.end(), u) != m.end());
        }
    }
    CHECK(h.total_incidence() == 6);
}

TEST_CASE("hypergraph rejects bad edges") {
    CHECK_THROWS_AS(Hypergraph(2, {{0, 2}}), ParameterError);
    CHECK_THROWS_AS(Hypergraph(2, {{}}), ParameterError);
}

TEST_CASE("duplicate members inside an edge collapse") {
    Hypergraph h(3, {{0, 0, 1}});
    CHECK(h.edge_size(0) == 2);
}

TEST_CASE("induced subhypergraph keeps contained edges") {
    Hypergraph h(3, {{0, 1}, {1, 2}});
    std::vector<VertexId> s{0, 1};
    auto sub = induced_subhypergraph(h, s);
    CHECK(sub.graph.edge_count() == 1);
    CHECK(sub.parent_edges == std::vector<EdgeId>{0});

    auto toy = fixtures::toy_h5();
    std::vector<VertexId> s2{1, 2, 3};
    auto sub2 = induced_subhypergraph(toy, s2);
    REQUIRE(sub2.graph.edge_count() == 1);
    // {1,3} is not an edge; only {1,2} fits inside {1,2,3}
    CHECK(sub2.parent_edges == std::vector<EdgeId>{2});

    std::vector<VertexId> all{0, 1, 2, 3, 4};
    auto same = induced_subhypergraph(toy, all);
    CHECK(same.graph.edge_lists() == toy.edge_lists());
    CHECK(same.remap.to_parent == all);
}

TEST_CASE("load integer labels") {
    std::istringstream in("1 2\n2 3 4\n");
    auto l = load_hypergraph(in);
    CHECK(l.graph.vertex_count() == 4);
    CHECK(l.graph.edge_count() == 2);
    CHECK(l.graph.edge_lists() == std::vector<std::vector<VertexId>>{{0, 1}, {1, 2, 3}});
    CHECK(l.labels.label(0) == "1");
    CHECK(l.labels.find("4") == VertexId{3});
}

TEST_CASE("load string labels skips comments") {
    std::istringstream in("a b\n# c\nb c\n");
    auto l = load_hypergraph(in, {.string_labels = true});
    CHECK(l.graph.vertex_count() == 3);
    CHECK(l.graph.edge_count() == 2);
    CHECK(l.stats.comment_lines == 1);
}

TEST_CASE("integer ids follow numeric order, not text order") {
    std::istringstream in("10 9\n100,2\n");
    auto l = load_hypergraph(in);
    CHECK(l.labels.label(0) == "2");
    CHECK(l.labels.label(1) == "9");
    CHECK(l.labels.label(2) == "10");
    CHECK(l.labels.label(3) == "100");
}

TEST_CASE("ingestion keeps duplicate edges and collapses repeats") {
    std::istringstream in("1 2 2\n\n2 1\r\n\t\n");
    auto l = load_hypergraph(in);
    CHECK(l.graph.edge_count() == 2);
    CHECK(l.stats.duplicate_edges == 1);
    CHECK(l.stats.collapsed_memberships == 1);
    CHECK(l.stats.blank_lines == 2);
}

TEST_CASE("ingestion errors") {
    std::istringstream empty("# nothing\n\n");
    CHECK_THROWS_AS(load_hypergraph(empty), EmptyInputError);
    std::istringstream bad("1 2\n3 x\n");
    try {
        load_hypergraph(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    std::istringstream neg("1 -2\n");
    CHECK_THROWS_AS(load_hypergraph(neg), ParseError);
    CHECK_THROWS_AS(load_hypergraph_file("/nonexistent/hdense.txt"), Error);
}

TEST_CASE("write then read round trips") {
    auto toy = fixtures::toy_h5();
    std::ostringstream out;
    write_edge_list(toy, out);
    CHECK(out.str() == "0 1\n0 3\n1 2\n1 2 3 4\n");
    std::istringstream in(out.str());
    auto l = load_hypergraph(in);
    CHECK(l.graph.edge_lists() == toy.edge_lists());
}
