#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kernelkit/graph.hpp"
#include "kernelkit/obstruction.hpp"
#include "support.hpp"

using namespace kernelkit;
using namespace testsupport;

TEST_CASE("boundary degree") {
    Graph k3 = complete(3);
    CHECK(boundary_degree(k3, VertexSet{0}) == 2);
    CHECK(boundary_degree(path(3), VertexSet{0, 1}) == 1);
    CHECK(boundary_degree(k3, VertexSet{0, 1, 2}) == 0);
    CHECK_THROWS_AS(boundary_degree(k3, VertexSet{3}), input_error);
}

TEST_CASE("simplicial, universal, twins, modules") {
    CHECK(is_simplicial(complete(3), 0));
    CHECK_FALSE(is_simplicial(path(3), 1));
    CHECK_FALSE(is_simplicial(cycle(4), 0));
    CHECK(is_universal(star(3), 0));
    CHECK_FALSE(is_universal(star(3), 1));

    auto twins = true_twins(complete(3));
    CHECK(std::find(twins.begin(), twins.end(), EdgePair(0, 1)) != twins.end());
    CHECK(true_twins(path(3)).empty());

    CHECK(is_module(two_k2(), VertexSet{0, 1}));
    CHECK_FALSE(is_module(path(3), VertexSet{0, 1}));
    CHECK_THROWS_AS(is_simplicial(complete(3), 7), input_error);
}

TEST_CASE("complement") {
    Graph c = complement(complete(3));
    CHECK(c.num_edges() == 0);

    Graph c5 = complement(cycle(5));
    CHECK(c5.num_edges() == 5);
    CHECK(enumerate(c5, {ObstructionKind::C5}).size() == 1);

    Graph c4 = complement(two_k2());
    CHECK(c4.num_edges() == 4);
    CHECK(enumerate(c4, {ObstructionKind::C4}).size() == 1);
}

TEST_CASE("complement is an involution and preserves labels") {
    for (int n = 0; n <= 6; ++n) {
        std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t code = 0; code < total; ++code) {
            Graph g = from_code(n, code);
            REQUIRE(complement(complement(g)) == g);
        }
    }
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        int n = 7 + static_cast<int>(rng() % 10);
        Graph g(n);
        for (auto [u, v] : all_pairs(n))
            if (rng() & 1U) g.add_edge(u, v);
        g.remove_vertex(static_cast<int>(rng() % n));
        Graph c = complement(g);
        CHECK(std::equal(c.labels().begin(), c.labels().end(), g.labels().begin(), g.labels().end()));
        CHECK(complement(c) == g);
    }
}

TEST_CASE("simplicial iff never the middle of an induced P3") {
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t code = 0; code < total; ++code) {
            Graph g = from_code(n, code);
            std::vector<bool> middle(n, false);
            for (const auto& o : enumerate(g, {ObstructionKind::P3})) middle[o.vertices[1]] = true;
            for (int v = 0; v < n; ++v) {
                REQUIRE(is_simplicial(g, v) == !middle[v]);
                REQUIRE(boundary_degree(g, VertexSet{v}) == g.degree(v));
            }
        }
    }
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 300; ++rep) {
        Graph g(8);
        for (auto [u, v] : all_pairs(8))
            if (rng() % 3 == 0) g.add_edge(u, v);
        std::vector<bool> middle(8, false);
        for (const auto& o : enumerate(g, {ObstructionKind::P3})) middle[o.vertices[1]] = true;
        for (int v = 0; v < 8; ++v) CHECK(is_simplicial(g, v) == !middle[v]);
    }
}

TEST_CASE("vertex removal compacts ids and keeps labels") {
    Graph g = path(5);
    g.remove_vertices(VertexSet{1, 3});
    REQUIRE(g.size() == 3);
    CHECK(g.label(0) == 0);
    CHECK(g.label(1) == 2);
    CHECK(g.label(2) == 4);
    CHECK(g.num_edges() == 0);
    CHECK(g.find(2) == 1);
    CHECK_FALSE(g.find(3).has_value());
    Vertex x = g.add_vertex();
    CHECK(g.label(x) == 5);
    CHECK_THROWS_AS(g.add_edge(0, 0), input_error);
    CHECK_THROWS_AS(EdgePair(2, 2), input_error);
    CHECK_THROWS_AS(Graph(3, {0, 2, 2}), input_error);
}

TEST_CASE("edge bookkeeping") {
    Graph g(4);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK(g.num_edges() == 1);
    CHECK(g.remove_edge(0, 1));
    CHECK_FALSE(g.remove_edge(0, 1));
    CHECK(g.num_edges() == 0);
    Graph h = make(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(edges_within(h, VertexSet{0, 1, 2}) == 2);
    CHECK(closed_neighborhood(h, 1) == VertexSet{0, 1, 2});
    CHECK(is_clique(h, VertexSet{1, 2}));
    CHECK(is_independent(h, VertexSet{0, 2}));
}
