#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kernelkit/exact.hpp"
#include "support.hpp"

using namespace kernelkit;
using namespace testsupport;

namespace {

Graph c5_chord() { return make(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {0, 1}, {0, 3}}); }

}  // namespace

TEST_CASE("solve_exact examples") {
    auto r = solve_exact(ProblemKind::ClusterDeletion, path(3), 2);
    CHECK(r.opt == 1);
    CHECK(solve_exact(ProblemKind::PseudoSplitDeletion, c5_chord(), 3).opt == 2);
    CHECK(solve_exact(ProblemKind::SplitDeletion, cycle(5), 3).opt == 2);

    auto capped = solve_exact(ProblemKind::SplitDeletion, cycle(5), 1);
    CHECK(capped.exhausted);
    CHECK_FALSE(capped.opt.has_value());
    CHECK_THROWS_AS(solve_exact(ProblemKind::SplitDeletion, cycle(5), -1), input_error);
}

TEST_CASE("sed examples") {
    CHECK(sed(cycle(5), 3).opt == 2);
    CHECK(sed(star(4), 3).opt == 0);
    // Brute force over edge subsets gives 3, inside the sandwich [2, 4].
    CHECK(brute_opt(ProblemKind::SplitDeletion, c5_chord(), 4) == 3);
    CHECK(sed(c5_chord(), 4).opt == 3);
}

TEST_CASE("recognize") {
    auto c5 = recognize(GraphClass::PseudoSplit, cycle(5));
    CHECK(c5.member);
    CHECK(c5.clique.empty());
    CHECK(c5.independent.empty());
    CHECK(c5.cycle.size() == 5);
    CHECK_FALSE(recognize(GraphClass::Split, cycle(5)).member);
    CHECK_FALSE(recognize(GraphClass::TriviallyPerfect, path(4)).member);

    auto s = recognize(GraphClass::Split, star(3));
    REQUIRE(s.member);
    CHECK(s.clique.size() + s.independent.size() == 4);
    CHECK(is_clique(star(3), s.clique));
    CHECK(is_independent(star(3), s.independent));

    auto cl = recognize(GraphClass::Cluster, make(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}}));
    REQUIRE(cl.member);
    CHECK(cl.components.size() == 2);
}

TEST_CASE("recognised partitions are valid") {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << 15); ++code) {
        Graph g = from_code(6, code);
        auto s = recognize(GraphClass::Split, g);
        if (s.member) {
            REQUIRE(is_clique(g, s.clique));
            REQUIRE(is_independent(g, s.independent));
            REQUIRE(s.clique.size() + s.independent.size() == 6);
        }
        auto p = recognize(GraphClass::PseudoSplit, g);
        REQUIRE(p.member == naive_pseudo_split(g));
        if (p.member) {
            REQUIRE(is_clique(g, p.clique));
            REQUIRE(is_independent(g, p.independent));
            REQUIRE(p.clique.size() + p.independent.size() + p.cycle.size() == 6);
            for (Vertex v : p.cycle) {
                for (Vertex c : p.clique) REQUIRE(g.adjacent(v, c));
                for (Vertex i : p.independent) REQUIRE_FALSE(g.adjacent(v, i));
            }
        }
    }
}

TEST_CASE("minimal trivially perfect completion") {
    Graph p4 = path(4);
    std::vector<EdgePair> all = {EdgePair(0, 2), EdgePair(0, 3), EdgePair(1, 3)};
    Graph h = minimal_tp_completion(p4, all);
    CHECK(in_class(GraphClass::TriviallyPerfect, h));
    CHECK(h.num_edges() - p4.num_edges() <= 2);
    for (const auto& e : h.edges()) {
        if (p4.adjacent(e.first, e.second)) continue;
        Graph d = h;
        d.remove_edge(e.first, e.second);
        CHECK_FALSE(in_class(GraphClass::TriviallyPerfect, d));
    }

    CHECK(minimal_tp_completion(star(3), {}) == star(3));

    Graph c4 = cycle(4);
    std::vector<EdgePair> diagonals = {EdgePair(0, 2), EdgePair(1, 3)};
    Graph k4e = minimal_tp_completion(c4, diagonals);
    CHECK(k4e.num_edges() == 5);
    CHECK(in_class(GraphClass::TriviallyPerfect, k4e));

    // Dropping 1-3 or 2-3 alone leaves a P4, dropping both leaves 2K2 + K1.
    Graph g = make(5, {{0, 3}, {1, 2}});
    std::vector<EdgePair> stuck = {EdgePair(1, 3), EdgePair(2, 3)};
    CHECK(minimal_tp_completion(g, stuck) == g);

    CHECK_THROWS_AS(minimal_tp_completion(p4, std::vector<EdgePair>{EdgePair(0, 3)}), input_error);
    CHECK_THROWS_AS(minimal_tp_completion(p4, std::vector<EdgePair>{EdgePair(0, 1)}), input_error);
}

TEST_CASE("exact optimum matches subset brute force on small graphs") {
    for (int n = 2; n <= 5; ++n) {
        std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t code = 0; code < total; ++code) {
            Graph g = from_code(n, code);
            for (ProblemKind p : kAllProblems) {
                auto r = solve_exact(p, g, 10);
                REQUIRE(r.opt.has_value());
                REQUIRE(*r.opt == brute_opt(p, g, 10));
                REQUIRE(static_cast<int>(r.witness.size()) == *r.opt);
                REQUIRE(is_solution(p, g, r.witness));
            }
        }
    }
}

TEST_CASE("exact witnesses pass recognition") {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << 15); code += 5) {
        Graph g = from_code(6, code);
        for (ProblemKind p : kAllProblems) {
            auto r = solve_exact(p, g, 15);
            REQUIRE(r.opt.has_value());
            REQUIRE(is_solution(p, g, r.witness));
        }
    }
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g(8);
        for (auto [u, v] : all_pairs(8))
            if (rng() % 2) g.add_edge(u, v);
        for (ProblemKind p : kAllProblems) {
            auto r = solve_exact(p, g, 28);
            REQUIRE(r.opt.has_value());
            CHECK(is_solution(p, g, r.witness));
        }
    }
}

TEST_CASE("is_solution rejects bad witnesses") {
    CHECK_FALSE(is_solution(ProblemKind::ClusterDeletion, path(3), {}));
    CHECK(is_solution(ProblemKind::ClusterDeletion, path(3), {EdgePair(0, 1)}));
    CHECK_FALSE(is_solution(ProblemKind::ClusterDeletion, path(3), {EdgePair(0, 2)}));
    CHECK_FALSE(is_solution(ProblemKind::TPCompletion, path(4), {EdgePair(0, 1)}));
    CHECK_FALSE(is_solution(ProblemKind::ClusterDeletion, path(3), {EdgePair(0, 9)}));
    CHECK(is_solution(ProblemKind::StrongTriadicClosure, path(3), {EdgePair(1, 2)}));
}
