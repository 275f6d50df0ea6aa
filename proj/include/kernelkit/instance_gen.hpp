#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "kernelkit/graph.hpp"
#include "kernelkit/problem.hpp"

namespace kernelkit {

enum class Family { Planted, UniformRandom, Figure };

struct GenSpec {
    std::uint64_t seed = 0;
    int n = 0;
    int k = 0;
    ProblemKind problem = ProblemKind::ClusterDeletion;
    Family family = Family::Planted;
    double edge_prob = 0.5;  // uniform-random only
    std::string figure;      // figure family only
};

/// A member of the problem's target class with exactly k perturbations
/// (edge additions for deletion problems, removals for completion problems),
/// so the optimum is at most k. A perturbation that leaves the graph in the
/// class is resampled, up to 100 attempts.
Instance plant(const GenSpec& spec);

/// "clique-crown": clique 0..3, independent 4..7, i ~ 4+j iff i != j (18 edges).
/// "c5-chord": cycle 1 2 3 4 5 plus vertex 0 adjacent to 1 and 3.
Graph figure_graph(std::string_view name);

/// Each pair independently an edge with probability p, pairs in lexicographic order.
Graph uniform_random(std::uint64_t seed, int n, double edge_prob);

/// Dispatches on spec.family; uniform and figure instances take spec.k as budget.
Instance generate(const GenSpec& spec);

std::string_view name(Family f);
std::optional<Family> parse_family(std::string_view s);

}  // namespace kernelkit
