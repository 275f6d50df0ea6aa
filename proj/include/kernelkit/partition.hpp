#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kernelkit/graph.hpp"
#include "kernelkit/problem.hpp"

namespace kernelkit {

/// Target partition for split and pseudo-split deletion, over labels.
/// `cycle` is either empty or five labels in cycle order.
struct Partition {
    std::vector<Label> clique;
    std::vector<Label> independent;
    std::vector<Label> cycle;
};

/// Number of deletions that turn g into a graph with partition p, or nullopt
/// when no deletion set does (p does not cover V(g), the clique side is not a
/// clique, the cycle is missing an edge or a clique neighbour).
std::optional<int> partition_cost(const Graph& g, const Partition& p);

/// The deletions counted by partition_cost, as label pairs.
std::vector<EdgePair> partition_deletions(const Graph& g, const Partition& p);

/// Partition of a member h of the class, rearranged so that every vertex of
/// `marked` sits on the independent side where h allows it.
Partition partition_of(GraphClass c, const Graph& h, std::span<const Label> marked);

bool marked_independent(const Partition& p, std::span<const Label> marked);

}  // namespace kernelkit
