#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kernelkit/graph.hpp"
#include "kernelkit/problem.hpp"

namespace kernelkit {

/// Outcome of a capped exact search. `witness` is given as label pairs.
struct ExactResult {
    std::optional<int> opt;
    std::vector<EdgePair> witness;
    bool exhausted = false;
};

/// Minimum modification set of size at most `cap`, by iterative deepening over
/// obstruction branching. Obstructions are taken in canonical order and their
/// edges tried lexicographically, so the witness is deterministic.
ExactResult solve_exact(ProblemKind problem, const Graph& g, int cap);

/// Deletion toward split or pseudo-split graphs where `marked` vertices must
/// land on the independent side: the result has no edge inside the marked set
/// and no induced P3 centred at a marked vertex.
ExactResult solve_annotated(GraphClass c, const Graph& g, const Bitset& marked, int cap);

/// Minimum split edge deletion set.
ExactResult sed(const Graph& g, int cap);

/// Membership plus a witness partition: split returns C ⊎ I; pseudo-split
/// returns C ⊎ I ⊎ S with S the vertices of the unique C5 (cycle order) or
/// empty; cluster returns its cliques in `components`.
struct Recognition {
    bool member = false;
    VertexSet clique;
    VertexSet independent;
    VertexSet cycle;
    std::vector<VertexSet> components;
};

Recognition recognize(GraphClass c, const Graph& g);
bool in_class(GraphClass c, const Graph& g);

/// Split partition from the degree sequence; valid only when g is split.
std::pair<VertexSet, VertexSet> degree_sequence_split_partition(const Graph& g);

/// Drops seed edges (ids, lowest first, restarting after each drop) while the
/// graph stays trivially perfect, then keeps the lexicographically first
/// smallest subset of the survivors that still works, so the result is an
/// inclusion-minimal completion within the seed. Exponential in the number
/// of survivors. Requires g + seed to be trivially perfect.
Graph minimal_tp_completion(const Graph& g, std::span<const EdgePair> seed);

}  // namespace kernelkit
