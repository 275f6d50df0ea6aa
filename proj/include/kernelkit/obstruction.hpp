#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kernelkit/graph.hpp"

namespace kernelkit {

enum class ObstructionKind { P3, P4, C4, C5, TwoK2, I0P3 };

std::string_view name(ObstructionKind k);

/// An induced forbidden subgraph, vertices in canonical role order:
/// path order for P3/P4, cycle order for C4/C5, (a,b,c,d) with edges ab, cd
/// for 2K2, and (center, a, c) for an I0-centred P3.
struct Obstruction {
    ObstructionKind kind{};
    std::vector<Vertex> vertices;

    auto operator<=>(const Obstruction&) const = default;
};

/// The two candidate edges {v1,v3} and {v2,v4} of an induced P4 or C4.
struct CandidatePair {
    EdgePair first;
    EdgePair second;

    auto operator<=>(const CandidatePair&) const = default;
};

using KindSet = std::vector<ObstructionKind>;

/// Visits each canonical occurrence in lexicographic tuple order, one kind at
/// a time in the order given. The visitor returns false to stop early.
/// `marked` restricts the centre of I0P3 occurrences; it may be empty otherwise.
void for_each_obstruction(const Graph& g, const KindSet& kinds,
                          const std::function<bool(const Obstruction&)>& visit,
                          const Bitset* marked = nullptr);

/// Every canonical occurrence of the listed kinds; sorted by kind then tuple.
std::vector<Obstruction> enumerate(const Graph& g, const KindSet& kinds,
                                   std::optional<std::size_t> limit = std::nullopt,
                                   const Bitset* marked = nullptr);

/// First occurrence in enumeration order.
std::optional<Obstruction> find_obstruction(const Graph& g, const KindSet& kinds,
                                            const Bitset* marked = nullptr);

bool has_obstruction(const Graph& g, const KindSet& kinds);

bool vertex_in_obstruction(const Graph& g, Vertex v, const KindSet& kinds,
                           const Bitset* marked = nullptr);

/// True iff the vertex set induces the claimed kind in the claimed role order.
bool verify(const Graph& g, const Obstruction& o, const Bitset* marked = nullptr);

std::vector<CandidatePair> candidate_pairs(const Graph& g);
int candidate_multiplicity(const Graph& g, const EdgePair& e);
/// Multiplicity of every candidate edge, from one enumeration pass.
std::map<EdgePair, int> candidate_multiplicities(const Graph& g);

std::vector<Obstruction> i0_centered_p3s(const Graph& g, std::span<const Vertex> I0);
/// True iff every induced C4 and C5 containing v meets I0.
bool c4_c5_avoiding(const Graph& g, Vertex v, std::span<const Vertex> I0);

/// Edges (as id pairs) of the obstruction in the host graph.
std::vector<EdgePair> obstruction_edges(const Obstruction& o);
/// Non-edges of the obstruction's vertex set.
std::vector<EdgePair> obstruction_non_edges(const Obstruction& o);

}  // namespace kernelkit
