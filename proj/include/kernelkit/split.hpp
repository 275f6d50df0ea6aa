#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kernelkit/kernel.hpp"
#include "kernelkit/obstruction.hpp"

namespace kernelkit {

/// Which target the shared pipeline works toward. The pseudo-split variant
/// uses its own thresholds and rule numbers (11-16 instead of 5-10).
enum class SplitVariant { Split, PseudoSplit };

/// M (modulator remnant), C_M, I_M and the marked set I0.
enum class Role { Modulator, Clique, Independent, Marked };

/// Vertex-disjoint 2K2s, C4s and C5s found greedily; no further such
/// obstruction avoids their union. Ids refer to the graph it was built on.
struct ModulatorPacking {
    std::vector<Obstruction> obstructions;

    VertexSet vertices() const;
    int count(ObstructionKind kind) const;
};

struct ModulatorResult {
    ModulatorPacking packing;
    /// Split partition of G - M; empty if the scan stopped at the limit.
    VertexSet clique;
    VertexSet independent;
    bool complete = true;
};

/// Greedy packing in enumeration order (2K2, then C4, then C5 in G - M).
/// With a limit, stops as soon as the packing holds more than `limit`
/// obstructions; the result is then marked incomplete.
ModulatorResult build_modulator(const Graph& g, std::optional<int> limit = std::nullopt);

/// Working state of the split and pseudo-split pipelines.
struct AnnotatedSplitState {
    Graph graph;
    int k = 0;
    std::vector<Role> role;
    SplitVariant variant = SplitVariant::Split;
    std::vector<ReductionStep> trace;
    /// Set when a simplicial rule decides yes: the clique side it found.
    std::optional<std::vector<Label>> yes_clique;

    static AnnotatedSplitState from_modulator(const Instance& inst, SplitVariant variant,
                                              const ModulatorResult& mod);

    VertexSet members(Role r) const;
    Bitset marked() const;
    std::vector<Label> marked_labels() const;
    /// Roles cover V, C_M is a clique, I_M is independent.
    bool invariants_hold() const;
    /// "rule-N" for the split numbering n (5..10), shifted for pseudo-split.
    std::string rule_id(int n) const;
};

enum class RuleResult { NoOp, Changed, TrivialYes, TrivialNo };

/// Lowest-label simplicial v outside I0: yes if |E(G - (N[v] \ I0))| <= k,
/// otherwise v is marked.
RuleResult rule_simplicial(AnnotatedSplitState& s);

/// Marks, all at once, every unmarked u with too many non-neighbours in C_M.
RuleResult rule_far_vertices(AnnotatedSplitState& s);

/// Lowest-label v with too many neighbours in I_M and I0: marks V \ N[v] and
/// deletes v, which belongs to the clique side of every valid partition. A
/// marked v with that many neighbours means a no-instance.
RuleResult rule_clique_vertex(AnnotatedSplitState& s);

/// rule_far_vertices, then rule_clique_vertex if the former did nothing.
RuleResult rule_decided_vertices(AnnotatedSplitState& s);

/// Deletes all edges inside I0 and charges them to k.
RuleResult rule_i_edges(AnnotatedSplitState& s);

/// Replaces I0 (independent) by p = max |N(x) & I0| fresh marked vertices,
/// x adjacent to the first |N(x) & I0| of them. No-op when I0 already has
/// that shape.
RuleResult rule_merge_I0(AnnotatedSplitState& s);

/// Deletes the lowest-label v in C_M that is in no 2K2 and no I0-centred P3
/// and whose every C4 and C5 meets I0.
RuleResult rule_remove_safe_vertex(AnnotatedSplitState& s);

/// True if |C_M| + |I_M| exceeds the bound for yes-instances.
bool size_gate_fails(const AnnotatedSplitState& s);

/// Adds a clique of max(2, ceil(sqrt(2k)) + 1) vertices adjacent to V \ I0
/// and unmarks everything.
Instance rule_clean_up(AnnotatedSplitState& s, ProblemKind problem);

/// Clean-up clique size for budget k.
int clean_up_size(int k);

/// Called after every rule that changed the state and once before the size
/// gate, with the rule id (or "modulator" / "size-gate").
using SplitObserver = std::function<void(const AnnotatedSplitState&, const std::string&)>;

KernelOutcome kernelize_split_deletion(const Instance& inst);
KernelOutcome kernelize_split_completion(const Instance& inst);

/// The pipeline shared by split and pseudo-split deletion.
KernelOutcome kernelize_split_family(const Instance& inst, SplitVariant variant,
                                     const SplitObserver* observer = nullptr);

/// Runs the deletion pipeline on the complement and maps the result back.
KernelOutcome complement_wrapped(const Instance& inst, ProblemKind deletion_problem, SplitVariant variant,
                                 const SplitObserver* observer = nullptr);

}  // namespace kernelkit
