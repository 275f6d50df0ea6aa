#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kernelkit/graph.hpp"
#include "kernelkit/obstruction.hpp"

namespace kernelkit {

enum class ProblemKind {
    ClusterDeletion,
    StrongTriadicClosure,
    TPCompletion,
    SplitDeletion,
    SplitCompletion,
    PseudoSplitDeletion,
    PseudoSplitCompletion,
};

inline constexpr ProblemKind kAllProblems[] = {
    ProblemKind::ClusterDeletion,     ProblemKind::StrongTriadicClosure, ProblemKind::TPCompletion,
    ProblemKind::SplitDeletion,       ProblemKind::SplitCompletion,      ProblemKind::PseudoSplitDeletion,
    ProblemKind::PseudoSplitCompletion,
};

enum class GraphClass { Cluster, TriviallyPerfect, Split, PseudoSplit };

/// Command-line name: cluster-del, stc, tpc, split-del, split-comp, pseudo-del, pseudo-comp.
std::string_view cli_name(ProblemKind p);
std::optional<ProblemKind> parse_problem(std::string_view name);

/// Target class; strong triadic closure is checked separately and maps to Cluster.
GraphClass target_class(ProblemKind p);
bool is_completion(ProblemKind p);
KindSet forbidden_kinds(GraphClass c);

/// (graph, budget, problem). k may go negative inside a pipeline, which forces a no.
struct Instance {
    Graph graph;
    int k = 0;
    ProblemKind problem = ProblemKind::ClusterDeletion;
};

/// Applying `solution` (label pairs) to g yields a member of the problem's target,
/// or for strong triadic closure a feasible weak-edge set.
bool is_solution(ProblemKind p, const Graph& g, const std::vector<EdgePair>& label_solution);

/// Strong triadic closure feasibility: every P3 of g - weak has its missing edge in g.
bool is_stc_solution(const Graph& g, const std::vector<EdgePair>& weak_ids);

}  // namespace kernelkit
