#include "kernelkit/problem.hpp"

#include "kernelkit/exact.hpp"

namespace kernelkit {

std::string_view cli_name(ProblemKind p) {
    switch (p) {
        case ProblemKind::ClusterDeletion: return "cluster-del";
        case ProblemKind::StrongTriadicClosure: return "stc";
        case ProblemKind::TPCompletion: return "tpc";
        case ProblemKind::SplitDeletion: return "split-del";
        case ProblemKind::SplitCompletion: return "split-comp";
        case ProblemKind::PseudoSplitDeletion: return "pseudo-del";
        case ProblemKind::PseudoSplitCompletion: return "pseudo-comp";
    }
    return "?";
}

std::optional<ProblemKind> parse_problem(std::string_view name) {
    for (ProblemKind p : kAllProblems)
        if (cli_name(p) == name) return p;
    return std::nullopt;
}

GraphClass target_class(ProblemKind p) {
    switch (p) {
        case ProblemKind::ClusterDeletion:
        case ProblemKind::StrongTriadicClosure: return GraphClass::Cluster;
        case ProblemKind::TPCompletion: return GraphClass::TriviallyPerfect;
        case ProblemKind::SplitDeletion:
        case ProblemKind::SplitCompletion: return GraphClass::Split;
        case ProblemKind::PseudoSplitDeletion:
        case ProblemKind::PseudoSplitCompletion: return GraphClass::PseudoSplit;
    }
    return GraphClass::Cluster;
}

bool is_completion(ProblemKind p) {
    return p == ProblemKind::TPCompletion || p == ProblemKind::SplitCompletion ||
           p == ProblemKind::PseudoSplitCompletion;
}

KindSet forbidden_kinds(GraphClass c) {
    switch (c) {
        case GraphClass::Cluster: return {ObstructionKind::P3};
        case GraphClass::TriviallyPerfect: return {ObstructionKind::P4, ObstructionKind::C4};
        case GraphClass::Split: return {ObstructionKind::TwoK2, ObstructionKind::C4, ObstructionKind::C5};
        case GraphClass::PseudoSplit: return {ObstructionKind::TwoK2, ObstructionKind::C4};
    }
    return {};
}

bool is_stc_solution(const Graph& g, const std::vector<EdgePair>& weak_ids) {
    for (const auto& e : weak_ids)
        if (!g.adjacent(e.first, e.second)) return false;
    Graph strong = delete_edges(g, weak_ids);
    bool ok = true;
    for_each_obstruction(strong, {ObstructionKind::P3}, [&](const Obstruction& o) {
        if (!g.adjacent(o.vertices[0], o.vertices[2])) ok = false;
        return ok;
    });
    return ok;
}

bool is_solution(ProblemKind p, const Graph& g, const std::vector<EdgePair>& label_solution) {
    std::vector<EdgePair> ids;
    try {
        ids = to_ids(g, label_solution);
    } catch (const input_error&) {
        return false;
    }
    if (p == ProblemKind::StrongTriadicClosure) return is_stc_solution(g, ids);
    for (const auto& e : ids)
        if (g.adjacent(e.first, e.second) == is_completion(p)) return false;
    Graph h = is_completion(p) ? add_edges(g, ids) : delete_edges(g, ids);
    return in_class(target_class(p), h);
}

}  // namespace kernelkit
