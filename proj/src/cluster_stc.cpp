#include "kernelkit/cluster_stc.hpp"

#include <algorithm>

#include "kernelkit/obstruction.hpp"

namespace kernelkit {

namespace {

void require_problem(const Instance& inst) {
    if (inst.problem != ProblemKind::ClusterDeletion && inst.problem != ProblemKind::StrongTriadicClosure)
        throw input_error("cluster rule applies to cluster deletion and strong triadic closure only");
}

}  // namespace

std::optional<std::pair<Instance, ReductionStep>> rule_cluster_simplicial(const Instance& inst) {
    require_problem(inst);
    const Graph& g = inst.graph;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (!is_simplicial(g, v)) continue;
        VertexSet closed = closed_neighborhood(g, v);
        const int d = boundary_degree(g, closed);
        if (d > g.degree(v)) continue;

        ReductionStep step;
        step.rule = "rule-1";
        step.k_before = inst.k;
        step.k_after = inst.k - d;
        Bitset in = to_bitset(g, closed);
        for (Vertex u : closed) {
            step.removed_vertices.push_back(g.label(u));
            for (Vertex w : g.neighbors(u))
                if (!in.test(w)) step.removed_edges.emplace_back(g.label(u), g.label(w));
        }
        std::sort(step.removed_edges.begin(), step.removed_edges.end());

        Instance out{g, inst.k - d, inst.problem};
        out.graph.remove_vertices(closed);
        return std::make_pair(std::move(out), std::move(step));
    }
    return std::nullopt;
}

KernelOutcome kernelize_cluster_stc(const Instance& inst) {
    require_problem(inst);
    KernelOutcome out;
    Instance cur = inst;
    auto finish = [&](Verdict v, std::string by) {
        out.verdict = v;
        out.decided_by = std::move(by);
        out.kernel = cur;
        return out;
    };
    while (cur.k >= 0) {
        auto r = rule_cluster_simplicial(cur);
        if (!r) break;
        cur = std::move(r->first);
        out.trace.push_back(std::move(r->second));
    }
    if (cur.k < 0) return finish(Verdict::TrivialNo, "budget");
    if (!has_obstruction(cur.graph, {ObstructionKind::P3})) return finish(Verdict::TrivialYes, "in-class");
    if (cur.graph.size() > 2LL * cur.k) return finish(Verdict::TrivialNo, "size");
    return finish(Verdict::Kernel, "kernel");
}

}  // namespace kernelkit
