#include "kernelkit/trivially_perfect.hpp"

#include "kernelkit/obstruction.hpp"

namespace kernelkit {

namespace {

const KindSet kP4C4 = {ObstructionKind::P4, ObstructionKind::C4};

void require_problem(const Instance& inst) {
    if (inst.problem != ProblemKind::TPCompletion)
        throw input_error("trivially perfect rules apply to trivially perfect completion only");
}

std::pair<Instance, ReductionStep> remove_vertex(const Instance& inst, Vertex v) {
    ReductionStep step;
    step.rule = "rule-3";
    step.removed_vertices = {inst.graph.label(v)};
    step.k_before = step.k_after = inst.k;
    Instance out = inst;
    out.graph.remove_vertex(v);
    return {std::move(out), std::move(step)};
}

// Vertices lying in some P4 or C4.
Bitset obstructed(const Graph& g) {
    Bitset b(g.size());
    for_each_obstruction(g, kP4C4, [&](const Obstruction& o) {
        for (Vertex v : o.vertices) b.set(v);
        return true;
    });
    return b;
}

}  // namespace

std::optional<std::pair<Instance, ReductionStep>> rule_remove_unobstructed(const Instance& inst) {
    require_problem(inst);
    for (Vertex v = 0; v < inst.graph.size(); ++v)
        if (!vertex_in_obstruction(inst.graph, v, kP4C4)) return remove_vertex(inst, v);
    return std::nullopt;
}

std::optional<std::pair<Instance, ReductionStep>> rule_add_forced_edge(const Instance& inst) {
    require_problem(inst);
    for (const auto& [e, mult] : candidate_multiplicities(inst.graph)) {
        if (mult < inst.k + 1) continue;
        ReductionStep step;
        step.rule = "rule-4";
        step.added_edges = {EdgePair(inst.graph.label(e.first), inst.graph.label(e.second))};
        step.k_before = inst.k;
        step.k_after = inst.k - 1;
        Instance out = inst;
        out.graph.add_edge(e.first, e.second);
        out.k -= 1;
        return std::make_pair(std::move(out), std::move(step));
    }
    return std::nullopt;
}

KernelOutcome kernelize_tpc(const Instance& inst) {
    require_problem(inst);
    KernelOutcome out;
    Instance cur = inst;
    auto finish = [&](Verdict v, std::string by) {
        out.verdict = v;
        out.decided_by = std::move(by);
        out.kernel = cur;
        return out;
    };
    while (true) {
        while (cur.k >= 0) {
            auto r = rule_add_forced_edge(cur);
            if (!r) break;
            cur = std::move(r->first);
            out.trace.push_back(std::move(r->second));
        }
        if (cur.k < 0) break;
        // Removing an unobstructed vertex leaves every other P4 and C4 in
        // place, so one scan finds all vertices the rule will remove.
        Bitset hit = obstructed(cur.graph);
        int removed = 0;
        for (Vertex v = 0; v < hit.size(); ++v) {
            if (hit.test(v)) continue;
            auto [next, step] = remove_vertex(cur, v - removed);
            cur = std::move(next);
            out.trace.push_back(std::move(step));
            ++removed;
        }
        if (removed == 0) break;
    }
    if (cur.k < 0) return finish(Verdict::TrivialNo, "budget");
    if (!has_obstruction(cur.graph, kP4C4)) return finish(Verdict::TrivialYes, "in-class");
    const long long n = cur.graph.size(), k = cur.k;
    if (n > 2 * k * k + 2 * k) return finish(Verdict::TrivialNo, "size");
    return finish(Verdict::Kernel, "kernel");
}

}  // namespace kernelkit
