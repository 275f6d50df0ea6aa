#include "kernelkit/kernel.hpp"

#include <algorithm>
#include <set>

#include "kernelkit/cluster_stc.hpp"
#include "kernelkit/exact.hpp"
#include "kernelkit/partition.hpp"
#include "kernelkit/pseudo_split.hpp"
#include "kernelkit/split.hpp"
#include "kernelkit/trivially_perfect.hpp"

namespace kernelkit {

std::string_view name(Verdict v) {
    switch (v) {
        case Verdict::TrivialYes: return "trivial-yes";
        case Verdict::TrivialNo: return "trivial-no";
        case Verdict::Kernel: return "kernel";
    }
    return "?";
}

long long ceil_sqrt(long long x) {
    if (x <= 0) return 0;
    long long s = 0;
    while (s * s < x) ++s;
    return s;
}

long long vertex_bound(ProblemKind p, int k) {
    const long long K = k;
    const long long s = ceil_sqrt(2 * K);
    switch (p) {
        case ProblemKind::ClusterDeletion:
        case ProblemKind::StrongTriadicClosure: return 2 * K;
        case ProblemKind::TPCompletion: return 2 * K * K + 2 * K;
        case ProblemKind::SplitDeletion:
        case ProblemKind::SplitCompletion: return 5 * K + K + (3 * K * s + s + 1) + K + 1;
        case ProblemKind::PseudoSplitDeletion:
        case ProblemKind::PseudoSplitCompletion:
            return (4 * K + 5) + (3 * K * s + 2 * K + 2 + s + 1) + (K + 3) + (K + 2);
    }
    return 0;
}

long long completion_edge_bound(int k, int n) {
    return (6LL * k + ceil_sqrt(2LL * k) + 3) * static_cast<long long>(n);
}

KernelOutcome kernelize(const Instance& input) {
    switch (input.problem) {
        case ProblemKind::ClusterDeletion:
        case ProblemKind::StrongTriadicClosure: return kernelize_cluster_stc(input);
        case ProblemKind::TPCompletion: return kernelize_tpc(input);
        case ProblemKind::SplitDeletion: return kernelize_split_deletion(input);
        case ProblemKind::SplitCompletion: return kernelize_split_completion(input);
        case ProblemKind::PseudoSplitDeletion: return kernelize_pseudo_split_deletion(input);
        case ProblemKind::PseudoSplitCompletion: return kernelize_pseudo_split_completion(input);
    }
    throw input_error("unknown problem");
}

std::vector<ReplayState> replay(const Graph& g, int k, const std::vector<ReductionStep>& trace) {
    std::vector<ReplayState> states;
    states.reserve(trace.size() + 1);
    ReplayState cur{g, {}, k};
    auto vertex = [&](Label l) {
        auto v = cur.graph.find(l);
        if (!v) throw input_error("trace refers to missing label " + std::to_string(l));
        return *v;
    };
    for (const auto& step : trace) {
        if (step.k_before != cur.k) throw input_error("trace budget mismatch at " + step.rule);
        states.push_back(cur);
        if (step.rule == "complement") cur.graph = complement(cur.graph);
        for (const auto& e : step.removed_edges)
            if (!cur.graph.remove_edge(vertex(e.first), vertex(e.second)))
                throw input_error("trace removes absent edge " + to_string(e));
        if (!step.removed_vertices.empty()) {
            VertexSet ids;
            for (Label l : step.removed_vertices) ids.push_back(vertex(l));
            cur.graph.remove_vertices(ids);
            std::erase_if(cur.marked, [&](Label l) { return !cur.graph.find(l); });
        }
        for (Label l : step.added_vertices) {
            Vertex v = cur.graph.add_vertex();
            if (cur.graph.label(v) != l) throw input_error("trace adds unexpected label " + std::to_string(l));
        }
        for (const auto& e : step.added_edges)
            if (!cur.graph.add_edge(vertex(e.first), vertex(e.second)))
                throw input_error("trace adds present edge " + to_string(e));
        for (Label l : step.unmarked) std::erase(cur.marked, l);
        for (Label l : step.marked) {
            vertex(l);
            cur.marked.push_back(l);
        }
        std::sort(cur.marked.begin(), cur.marked.end());
        cur.marked.erase(std::unique(cur.marked.begin(), cur.marked.end()), cur.marked.end());
        cur.k = step.k_after;
    }
    states.push_back(std::move(cur));
    return states;
}

namespace {

// Label pairs that must all be edges (deletion) or all non-edges (completion) of g.
std::vector<EdgePair> checked_ids(const Graph& g, const std::vector<EdgePair>& labels, bool want_edges) {
    std::vector<EdgePair> ids = to_ids(g, labels);
    for (const auto& e : ids)
        if (g.adjacent(e.first, e.second) != want_edges)
            throw input_error("witness pair " + to_string(e) + (want_edges ? " is not an edge" : " is already an edge"));
    std::set<EdgePair> distinct(ids.begin(), ids.end());
    if (distinct.size() != ids.size()) throw input_error("witness repeats a pair");
    return ids;
}

void require_budget(std::size_t size, int k) {
    if (static_cast<long long>(size) > k) throw input_error("witness exceeds the kernel budget");
}

LiftResult lift_cluster_stc(const Instance& input, const KernelOutcome& outcome, const std::vector<EdgePair>& w) {
    checked_ids(outcome.kernel.graph, w, true);
    require_budget(w.size(), outcome.kernel.k);
    if (!is_solution(input.problem, outcome.kernel.graph, w)) throw input_error("witness does not solve the kernel");
    LiftResult r;
    r.solution = w;
    for (const auto& step : outcome.trace)
        r.solution.insert(r.solution.end(), step.removed_edges.begin(), step.removed_edges.end());
    std::sort(r.solution.begin(), r.solution.end());
    if (!is_solution(input.problem, input.graph, r.solution) || static_cast<int>(r.solution.size()) > input.k) {
        auto exact = solve_exact(input.problem, input.graph, input.k);
        if (!exact.opt) throw std::logic_error("lift failed: input has no solution within budget");
        r.solution = exact.witness;
        r.fallbacks.push_back("rule-1");
    }
    return r;
}

Graph with_additions(const Graph& g, const std::vector<EdgePair>& labels) { return add_edges(g, to_ids(g, labels)); }

LiftResult lift_tpc(const Instance& input, const KernelOutcome& outcome, const std::vector<EdgePair>& w) {
    auto states = replay(input.graph, input.k, outcome.trace);
    const ReplayState& last = states.back();
    checked_ids(last.graph, w, false);
    require_budget(w.size(), last.k);
    if (!in_class(GraphClass::TriviallyPerfect, with_additions(last.graph, w)))
        throw input_error("witness does not solve the kernel");
    LiftResult r;
    std::vector<EdgePair> f = w;
    for (std::size_t i = outcome.trace.size(); i-- > 0;) {
        const ReductionStep& step = outcome.trace[i];
        const ReplayState& before = states[i];
        if (step.rule == "rule-4") {
            f.insert(f.end(), step.added_edges.begin(), step.added_edges.end());
        } else if (step.rule == "rule-3") {
            const Graph& after = states[i + 1].graph;
            Graph minimal = minimal_tp_completion(after, to_ids(after, f));
            f.clear();
            for (const auto& e : minimal.label_edges()) {
                auto a = after.find(e.first), b = after.find(e.second);
                if (!after.adjacent(*a, *b)) f.push_back(e);
            }
        }
        std::sort(f.begin(), f.end());
        bool ok = static_cast<int>(f.size()) <= before.k;
        if (ok) {
            for (const auto& e : to_ids(before.graph, f)) ok = ok && !before.graph.adjacent(e.first, e.second);
            ok = ok && in_class(GraphClass::TriviallyPerfect, with_additions(before.graph, f));
        }
        if (!ok) {
            auto exact = solve_exact(ProblemKind::TPCompletion, before.graph, std::max(before.k, 0));
            if (!exact.opt) throw std::logic_error("lift failed at " + step.rule);
            f = exact.witness;
            r.fallbacks.push_back(step.rule);
        }
    }
    r.solution = f;
    return r;
}

bool contains(const std::vector<Label>& v, Label l) { return std::find(v.begin(), v.end(), l) != v.end(); }

void erase_label(Partition& p, Label l) {
    std::erase(p.clique, l);
    std::erase(p.independent, l);
    if (contains(p.cycle, l)) std::erase(p.cycle, l);
}

std::vector<Label> covered(const Partition& p) {
    std::vector<Label> out = p.clique;
    out.insert(out.end(), p.independent.begin(), p.independent.end());
    out.insert(out.end(), p.cycle.begin(), p.cycle.end());
    std::sort(out.begin(), out.end());
    return out;
}

Graph restrict_to(const Graph& g, const std::vector<Label>& labels) { return g.induced(vertices_of(g, labels)); }

std::optional<int> cost_on(const Graph& g, const Partition& p) { return partition_cost(restrict_to(g, covered(p)), p); }

bool fits(const ReplayState& s, const Partition& p) {
    auto c = partition_cost(s.graph, p);
    return c && *c <= s.k && marked_independent(p, s.marked);
}

// Re-inserts an unmarked vertex v by moving up to two vertices each way
// between the sides of a split partition (no cycle), then placing v.
std::optional<Partition> local_repair(const Graph& g, const Partition& p, Label v, const std::vector<Label>& marked) {
    const std::vector<Label>& C = p.clique;
    const std::vector<Label>& I = p.independent;
    std::vector<Label> movable_i;
    for (Label l : I)
        if (!contains(marked, l)) movable_i.push_back(l);
    auto subsets = [](const std::vector<Label>& xs) {
        std::vector<std::vector<Label>> out{{}};
        for (std::size_t a = 0; a < xs.size(); ++a) {
            out.push_back({xs[a]});
            for (std::size_t b = a + 1; b < xs.size(); ++b) out.push_back({xs[a], xs[b]});
        }
        return out;
    };
    std::optional<Partition> best;
    int best_cost = 0;
    for (const auto& a : subsets(C)) {
        for (const auto& b : subsets(movable_i)) {
            Partition q;
            for (Label l : C)
                (contains(a, l) ? q.independent : q.clique).push_back(l);
            for (Label l : I)
                (contains(b, l) ? q.clique : q.independent).push_back(l);
            for (int side = 0; side < 2; ++side) {
                if (side == 0 && contains(marked, v)) continue;
                Partition t = q;
                (side == 0 ? t.clique : t.independent).push_back(v);
                auto c = partition_cost(g, t);
                if (c && (!best || *c < best_cost)) {
                    best = t;
                    best_cost = *c;
                }
            }
        }
    }
    return best;
}

LiftResult lift_split_family(const Graph& input, int k, GraphClass cls, const std::vector<ReductionStep>& trace,
                             const std::vector<EdgePair>& w) {
    auto states = replay(input, k, trace);
    const ReplayState& last = states.back();
    auto ids = checked_ids(last.graph, w, true);
    require_budget(w.size(), last.k);
    Graph h = delete_edges(last.graph, ids);
    if (!in_class(cls, h)) throw input_error("witness does not solve the kernel");

    LiftResult r;
    auto exact_partition = [&](const ReplayState& s, const std::string& rule) {
        auto exact = solve_annotated(cls, s.graph, to_bitset(s.graph, vertices_of(s.graph, s.marked)),
                                     std::max(s.k, 0));
        if (!exact.opt) throw std::logic_error("lift failed at " + rule);
        r.fallbacks.push_back(rule);
        return partition_of(cls, delete_edges(s.graph, to_ids(s.graph, exact.witness)), s.marked);
    };

    Partition p = partition_of(cls, h, last.marked);
    if (!fits(last, p)) p = exact_partition(last, "kernel");
    for (std::size_t i = trace.size(); i-- > 0;) {
        const ReductionStep& step = trace[i];
        const ReplayState& before = states[i];
        for (Label l : step.added_vertices) erase_label(p, l);
        for (Label l : step.removed_vertices)
            if (contains(before.marked, l)) p.independent.push_back(l);
        for (Label l : step.removed_vertices) {
            if (contains(before.marked, l)) continue;
            std::optional<Partition> best;
            int best_cost = 0;
            for (int side = 0; side < 2; ++side) {
                Partition t = p;
                (side == 0 ? t.clique : t.independent).push_back(l);
                auto c = cost_on(before.graph, t);
                if (c && (!best || *c < best_cost)) {
                    best = t;
                    best_cost = *c;
                }
            }
            if ((!best || best_cost > before.k) && p.cycle.empty()) {
                Graph local = restrict_to(before.graph, [&] {
                    auto cov = covered(p);
                    cov.push_back(l);
                    std::sort(cov.begin(), cov.end());
                    return cov;
                }());
                if (auto repaired = local_repair(local, p, l, before.marked)) best = repaired;
            }
            if (best) p = *best;
            else p.independent.push_back(l);
        }
        std::sort(p.clique.begin(), p.clique.end());
        std::sort(p.independent.begin(), p.independent.end());
        if (!fits(before, p)) p = exact_partition(before, step.rule);
    }
    r.solution = partition_deletions(input, p);
    std::sort(r.solution.begin(), r.solution.end());
    return r;
}

}  // namespace

LiftResult lift_solution(const Instance& input, const KernelOutcome& outcome,
                         const std::vector<EdgePair>& kernel_witness) {
    if (outcome.verdict == Verdict::TrivialNo) throw input_error("a trivial no-instance has no solution to lift");
    switch (input.problem) {
        case ProblemKind::ClusterDeletion:
        case ProblemKind::StrongTriadicClosure: return lift_cluster_stc(input, outcome, kernel_witness);
        case ProblemKind::TPCompletion: return lift_tpc(input, outcome, kernel_witness);
        case ProblemKind::SplitDeletion:
            return lift_split_family(input.graph, input.k, GraphClass::Split, outcome.trace, kernel_witness);
        case ProblemKind::PseudoSplitDeletion:
            return lift_split_family(input.graph, input.k, GraphClass::PseudoSplit, outcome.trace, kernel_witness);
        case ProblemKind::SplitCompletion:
        case ProblemKind::PseudoSplitCompletion: {
            // Work in the complement, where additions become deletions.
            if (outcome.trace.size() < 2 || outcome.trace.front().rule != "complement" ||
                outcome.trace.back().rule != "complement")
                throw input_error("completion trace must be wrapped in complement steps");
            std::vector<ReductionStep> inner(outcome.trace.begin() + 1, outcome.trace.end() - 1);
            GraphClass cls = input.problem == ProblemKind::SplitCompletion ? GraphClass::Split : GraphClass::PseudoSplit;
            return lift_split_family(complement(input.graph), input.k, cls, inner, kernel_witness);
        }
    }
    throw input_error("unknown problem");
}

}  // namespace kernelkit
