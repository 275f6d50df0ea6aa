#include "kernelkit/split.hpp"

#include <algorithm>
#include <ranges>

#include "kernelkit/exact.hpp"
#include "kernelkit/pseudo_split.hpp"

namespace kernelkit {

namespace {

const KindSet kPackingKinds = {ObstructionKind::TwoK2, ObstructionKind::C4, ObstructionKind::C5};

std::vector<Label> labels_of(const Graph& g, const VertexSet& vs) {
    std::vector<Label> out;
    out.reserve(vs.size());
    for (Vertex v : vs) out.push_back(g.label(v));
    return out;
}

void set_role(AnnotatedSplitState& s, Vertex v, Role r) { s.role.at(v) = r; }

void remove_state_vertex(AnnotatedSplitState& s, Vertex v) {
    s.graph.remove_vertex(v);
    s.role.erase(s.role.begin() + v);
}

}  // namespace

VertexSet ModulatorPacking::vertices() const {
    VertexSet out;
    for (const auto& o : obstructions) out.insert(out.end(), o.vertices.begin(), o.vertices.end());
    std::sort(out.begin(), out.end());
    return out;
}

int ModulatorPacking::count(ObstructionKind kind) const {
    return static_cast<int>(
        std::count_if(obstructions.begin(), obstructions.end(), [&](const Obstruction& o) { return o.kind == kind; }));
}

ModulatorResult build_modulator(const Graph& g, std::optional<int> limit) {
    ModulatorResult r;
    VertexSet rest(g.size());
    for (Vertex v = 0; v < g.size(); ++v) rest[v] = v;
    while (true) {
        Graph h = g.induced(rest);
        auto o = find_obstruction(h, kPackingKinds);
        if (!o) {
            auto [c, i] = degree_sequence_split_partition(h);
            for (Vertex v : c) r.clique.push_back(rest[v]);
            for (Vertex v : i) r.independent.push_back(rest[v]);
            return r;
        }
        Obstruction mapped{o->kind, {}};
        for (Vertex v : o->vertices) mapped.vertices.push_back(rest[v]);
        VertexSet drop = mapped.vertices;
        std::sort(drop.begin(), drop.end());
        VertexSet kept;
        std::set_difference(rest.begin(), rest.end(), drop.begin(), drop.end(), std::back_inserter(kept));
        rest = std::move(kept);
        r.packing.obstructions.push_back(std::move(mapped));
        if (limit && static_cast<int>(r.packing.obstructions.size()) > *limit) {
            r.complete = false;
            return r;
        }
    }
}

AnnotatedSplitState AnnotatedSplitState::from_modulator(const Instance& inst, SplitVariant variant,
                                                        const ModulatorResult& mod) {
    if (!mod.complete) throw input_error("modulator scan was cut short");
    AnnotatedSplitState s;
    s.graph = inst.graph;
    s.k = inst.k;
    s.variant = variant;
    s.role.assign(s.graph.size(), Role::Modulator);
    for (Vertex v : mod.clique) s.role[v] = Role::Clique;
    for (Vertex v : mod.independent) s.role[v] = Role::Independent;
    return s;
}

VertexSet AnnotatedSplitState::members(Role r) const {
    VertexSet out;
    for (Vertex v = 0; v < graph.size(); ++v)
        if (role[v] == r) out.push_back(v);
    return out;
}

Bitset AnnotatedSplitState::marked() const { return to_bitset(graph, members(Role::Marked)); }

std::vector<Label> AnnotatedSplitState::marked_labels() const { return labels_of(graph, members(Role::Marked)); }

bool AnnotatedSplitState::invariants_hold() const {
    if (static_cast<int>(role.size()) != graph.size()) return false;
    return is_clique(graph, members(Role::Clique)) && is_independent(graph, members(Role::Independent));
}

std::string AnnotatedSplitState::rule_id(int n) const {
    return "rule-" + std::to_string(variant == SplitVariant::Split ? n : n + 6);
}

RuleResult rule_simplicial(AnnotatedSplitState& s) {
    const Graph& g = s.graph;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (s.role[v] == Role::Marked || !is_simplicial(g, v)) continue;
        VertexSet clique;
        for (Vertex u : closed_neighborhood(g, v))
            if (s.role[u] != Role::Marked) clique.push_back(u);
        const long long outside = static_cast<long long>(g.num_edges()) - edges_within(g, clique) -
                                  boundary_degree(g, clique);
        if (outside <= s.k) {
            s.yes_clique = labels_of(g, clique);
            return RuleResult::TrivialYes;
        }
        ReductionStep step;
        step.rule = s.rule_id(6);
        step.marked = {g.label(v)};
        step.k_before = step.k_after = s.k;
        s.trace.push_back(std::move(step));
        set_role(s, v, Role::Marked);
        return RuleResult::Changed;
    }
    return RuleResult::NoOp;
}

RuleResult rule_far_vertices(AnnotatedSplitState& s) {
    const Graph& g = s.graph;
    Bitset cm = to_bitset(g, s.members(Role::Clique));
    const long long twice_k = 2LL * s.k;
    VertexSet far;
    for (Vertex u = 0; u < g.size(); ++u) {
        if (s.role[u] == Role::Marked) continue;
        Bitset closed = g.row(u);
        closed.set(u);
        const long long x = cm.count_andnot(closed);
        // On the clique side, u forces these x vertices into I at a cost of
        // C(x,2). A C5 vertex can also miss two adjacent C5 vertices of C_M.
        const long long slack = s.variant == SplitVariant::Split ? 0 : 2;
        const bool hit = x * (x - 1) > twice_k + slack;
        if (hit) far.push_back(u);
    }
    if (far.empty()) return RuleResult::NoOp;
    ReductionStep step;
    step.rule = s.rule_id(7);
    step.marked = labels_of(g, far);
    step.k_before = step.k_after = s.k;
    s.trace.push_back(std::move(step));
    for (Vertex u : far) set_role(s, u, Role::Marked);
    return RuleResult::Changed;
}

RuleResult rule_clique_vertex(AnnotatedSplitState& s) {
    const Graph& g = s.graph;
    Bitset side = to_bitset(g, s.members(Role::Independent));
    side |= s.marked();
    const int threshold = s.k + (s.variant == SplitVariant::Split ? 2 : 4);
    for (Vertex v = 0; v < g.size(); ++v) {
        if (g.row(v).count_and(side) < threshold) continue;
        // A marked vertex must stay independent, so all but at most one
        // (split) or three (pseudo-split) of these edges would be deleted.
        if (s.role[v] == Role::Marked) return RuleResult::TrivialNo;
        VertexSet far;
        for (Vertex u = 0; u < g.size(); ++u)
            if (u != v && !g.adjacent(u, v) && s.role[u] != Role::Marked) far.push_back(u);
        ReductionStep step;
        step.rule = s.rule_id(7);
        step.removed_vertices = {g.label(v)};
        step.marked = labels_of(g, far);
        step.k_before = step.k_after = s.k;
        s.trace.push_back(std::move(step));
        for (Vertex u : far) set_role(s, u, Role::Marked);
        remove_state_vertex(s, v);
        return RuleResult::Changed;
    }
    return RuleResult::NoOp;
}

RuleResult rule_decided_vertices(AnnotatedSplitState& s) {
    RuleResult r = rule_far_vertices(s);
    return r == RuleResult::NoOp ? rule_clique_vertex(s) : r;
}

RuleResult rule_i_edges(AnnotatedSplitState& s) {
    VertexSet I0 = s.members(Role::Marked);
    std::vector<EdgePair> inside;
    for (std::size_t i = 0; i < I0.size(); ++i)
        for (std::size_t j = i + 1; j < I0.size(); ++j)
            if (s.graph.adjacent(I0[i], I0[j])) inside.emplace_back(I0[i], I0[j]);
    if (inside.empty()) return RuleResult::NoOp;
    ReductionStep step;
    step.rule = s.rule_id(8);
    step.removed_edges = to_labels(s.graph, inside);
    step.k_before = s.k;
    step.k_after = s.k - static_cast<int>(inside.size());
    s.trace.push_back(std::move(step));
    for (const auto& e : inside) s.graph.remove_edge(e.first, e.second);
    s.k -= static_cast<int>(inside.size());
    return RuleResult::Changed;
}

RuleResult rule_merge_I0(AnnotatedSplitState& s) {
    Graph& g = s.graph;
    VertexSet I0 = s.members(Role::Marked);
    if (I0.empty()) return RuleResult::NoOp;
    Bitset in = to_bitset(g, I0);
    std::vector<std::pair<Label, int>> reach;  // (label of x, |N(x) & I0|)
    int p = 0;
    bool staircase = true;
    for (Vertex x = 0; x < g.size(); ++x) {
        if (in.test(x)) continue;
        const int d = g.row(x).count_and(in);
        if (d == 0) continue;
        reach.emplace_back(g.label(x), d);
        p = std::max(p, d);
        for (int j = 0; j < d && staircase; ++j) staircase = g.adjacent(x, I0[j]);
    }
    if (staircase && static_cast<int>(I0.size()) == p) return RuleResult::NoOp;

    ReductionStep step;
    step.rule = s.rule_id(9);
    step.removed_vertices = labels_of(g, I0);
    step.k_before = step.k_after = s.k;
    for (Vertex v : I0 | std::views::reverse) s.role.erase(s.role.begin() + v);
    g.remove_vertices(I0);
    std::vector<Vertex> fresh;
    for (int j = 0; j < p; ++j) {
        fresh.push_back(g.add_vertex());
        s.role.push_back(Role::Marked);
        step.added_vertices.push_back(g.label(fresh.back()));
        step.marked.push_back(g.label(fresh.back()));
    }
    for (auto [label, d] : reach) {
        Vertex x = *g.find(label);
        for (int j = 0; j < d; ++j) {
            g.add_edge(x, fresh[j]);
            step.added_edges.emplace_back(label, g.label(fresh[j]));
        }
    }
    s.trace.push_back(std::move(step));
    return RuleResult::Changed;
}

// The predicate above is not enough once I0 has been merged: a marked vertex
// shared by two edges can turn a 2K2 into a C5 through I0, and removing v
// then loses a solution (P6 with k = 1 is the smallest case). So v must also
// avoid every 2K2, C4 and C5 of G - I0 plus one pendant per edge into I0.
static bool in_pendant_obstruction(const Graph& g, const Bitset& marked, Vertex v) {
    std::vector<Vertex> local(g.size(), -1);
    int m = 0;
    for (Vertex u = 0; u < g.size(); ++u)
        if (!marked.test(u)) local[u] = m++;
    std::vector<EdgePair> edges;
    int pendants = 0;
    for (Vertex u = 0; u < g.size(); ++u) {
        if (marked.test(u)) continue;
        for (Vertex w : g.neighbors(u)) {
            if (!marked.test(w)) {
                if (u < w) edges.emplace_back(local[u], local[w]);
            } else {
                edges.emplace_back(local[u], m + pendants++);
            }
        }
    }
    Graph h(m + pendants);
    for (auto [a, b] : edges) h.add_edge(a, b);
    return vertex_in_obstruction(h, local[v], {ObstructionKind::TwoK2, ObstructionKind::C4, ObstructionKind::C5});
}

RuleResult rule_remove_safe_vertex(AnnotatedSplitState& s) {
    const Graph& g = s.graph;
    VertexSet I0 = s.members(Role::Marked);
    Bitset marked = to_bitset(g, I0);
    for (Vertex v : s.members(Role::Clique)) {
        if (vertex_in_obstruction(g, v, {ObstructionKind::TwoK2})) continue;
        if (!I0.empty() && vertex_in_obstruction(g, v, {ObstructionKind::I0P3}, &marked)) continue;
        if (!c4_c5_avoiding(g, v, I0)) continue;
        if (!I0.empty() && in_pendant_obstruction(g, marked, v)) continue;
        ReductionStep step;
        step.rule = s.rule_id(10);
        step.removed_vertices = {g.label(v)};
        step.k_before = step.k_after = s.k;
        s.trace.push_back(std::move(step));
        remove_state_vertex(s, v);
        return RuleResult::Changed;
    }
    return RuleResult::NoOp;
}

bool size_gate_fails(const AnnotatedSplitState& s) {
    const long long k = s.k;
    const long long sides = static_cast<long long>(s.members(Role::Clique).size() + s.members(Role::Independent).size());
    const long long r = ceil_sqrt(2 * k);
    const long long cap = s.variant == SplitVariant::Split ? 3 * k * r + k + 1 : 3 * k * r + 2 * k + 2 + k + 3;
    return sides > cap;
}

int clean_up_size(int k) { return std::max<int>(2, static_cast<int>(ceil_sqrt(2LL * std::max(k, 0))) + 1); }

Instance rule_clean_up(AnnotatedSplitState& s, ProblemKind problem) {
    Graph& g = s.graph;
    const int n = g.size();
    const int t = clean_up_size(s.k);
    ReductionStep step;
    step.rule = s.rule_id(5);
    step.unmarked = s.marked_labels();
    step.k_before = step.k_after = s.k;
    std::vector<Vertex> fresh;
    for (int i = 0; i < t; ++i) {
        fresh.push_back(g.add_vertex());
        step.added_vertices.push_back(g.label(fresh.back()));
    }
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            g.add_edge(fresh[i], fresh[j]);
            step.added_edges.emplace_back(g.label(fresh[i]), g.label(fresh[j]));
        }
        for (Vertex v = 0; v < n; ++v) {
            if (s.role[v] == Role::Marked) continue;
            g.add_edge(fresh[i], v);
            step.added_edges.emplace_back(g.label(v), g.label(fresh[i]));
        }
    }
    std::sort(step.added_edges.begin(), step.added_edges.end());
    s.trace.push_back(std::move(step));
    s.role.assign(g.size(), Role::Clique);
    return Instance{g, s.k, problem};
}

KernelOutcome kernelize_split_family(const Instance& inst, SplitVariant variant,
                                     const SplitObserver* observer) {
    KernelOutcome out;
    auto decide = [&](Verdict v, std::string by, const Instance& at) {
        out.verdict = v;
        out.decided_by = std::move(by);
        out.kernel = at;
        return out;
    };
    const GraphClass cls = variant == SplitVariant::Split ? GraphClass::Split : GraphClass::PseudoSplit;
    if (inst.k < 0) return decide(Verdict::TrivialNo, "budget", inst);
    if (in_class(cls, inst.graph)) return decide(Verdict::TrivialYes, "in-class", inst);

    // Any yes-instance has a packing within these counts, so the scan can stop early.
    const int limit = variant == SplitVariant::Split ? inst.k : inst.k + 1;
    ModulatorResult mod = build_modulator(inst.graph, limit);
    const int m = static_cast<int>(mod.packing.vertices().size());
    if (variant == SplitVariant::Split) {
        if (!mod.complete || static_cast<int>(mod.packing.obstructions.size()) > inst.k || m > 5 * inst.k)
            return decide(Verdict::TrivialNo, "modulator", inst);
    } else if (!mod.complete || modulator_gate(mod.packing, inst.k)) {
        return decide(Verdict::TrivialNo, "modulator", inst);
    }

    AnnotatedSplitState s = AnnotatedSplitState::from_modulator(inst, variant, mod);
    auto snapshot = [&] { return Instance{s.graph, s.k, inst.problem}; };
    auto stop = [&](Verdict v, std::string by) {
        out.trace = s.trace;
        out.marked = s.marked_labels();
        return decide(v, std::move(by), snapshot());
    };
    auto notify = [&](const std::string& what) {
        if (observer) (*observer)(s, what);
    };
    notify("modulator");
    while (true) {
        if (s.k < 0) return stop(Verdict::TrivialNo, "budget");
        RuleResult r = rule_simplicial(s);
        if (r == RuleResult::TrivialYes) {
            // Clique side N[v] \ I0; everything else becomes independent.
            Bitset clique(s.graph.size());
            for (Label l : *s.yes_clique) clique.set(*s.graph.find(l));
            for (const auto& e : s.graph.edges())
                if (!clique.test(e.first) && !clique.test(e.second))
                    out.yes_witness.emplace_back(s.graph.label(e.first), s.graph.label(e.second));
            return stop(Verdict::TrivialYes, s.rule_id(6));
        }
        if (r == RuleResult::Changed) {
            notify(s.rule_id(6));
            continue;
        }
        r = rule_decided_vertices(s);
        if (r == RuleResult::TrivialNo) return stop(Verdict::TrivialNo, s.rule_id(7));
        if (r == RuleResult::Changed) {
            notify(s.rule_id(7));
            continue;
        }
        if (rule_i_edges(s) == RuleResult::Changed) {
            notify(s.rule_id(8));
            continue;
        }
        if (rule_merge_I0(s) == RuleResult::Changed) notify(s.rule_id(9));
        if (rule_remove_safe_vertex(s) == RuleResult::Changed) {
            notify(s.rule_id(10));
            continue;
        }
        break;
    }
    notify("size-gate");
    if (size_gate_fails(s)) return stop(Verdict::TrivialNo, "size");
    Instance kernel = rule_clean_up(s, inst.problem);
    out.trace = s.trace;
    return decide(Verdict::Kernel, "kernel", kernel);
}

KernelOutcome complement_wrapped(const Instance& inst, ProblemKind deletion_problem, SplitVariant variant,
                                 const SplitObserver* observer) {
    Instance flipped{complement(inst.graph), inst.k, deletion_problem};
    KernelOutcome out = kernelize_split_family(flipped, variant, observer);
    ReductionStep first;
    first.rule = "complement";
    first.k_before = first.k_after = inst.k;
    ReductionStep last;
    last.rule = "complement";
    last.k_before = last.k_after = out.kernel.k;
    out.trace.insert(out.trace.begin(), first);
    out.trace.push_back(last);
    out.kernel.graph = complement(out.kernel.graph);
    out.kernel.problem = inst.problem;
    // The witness removes edges of the complement, i.e. adds the same pairs here.
    return out;
}

KernelOutcome kernelize_split_deletion(const Instance& inst) {
    if (inst.problem != ProblemKind::SplitDeletion) throw input_error("expected a split deletion instance");
    return kernelize_split_family(inst, SplitVariant::Split);
}

KernelOutcome kernelize_split_completion(const Instance& inst) {
    if (inst.problem != ProblemKind::SplitCompletion) throw input_error("expected a split completion instance");
    return complement_wrapped(inst, ProblemKind::SplitDeletion, SplitVariant::Split);
}

}  // namespace kernelkit
