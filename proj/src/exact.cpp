#include "kernelkit/exact.hpp"

#include <algorithm>
#include <numeric>

namespace kernelkit {

namespace {

// Kinds in branching order: cheapest branching first.
KindSet branching_kinds(ProblemKind p) {
    switch (p) {
        case ProblemKind::ClusterDeletion: return {ObstructionKind::P3};
        case ProblemKind::TPCompletion: return {ObstructionKind::C4, ObstructionKind::P4};
        case ProblemKind::SplitDeletion:
            return {ObstructionKind::TwoK2, ObstructionKind::C4, ObstructionKind::C5};
        case ProblemKind::SplitCompletion:
            return {ObstructionKind::C4, ObstructionKind::TwoK2, ObstructionKind::C5};
        case ProblemKind::PseudoSplitDeletion: return {ObstructionKind::TwoK2, ObstructionKind::C4};
        case ProblemKind::PseudoSplitCompletion: return {ObstructionKind::C4, ObstructionKind::TwoK2};
        case ProblemKind::StrongTriadicClosure: return {ObstructionKind::P3};
    }
    return {};
}

class Brancher {
public:
    Brancher(ProblemKind p, const Graph& g, const Bitset* marked = nullptr)
        : problem_(p), original_(g), work_(g), kinds_(branching_kinds(p)), marked_(marked) {}

    bool search(int budget) {
        auto choices = branch_edges();
        if (!choices) return true;
        if (budget == 0) return false;
        for (const auto& e : *choices) {
            apply(e);
            chosen_.push_back(e);
            if (search(budget - 1)) return true;
            chosen_.pop_back();
            undo(e);
        }
        return false;
    }

    const std::vector<EdgePair>& chosen() const { return chosen_; }

private:
    // nullopt when no obstruction remains.
    std::optional<std::vector<EdgePair>> branch_edges() const {
        if (problem_ == ProblemKind::StrongTriadicClosure) {
            std::optional<std::vector<EdgePair>> out;
            for_each_obstruction(work_, {ObstructionKind::P3}, [&](const Obstruction& o) {
                const auto& t = o.vertices;
                if (original_.adjacent(t[0], t[2])) return true;
                out = std::vector<EdgePair>{EdgePair(t[0], t[1]), EdgePair(t[1], t[2])};
                return false;
            });
            return out;
        }
        if (marked_) {
            // Marked vertices end up independent: an edge between two of them
            // must go, and a marked vertex may not centre an induced P3.
            for (Vertex u = 0; u < work_.size(); ++u) {
                if (!marked_->test(u)) continue;
                for (Vertex w : work_.neighbors(u))
                    if (w > u && marked_->test(w)) return std::vector<EdgePair>{EdgePair(u, w)};
            }
            if (auto o = find_obstruction(work_, {ObstructionKind::I0P3}, marked_)) {
                const auto& t = o->vertices;
                std::vector<EdgePair> c{EdgePair(t[0], t[1]), EdgePair(t[0], t[2])};
                std::sort(c.begin(), c.end());
                return c;
            }
        }
        auto o = find_obstruction(work_, kinds_);
        if (!o) return std::nullopt;
        if (problem_ == ProblemKind::TPCompletion) {
            const auto& t = o->vertices;
            std::vector<EdgePair> c{EdgePair(t[0], t[2]), EdgePair(t[1], t[3])};
            std::sort(c.begin(), c.end());
            return c;
        }
        return is_completion(problem_) ? obstruction_non_edges(*o) : obstruction_edges(*o);
    }

    void apply(const EdgePair& e) {
        if (is_completion(problem_))
            work_.add_edge(e.first, e.second);
        else
            work_.remove_edge(e.first, e.second);
    }
    void undo(const EdgePair& e) {
        if (is_completion(problem_))
            work_.remove_edge(e.first, e.second);
        else
            work_.add_edge(e.first, e.second);
    }

    ProblemKind problem_;
    const Graph& original_;
    Graph work_;
    KindSet kinds_;
    const Bitset* marked_;
    std::vector<EdgePair> chosen_;
};

}  // namespace

ExactResult solve_exact(ProblemKind problem, const Graph& g, int cap) {
    if (cap < 0) throw input_error("exact search cap must be non-negative");
    for (int depth = 0; depth <= cap; ++depth) {
        Brancher b(problem, g);
        if (b.search(depth)) {
            auto witness = to_labels(g, b.chosen());
            std::sort(witness.begin(), witness.end());
            return ExactResult{depth, std::move(witness), false};
        }
    }
    return ExactResult{std::nullopt, {}, true};
}

ExactResult solve_annotated(GraphClass c, const Graph& g, const Bitset& marked, int cap) {
    if (cap < 0) throw input_error("exact search cap must be non-negative");
    if (c != GraphClass::Split && c != GraphClass::PseudoSplit)
        throw input_error("annotated search supports split and pseudo-split targets only");
    if (marked.size() != g.size()) throw input_error("marked set does not match graph size");
    ProblemKind p = c == GraphClass::Split ? ProblemKind::SplitDeletion : ProblemKind::PseudoSplitDeletion;
    for (int depth = 0; depth <= cap; ++depth) {
        Brancher b(p, g, &marked);
        if (b.search(depth)) {
            auto witness = to_labels(g, b.chosen());
            std::sort(witness.begin(), witness.end());
            return ExactResult{depth, std::move(witness), false};
        }
    }
    return ExactResult{std::nullopt, {}, true};
}

ExactResult sed(const Graph& g, int cap) { return solve_exact(ProblemKind::SplitDeletion, g, cap); }

std::pair<VertexSet, VertexSet> degree_sequence_split_partition(const Graph& g) {
    VertexSet order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    int m = 0;
    for (int i = 0; i < g.size(); ++i)
        if (g.degree(order[i]) >= i) m = i + 1;
    VertexSet clique(order.begin(), order.begin() + m), independent(order.begin() + m, order.end());
    std::sort(clique.begin(), clique.end());
    std::sort(independent.begin(), independent.end());
    return {clique, independent};
}

Recognition recognize(GraphClass c, const Graph& g) {
    Recognition r;
    r.member = !has_obstruction(g, forbidden_kinds(c));
    if (!r.member) return r;
    switch (c) {
        case GraphClass::Cluster: {
            std::vector<bool> seen(g.size(), false);
            for (Vertex v = 0; v < g.size(); ++v) {
                if (seen[v]) continue;
                VertexSet comp = closed_neighborhood(g, v);
                for (Vertex u : comp) seen[u] = true;
                r.components.push_back(std::move(comp));
            }
            break;
        }
        case GraphClass::TriviallyPerfect: break;
        case GraphClass::Split: std::tie(r.clique, r.independent) = degree_sequence_split_partition(g); break;
        case GraphClass::PseudoSplit: {
            if (auto c5 = find_obstruction(g, {ObstructionKind::C5})) {
                r.cycle = c5->vertices;
                Bitset in_cycle = to_bitset(g, r.cycle);
                for (Vertex v = 0; v < g.size(); ++v) {
                    if (in_cycle.test(v)) continue;
                    (g.row(v).intersects(in_cycle) ? r.clique : r.independent).push_back(v);
                }
            } else {
                std::tie(r.clique, r.independent) = degree_sequence_split_partition(g);
            }
            break;
        }
    }
    return r;
}

bool in_class(GraphClass c, const Graph& g) { return !has_obstruction(g, forbidden_kinds(c)); }

Graph minimal_tp_completion(const Graph& g, std::span<const EdgePair> seed) {
    for (const auto& e : seed)
        if (g.adjacent(e.first, e.second)) throw input_error("seed edge " + to_string(e) + " already present");
    Graph h = add_edges(g, seed);
    if (!in_class(GraphClass::TriviallyPerfect, h)) throw input_error("graph plus seed is not trivially perfect");
    std::vector<EdgePair> remaining(seed.begin(), seed.end());
    std::sort(remaining.begin(), remaining.end());
    remaining.erase(std::unique(remaining.begin(), remaining.end()), remaining.end());
    bool dropped = true;
    while (dropped) {
        dropped = false;
        for (auto it = remaining.begin(); it != remaining.end(); ++it) {
            h.remove_edge(it->first, it->second);
            if (in_class(GraphClass::TriviallyPerfect, h)) {
                remaining.erase(it);
                dropped = true;
                break;
            }
            h.add_edge(it->first, it->second);
        }
    }
    // Single drops can stall while a larger subset is still removable (2K2
    // plus a vertex joined to both inner ends), so keep the smallest subset of
    // the survivors that still completes g. It is inclusion-minimal.
    const int r = static_cast<int>(remaining.size());
    for (int size = 0; size < r; ++size) {
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<EdgePair> keep;
            for (int i : pick) keep.push_back(remaining[i]);
            Graph cand = add_edges(g, keep);
            if (in_class(GraphClass::TriviallyPerfect, cand)) return cand;
            int i = size - 1;
            while (i >= 0 && pick[i] == r - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return h;
}

}  // namespace kernelkit
