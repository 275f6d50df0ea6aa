#include "kernelkit/obstruction.hpp"

#include <algorithm>

namespace kernelkit {

namespace {

// A small pattern graph with its role order and symmetry group. Occurrences
// are injective maps role -> vertex preserving adjacency and non-adjacency.
struct Pattern {
    int roles = 0;
    std::array<std::array<bool, 5>, 5> adj{};
    std::vector<std::array<int, 5>> automorphisms;
    bool center_marked = false;  // role 0 must lie in the marked set
};

Pattern make_pattern(int roles, std::initializer_list<std::pair<int, int>> edges,
                     std::vector<std::array<int, 5>> autos, bool center_marked = false) {
    Pattern p;
    p.roles = roles;
    for (auto [a, b] : edges) p.adj[a][b] = p.adj[b][a] = true;
    p.automorphisms = std::move(autos);
    p.center_marked = center_marked;
    return p;
}

std::vector<std::array<int, 5>> dihedral(int r) {
    std::vector<std::array<int, 5>> out;
    for (int s = 0; s < r; ++s) {
        std::array<int, 5> fwd{}, bwd{};
        for (int i = 0; i < r; ++i) {
            fwd[i] = (s + i) % r;
            bwd[i] = ((s - i) % r + r) % r;
        }
        out.push_back(fwd);
        out.push_back(bwd);
    }
    return out;
}

const Pattern& pattern(ObstructionKind k) {
    static const Pattern p3 = make_pattern(3, {{0, 1}, {1, 2}}, {{0, 1, 2}, {2, 1, 0}});
    static const Pattern p4 = make_pattern(4, {{0, 1}, {1, 2}, {2, 3}}, {{0, 1, 2, 3}, {3, 2, 1, 0}});
    static const Pattern c4 = make_pattern(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, dihedral(4));
    static const Pattern c5 = make_pattern(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, dihedral(5));
    static const Pattern two_k2 = make_pattern(4, {{0, 1}, {2, 3}},
                                               {{0, 1, 2, 3},
                                                {1, 0, 2, 3},
                                                {0, 1, 3, 2},
                                                {1, 0, 3, 2},
                                                {2, 3, 0, 1},
                                                {3, 2, 0, 1},
                                                {2, 3, 1, 0},
                                                {3, 2, 1, 0}});
    static const Pattern i0p3 = make_pattern(3, {{0, 1}, {0, 2}}, {{0, 1, 2}, {0, 2, 1}}, true);
    switch (k) {
        case ObstructionKind::P3: return p3;
        case ObstructionKind::P4: return p4;
        case ObstructionKind::C4: return c4;
        case ObstructionKind::C5: return c5;
        case ObstructionKind::TwoK2: return two_k2;
        case ObstructionKind::I0P3: return i0p3;
    }
    throw input_error("unknown obstruction kind");
}

class Matcher {
public:
    Matcher(const Graph& g, const Pattern& p, const Bitset* marked, bool canonical)
        : g_(g), p_(p), marked_(marked), canonical_(canonical) {}

    // Returns false if the visitor asked to stop.
    bool run(const std::vector<int>& order, std::optional<Vertex> fixed,
             const std::function<bool(const std::array<Vertex, 5>&)>& visit) {
        order_ = order;
        visit_ = &visit;
        used_ = Bitset(g_.size());
        if (fixed) {
            if (!admissible(order_[0], *fixed)) return true;
            tuple_[order_[0]] = *fixed;
            used_.set(*fixed);
            return extend(1);
        }
        return extend(0);
    }

private:
    bool admissible(int role, Vertex v) const {
        if (role == 0 && p_.center_marked && (!marked_ || !marked_->test(v))) return false;
        return true;
    }

    bool consistent(int depth, Vertex v) const {
        const int role = order_[depth];
        if (used_.test(v) || !admissible(role, v)) return false;
        for (int d = 0; d < depth; ++d) {
            const int other = order_[d];
            if (g_.row(v).test(tuple_[other]) != p_.adj[role][other]) return false;
        }
        return true;
    }

    bool is_canonical() const {
        for (const auto& a : p_.automorphisms) {
            for (int i = 0; i < p_.roles; ++i) {
                const Vertex image = tuple_[a[i]];
                if (image < tuple_[i]) return false;
                if (image > tuple_[i]) break;
            }
        }
        return true;
    }

    bool extend(int depth) {
        if (depth == p_.roles) {
            if (canonical_ && !is_canonical()) return true;
            return (*visit_)(tuple_);
        }
        const int role = order_[depth];
        // Anchor on an assigned pattern neighbour of minimum degree, if any.
        int anchor = -1;
        for (int d = 0; d < depth; ++d) {
            const int other = order_[d];
            if (p_.adj[role][other] &&
                (anchor < 0 || g_.degree(tuple_[other]) < g_.degree(tuple_[anchor])))
                anchor = other;
        }
        auto attempt = [&](Vertex v) {
            if (!consistent(depth, v)) return true;
            tuple_[role] = v;
            used_.set(v);
            const bool go_on = extend(depth + 1);
            used_.reset(v);
            return go_on;
        };
        if (anchor >= 0) {
            for (Vertex v : g_.neighbors(tuple_[anchor]))
                if (!attempt(v)) return false;
        } else {
            for (Vertex v = 0; v < g_.size(); ++v)
                if (!attempt(v)) return false;
        }
        return true;
    }

    const Graph& g_;
    const Pattern& p_;
    const Bitset* marked_;
    bool canonical_;
    std::vector<int> order_;
    std::array<Vertex, 5> tuple_{};
    Bitset used_;
    const std::function<bool(const std::array<Vertex, 5>&)>* visit_ = nullptr;
};

std::vector<int> identity_order(int r) {
    std::vector<int> o(r);
    for (int i = 0; i < r; ++i) o[i] = i;
    return o;
}

// Role order starting at `start` in which every role, where possible, follows
// an already placed pattern neighbour.
std::vector<int> order_from(const Pattern& p, int start) {
    std::vector<int> order{start};
    std::vector<bool> seen(p.roles, false);
    seen[start] = true;
    while (static_cast<int>(order.size()) < p.roles) {
        int next = -1;
        for (int placed : order)
            for (int r = 0; r < p.roles && next < 0; ++r)
                if (!seen[r] && p.adj[placed][r]) next = r;
        for (int r = 0; r < p.roles && next < 0; ++r)
            if (!seen[r]) next = r;
        seen[next] = true;
        order.push_back(next);
    }
    return order;
}

}  // namespace

std::string_view name(ObstructionKind k) {
    switch (k) {
        case ObstructionKind::P3: return "P3";
        case ObstructionKind::P4: return "P4";
        case ObstructionKind::C4: return "C4";
        case ObstructionKind::C5: return "C5";
        case ObstructionKind::TwoK2: return "2K2";
        case ObstructionKind::I0P3: return "I0P3";
    }
    return "?";
}

void for_each_obstruction(const Graph& g, const KindSet& kinds,
                          const std::function<bool(const Obstruction&)>& visit, const Bitset* marked) {
    for (ObstructionKind k : kinds) {
        const Pattern& p = pattern(k);
        if (p.center_marked && !marked) continue;
        Matcher m(g, p, marked, true);
        std::function<bool(const std::array<Vertex, 5>&)> cb = [&](const std::array<Vertex, 5>& t) {
            return visit(Obstruction{k, std::vector<Vertex>(t.begin(), t.begin() + p.roles)});
        };
        if (!m.run(identity_order(p.roles), std::nullopt, cb)) return;
    }
}

std::vector<Obstruction> enumerate(const Graph& g, const KindSet& kinds, std::optional<std::size_t> limit,
                                   const Bitset* marked) {
    std::vector<Obstruction> out;
    if (limit && *limit == 0) return out;
    for_each_obstruction(
        g, kinds,
        [&](const Obstruction& o) {
            out.push_back(o);
            return !limit || out.size() < *limit;
        },
        marked);
    return out;
}

std::optional<Obstruction> find_obstruction(const Graph& g, const KindSet& kinds, const Bitset* marked) {
    auto found = enumerate(g, kinds, 1, marked);
    if (found.empty()) return std::nullopt;
    return found.front();
}

bool has_obstruction(const Graph& g, const KindSet& kinds) { return find_obstruction(g, kinds).has_value(); }

bool vertex_in_obstruction(const Graph& g, Vertex v, const KindSet& kinds, const Bitset* marked) {
    g.check_vertex(v);
    for (ObstructionKind k : kinds) {
        const Pattern& p = pattern(k);
        if (p.center_marked && !marked) continue;
        for (int role = 0; role < p.roles; ++role) {
            bool hit = false;
            Matcher m(g, p, marked, false);
            std::function<bool(const std::array<Vertex, 5>&)> cb = [&](const std::array<Vertex, 5>&) {
                hit = true;
                return false;
            };
            m.run(order_from(p, role), v, cb);
            if (hit) return true;
        }
    }
    return false;
}

bool verify(const Graph& g, const Obstruction& o, const Bitset* marked) {
    const Pattern& p = pattern(o.kind);
    if (static_cast<int>(o.vertices.size()) != p.roles) return false;
    for (int i = 0; i < p.roles; ++i) {
        if (o.vertices[i] < 0 || o.vertices[i] >= g.size()) return false;
        for (int j = i + 1; j < p.roles; ++j) {
            if (o.vertices[i] == o.vertices[j]) return false;
            if (g.adjacent(o.vertices[i], o.vertices[j]) != p.adj[i][j]) return false;
        }
    }
    if (p.center_marked && (!marked || !marked->test(o.vertices[0]))) return false;
    return true;
}

std::vector<CandidatePair> candidate_pairs(const Graph& g) {
    std::vector<CandidatePair> out;
    for_each_obstruction(g, {ObstructionKind::P4, ObstructionKind::C4}, [&](const Obstruction& o) {
        const auto& t = o.vertices;
        out.push_back({EdgePair(t[0], t[2]), EdgePair(t[1], t[3])});
        return true;
    });
    return out;
}

std::map<EdgePair, int> candidate_multiplicities(const Graph& g) {
    std::map<EdgePair, int> out;
    for (const auto& c : candidate_pairs(g)) {
        ++out[c.first];
        ++out[c.second];
    }
    return out;
}

int candidate_multiplicity(const Graph& g, const EdgePair& e) {
    g.check_vertex(e.first);
    g.check_vertex(e.second);
    if (g.adjacent(e.first, e.second)) return 0;
    int count = 0;
    for_each_obstruction(g, {ObstructionKind::P4, ObstructionKind::C4}, [&](const Obstruction& o) {
        const auto& t = o.vertices;
        if (EdgePair(t[0], t[2]) == e || EdgePair(t[1], t[3]) == e) ++count;
        return true;
    });
    return count;
}

std::vector<Obstruction> i0_centered_p3s(const Graph& g, std::span<const Vertex> I0) {
    Bitset marked = to_bitset(g, I0);
    return enumerate(g, {ObstructionKind::I0P3}, std::nullopt, &marked);
}

bool c4_c5_avoiding(const Graph& g, Vertex v, std::span<const Vertex> I0) {
    Bitset marked = to_bitset(g, I0);
    if (marked.test(v)) return true;
    // Every C4/C5 through v meets I0 iff v lies on none in G - I0.
    VertexSet keep;
    for (Vertex u = 0; u < g.size(); ++u)
        if (!marked.test(u)) keep.push_back(u);
    Graph rest = g.induced(keep);
    const Vertex local = static_cast<Vertex>(std::lower_bound(keep.begin(), keep.end(), v) - keep.begin());
    return !vertex_in_obstruction(rest, local, {ObstructionKind::C4, ObstructionKind::C5});
}

std::vector<EdgePair> obstruction_edges(const Obstruction& o) {
    const Pattern& p = pattern(o.kind);
    std::vector<EdgePair> out;
    for (int i = 0; i < p.roles; ++i)
        for (int j = i + 1; j < p.roles; ++j)
            if (p.adj[i][j]) out.emplace_back(o.vertices[i], o.vertices[j]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgePair> obstruction_non_edges(const Obstruction& o) {
    const Pattern& p = pattern(o.kind);
    std::vector<EdgePair> out;
    for (int i = 0; i < p.roles; ++i)
        for (int j = i + 1; j < p.roles; ++j)
            if (!p.adj[i][j]) out.emplace_back(o.vertices[i], o.vertices[j]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kernelkit
