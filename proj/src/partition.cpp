#include "kernelkit/partition.hpp"

#include <algorithm>

#include "kernelkit/exact.hpp"

namespace kernelkit {

namespace {

struct Sides {
    std::vector<int> side;  // 0 clique, 1 independent, 2 cycle, -1 unassigned
    bool ok = true;
};

Sides assign(const Graph& g, const Partition& p) {
    Sides s;
    s.side.assign(g.size(), -1);
    auto put = [&](const std::vector<Label>& ls, int which) {
        for (Label l : ls) {
            auto v = g.find(l);
            if (!v || s.side[*v] != -1) {
                s.ok = false;
                return;
            }
            s.side[*v] = which;
        }
    };
    put(p.clique, 0);
    put(p.independent, 1);
    put(p.cycle, 2);
    if (std::find(s.side.begin(), s.side.end(), -1) != s.side.end()) s.ok = false;
    if (!p.cycle.empty() && p.cycle.size() != 5) s.ok = false;
    return s;
}

bool cycle_edge(const Partition& p, Label a, Label b) {
    for (std::size_t i = 0; i < p.cycle.size(); ++i) {
        Label x = p.cycle[i], y = p.cycle[(i + 1) % p.cycle.size()];
        if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
}

}  // namespace

std::optional<int> partition_cost(const Graph& g, const Partition& p) {
    Sides s = assign(g, p);
    if (!s.ok) return std::nullopt;
    for (std::size_t i = 0; i < p.cycle.size(); ++i) {
        auto a = g.find(p.cycle[i]), b = g.find(p.cycle[(i + 1) % p.cycle.size()]);
        if (!g.adjacent(*a, *b)) return std::nullopt;
    }
    int cost = 0;
    for (Vertex u = 0; u < g.size(); ++u) {
        for (Vertex w = u + 1; w < g.size(); ++w) {
            int a = s.side[u], b = s.side[w];
            bool e = g.adjacent(u, w);
            if (a == 0 && b == 0) {
                if (!e) return std::nullopt;
            } else if ((a == 0 && b == 2) || (a == 2 && b == 0)) {
                if (!e) return std::nullopt;
            } else if (a == 2 && b == 2) {
                cost += e && !cycle_edge(p, g.label(u), g.label(w));
            } else if (a == 1 || b == 1) {
                cost += e && !(a == 0 || b == 0);
            }
        }
    }
    return cost;
}

std::vector<EdgePair> partition_deletions(const Graph& g, const Partition& p) {
    Sides s = assign(g, p);
    if (!s.ok) throw input_error("partition does not cover the graph");
    std::vector<EdgePair> out;
    for (const auto& e : g.edges()) {
        int a = s.side[e.first], b = s.side[e.second];
        bool drop = (a == 1 && b != 0) || (b == 1 && a != 0) ||
                    (a == 2 && b == 2 && !cycle_edge(p, g.label(e.first), g.label(e.second)));
        if (drop) out.emplace_back(g.label(e.first), g.label(e.second));
    }
    return out;
}

Partition partition_of(GraphClass c, const Graph& h, std::span<const Label> marked) {
    Recognition r = recognize(c, h);
    if (!r.member) throw input_error("graph is not in the target class");
    std::vector<int> side(h.size(), 1);
    for (Vertex v : r.clique) side[v] = 0;
    for (Vertex v : r.cycle) side[v] = 2;
    // A marked vertex on the clique side is simplicial, so it has at most one
    // independent neighbour; swapping with it keeps both sides valid.
    for (Label l : marked) {
        auto x = h.find(l);
        if (!x || side[*x] != 0) continue;
        side[*x] = 1;
        for (Vertex y : h.neighbors(*x))
            if (side[y] == 1) {
                side[y] = 0;
                break;
            }
    }
    Partition p;
    for (Vertex v = 0; v < h.size(); ++v) {
        if (side[v] == 0) p.clique.push_back(h.label(v));
        if (side[v] == 1) p.independent.push_back(h.label(v));
    }
    for (Vertex v : r.cycle) p.cycle.push_back(h.label(v));
    return p;
}

bool marked_independent(const Partition& p, std::span<const Label> marked) {
    for (Label l : marked)
        if (std::find(p.independent.begin(), p.independent.end(), l) == p.independent.end()) return false;
    return true;
}

}  // namespace kernelkit
