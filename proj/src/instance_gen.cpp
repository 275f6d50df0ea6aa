#include "kernelkit/instance_gen.hpp"

#include <algorithm>
#include <random>

#include "kernelkit/exact.hpp"

namespace kernelkit {

namespace {

// Engine output is fixed by the standard; distributions are not, so draws
// are derived from raw words to stay reproducible across toolchains.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}
    std::uint64_t below(std::uint64_t m) { return m ? rng_() % m : 0; }
    bool chance(double p) { return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p; }
    bool coin() { return rng_() >> 63; }

private:
    std::mt19937_64 rng_;
};

Graph cluster_base(Draw& d, int n) {
    Graph g(n);
    const int groups = 1 + static_cast<int>(d.below(n));
    std::vector<int> group(n);
    for (int v = 0; v < n; ++v) group[v] = static_cast<int>(d.below(groups));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (group[u] == group[v]) g.add_edge(u, v);
    return g;
}

// Every connected piece gets a universal vertex, recursively.
void tp_component(Draw& d, Graph& g, std::vector<Vertex> vs) {
    if (vs.size() <= 1) return;
    const std::size_t pick = d.below(vs.size());
    const Vertex top = vs[pick];
    vs.erase(vs.begin() + static_cast<long>(pick));
    for (Vertex v : vs) g.add_edge(top, v);
    const int parts = 1 + static_cast<int>(d.below(std::min<std::size_t>(vs.size(), 3)));
    std::vector<std::vector<Vertex>> split(parts);
    for (Vertex v : vs) split[d.below(parts)].push_back(v);
    for (auto& part : split) tp_component(d, g, std::move(part));
}

Graph tp_base(Draw& d, int n) {
    Graph g(n);
    std::vector<Vertex> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    const int parts = 1 + static_cast<int>(d.below(2));
    std::vector<std::vector<Vertex>> split(parts);
    for (Vertex v : all) split[d.below(parts)].push_back(v);
    for (auto& part : split) tp_component(d, g, std::move(part));
    return g;
}

Graph split_base(Draw& d, int n, bool allow_cycle) {
    Graph g(n);
    std::vector<int> side(n);  // 0 clique, 1 independent, 2 cycle
    for (int v = 0; v < n; ++v) side[v] = d.coin() ? 0 : 1;
    std::vector<Vertex> cycle;
    if (allow_cycle && n >= 5 && d.coin()) {
        std::vector<Vertex> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        for (int i = n - 1; i > 0; --i) std::swap(order[i], order[d.below(i + 1)]);
        cycle.assign(order.begin(), order.begin() + 5);
        for (Vertex v : cycle) side[v] = 2;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int a = std::min(side[u], side[v]), b = std::max(side[u], side[v]);
            if ((a == 0 && b == 0) || (a == 0 && b == 2) || (a == 0 && b == 1 && d.coin())) g.add_edge(u, v);
        }
    for (std::size_t i = 0; i < cycle.size(); ++i) g.add_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    return g;
}

}  // namespace

Instance plant(const GenSpec& spec) {
    if (spec.n < 0 || spec.k < 0) throw input_error("planted instance needs n >= 0 and k >= 0");
    Draw d(spec.seed);
    const GraphClass cls = target_class(spec.problem);
    const long long pairs = static_cast<long long>(spec.n) * (spec.n - 1) / 2;
    if (spec.k > pairs) throw input_error("budget exceeds the number of vertex pairs");
    const bool add = !is_completion(spec.problem);
    auto base = [&] {
        switch (cls) {
            case GraphClass::Cluster: return cluster_base(d, spec.n);
            case GraphClass::TriviallyPerfect: return tp_base(d, spec.n);
            case GraphClass::Split: return split_base(d, spec.n, false);
            case GraphClass::PseudoSplit: return split_base(d, spec.n, true);
        }
        return Graph(spec.n);
    };
    // The base must leave room for k perturbations of the right kind.
    Graph g = base();
    for (int attempt = 0; attempt < 100; ++attempt) {
        const long long room = add ? pairs - static_cast<long long>(g.num_edges()) : static_cast<long long>(g.num_edges());
        if (room >= spec.k) break;
        g = base();
    }
    for (int step = 0; step < spec.k; ++step) {
        std::vector<EdgePair> pool;
        for (Vertex u = 0; u < g.size(); ++u)
            for (Vertex v = u + 1; v < g.size(); ++v)
                if (g.adjacent(u, v) != add) pool.emplace_back(u, v);
        if (pool.empty()) throw input_error("budget exceeds the number of pairs that can be perturbed");
        EdgePair pick;
        for (int attempt = 0; attempt < 100; ++attempt) {
            pick = pool[d.below(pool.size())];
            Graph trial = g;
            add ? trial.add_edge(pick.first, pick.second) : trial.remove_edge(pick.first, pick.second);
            if (!in_class(cls, trial)) break;
        }
        add ? g.add_edge(pick.first, pick.second) : g.remove_edge(pick.first, pick.second);
    }
    return Instance{std::move(g), spec.k, spec.problem};
}

Graph figure_graph(std::string_view name) {
    if (name == "clique-crown") {
        Graph g(8);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j) g.add_edge(i, 4 + j);
        return g;
    }
    if (name == "c5-chord") {
        Graph g(6);
        for (int i = 1; i <= 5; ++i) g.add_edge(i, i == 5 ? 1 : i + 1);
        g.add_edge(0, 1);
        g.add_edge(0, 3);
        return g;
    }
    throw input_error("unknown figure '" + std::string(name) + "'");
}

Graph uniform_random(std::uint64_t seed, int n, double edge_prob) {
    if (n < 0) throw input_error("negative vertex count");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw input_error("edge probability must lie in [0, 1]");
    Draw d(seed);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (d.chance(edge_prob)) g.add_edge(u, v);
    return g;
}

Instance generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::Planted: return plant(spec);
        case Family::UniformRandom: return Instance{uniform_random(spec.seed, spec.n, spec.edge_prob), spec.k, spec.problem};
        case Family::Figure: return Instance{figure_graph(spec.figure), spec.k, spec.problem};
    }
    throw input_error("unknown family");
}

std::string_view name(Family f) {
    switch (f) {
        case Family::Planted: return "planted";
        case Family::UniformRandom: return "uniform-random";
        case Family::Figure: return "figure";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view s) {
    for (Family f : {Family::Planted, Family::UniformRandom, Family::Figure})
        if (name(f) == s) return f;
    return std::nullopt;
}

}  // namespace kernelkit
