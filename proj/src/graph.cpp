#include "kernelkit/graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace kernelkit {

EdgePair::EdgePair(int a, int b) {
    if (a == b) throw input_error("edge endpoints must differ: " + std::to_string(a));
    first = std::min(a, b);
    second = std::max(a, b);
}

std::string to_string(const EdgePair& e) {
    return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

Graph::Graph(int n) {
    if (n < 0) throw input_error("negative vertex count");
    labels_.resize(n);
    for (int i = 0; i < n; ++i) labels_[i] = i;
    rows_.assign(n, Bitset(n));
    adj_.assign(n, {});
    next_label_ = n;
}

Graph::Graph(int n, std::vector<Label> labels) : Graph(n) {
    if (static_cast<int>(labels.size()) != n) throw input_error("label count does not match vertex count");
    for (int i = 1; i < n; ++i)
        if (labels[i] <= labels[i - 1]) throw input_error("labels must be strictly increasing");
    labels_ = std::move(labels);
    next_label_ = n ? labels_.back() + 1 : 0;
}

Graph Graph::from_edges(int n, std::span<const EdgePair> edges) {
    Graph g(n);
    for (const auto& e : edges) g.add_edge(e.first, e.second);
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= size()) throw input_error("invalid vertex id " + std::to_string(v));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[u].test(v);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const Bitset& Graph::row(Vertex v) const {
    check_vertex(v);
    return rows_[v];
}

Label Graph::label(Vertex v) const {
    check_vertex(v);
    return labels_[v];
}

std::optional<Vertex> Graph::find(Label l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
}

bool Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("self loop at vertex " + std::to_string(u));
    if (rows_[u].test(v)) return false;
    rows_[u].set(v);
    rows_[v].set(u);
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edges_;
    return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !rows_[u].test(v)) return false;
    rows_[u].reset(v);
    rows_[v].reset(u);
    adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    --edges_;
    return true;
}

Vertex Graph::add_vertex() {
    const int n = size() + 1;
    for (auto& r : rows_) r.resize(n);
    rows_.emplace_back(n);
    adj_.emplace_back();
    labels_.push_back(next_label_++);
    return n - 1;
}

void Graph::remove_vertices(std::span<const Vertex> vs) {
    std::vector<char> drop(size(), 0);
    for (Vertex v : vs) {
        check_vertex(v);
        drop[v] = 1;
    }
    VertexSet keep;
    for (Vertex v = 0; v < size(); ++v)
        if (!drop[v]) keep.push_back(v);
    Label next = next_label_;
    *this = induced(keep);
    next_label_ = next;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
    VertexSet sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> index(size(), -1);
    std::vector<Label> labels;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        check_vertex(sorted[i]);
        index[sorted[i]] = static_cast<int>(i);
        labels.push_back(labels_[sorted[i]]);
    }
    Graph h(static_cast<int>(sorted.size()), std::move(labels));
    for (Vertex u : sorted)
        for (Vertex w : adj_[u])
            if (u < w && index[w] >= 0) h.add_edge(index[u], index[w]);
    h.next_label_ = next_label_;
    return h;
}

std::vector<EdgePair> Graph::edges() const {
    std::vector<EdgePair> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex w : adj_[u])
            if (u < w) out.emplace_back(u, w);
    return out;
}

std::vector<EdgePair> Graph::label_edges() const { return to_labels(*this, edges()); }

bool Graph::operator==(const Graph& o) const { return labels_ == o.labels_ && rows_ == o.rows_; }

Graph complement(const Graph& g) {
    Graph h(g.size(), std::vector<Label>(g.labels().begin(), g.labels().end()));
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

Bitset to_bitset(const Graph& g, std::span<const Vertex> S) {
    Bitset b(g.size());
    for (Vertex v : S) {
        g.check_vertex(v);
        b.set(v);
    }
    return b;
}

int boundary_degree(const Graph& g, std::span<const Vertex> U) {
    Bitset in = to_bitset(g, U);
    int d = 0;
    in.for_each([&](Vertex u) { d += g.row(u).count_andnot(in); });
    return d;
}

bool is_clique(const Graph& g, std::span<const Vertex> S) {
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            if (S[i] != S[j] && !g.adjacent(S[i], S[j])) return false;
    return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> S) {
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            if (S[i] != S[j] && g.adjacent(S[i], S[j])) return false;
    return true;
}

bool is_simplicial(const Graph& g, Vertex v) { return is_clique(g, g.neighbors(v)); }

bool is_universal(const Graph& g, Vertex v) { return g.degree(v) == g.size() - 1; }

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    VertexSet out(g.neighbors(v).begin(), g.neighbors(v).end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

std::vector<EdgePair> true_twins(const Graph& g) {
    std::vector<EdgePair> out;
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v : g.neighbors(u)) {
            if (v < u) continue;
            Bitset nu = g.row(u), nv = g.row(v);
            nu.set(u);
            nv.set(v);
            if (nu == nv) out.emplace_back(u, v);
        }
    return out;
}

bool is_module(const Graph& g, std::span<const Vertex> M) {
    if (M.empty()) return true;
    Bitset in = to_bitset(g, M);
    Bitset outside = g.row(M[0]);
    outside.andnot(in);
    for (Vertex v : M) {
        Bitset o = g.row(v);
        o.andnot(in);
        if (!(o == outside)) return false;
    }
    return true;
}

int edges_within(const Graph& g, std::span<const Vertex> S) {
    Bitset in = to_bitset(g, S);
    int twice = 0;
    in.for_each([&](Vertex u) { twice += g.row(u).count_and(in); });
    return twice / 2;
}

std::vector<EdgePair> to_ids(const Graph& g, std::span<const EdgePair> label_edges) {
    std::vector<EdgePair> out;
    out.reserve(label_edges.size());
    for (const auto& e : label_edges) {
        auto a = g.find(e.first), b = g.find(e.second);
        if (!a || !b) throw input_error("unknown label in edge " + to_string(e));
        out.emplace_back(*a, *b);
    }
    return out;
}

std::vector<EdgePair> to_labels(const Graph& g, std::span<const EdgePair> id_edges) {
    std::vector<EdgePair> out;
    out.reserve(id_edges.size());
    for (const auto& e : id_edges) out.emplace_back(g.label(e.first), g.label(e.second));
    return out;
}

VertexSet vertices_of(const Graph& g, std::span<const Label> labels) {
    VertexSet out;
    out.reserve(labels.size());
    for (Label l : labels) {
        auto v = g.find(l);
        if (!v) throw input_error("unknown label " + std::to_string(l));
        out.push_back(*v);
    }
    return out;
}

Graph delete_edges(Graph g, std::span<const EdgePair> edges) {
    for (const auto& e : edges) g.remove_edge(e.first, e.second);
    return g;
}

Graph add_edges(Graph g, std::span<const EdgePair> edges) {
    for (const auto& e : edges) g.add_edge(e.first, e.second);
    return g;
}

}  // namespace kernelkit
