#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kernelkit/bitset.hpp"

namespace kernelkit {

using Vertex = int;
using Label = int;
using VertexSet = std::vector<Vertex>;

/// Raised for malformed arguments: out-of-range ids, self loops, broken preconditions.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Unordered pair {first, second} with first < second.
struct EdgePair {
    int first = 0;
    int second = 0;

    EdgePair() = default;
    EdgePair(int a, int b);

    auto operator<=>(const EdgePair&) const = default;
};

/// Simple undirected graph over ids 0..n-1, each carrying a stable label.
///
/// Adjacency is kept twice: a bitset row per vertex for O(1) membership and
/// set algebra, and a sorted neighbour list for iteration. Removing vertices
/// compacts ids while preserving labels and their relative order, so id order
/// always agrees with label order.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<Label> labels);

    static Graph from_edges(int n, std::span<const EdgePair> edges);

    int size() const { return static_cast<int>(labels_.size()); }
    std::size_t num_edges() const { return edges_; }

    bool adjacent(Vertex u, Vertex v) const;
    std::span<const Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const;
    const Bitset& row(Vertex v) const;

    Label label(Vertex v) const;
    std::span<const Label> labels() const { return labels_; }
    std::optional<Vertex> find(Label l) const;
    /// Smallest label greater than every label in use.
    Label next_label() const { return next_label_; }

    /// Returns false if the edge was already present.
    bool add_edge(Vertex u, Vertex v);
    /// Returns false if the edge was absent.
    bool remove_edge(Vertex u, Vertex v);

    /// Appends an isolated vertex with a fresh label and returns its id.
    Vertex add_vertex();

    /// Deletes the given vertices; remaining ids are compacted in order.
    void remove_vertices(std::span<const Vertex> vs);
    void remove_vertex(Vertex v) { remove_vertices(std::span<const Vertex>(&v, 1)); }

    Graph induced(std::span<const Vertex> keep) const;
    std::vector<EdgePair> edges() const;
    /// Edges reported as label pairs.
    std::vector<EdgePair> label_edges() const;

    bool operator==(const Graph& o) const;

    void check_vertex(Vertex v) const;

private:
    std::vector<Bitset> rows_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Label> labels_;
    std::size_t edges_ = 0;
    Label next_label_ = 0;
};

Graph complement(const Graph& g);

/// Number of edges with exactly one end in U.
int boundary_degree(const Graph& g, std::span<const Vertex> U);
bool is_clique(const Graph& g, std::span<const Vertex> S);
bool is_independent(const Graph& g, std::span<const Vertex> S);
bool is_simplicial(const Graph& g, Vertex v);
bool is_universal(const Graph& g, Vertex v);
/// All pairs u < v with N[u] = N[v].
std::vector<EdgePair> true_twins(const Graph& g);
/// N(M) = N(v) \ M for every v in M.
bool is_module(const Graph& g, std::span<const Vertex> M);
/// Closed neighbourhood as a sorted vertex list.
VertexSet closed_neighborhood(const Graph& g, Vertex v);
/// Number of edges with both ends in S.
int edges_within(const Graph& g, std::span<const Vertex> S);

/// Bitset of the given vertices sized for g.
Bitset to_bitset(const Graph& g, std::span<const Vertex> S);

/// Map label pairs to id pairs in g; throws input_error on unknown labels.
std::vector<EdgePair> to_ids(const Graph& g, std::span<const EdgePair> label_edges);
std::vector<EdgePair> to_labels(const Graph& g, std::span<const EdgePair> id_edges);
/// Ids of the given labels; throws input_error on unknown labels.
VertexSet vertices_of(const Graph& g, std::span<const Label> labels);

/// g minus / plus an edge set given in ids.
Graph delete_edges(Graph g, std::span<const EdgePair> edges);
Graph add_edges(Graph g, std::span<const EdgePair> edges);

std::string to_string(const EdgePair& e);

}  // namespace kernelkit
