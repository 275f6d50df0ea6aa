#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "kernelkit/graph.hpp"
#include "kernelkit/problem.hpp"

namespace testsupport {

using kernelkit::EdgePair;
using kernelkit::Graph;

inline Graph make(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline Graph two_k2() { return make(4, {{0, 1}, {2, 3}}); }

// All vertex pairs of an n-vertex graph, in lexicographic order.
inline std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

// Graph number `code` among all labelled graphs on n vertices (bit i = pair i).
inline Graph from_code(int n, std::uint64_t code) {
    Graph g(n);
    auto pairs = all_pairs(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((code >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
    return g;
}

// ---- naive recognisers: look at every vertex subset directly ----

inline bool adj(const Graph& g, int a, int b) { return g.adjacent(a, b); }

inline int edges_among(const Graph& g, const std::vector<int>& s) {
    int c = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) c += adj(g, s[i], s[j]);
    return c;
}

inline std::vector<int> degrees_among(const Graph& g, const std::vector<int>& s) {
    std::vector<int> d;
    for (int a : s) {
        int c = 0;
        for (int b : s) c += (a != b && adj(g, a, b));
        d.push_back(c);
    }
    std::sort(d.begin(), d.end());
    return d;
}

// Induced-subgraph types identified by edge count and degree sequence.
inline bool naive_p3(const Graph& g, const std::vector<int>& s) {
    return s.size() == 3 && degrees_among(g, s) == std::vector<int>{1, 1, 2};
}
inline bool naive_p4(const Graph& g, const std::vector<int>& s) {
    return s.size() == 4 && degrees_among(g, s) == std::vector<int>{1, 1, 2, 2};
}
inline bool naive_c4(const Graph& g, const std::vector<int>& s) {
    return s.size() == 4 && degrees_among(g, s) == std::vector<int>{2, 2, 2, 2};
}
inline bool naive_2k2(const Graph& g, const std::vector<int>& s) {
    return s.size() == 4 && degrees_among(g, s) == std::vector<int>{1, 1, 1, 1};
}
inline bool naive_c5(const Graph& g, const std::vector<int>& s) {
    // C5 is the only 2-regular graph on five vertices.
    return s.size() == 5 && degrees_among(g, s) == std::vector<int>{2, 2, 2, 2, 2};
}

template <typename F>
void for_each_subset(int n, int size, F&& f) {
    std::vector<int> s;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(s.size()) == size) {
            f(s);
            return;
        }
        for (int v = from; v < n; ++v) {
            s.push_back(v);
            self(self, v + 1);
            s.pop_back();
        }
    };
    rec(rec, 0);
}

inline int naive_count(const Graph& g, int size, bool (*pred)(const Graph&, const std::vector<int>&)) {
    int c = 0;
    for_each_subset(g.size(), size, [&](const std::vector<int>& s) { c += pred(g, s); });
    return c;
}

inline bool naive_cluster(const Graph& g) { return naive_count(g, 3, naive_p3) == 0; }
inline bool naive_tp(const Graph& g) { return naive_count(g, 4, naive_p4) + naive_count(g, 4, naive_c4) == 0; }
inline bool naive_pseudo_split(const Graph& g) {
    return naive_count(g, 4, naive_2k2) + naive_count(g, 4, naive_c4) == 0;
}
inline bool naive_split(const Graph& g) { return naive_pseudo_split(g) && naive_count(g, 5, naive_c5) == 0; }

inline bool naive_stc_ok(const Graph& g, const std::vector<std::pair<int, int>>& weak) {
    Graph strong = g;
    for (auto [u, v] : weak) strong.remove_edge(u, v);
    for (int c = 0; c < g.size(); ++c)
        for (int a = 0; a < g.size(); ++a)
            for (int b = a + 1; b < g.size(); ++b)
                if (a != c && b != c && strong.adjacent(a, c) && strong.adjacent(b, c) && !g.adjacent(a, b))
                    return false;
    return true;
}

// Minimum modification by trying every subset of the allowed pairs in order of
// size. Independent of the library's branching search; only for small graphs.
inline int brute_opt(kernelkit::ProblemKind p, const Graph& g, int cap) {
    using kernelkit::ProblemKind;
    bool completion = kernelkit::is_completion(p);
    std::vector<std::pair<int, int>> pool;
    for (auto [u, v] : all_pairs(g.size()))
        if (g.adjacent(u, v) != completion) pool.emplace_back(u, v);
    auto member = [&](const Graph& h, const std::vector<std::pair<int, int>>& chosen) {
        switch (p) {
            case ProblemKind::ClusterDeletion: return naive_cluster(h);
            case ProblemKind::StrongTriadicClosure: return naive_stc_ok(g, chosen);
            case ProblemKind::TPCompletion: return naive_tp(h);
            case ProblemKind::SplitDeletion:
            case ProblemKind::SplitCompletion: return naive_split(h);
            case ProblemKind::PseudoSplitDeletion:
            case ProblemKind::PseudoSplitCompletion: return naive_pseudo_split(h);
        }
        return false;
    };
    std::vector<std::pair<int, int>> chosen;
    for (int size = 0; size <= std::min<int>(cap, pool.size()); ++size) {
        bool found = false;
        auto rec = [&](auto&& self, std::size_t from) -> void {
            if (found) return;
            if (static_cast<int>(chosen.size()) == size) {
                Graph h = g;
                for (auto [u, v] : chosen) completion ? (void)h.add_edge(u, v) : (void)h.remove_edge(u, v);
                found = member(h, chosen);
                return;
            }
            for (std::size_t i = from; i < pool.size() && !found; ++i) {
                chosen.push_back(pool[i]);
                self(self, i + 1);
                chosen.pop_back();
            }
        };
        rec(rec, 0);
        if (found) return size;
    }
    return -1;
}

}  // namespace testsupport
