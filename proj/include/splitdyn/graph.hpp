#ifndef SPLITDYN_GRAPH_HPP
#define SPLITDYN_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "splitdyn/errors.hpp"

namespace splitdyn {

using Vertex = int;
using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

enum class ObstructionKind { TwoK2, C4, C5 };

struct Obstruction {
    ObstructionKind kind;
    std::vector<Vertex> vertices; // sorted, size 4 or 5
};

inline std::pair<Vertex, Vertex> canonical_edge(Vertex u, Vertex v) {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

// Undirected simple graph on the fixed vertex set {1, ..., n}.
// Adjacency is kept in ordered sets; all membership tests are O(log n).
class Graph {
public:
    explicit Graph(Vertex n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
        if (n < 1 || static_cast<std::int64_t>(n) > (1LL << 31) - 1)
            throw InvalidSize("Graph: vertex count out of range");
    }

    Vertex size() const { return n_; }
    std::int64_t edge_count() const { return edge_count_; }

    bool valid(Vertex v) const { return v >= 1 && v <= n_; }

    void check_vertex(Vertex v) const {
        if (!valid(v)) throw InvalidVertex("vertex out of range");
    }

    void check_pair(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InvalidVertex("loops are forbidden");
    }

    bool has_edge(Vertex u, Vertex v) const {
        if (u == v) return false;
        return adj_[u].count(v) != 0;
    }

    // Flips membership of {u,v}; returns true iff the edge is now present.
    bool toggle_edge(Vertex u, Vertex v) {
        check_pair(u, v);
        auto it = adj_[u].find(v);
        if (it != adj_[u].end()) {
            adj_[u].erase(it);
            adj_[v].erase(u);
            --edge_count_;
            return false;
        }
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++edge_count_;
        return true;
    }

    const std::set<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

private:
    Vertex n_;
    std::vector<std::set<Vertex>> adj_;
    std::int64_t edge_count_ = 0;
};

// Degree-based recognition of the induced subgraph on |U| = 4 or 5 vertices:
//   2K2: all induced degrees 1;
//   C4:  four vertices, all induced degrees 2 (the only such graph);
//   C5:  five vertices, all induced degrees 2 (a 5-vertex 2-regular graph
//        is a single cycle).
inline std::optional<ObstructionKind> classify_obstruction(const Graph& g,
                                                           const std::vector<Vertex>& u) {
    if (u.size() != 4 && u.size() != 5) return std::nullopt;
    for (std::size_t i = 0; i < u.size(); ++i) {
        g.check_vertex(u[i]);
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] == u[j]) return std::nullopt;
    }
    int deg[5] = {0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (g.has_edge(u[i], u[j])) {
                ++deg[i];
                ++deg[j];
            }
    bool all1 = true, all2 = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
        all1 = all1 && deg[i] == 1;
        all2 = all2 && deg[i] == 2;
    }
    if (u.size() == 4) {
        if (all1) return ObstructionKind::TwoK2;
        if (all2) return ObstructionKind::C4;
        return std::nullopt;
    }
    if (all2) return ObstructionKind::C5;
    return std::nullopt;
}

inline bool induces(const Graph& g, const std::vector<Vertex>& u, ObstructionKind kind) {
    std::size_t want = kind == ObstructionKind::C5 ? 5 : 4;
    if (u.size() != want) throw SizeMismatch("induces: wrong vertex set size for kind");
    auto got = classify_obstruction(g, u);
    return got.has_value() && *got == kind;
}

} // namespace splitdyn

#endif
