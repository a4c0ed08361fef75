#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace curv {

using Vertex = int;

/// Unordered vertex pair, stored with first < second once normalized.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
public:
    explicit GraphError(const std::string& what) : std::invalid_argument(what) {}
};

/**
 * Finite undirected simple graph on vertices 0..n-1.
 *
 * Immutable after construction. Holds both a dense adjacency matrix (for O(1)
 * adjacency queries) and sorted neighbor lists.
 */
class Graph {
public:
    /// Builds a graph with the given edges. Duplicate pairs (in either
    /// orientation) are merged. Throws GraphError on self-loops,
    /// out-of-range endpoints, or n < 1.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return n_; }
    std::size_t size() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const {
        return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
    }
    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    /// Copy of this graph with edge {u, v} added.
    Graph with_edge(Vertex u, Vertex v) const;

    /// Relabels vertex i to perm[i].
    Graph permuted(std::span<const Vertex> perm) const;

    void check_vertex(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_;
    std::size_t edge_count_ = 0;
    std::vector<char> adj_;
    std::vector<std::vector<Vertex>> nbrs_;
};

/// Hop distance; std::nullopt marks an unreachable vertex.
using HopDistance = std::optional<int>;

std::vector<HopDistance> bfs_distances(const Graph& g, Vertex source);

/// All-pairs hop distances by repeated BFS.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);

    int order() const { return n_; }
    HopDistance at(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    bool reachable(Vertex u, Vertex v) const { return at(u, v).has_value(); }

    /// Distance between mutually reachable vertices; throws otherwise.
    int require(Vertex u, Vertex v) const;

private:
    int n_;
    std::vector<HopDistance> d_;
};

int min_degree(const Graph& g);
int max_degree(const Graph& g);
bool is_connected(const Graph& g);
int count_degree(const Graph& g, int d);

/// True iff some cycle of length exactly k (3, 4 or 5) passes through edge {u, v}.
bool edge_in_cycle(const Graph& g, Vertex u, Vertex v, int k);

/// No pair of distinct vertices shares two common neighbors.
bool is_c4_free(const Graph& g);
bool is_triangle_free(const Graph& g);

}  // namespace curv
