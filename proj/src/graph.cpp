#include "curv/graph.hpp"

#include <algorithm>
#include <deque>
#include <fmt/format.h>

namespace curv {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 1) {
        throw GraphError(fmt::format("graph needs at least one vertex, got n = {}", n));
    }
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    nbrs_.resize(n);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            throw GraphError(fmt::format("edge ({}, {}) has an endpoint outside 0..{}", e.u, e.v, n - 1));
        }
        if (e.u == e.v) {
            throw GraphError(fmt::format("self-loop at vertex {}", e.u));
        }
        char& cell = adj_[static_cast<std::size_t>(e.u) * n + e.v];
        if (cell != 0) {
            continue;
        }
        cell = 1;
        adj_[static_cast<std::size_t>(e.v) * n + e.u] = 1;
        nbrs_[e.u].push_back(e.v);
        nbrs_[e.v].push_back(e.u);
        ++edge_count_;
    }
    for (auto& list : nbrs_) {
        std::sort(list.begin(), list.end());
    }
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw GraphError(fmt::format("vertex {} out of range 0..{}", v, n_ - 1));
    }
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return nbrs_[v];
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(nbrs_[v].size());
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : nbrs_[u]) {
            if (u < v) {
                out.push_back({u, v});
            }
        }
    }
    return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
    auto list = edges();
    list.push_back({u, v});
    return Graph(n_, list);
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
    if (perm.size() != static_cast<std::size_t>(n_)) {
        throw GraphError("permutation length does not match vertex count");
    }
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (const Edge& e : edges()) {
        out.push_back({perm[e.u], perm[e.v]});
    }
    return Graph(n_, out);
}

std::vector<HopDistance> bfs_distances(const Graph& g, Vertex source) {
    g.check_vertex(source);
    std::vector<HopDistance> dist(g.order());
    dist[source] = 0;
    std::deque<Vertex> queue{source};
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (!dist[w]) {
                dist[w] = *dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()) {
    d_.reserve(static_cast<std::size_t>(n_) * n_);
    for (Vertex s = 0; s < n_; ++s) {
        auto row = bfs_distances(g, s);
        d_.insert(d_.end(), row.begin(), row.end());
    }
}

int DistanceMatrix::require(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
        throw GraphError(fmt::format("vertex pair ({}, {}) out of range", u, v));
    }
    HopDistance d = at(u, v);
    if (!d) {
        throw GraphError(fmt::format("vertices {} and {} are not connected", u, v));
    }
    return *d;
}

int min_degree(const Graph& g) {
    int best = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) {
        best = std::min(best, g.degree(v));
    }
    return best;
}

int max_degree(const Graph& g) {
    int best = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) {
        best = std::max(best, g.degree(v));
    }
    return best;
}

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::all_of(dist.begin(), dist.end(), [](const HopDistance& d) { return d.has_value(); });
}

int count_degree(const Graph& g, int d) {
    int count = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        count += g.degree(v) == d ? 1 : 0;
    }
    return count;
}

bool edge_in_cycle(const Graph& g, Vertex u, Vertex v, int k) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (!g.adjacent(u, v)) {
        throw GraphError(fmt::format("({}, {}) is not an edge", u, v));
    }
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    switch (k) {
        case 3:
            for (Vertex a : nu) {
                if (a != v && g.adjacent(a, v)) {
                    return true;
                }
            }
            return false;
        case 4:
            for (Vertex a : nu) {
                if (a == v) continue;
                for (Vertex b : nv) {
                    if (b != u && b != a && g.adjacent(a, b)) {
                        return true;
                    }
                }
            }
            return false;
        case 5:
            for (Vertex a : nu) {
                if (a == v) continue;
                for (Vertex b : nv) {
                    if (b == u || b == a) continue;
                    for (Vertex c : g.neighbors(a)) {
                        if (c != u && c != v && c != b && g.adjacent(c, b)) {
                            return true;
                        }
                    }
                }
            }
            return false;
        default:
            throw GraphError(fmt::format("cycle length {} not supported (expected 3, 4 or 5)", k));
    }
}

bool is_c4_free(const Graph& g) {
    const int n = g.order();
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            int common = 0;
            for (Vertex w : g.neighbors(a)) {
                if (g.adjacent(w, b) && ++common > 1) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_triangle_free(const Graph& g) {
    for (const Edge& e : g.edges()) {
        for (Vertex w : g.neighbors(e.u)) {
            if (g.adjacent(w, e.v)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace curv
