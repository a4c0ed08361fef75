#include "curv/families.hpp"

#include <fmt/format.h>

#include <string>
#include <vector>

namespace curv {

namespace {

void require_param(bool ok, std::string_view family, int value) {
    if (!ok) {
        throw GraphError(fmt::format("invalid parameter {} for family '{}'", value, family));
    }
}

}  // namespace

Graph cycle(int n) {
    require_param(n >= 3, "cycle", n);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
    }
    return Graph(n, edges);
}

Graph path(int n) {
    require_param(n >= 1, "path", n);
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1});
    }
    return Graph(n, edges);
}

Graph complete(int n) {
    require_param(n >= 1, "complete", n);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            edges.push_back({i, j});
        }
    }
    return Graph(n, edges);
}

Graph star(int n) {
    require_param(n >= 2, "star", n);
    std::vector<Edge> edges;
    for (Vertex i = 1; i < n; ++i) {
        edges.push_back({0, i});
    }
    return Graph(n, edges);
}

Graph friendship(int k) {
    require_param(k >= 1, "friendship", k);
    std::vector<Edge> edges;
    for (int t = 0; t < k; ++t) {
        Vertex a = 2 * t + 1;
        Vertex b = 2 * t + 2;
        edges.push_back({0, a});
        edges.push_back({0, b});
        edges.push_back({a, b});
    }
    return Graph(2 * k + 1, edges);
}

Graph graph_T() {
    return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 5}, {5, 6}, {4, 6}});
}

Graph graph_F3_prime() {
    auto edges = friendship(3).edges();
    edges.push_back({0, 7});
    return Graph(8, edges);
}

Graph graph_G1() {
    constexpr Vertex x = 0, y = 1, t = 2, v = 3, q = 4, u = 5, w = 6;
    return Graph(7, {{x, y}, {y, t}, {t, v}, {v, w}, {w, x}, {x, u}, {u, q}, {q, v}});
}

Graph graph_F() {
    constexpr Vertex u1 = 0, u2 = 1, x = 2, w = 3, y = 4, v1 = 5, v2 = 6;
    return Graph(7, {{x, u1}, {x, u2}, {u1, u2}, {x, w}, {x, y}, {w, y}, {y, v1}, {y, v2}, {v1, v2}});
}

Graph family(std::string_view name, std::optional<int> param) {
    auto need = [&]() {
        if (!param) {
            throw GraphError(fmt::format("family '{}' requires a parameter", name));
        }
        return *param;
    };
    if (name == "cycle") return cycle(need());
    if (name == "path") return path(need());
    if (name == "complete") return complete(need());
    if (name == "star") return star(need());
    if (name == "friendship") return friendship(need());
    if (name == "t") return graph_T();
    if (name == "f3prime") return graph_F3_prime();
    if (name == "g1") return graph_G1();
    if (name == "f") return graph_F();
    throw GraphError(fmt::format("unknown family '{}'", name));
}

}  // namespace curv
