#pragma once

#include <optional>
#include <string_view>

#include "curv/graph.hpp"

namespace curv {

/// C_n, n >= 3.
Graph cycle(int n);
/// P_n on n >= 1 vertices.
Graph path(int n);
/// K_n, n >= 1.
Graph complete(int n);
/// Star on n >= 2 vertices: center 0 joined to leaves 1..n-1 (K_{1,n-1}).
Graph star(int n);
/// Friendship graph F_k: hub 0, leaves paired as (1,2), (3,4), ...
Graph friendship(int k);

/// Triangle a1a2a3 and claw c-l1,l2,l3 joined by the matching li-ai.
/// Labels: c = 0, l1..l3 = 1..3, a1..a3 = 4..6.
Graph graph_T();

/// F_3 plus one pendant vertex (7) on the hub; hub degree 7.
Graph graph_F3_prime();

/// Theta graph made of two 5-cycles sharing the path v-w-x.
/// Labels: x = 0, y = 1, t = 2, v = 3, q = 4, u = 5, w = 6.
/// Cycles x-y-t-v-w-x and x-u-q-v-w-x.
Graph graph_G1();

/// Three triangles x u1 u2, x w y, y v1 v2 chained through x and y.
/// Labels: u1 = 0, u2 = 1, x = 2, w = 3, y = 4, v1 = 5, v2 = 6.
Graph graph_F();

/// Looks up a family by its short name: cycle, path, complete, star,
/// friendship, t, f3prime, g1, f. Parameterized families require `param`;
/// throws GraphError on an unknown name or invalid parameter.
Graph family(std::string_view name, std::optional<int> param = std::nullopt);

}  // namespace curv
