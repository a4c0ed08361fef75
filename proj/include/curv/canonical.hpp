#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "curv/graph.hpp"

namespace curv {

/// Largest order whose upper-triangle bitstring fits the 64-bit packing.
inline constexpr int kCanonicalHardCap = 11;
inline constexpr int kCanonicalDefaultCap = 10;

/**
 * Isomorphism-class key: the lexicographically minimal upper-triangle
 * adjacency bitstring, bits ordered column by column as in graph6
 * ((0,1), (0,2), (1,2), (0,3), ...), first bit most significant.
 *
 * Orders are compared first, so forms of different orders never collide.
 */
struct CanonicalForm {
    int n = 0;
    std::uint64_t bits = 0;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

    /// The bitstring as '0'/'1' characters.
    std::string to_string() const;
};

/// Minimizes over all vertex orderings compatible with the stable
/// color-refinement partition (seeded by degree). Throws GraphError when
/// the order exceeds `max_order` (at most kCanonicalHardCap).
CanonicalForm canonical_form(const Graph& g, int max_order = kCanonicalDefaultCap);

/// The representative graph whose adjacency bitstring is `form`.
Graph canonical_graph(const CanonicalForm& form);

bool is_isomorphic(const Graph& a, const Graph& b, int max_order = kCanonicalDefaultCap);

}  // namespace curv
