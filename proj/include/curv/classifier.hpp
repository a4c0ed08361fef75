#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "curv/canonical.hpp"
#include "curv/curvature.hpp"
#include "curv/graph.hpp"

namespace curv {

inline constexpr int kEnumerationCap = 9;

/// Conjunctive structural filter applied to enumerated graphs.
struct EnumerationFilter {
    bool require_connected = false;
    int min_degree = 0;
    bool c4_free = false;
    bool triangle_free = false;
    std::optional<int> max_pendant_edges;

    bool accepts(const Graph& g) const;
};

/// One canonical representative per isomorphism class of n-vertex graphs
/// passing `filter`, sorted by canonical form. Built by adding one edge at a
/// time to canonical representatives; C4- and triangle-freeness are pruned
/// during generation since both are closed under edge deletion.
std::vector<Graph> enumerate_graphs(int n, const EnumerationFilter& filter);

struct Survivor {
    CanonicalForm form;
    Graph graph;
    CurvatureReport report;
};

struct ClassificationResult {
    int n_max = 0;
    std::vector<Survivor> survivors;  // sorted by canonical form
    bool matched_known_set = false;
};

/// C3, C5, F2, F3 and T.
std::vector<Graph> known_classification();

/// Worker count from CURV_THREADS, else the hardware concurrency (at least 1).
int default_thread_count();

/// All connected, min-degree >= 2, C4-free graphs on 3..n_max vertices whose
/// every edge has positive LLY curvature. `threads` = 0 picks the default.
ClassificationResult classify_theorem_15(int n_max, int threads = 0);

/// Same test over an external corpus. Graphs failing the hypotheses are
/// skipped and isomorphic duplicates collapse to one survivor. n_max is the
/// largest order present in the corpus.
ClassificationResult classify_corpus(std::span<const Graph> corpus, int threads = 0);

struct Violation {
    std::string graph6;
    Vertex u = -1;
    Vertex v = -1;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    std::size_t graphs_checked = 0;
    std::size_t items_checked = 0;
    std::vector<Violation> violations{};
    std::vector<std::string> notes{};

    bool passed() const { return violations.empty(); }
};

/// Edges on no 3-, 4- or 5-cycle have curvature exactly 2/dx + 2/dy - 2.
VerificationReport verify_lemma_31(std::span<const Graph> corpus);
/// Edges on no 3- or 4-cycle satisfy the 1/dx + 2/dy - 1 bound in both orientations.
VerificationReport verify_lemma_32(std::span<const Graph> corpus);
/// In positively curved C4-free graphs, an edge with dx >= 4 and dy >= 2 lies on a triangle.
VerificationReport verify_lemma_33(std::span<const Graph> corpus);
/// Non-adjacent pairs are at least as curved as the least curved edge.
VerificationReport verify_edge_reduction(std::span<const Graph> corpus);

VerificationReport verify_theorem_14(const ClassificationResult& result);
VerificationReport verify_theorem_14(int n_max);
VerificationReport verify_theorem_15(const ClassificationResult& result);
VerificationReport verify_theorem_15(int n_max);
VerificationReport verify_pendant_corollary();

/// Primal and dual transport values agree on random distribution pairs over
/// random connected graphs with at most `max_order` vertices, and both
/// certificates are valid.
VerificationReport verify_duality(int samples, std::uint64_t seed, int max_order = 7);
/// Limit-free curvature equals the limit oracle on every edge of `graphs`.
VerificationReport verify_oracle(std::span<const Graph> graphs);

/// Uniformly random order in [2, max_order], edge density in [0.25, 0.75],
/// resampled until connected.
Graph random_connected_graph(std::mt19937_64& rng, int max_order);

/// T, F2, F3, F3', G1, F, C3..C10, K2..K5, stars and paths.
std::vector<Graph> named_families();

/// Every connected graph on 2..max_order vertices (one per class).
std::vector<Graph> connected_graphs_up_to(int max_order);

/// Default corpus for the lemma suites: connected graphs up to 6 vertices plus named families.
std::vector<Graph> default_lemma_corpus();

/// Default oracle corpus: named families plus `random_count` random connected graphs.
std::vector<Graph> default_oracle_corpus(int random_count, std::uint64_t seed);

}  // namespace curv
