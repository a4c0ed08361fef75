#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curv/graph.hpp"
#include "curv/rational.hpp"

namespace curv {

class CurvatureError : public std::invalid_argument {
public:
    explicit CurvatureError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by upper_bound_from_potential when the supplied function is not
/// an admissible competitor. Carries the offending pair.
class InfeasiblePotential : public CurvatureError {
public:
    InfeasiblePotential(const std::string& what, Vertex a, Vertex b) : CurvatureError(what), first(a), second(b) {}
    Vertex first;
    Vertex second;
};

/// Finitely supported probability measure on vertices. The support is kept
/// sorted by vertex; every stored mass is positive and the masses sum to 1.
class Distribution {
public:
    /// Zero masses are dropped. Throws CurvatureError on negative masses,
    /// repeated vertices or a total different from 1.
    static Distribution from_masses(std::vector<std::pair<Vertex, Rational>> masses);
    static Distribution point_mass(Vertex v) { return from_masses({{v, Rational(1)}}); }

    const std::vector<std::pair<Vertex, Rational>>& support() const { return support_; }
    Rational mass(Vertex v) const;

    friend bool operator==(const Distribution&, const Distribution&) = default;

private:
    std::vector<std::pair<Vertex, Rational>> support_;
};

using Potential = std::map<Vertex, Rational>;

struct TransportEntry {
    Vertex source;
    Vertex target;
    Rational mass;
};

/// A coupling (nonzero entries only) and its cost.
struct TransportCertificate {
    std::vector<TransportEntry> coupling;
    Rational value;
};

/// A 1-Lipschitz potential on the joint support and its dual objective.
struct LipschitzCertificate {
    Potential potential;
    Rational value;
};

struct TransportResult {
    Rational value;
    TransportCertificate certificate;
};

struct DualResult {
    Rational value;
    LipschitzCertificate certificate;
};

/// alpha at x, (1 - alpha) / deg(x) on each neighbor.
Distribution lazy_distribution(const Graph& g, Vertex x, const Rational& alpha);

/// Optimal transport cost as the primal coupling LP.
TransportResult wasserstein(const Distribution& m1, const Distribution& m2, const DistanceMatrix& d);

/// The same quantity as a separate LP over 1-Lipschitz potentials, with the
/// first support vertex pinned to 0.
DualResult kantorovich_dual(const Distribution& m1, const Distribution& m2, const DistanceMatrix& d);

/// True iff `coupling` is nonnegative with marginals m1 and m2; on success
/// the cost is written to `cost`.
bool is_valid_coupling(const Distribution& m1, const Distribution& m2, const std::vector<TransportEntry>& coupling,
                       const DistanceMatrix& d, Rational& cost);

/// True iff |f(u) - f(v)| <= d(u, v) for every pair of vertices in the domain.
bool is_lipschitz(const Potential& f, const DistanceMatrix& d);

/// Sum over the potential's domain of f(v) (m1(v) - m2(v)).
Rational dual_objective(const Potential& f, const Distribution& m1, const Distribution& m2);

Rational alpha_ricci(const Graph& g, Vertex x, Vertex y, const Rational& alpha);
Rational alpha_ricci(const Graph& g, const DistanceMatrix& d, Vertex x, Vertex y, const Rational& alpha);

struct LlyResult {
    Rational kappa;
    /// Minimizing potential on N[x] u N[y], with f(x) = 0.
    Potential potential;
};

/// Lin-Lu-Yau curvature from the limit-free Laplacian formulation: the
/// minimum of grad_xy(Laplacian f) over 1-Lipschitz f with f(y) - f(x) = d(x, y).
LlyResult lly_curvature_with_witness(const Graph& g, const DistanceMatrix& d, Vertex x, Vertex y);
Rational lly_curvature(const Graph& g, Vertex x, Vertex y);
Rational lly_curvature(const Graph& g, const DistanceMatrix& d, Vertex x, Vertex y);

inline constexpr int kLimitOracleCap = 64;

/// Independent route: evaluates kappa_alpha / (1 - alpha) at alpha = 1 - 1/k
/// for k = max(deg x, deg y) + 2, +3, ... until two consecutive values
/// agree exactly. Throws CurvatureError if k passes kLimitOracleCap.
Rational lly_via_limit(const Graph& g, Vertex x, Vertex y);
Rational lly_via_limit(const Graph& g, const DistanceMatrix& d, Vertex x, Vertex y);

struct CurvatureRow {
    Vertex u;
    Vertex v;
    Rational kappa;
};

struct CurvatureReport {
    Graph graph;
    std::vector<CurvatureRow> rows;  // one per edge, sorted by (u, v)
    Rational min_kappa;
    bool positively_curved = false;
};

/// Per-edge LLY curvature. Throws CurvatureError for disconnected or
/// edgeless graphs.
CurvatureReport curvature_report(const Graph& g);

/// 2/dx + 2/dy - 2: the curvature of an edge on no 3-, 4- or 5-cycle.
Rational lemma31_value(int dx, int dy);
/// 1/dx + 2/dy - 1: upper bound for an edge on no 3- or 4-cycle.
Rational lemma32_bound(int dx, int dy);

/// grad_xy(Laplacian f) for a caller-supplied potential, which bounds the
/// curvature from above. `f` must be defined on N[x] u N[y], be 1-Lipschitz
/// for graph distances and satisfy f(y) - f(x) = d(x, y); otherwise
/// InfeasiblePotential names the violated pair.
Rational upper_bound_from_potential(const Graph& g, Vertex x, Vertex y, const Potential& f);

}  // namespace curv
