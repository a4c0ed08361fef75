#include <gtest/gtest.h>

#include <random>

#include "curv/classifier.hpp"
#include "curv/curvature.hpp"
#include "curv/families.hpp"
#include "oracles.hpp"

namespace curv {
namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

TEST(LazyDistribution, Definitions) {
    const Graph c3 = cycle(3);
    EXPECT_EQ(lazy_distribution(c3, 0, 0), Distribution::from_masses({{1, q(1, 2)}, {2, q(1, 2)}}));
    const auto half = lazy_distribution(c3, 0, q(1, 2));
    EXPECT_EQ(half.mass(0), q(1, 2));
    EXPECT_EQ(half.mass(1), q(1, 4));
    EXPECT_EQ(half.mass(2), q(1, 4));
    const auto claw = lazy_distribution(star(4), 0, q(1, 4));
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(claw.mass(v), q(1, 4));
}

TEST(LazyDistribution, Errors) {
    EXPECT_THROW(lazy_distribution(cycle(3), 0, 1), CurvatureError);
    EXPECT_THROW(lazy_distribution(cycle(3), 0, q(-1, 2)), CurvatureError);
    EXPECT_THROW(lazy_distribution(Graph(2, {}), 0, 0), CurvatureError);
}

TEST(Distribution, Invariants) {
    EXPECT_THROW(Distribution::from_masses({{0, q(1, 2)}}), CurvatureError);
    EXPECT_THROW(Distribution::from_masses({{0, q(1, 2)}, {0, q(1, 2)}}), CurvatureError);
    EXPECT_THROW(Distribution::from_masses({{0, q(3, 2)}, {1, q(-1, 2)}}), CurvatureError);
    EXPECT_EQ(Distribution::from_masses({{0, 1}, {1, 0}}).support().size(), 1u);
}

TEST(Wasserstein, IdenticalMeasuresCostNothing) {
    const Graph g = cycle(5);
    const DistanceMatrix d(g);
    const auto m = lazy_distribution(g, 2, q(1, 3));
    const auto result = wasserstein(m, m, d);
    EXPECT_EQ(result.value, 0);
    for (const auto& e : result.certificate.coupling) EXPECT_EQ(e.source, e.target);
    const auto dual = kantorovich_dual(m, m, d);
    EXPECT_EQ(dual.value, 0);
}

TEST(Wasserstein, PointMasses) {
    const Graph g = cycle(6);
    const DistanceMatrix d(g);
    EXPECT_EQ(wasserstein(Distribution::point_mass(0), Distribution::point_mass(3), d).value, 3);
    const auto dual = kantorovich_dual(Distribution::point_mass(0), Distribution::point_mass(1), d);
    EXPECT_EQ(dual.value, 1);
    EXPECT_EQ(dual.certificate.potential.at(0) - dual.certificate.potential.at(1), 1);
}

TEST(Wasserstein, AdjacentCycleWalksMatchBasisEnumeration) {
    const Graph g = cycle(5);
    const DistanceMatrix d(g);
    for (const Rational& alpha : {q(0), q(1, 5), q(1, 2), q(4, 5)}) {
        const auto m0 = lazy_distribution(g, 0, alpha);
        const auto m1 = lazy_distribution(g, 1, alpha);
        const Rational expected = testing::brute_force_transport(m0, m1, d);
        EXPECT_EQ(wasserstein(m0, m1, d).value, expected) << "alpha " << alpha;
    }
    EXPECT_EQ(testing::brute_force_transport(lazy_distribution(g, 0, 0), lazy_distribution(g, 1, 0), d), 1);
}

TEST(Wasserstein, RandomInstancesMatchBasisEnumeration) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> w(1, 4);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = random_connected_graph(rng, 6);
        const DistanceMatrix d(g);
        auto random_measure = [&](int size) {
            std::vector<std::pair<Vertex, Rational>> masses;
            std::vector<int> weights;
            int total = 0;
            for (int i = 0; i < size; ++i) total += weights.emplace_back(w(rng));
            std::vector<Vertex> vs(g.order());
            std::iota(vs.begin(), vs.end(), 0);
            std::shuffle(vs.begin(), vs.end(), rng);
            for (int i = 0; i < size; ++i) masses.emplace_back(vs[i], Rational(weights[i], total));
            return Distribution::from_masses(masses);
        };
        const int size = std::min(g.order(), 3);
        const auto m1 = random_measure(size);
        const auto m2 = random_measure(size);
        EXPECT_EQ(wasserstein(m1, m2, d).value, testing::brute_force_transport(m1, m2, d));
    }
}

TEST(Wasserstein, Errors) {
    const Graph g(4, {{0, 1}, {2, 3}});
    const DistanceMatrix d(g);
    EXPECT_THROW(wasserstein(Distribution::point_mass(0), Distribution::point_mass(2), d), CurvatureError);
    EXPECT_THROW(kantorovich_dual(Distribution::point_mass(0), Distribution::point_mass(3), d), CurvatureError);
}

TEST(Duality, CertificatesSandwichTheOptimum) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_connected_graph(rng, 7);
        const DistanceMatrix d(g);
        const Vertex x = 0;
        const Vertex y = g.order() - 1;
        const auto m1 = lazy_distribution(g, x, q(1, 3));
        const auto m2 = lazy_distribution(g, y, q(1, 3));
        const auto primal = wasserstein(m1, m2, d);
        const auto dual = kantorovich_dual(m1, m2, d);
        EXPECT_EQ(primal.value, dual.value);

        Rational cost;
        ASSERT_TRUE(is_valid_coupling(m1, m2, primal.certificate.coupling, d, cost));
        EXPECT_EQ(cost, primal.value);
        ASSERT_TRUE(is_lipschitz(dual.certificate.potential, d));
        EXPECT_EQ(dual_objective(dual.certificate.potential, m1, m2), dual.value);

        // Product coupling is feasible, so it costs at least W.
        std::vector<TransportEntry> product;
        for (const auto& [a, ma] : m1.support())
            for (const auto& [b, mb] : m2.support()) product.push_back({a, b, ma * mb});
        ASSERT_TRUE(is_valid_coupling(m1, m2, product, d, cost));
        EXPECT_GE(cost, primal.value);

        // Distance to a fixed vertex is 1-Lipschitz, so its dual value is at most W.
        Potential f;
        for (const auto& [v, value] : dual.certificate.potential) f[v] = *d.at(v, x);
        EXPECT_LE(dual_objective(f, m1, m2), primal.value);
    }
}

TEST(AlphaRicci, SingleEdge) {
    const Graph k2 = complete(2);
    EXPECT_EQ(alpha_ricci(k2, 0, 1, q(3, 4)), q(1, 2));
    EXPECT_EQ(alpha_ricci(k2, 0, 1, q(1, 2)), 1);
}

TEST(AlphaRicci, FiveCyclePastLastBreakpoint) {
    EXPECT_EQ(alpha_ricci(cycle(5), 0, 1, q(4, 5)), q(1, 10));
}

TEST(AlphaRicci, Errors) {
    EXPECT_THROW(alpha_ricci(cycle(5), 1, 1, q(1, 2)), CurvatureError);
    EXPECT_THROW(alpha_ricci(Graph(4, {{0, 1}, {2, 3}}), 0, 2, q(1, 2)), CurvatureError);
}

TEST(Lly, NamedValues) {
    EXPECT_EQ(lly_curvature(cycle(3), 0, 1), q(3, 2));
    EXPECT_EQ(lly_curvature(cycle(5), 0, 1), q(1, 2));
    EXPECT_EQ(lly_curvature(cycle(6), 0, 1), 0);
    EXPECT_EQ(lly_curvature(complete(2), 0, 1), 2);
}

TEST(Lly, LimitOracleNamedValues) {
    EXPECT_EQ(lly_via_limit(cycle(3), 0, 1), q(3, 2));
    EXPECT_EQ(lly_via_limit(complete(2), 0, 1), 2);
    for (const Graph& g : {graph_T(), friendship(2), friendship(3), graph_F3_prime(), graph_G1()}) {
        const DistanceMatrix d(g);
        for (const Edge& e : g.edges()) {
            EXPECT_EQ(lly_curvature(g, d, e.u, e.v), lly_via_limit(g, d, e.u, e.v));
        }
    }
}

TEST(Lly, Errors) {
    EXPECT_THROW(lly_curvature(cycle(4), 2, 2), CurvatureError);
    EXPECT_THROW(lly_curvature(Graph(4, {{0, 1}, {2, 3}}), 1, 2), CurvatureError);
    EXPECT_THROW(lly_via_limit(Graph(4, {{0, 1}, {2, 3}}), 1, 2), CurvatureError);
}

TEST(Lly, SymmetricAndAtMostTwoOnEdges) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_connected_graph(rng, 7);
        const DistanceMatrix d(g);
        for (const Edge& e : g.edges()) {
            const Rational forward = lly_curvature(g, d, e.u, e.v);
            EXPECT_EQ(forward, lly_curvature(g, d, e.v, e.u));
            EXPECT_LE(forward, 2);
        }
    }
}

TEST(Lly, WitnessIsAdmissibleAndAttainsTheMinimum) {
    const Graph g = graph_T();
    const DistanceMatrix d(g);
    for (const Edge& e : g.edges()) {
        const LlyResult r = lly_curvature_with_witness(g, d, e.u, e.v);
        EXPECT_EQ(r.potential.at(e.u), 0);
        EXPECT_EQ(upper_bound_from_potential(g, e.u, e.v, r.potential), r.kappa);
    }
}

// The Case-1 potential from the degree-bound argument, on F_4 (hub degree 8).
TEST(UpperBound, DegreeBoundPotential) {
    const Graph g = friendship(4);
    const Vertex x = 0, y = 1, w = 2;
    Potential f;
    for (Vertex v : g.neighbors(x)) f[v] = -1;
    f[x] = 0;
    f[y] = 1;
    f[w] = 1;
    const int dx = g.degree(x), dy = g.degree(y);
    const Rational bound = upper_bound_from_potential(g, x, y, f);
    EXPECT_EQ(bound, Rational(4, dx) + Rational(1, dy) - 1);
    EXPECT_EQ(bound, 0);
    EXPECT_GE(bound, lly_curvature(g, x, y));
}

TEST(UpperBound, RejectsInadmissiblePotentials) {
    const Graph g = cycle(5);
    Potential f{{0, 0}, {1, 1}, {2, 2}, {4, 0}};
    EXPECT_NO_THROW(upper_bound_from_potential(g, 0, 1, f));
    Potential missing{{0, 0}, {1, 1}, {2, 2}};
    EXPECT_THROW(upper_bound_from_potential(g, 0, 1, missing), InfeasiblePotential);
    Potential gradient{{0, 0}, {1, 0}, {2, 0}, {4, 0}};
    EXPECT_THROW(upper_bound_from_potential(g, 0, 1, gradient), InfeasiblePotential);
    // Only the pair (2, 4) breaks the Lipschitz condition.
    Potential steep{{0, 0}, {1, 1}, {2, 2}, {4, -1}};
    try {
        upper_bound_from_potential(g, 0, 1, steep);
        FAIL() << "expected InfeasiblePotential";
    } catch (const InfeasiblePotential& e) {
        EXPECT_EQ(std::min(e.first, e.second), 2);
        EXPECT_EQ(std::max(e.first, e.second), 4);
    }
}

TEST(UpperBound, RandomFeasiblePotentialsOnFiveCycle) {
    const Graph g = cycle(5);
    const DistanceMatrix d(g);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> num(-12, 12);
    int accepted = 0;
    for (int trial = 0; trial < 400 && accepted < 60; ++trial) {
        Potential f{{0, 0}, {1, 1}, {2, Rational(num(rng), 6)}, {4, Rational(num(rng), 6)}};
        if (!is_lipschitz(f, d)) continue;
        ++accepted;
        EXPECT_GE(upper_bound_from_potential(g, 0, 1, f), q(1, 2));
    }
    EXPECT_GT(accepted, 10);
}

TEST(Lemmas, ClosedForms) {
    EXPECT_EQ(lemma31_value(2, 2), 0);
    EXPECT_EQ(lemma31_value(1, 3), q(2, 3));
    EXPECT_EQ(lemma32_bound(2, 2), q(1, 2));
    EXPECT_THROW(lemma31_value(0, 2), CurvatureError);
    EXPECT_THROW(lemma32_bound(2, -1), CurvatureError);
}

TEST(Report, FriendshipAndCycles) {
    EXPECT_TRUE(curvature_report(friendship(2)).positively_curved);
    const auto c6 = curvature_report(cycle(6));
    EXPECT_EQ(c6.min_kappa, 0);
    EXPECT_FALSE(c6.positively_curved);
    EXPECT_EQ(c6.rows.size(), 6u);
}

TEST(Report, ReconstructedG1HasFlatEdges) {
    const auto report = curvature_report(graph_G1());
    EXPECT_FALSE(report.positively_curved);
    // Regression constant computed by this engine and confirmed by the limit oracle.
    EXPECT_EQ(report.min_kappa, 0);
}

TEST(Report, Errors) {
    EXPECT_THROW(curvature_report(Graph(3, {{0, 1}})), CurvatureError);
    EXPECT_THROW(curvature_report(Graph(1, {})), CurvatureError);
}

}  // namespace
}  // namespace curv
