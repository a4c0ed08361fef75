#include <gtest/gtest.h>

#include <random>

#include "curv/lp.hpp"

namespace curv {
namespace {

TEST(Rational, FractionStrings) {
    EXPECT_EQ(to_fraction_string(Rational(3, 2)), "3/2");
    EXPECT_EQ(to_fraction_string(Rational(0)), "0/1");
    EXPECT_EQ(to_fraction_string(Rational(-4, 6)), "-2/3");
    EXPECT_EQ(parse_fraction("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_fraction("-7"), Rational(-7));
    EXPECT_THROW(parse_fraction("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_fraction("x/2"), std::invalid_argument);
}

TEST(Rational, Decimals) {
    EXPECT_EQ(to_decimal_string(Rational(1, 6), 4), "0.1667");
    EXPECT_EQ(to_decimal_string(Rational(-1, 4), 1), "-0.3");
    EXPECT_EQ(to_decimal_string(Rational(3, 2), 0), "2");
    EXPECT_EQ(to_decimal_string(Rational(-1, 1000), 2), "0.00");
    EXPECT_EQ(to_decimal_string(Rational(1, 14), 6), "0.071429");
}

LinearProgram one_variable(Rational cost) { return LinearProgram{{std::move(cost)}}; }

TEST(Simplex, BoundedOptimum) {
    LinearProgram lp = one_variable(-1);
    lp.add({1}, Relation::LessEqual, 5);
    const LpSolution sol = solve(lp);
    ASSERT_EQ(sol.status, LpStatus::Optimal);
    EXPECT_EQ(*sol.value, -5);
    EXPECT_EQ(sol.primal[0], 5);
    EXPECT_TRUE(verify_solution(lp, sol));
}

TEST(Simplex, Infeasible) {
    LinearProgram lp = one_variable(1);
    lp.add({1}, Relation::LessEqual, -1);
    EXPECT_EQ(solve(lp).status, LpStatus::Infeasible);
}

TEST(Simplex, Unbounded) {
    EXPECT_EQ(solve(one_variable(-1)).status, LpStatus::Unbounded);
}

TEST(Simplex, DimensionMismatch) {
    LinearProgram lp{{1, 1}};
    lp.add({1}, Relation::LessEqual, 1);
    EXPECT_THROW(solve(lp), LpError);
    LinearProgram lp2{{1, 1}};
    lp2.bounds.resize(3);
    EXPECT_THROW(solve(lp2), LpError);
}

TEST(Simplex, FreeAndBoundedVariables) {
    // min x + y, x free, -3 <= y <= 4, x - y >= 2, x + y >= -10
    LinearProgram lp{{1, 1}};
    lp.bounds = {VariableBounds::free(), VariableBounds{Rational(-3), Rational(4)}};
    lp.add({1, -1}, Relation::GreaterEqual, 2);
    lp.add({1, 1}, Relation::GreaterEqual, -10);
    const LpSolution sol = solve(lp);
    ASSERT_EQ(sol.status, LpStatus::Optimal);
    EXPECT_EQ(*sol.value, -4);  // y = -3, x = -1
    EXPECT_TRUE(verify_solution(lp, sol));

    // Upper bound only: x <= 2, min -x.
    LinearProgram up{{-1}};
    up.bounds = {VariableBounds{std::nullopt, Rational(2)}};
    EXPECT_EQ(*solve(up).value, -2);

    LinearProgram crossed{{1}};
    crossed.bounds = {VariableBounds{Rational(2), Rational(1)}};
    EXPECT_EQ(solve(crossed).status, LpStatus::Infeasible);
}

TEST(Simplex, RedundantEqualitiesAndDegeneracy) {
    // Transportation-style system whose last equality is implied by the others.
    LinearProgram lp{{1, 2, 3, 1}};
    lp.add({1, 1, 0, 0}, Relation::Equal, Rational(1, 2));
    lp.add({0, 0, 1, 1}, Relation::Equal, Rational(1, 2));
    lp.add({1, 0, 1, 0}, Relation::Equal, Rational(1, 2));
    lp.add({0, 1, 0, 1}, Relation::Equal, Rational(1, 2));
    const LpSolution sol = solve(lp);
    ASSERT_EQ(sol.status, LpStatus::Optimal);
    EXPECT_EQ(*sol.value, 1);
    EXPECT_TRUE(verify_solution(lp, sol));
}

TEST(Simplex, BealeCyclingExample) {
    // Cycles under the textbook largest-coefficient rule; Bland's rule terminates.
    LinearProgram lp{{Rational(-3, 4), 150, Rational(-1, 50), 6}};
    lp.add({Rational(1, 4), -60, Rational(-1, 25), 9}, Relation::LessEqual, 0);
    lp.add({Rational(1, 2), -90, Rational(-1, 50), 3}, Relation::LessEqual, 0);
    lp.add({0, 0, 1, 0}, Relation::LessEqual, 1);
    const LpSolution sol = solve(lp);
    ASSERT_EQ(sol.status, LpStatus::Optimal);
    EXPECT_EQ(*sol.value, Rational(-1, 20));
    EXPECT_TRUE(verify_solution(lp, sol));
}

TEST(VerifySolution, DetectsTampering) {
    LinearProgram lp{{-1, -1}};
    lp.add({1, 2}, Relation::LessEqual, 4);
    lp.add({3, 1}, Relation::LessEqual, 6);
    const LpSolution sol = solve(lp);
    ASSERT_TRUE(verify_solution(lp, sol));
    EXPECT_EQ(*sol.value, Rational(-14, 5));

    LpSolution bumped = sol;
    bumped.primal[0] += 1;  // breaks the binding row 3x + y <= 6
    EXPECT_FALSE(verify_solution(lp, bumped));

    // Feasible but suboptimal point claiming the optimal value.
    LpSolution suboptimal{LpStatus::Optimal, sol.value, {0, 0}};
    EXPECT_FALSE(verify_solution(lp, suboptimal));

    EXPECT_FALSE(verify_solution(lp, LpSolution{LpStatus::Infeasible, std::nullopt, {}}));
}

TEST(Simplex, Deterministic) {
    LinearProgram lp{{2, -1, 1}};
    lp.add({1, 1, 1}, Relation::Equal, 3);
    lp.add({1, -1, 0}, Relation::LessEqual, 1);
    const LpSolution a = solve(lp);
    const LpSolution b = solve(lp);
    EXPECT_EQ(a.primal, b.primal);
    EXPECT_EQ(a.value, b.value);
}

// min c.x s.t. A x >= b, x >= 0 and its dual max b.y s.t. A^T y <= c, y >= 0,
// built around known feasible points so both sides have optima.
TEST(Simplex, WeakAndStrongDualityOnRandomPrograms) {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> coef(-4, 6);
    std::uniform_int_distribution<int> small(0, 3);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = dim(rng);
        const int n = dim(rng);
        std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n));
        for (auto& row : a)
            for (auto& v : row) v = coef(rng);
        std::vector<Rational> x0(n), y0(m), b(m), c(n);
        for (auto& v : x0) v = Rational(small(rng), 1 + small(rng));
        for (auto& v : y0) v = Rational(small(rng), 1 + small(rng));
        for (int i = 0; i < m; ++i) {
            b[i] = -small(rng);
            for (int j = 0; j < n; ++j) b[i] += a[i][j] * x0[j];
        }
        for (int j = 0; j < n; ++j) {
            c[j] = small(rng);
            for (int i = 0; i < m; ++i) c[j] += a[i][j] * y0[i];
        }

        LinearProgram primal{c};
        for (int i = 0; i < m; ++i) primal.add(a[i], Relation::GreaterEqual, b[i]);
        std::vector<Rational> neg_b(m);
        for (int i = 0; i < m; ++i) neg_b[i] = -b[i];
        LinearProgram dual{neg_b};
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> col(m);
            for (int i = 0; i < m; ++i) col[i] = a[i][j];
            dual.add(col, Relation::LessEqual, c[j]);
        }

        Rational primal_at_x0 = 0, dual_at_y0 = 0;
        for (int j = 0; j < n; ++j) primal_at_x0 += c[j] * x0[j];
        for (int i = 0; i < m; ++i) dual_at_y0 += b[i] * y0[i];
        EXPECT_GE(primal_at_x0, dual_at_y0);

        const LpSolution ps = solve(primal);
        const LpSolution ds = solve(dual);
        ASSERT_EQ(ps.status, LpStatus::Optimal);
        ASSERT_EQ(ds.status, LpStatus::Optimal);
        ASSERT_TRUE(verify_solution(primal, ps));
        ASSERT_TRUE(verify_solution(dual, ds));
        EXPECT_EQ(*ps.value, -*ds.value);
        EXPECT_LE(*ps.value, primal_at_x0);
        EXPECT_GE(-*ds.value, dual_at_y0);
    }
}

}  // namespace
}  // namespace curv
