#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "curv/rational.hpp"

namespace curv {

class LpError : public std::invalid_argument {
public:
    explicit LpError(const std::string& what) : std::invalid_argument(what) {}
};

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
    std::vector<Rational> coefficients;
    Relation relation = Relation::LessEqual;
    Rational bound;
};

/// Missing lower/upper means unbounded on that side. The default is x >= 0.
struct VariableBounds {
    std::optional<Rational> lower = Rational(0);
    std::optional<Rational> upper;

    static VariableBounds free() { return {std::nullopt, std::nullopt}; }
    static VariableBounds fixed(const Rational& value) { return {value, value}; }
};

/// minimize objective . x subject to the constraints and per-variable bounds.
struct LinearProgram {
    std::vector<Rational> objective;
    std::vector<Constraint> constraints;
    /// Empty, or one entry per variable. Empty means every variable is >= 0.
    std::vector<VariableBounds> bounds;

    explicit LinearProgram(std::vector<Rational> c = {}) : objective(std::move(c)) {}

    std::size_t num_variables() const { return objective.size(); }

    void add(std::vector<Rational> coefficients, Relation relation, Rational bound) {
        constraints.push_back({std::move(coefficients), relation, std::move(bound)});
    }

    VariableBounds bounds_of(std::size_t var) const { return bounds.empty() ? VariableBounds{} : bounds[var]; }

    /// Throws LpError when a row or the bounds vector does not match the objective width.
    void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus status);

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::optional<Rational> value;
    std::vector<Rational> primal;
};

/// Two-phase dense tableau simplex in exact arithmetic with Bland's
/// smallest-index rule for both the entering and leaving variable.
LpSolution solve(const LinearProgram& lp);

/// Audits an Optimal solution: every constraint and bound holds exactly and
/// objective . primal equals the reported value.
bool verify_solution(const LinearProgram& lp, const LpSolution& solution);

}  // namespace curv
