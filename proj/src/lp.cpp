#include "curv/lp.hpp"

#include <fmt/format.h>

namespace curv {

void LinearProgram::validate() const {
    const std::size_t width = objective.size();
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        if (constraints[i].coefficients.size() != width) {
            throw LpError(fmt::format("constraint {} has {} coefficients, objective has {}", i,
                                      constraints[i].coefficients.size(), width));
        }
    }
    if (!bounds.empty() && bounds.size() != width) {
        throw LpError(fmt::format("{} variable bounds for {} variables", bounds.size(), width));
    }
}

std::string to_string(LpStatus status) {
    switch (status) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

namespace {

// Original variable x = offset + sign * y[pos] (- y[neg] when split).
struct Substitution {
    Rational offset;
    int sign = 1;
    std::size_t pos = 0;
    std::optional<std::size_t> neg;
};

struct Row {
    std::vector<Rational> coefficients;  // over the nonnegative y columns
    Relation relation;
    Rational rhs;
};

class Tableau {
public:
    Tableau(std::vector<Row> rows, std::size_t structural)
        : structural_(structural) {
        // Column layout: structural | slack/surplus | artificial | rhs.
        std::size_t slacks = 0;
        std::size_t artificials = 0;
        for (auto& row : rows) {
            if (row.rhs < 0) {
                for (auto& a : row.coefficients) a = -a;
                row.rhs = -row.rhs;
                if (row.relation == Relation::LessEqual) row.relation = Relation::GreaterEqual;
                else if (row.relation == Relation::GreaterEqual) row.relation = Relation::LessEqual;
            }
            if (row.relation != Relation::Equal) ++slacks;
            if (row.relation != Relation::LessEqual) ++artificials;
        }
        first_artificial_ = structural_ + slacks;
        cols_ = first_artificial_ + artificials;
        const std::size_t m = rows.size();
        t_.assign(m, std::vector<Rational>(cols_ + 1));
        basis_.assign(m, 0);
        std::size_t next_slack = structural_;
        std::size_t next_art = first_artificial_;
        for (std::size_t i = 0; i < m; ++i) {
            auto& out = t_[i];
            for (std::size_t j = 0; j < structural_; ++j) out[j] = rows[i].coefficients[j];
            out[cols_] = rows[i].rhs;
            switch (rows[i].relation) {
                case Relation::LessEqual:
                    out[next_slack] = 1;
                    basis_[i] = next_slack++;
                    break;
                case Relation::GreaterEqual:
                    out[next_slack++] = -1;
                    out[next_art] = 1;
                    basis_[i] = next_art++;
                    break;
                case Relation::Equal:
                    out[next_art] = 1;
                    basis_[i] = next_art++;
                    break;
            }
        }
    }

    /// Returns false if the LP has no feasible point.
    bool phase_one() {
        if (first_artificial_ == cols_) return true;
        std::vector<Rational> cost(cols_);
        for (std::size_t j = first_artificial_; j < cols_; ++j) cost[j] = 1;
        optimize(cost, cols_);
        Rational infeasibility = 0;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (basis_[i] >= first_artificial_) infeasibility += t_[i][cols_];
        }
        if (infeasibility != 0) return false;
        // Drive zero-valued artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < t_.size();) {
            if (basis_[i] < first_artificial_) {
                ++i;
                continue;
            }
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < first_artificial_; ++j) {
                if (t_[i][j] != 0) {
                    entering = j;
                    break;
                }
            }
            if (entering) {
                pivot(i, *entering);
                ++i;
            } else {
                t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        return true;
    }

    /// Minimizes `structural_cost` (over structural columns) with artificial
    /// columns barred from entering. Returns false if unbounded.
    bool phase_two(const std::vector<Rational>& structural_cost) {
        std::vector<Rational> cost(cols_);
        for (std::size_t j = 0; j < structural_; ++j) cost[j] = structural_cost[j];
        return optimize(cost, first_artificial_);
    }

    std::vector<Rational> structural_values() const {
        std::vector<Rational> y(structural_);
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (basis_[i] < structural_) y[basis_[i]] = t_[i][cols_];
        }
        return y;
    }

private:
    bool optimize(const std::vector<Rational>& cost, std::size_t allowed) {
        const std::size_t m = t_.size();
        std::vector<Rational> reduced(cost);
        for (std::size_t i = 0; i < m; ++i) {
            const Rational& cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (t_[i][j] != 0) reduced[j] -= cb * t_[i][j];
            }
        }
        while (true) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < allowed; ++j) {
                if (reduced[j] < 0) {
                    entering = j;
                    break;
                }
            }
            if (!entering) return true;
            const std::size_t e = *entering;
            std::optional<std::size_t> leaving;
            Rational best_ratio;
            for (std::size_t i = 0; i < m; ++i) {
                if (t_[i][e] <= 0) continue;
                Rational ratio = t_[i][cols_] / t_[i][e];
                if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
                    leaving = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (!leaving) return false;
            pivot(*leaving, e);
            if (reduced[e] != 0) {
                const Rational factor = reduced[e];
                const auto& prow = t_[*leaving];
                for (std::size_t j = 0; j < cols_; ++j) {
                    if (prow[j] != 0) reduced[j] -= factor * prow[j];
                }
            }
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        auto& prow = t_[r];
        const Rational inv = 1 / prow[c];
        std::vector<std::size_t> nonzero;
        for (std::size_t j = 0; j <= cols_; ++j) {
            if (prow[j] != 0) {
                prow[j] *= inv;
                nonzero.push_back(j);
            }
        }
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i == r || t_[i][c] == 0) continue;
            const Rational factor = t_[i][c];
            auto& row = t_[i];
            for (std::size_t j : nonzero) row[j] -= factor * prow[j];
        }
        basis_[r] = c;
    }

    std::size_t structural_;
    std::size_t first_artificial_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Rational>> t_;
    std::vector<std::size_t> basis_;
};

bool satisfies(const Rational& lhs, Relation relation, const Rational& rhs) {
    switch (relation) {
        case Relation::LessEqual: return lhs <= rhs;
        case Relation::Equal: return lhs == rhs;
        case Relation::GreaterEqual: return lhs >= rhs;
    }
    return false;
}

}  // namespace

LpSolution solve(const LinearProgram& lp) {
    lp.validate();
    const std::size_t n = lp.num_variables();

    std::vector<Substitution> subs(n);
    std::vector<Row> rows;
    std::size_t columns = 0;
    std::vector<std::pair<std::size_t, Rational>> range_rows;
    for (std::size_t j = 0; j < n; ++j) {
        const VariableBounds b = lp.bounds_of(j);
        auto& s = subs[j];
        s.pos = columns++;
        if (b.lower) {
            if (b.upper && *b.upper < *b.lower) {
                return {LpStatus::Infeasible, std::nullopt, {}};
            }
            s.offset = *b.lower;
            if (b.upper) range_rows.emplace_back(s.pos, *b.upper - *b.lower);
        } else if (b.upper) {
            s.offset = *b.upper;
            s.sign = -1;
        } else {
            s.neg = columns++;
        }
    }

    for (const auto& con : lp.constraints) {
        Row row{std::vector<Rational>(columns), con.relation, con.bound};
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& a = con.coefficients[j];
            if (a == 0) continue;
            const auto& s = subs[j];
            row.rhs -= a * s.offset;
            row.coefficients[s.pos] += s.sign * a;
            if (s.neg) row.coefficients[*s.neg] -= a;
        }
        rows.push_back(std::move(row));
    }
    for (auto& [col, width] : range_rows) {
        Row row{std::vector<Rational>(columns), Relation::LessEqual, width};
        row.coefficients[col] = 1;
        rows.push_back(std::move(row));
    }

    std::vector<Rational> cost(columns);
    for (std::size_t j = 0; j < n; ++j) {
        const auto& s = subs[j];
        cost[s.pos] += s.sign * lp.objective[j];
        if (s.neg) cost[*s.neg] -= lp.objective[j];
    }

    Tableau tableau(std::move(rows), columns);
    if (!tableau.phase_one()) {
        return {LpStatus::Infeasible, std::nullopt, {}};
    }
    if (!tableau.phase_two(cost)) {
        return {LpStatus::Unbounded, std::nullopt, {}};
    }

    const auto y = tableau.structural_values();
    LpSolution out{LpStatus::Optimal, Rational(0), std::vector<Rational>(n)};
    for (std::size_t j = 0; j < n; ++j) {
        const auto& s = subs[j];
        Rational x = s.offset + s.sign * y[s.pos];
        if (s.neg) x -= y[*s.neg];
        *out.value += lp.objective[j] * x;
        out.primal[j] = std::move(x);
    }
    return out;
}

bool verify_solution(const LinearProgram& lp, const LpSolution& solution) {
    if (solution.status != LpStatus::Optimal || !solution.value) return false;
    const std::size_t n = lp.num_variables();
    if (solution.primal.size() != n) return false;
    for (const auto& con : lp.constraints) {
        if (con.coefficients.size() != n) return false;
        Rational lhs = 0;
        for (std::size_t j = 0; j < n; ++j) lhs += con.coefficients[j] * solution.primal[j];
        if (!satisfies(lhs, con.relation, con.bound)) return false;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const VariableBounds b = lp.bounds_of(j);
        if (b.lower && solution.primal[j] < *b.lower) return false;
        if (b.upper && solution.primal[j] > *b.upper) return false;
    }
    Rational value = 0;
    for (std::size_t j = 0; j < n; ++j) value += lp.objective[j] * solution.primal[j];
    return value == *solution.value;
}

}  // namespace curv
