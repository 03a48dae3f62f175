#pragma once

#include "codecert/rational.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace codecert::lp {

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class Sense { Maximize, Minimize };
enum class Status { Optimal, Infeasible };

struct Constraint {
    std::vector<Rational> coefficients;  // one per variable
    Relation relation = Relation::LessEqual;
    Rational rhs;
    std::string label;
};

/// optimize objective . x + objective_constant  subject to constraints, x >= 0.
struct LinearProgram {
    Sense sense = Sense::Maximize;
    std::vector<std::string> variables;
    std::vector<Rational> objective;
    Rational objective_constant = 0;
    std::vector<Constraint> constraints;

    std::size_t add_variable(std::string name, Rational objective_coefficient = 0);
    /// Coefficients shorter than the variable count are zero-padded.
    void add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs, std::string label = {});
};

/// Dual sign convention. For a maximization: y_r >= 0 on <= rows, y_r <= 0 on >= rows,
/// free on = rows, and reduced cost d_j = sum_r y_r A_rj - c_j >= 0. For a minimization
/// every sign flips: y_r >= 0 on >= rows, y_r <= 0 on <= rows, d_j = c_j - sum_r y_r A_rj.
/// In both cases sum_r y_r b_r + objective_constant equals the optimum.
struct LPResult {
    Status status = Status::Infeasible;
    Rational optimum;
    std::vector<Rational> primal;
    std::vector<Rational> dual;
    std::vector<Rational> reduced_costs;
};

class UnboundedError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two-phase tableau simplex over exact rationals with Bland's rule.
/// Throws UnboundedError if the objective is unbounded.
LPResult solve_lp(const LinearProgram& lp);

struct OptimalityCheck {
    bool primal_feasible = false;
    bool dual_feasible = false;
    bool zero_gap = false;
    Rational primal_objective;
    Rational dual_objective;

    bool ok() const { return primal_feasible && dual_feasible && zero_gap; }
};

/// Re-verifies an optimal result from scratch: primal rows, dual signs,
/// reduced costs and the primal/dual objective equality, all exact.
OptimalityCheck check_optimality(const LinearProgram& lp, const LPResult& result);

/// Replaces the dual of an optimal result by an average of optimal duals, one
/// per focus variable, each maximizing that variable's reduced cost (capped at 1).
/// A focus variable that is zero in every optimal primal solution then has a
/// strictly positive reduced cost in the returned dual.
LPResult complementary_dual(const LinearProgram& lp, const LPResult& optimal, std::span<const std::size_t> focus);

}  // namespace codecert::lp
