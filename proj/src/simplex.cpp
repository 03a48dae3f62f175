#include "codecert/simplex.hpp"

#include <algorithm>
#include <optional>

namespace codecert::lp {

std::size_t LinearProgram::add_variable(std::string name, Rational objective_coefficient) {
    variables.push_back(std::move(name));
    objective.push_back(std::move(objective_coefficient));
    for (Constraint& c : constraints) c.coefficients.resize(variables.size());
    return variables.size() - 1;
}

void LinearProgram::add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs,
                                   std::string label) {
    if (coefficients.size() > variables.size()) throw std::invalid_argument("constraint has more coefficients than variables");
    coefficients.resize(variables.size());
    constraints.push_back({std::move(coefficients), relation, std::move(rhs), std::move(label)});
}

namespace {

void validate(const LinearProgram& lp) {
    if (lp.objective.size() != lp.variables.size()) throw std::invalid_argument("objective size does not match variables");
    for (const Constraint& c : lp.constraints)
        if (c.coefficients.size() != lp.variables.size())
            throw std::invalid_argument("constraint '" + c.label + "' has the wrong number of coefficients");
}

struct Tableau {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> rhs;
    std::vector<std::size_t> basis;
    std::vector<std::size_t> origin;  // tableau row -> constraint index

    void pivot(std::size_t r, std::size_t c) {
        const Rational p = a[r][c];
        for (Rational& v : a[r]) v /= p;
        rhs[r] /= p;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = 0; j < a[i].size(); ++j)
                if (sgn(a[r][j]) != 0) a[i][j] -= f * a[r][j];
            rhs[i] -= f * rhs[r];
        }
        basis[r] = c;
    }

    void erase_row(std::size_t r) {
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(r));
        rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(r));
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
        origin.erase(origin.begin() + static_cast<std::ptrdiff_t>(r));
    }
};

// Maximizes cost . x on the tableau with Bland's rule. Returns false when unbounded.
bool run_simplex(Tableau& t, const std::vector<Rational>& cost, const std::vector<bool>& may_enter) {
    const std::size_t cols = cost.size();
    std::vector<bool> is_basic(cols);
    for (;;) {
        std::fill(is_basic.begin(), is_basic.end(), false);
        for (std::size_t b : t.basis) is_basic[b] = true;

        std::optional<std::size_t> entering;
        for (std::size_t j = 0; j < cols && !entering; ++j) {
            if (is_basic[j] || !may_enter[j]) continue;
            Rational reduced = -cost[j];
            for (std::size_t i = 0; i < t.a.size(); ++i)
                if (sgn(t.a[i][j]) != 0) reduced += cost[t.basis[i]] * t.a[i][j];
            if (sgn(reduced) < 0) entering = j;
        }
        if (!entering) return true;

        std::optional<std::size_t> leaving;
        Rational best_ratio;
        for (std::size_t i = 0; i < t.a.size(); ++i) {
            if (sgn(t.a[i][*entering]) <= 0) continue;
            const Rational ratio = t.rhs[i] / t.a[i][*entering];
            if (!leaving || ratio < best_ratio || (ratio == best_ratio && t.basis[i] < t.basis[*leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (!leaving) return false;
        t.pivot(*leaving, *entering);
    }
}

// Solves M y = b for square nonsingular M by Gauss-Jordan elimination.
std::vector<Rational> solve_square(std::vector<std::vector<Rational>> m, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(m[piv][col]) == 0) ++piv;
        if (piv == n) throw std::logic_error("simplex: singular basis");
        std::swap(m[piv], m[col]);
        std::swap(b[piv], b[col]);
        const Rational p = m[col][col];
        for (std::size_t j = col; j < n; ++j) m[col][j] /= p;
        b[col] /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || sgn(m[i][col]) == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
            b[i] -= f * b[col];
        }
    }
    return b;
}

std::vector<Rational> reduced_costs_of(const LinearProgram& lp, const std::vector<Rational>& y) {
    std::vector<Rational> d(lp.variables.size());
    for (std::size_t j = 0; j < d.size(); ++j) {
        Rational s = 0;
        for (std::size_t r = 0; r < lp.constraints.size(); ++r) s += y[r] * lp.constraints[r].coefficients[j];
        d[j] = lp.sense == Sense::Maximize ? Rational(s - lp.objective[j]) : Rational(lp.objective[j] - s);
    }
    return d;
}

// Core solver: always maximizes. Duals follow the maximization convention.
LPResult solve_max(const LinearProgram& lp) {
    const std::size_t m = lp.constraints.size();
    const std::size_t n = lp.variables.size();

    // Normalize rows to a non-negative right-hand side.
    std::vector<int> flip(m, 1);
    std::vector<Relation> rel(m);
    for (std::size_t r = 0; r < m; ++r) {
        rel[r] = lp.constraints[r].relation;
        if (sgn(lp.constraints[r].rhs) < 0) {
            flip[r] = -1;
            if (rel[r] == Relation::LessEqual) rel[r] = Relation::GreaterEqual;
            else if (rel[r] == Relation::GreaterEqual) rel[r] = Relation::LessEqual;
        }
    }

    // Column layout: originals, then one slack/surplus per inequality, then artificials.
    std::size_t cols = n;
    std::vector<std::optional<std::size_t>> slack(m), artificial(m);
    for (std::size_t r = 0; r < m; ++r)
        if (rel[r] != Relation::Equal) slack[r] = cols++;
    const std::size_t first_artificial = cols;
    for (std::size_t r = 0; r < m; ++r)
        if (rel[r] != Relation::LessEqual) artificial[r] = cols++;

    std::vector<std::vector<Rational>> standard(m, std::vector<Rational>(cols));
    Tableau t;
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < n; ++j) standard[r][j] = flip[r] * lp.constraints[r].coefficients[j];
        if (slack[r]) standard[r][*slack[r]] = rel[r] == Relation::LessEqual ? 1 : -1;
        if (artificial[r]) standard[r][*artificial[r]] = 1;
        t.a.push_back(standard[r]);
        t.rhs.push_back(flip[r] * lp.constraints[r].rhs);
        t.basis.push_back(artificial[r] ? *artificial[r] : *slack[r]);
        t.origin.push_back(r);
    }

    LPResult result;
    std::vector<bool> any(cols, true);
    if (first_artificial < cols) {
        std::vector<Rational> phase1(cols, 0);
        for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = -1;
        run_simplex(t, phase1, any);
        Rational infeasibility = 0;
        for (std::size_t i = 0; i < t.a.size(); ++i)
            if (t.basis[i] >= first_artificial) infeasibility += t.rhs[i];
        if (sgn(infeasibility) > 0) return result;

        // Pivot zero-level artificials out; a row with no other nonzero entry is redundant.
        for (std::size_t i = 0; i < t.a.size();) {
            if (t.basis[i] < first_artificial) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < first_artificial && !col; ++j)
                if (sgn(t.a[i][j]) != 0) col = j;
            if (col) {
                t.pivot(i, *col);
                ++i;
            } else {
                t.erase_row(i);
            }
        }
    }

    std::vector<Rational> cost(cols, 0);
    for (std::size_t j = 0; j < n; ++j) cost[j] = lp.objective[j];
    std::vector<bool> may_enter(cols, false);
    for (std::size_t j = 0; j < first_artificial; ++j) may_enter[j] = true;
    if (!run_simplex(t, cost, may_enter)) throw UnboundedError("linear program is unbounded");

    result.status = Status::Optimal;
    result.primal.assign(n, 0);
    for (std::size_t i = 0; i < t.a.size(); ++i)
        if (t.basis[i] < n) result.primal[t.basis[i]] = t.rhs[i];
    result.optimum = lp.objective_constant;
    for (std::size_t j = 0; j < n; ++j) result.optimum += lp.objective[j] * result.primal[j];

    // Duals from the final basis: y^T B = c_B on the surviving standardized rows.
    const std::size_t k = t.a.size();
    std::vector<std::vector<Rational>> bt(k, std::vector<Rational>(k));
    std::vector<Rational> cb(k);
    for (std::size_t col = 0; col < k; ++col) {
        cb[col] = cost[t.basis[col]];
        for (std::size_t i = 0; i < k; ++i) bt[col][i] = standard[t.origin[i]][t.basis[col]];
    }
    const std::vector<Rational> y_std = k ? solve_square(std::move(bt), std::move(cb)) : std::vector<Rational>{};
    result.dual.assign(m, 0);
    for (std::size_t i = 0; i < k; ++i) result.dual[t.origin[i]] = flip[t.origin[i]] * y_std[i];
    return result;
}

}  // namespace

LPResult solve_lp(const LinearProgram& lp) {
    validate(lp);
    if (lp.sense == Sense::Maximize) {
        LPResult r = solve_max(lp);
        if (r.status == Status::Optimal) r.reduced_costs = reduced_costs_of(lp, r.dual);
        return r;
    }
    LinearProgram negated = lp;
    negated.sense = Sense::Maximize;
    for (Rational& c : negated.objective) c = -c;
    negated.objective_constant = -lp.objective_constant;
    LPResult r = solve_max(negated);
    if (r.status != Status::Optimal) return r;
    r.optimum = -r.optimum;
    for (Rational& y : r.dual) y = -y;
    r.reduced_costs = reduced_costs_of(lp, r.dual);
    return r;
}

OptimalityCheck check_optimality(const LinearProgram& lp, const LPResult& result) {
    validate(lp);
    OptimalityCheck check;
    if (result.status != Status::Optimal || result.primal.size() != lp.variables.size() ||
        result.dual.size() != lp.constraints.size())
        return check;

    check.primal_objective = lp.objective_constant;
    for (std::size_t j = 0; j < lp.variables.size(); ++j) check.primal_objective += lp.objective[j] * result.primal[j];

    check.primal_feasible = std::all_of(result.primal.begin(), result.primal.end(), [](const Rational& x) { return sgn(x) >= 0; });
    for (const Constraint& c : lp.constraints) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < lp.variables.size(); ++j) lhs += c.coefficients[j] * result.primal[j];
        const bool ok = c.relation == Relation::LessEqual      ? lhs <= c.rhs
                        : c.relation == Relation::GreaterEqual ? lhs >= c.rhs
                                                               : lhs == c.rhs;
        check.primal_feasible = check.primal_feasible && ok;
    }

    const int orient = lp.sense == Sense::Maximize ? 1 : -1;
    check.dual_feasible = true;
    check.dual_objective = lp.objective_constant;
    for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
        const Constraint& c = lp.constraints[r];
        const int s = orient * sgn(result.dual[r]);
        if (c.relation == Relation::LessEqual && s < 0) check.dual_feasible = false;
        if (c.relation == Relation::GreaterEqual && s > 0) check.dual_feasible = false;
        check.dual_objective += result.dual[r] * c.rhs;
    }
    for (const Rational& d : reduced_costs_of(lp, result.dual))
        if (sgn(d) < 0) check.dual_feasible = false;

    check.zero_gap = check.primal_objective == check.dual_objective && check.primal_objective == result.optimum;
    return check;
}

LPResult complementary_dual(const LinearProgram& lp, const LPResult& optimal, std::span<const std::size_t> focus) {
    validate(lp);
    if (optimal.status != Status::Optimal) throw std::invalid_argument("complementary_dual needs an optimal result");
    const std::size_t m = lp.constraints.size();
    const std::size_t n = lp.variables.size();
    const int orient = lp.sense == Sense::Maximize ? 1 : -1;

    // Dual-space program over u >= 0 with y_r = sum of signed u entries.
    LinearProgram aux;
    std::vector<std::vector<std::pair<std::size_t, int>>> y_terms(m);
    for (std::size_t r = 0; r < m; ++r) {
        const Relation rel = lp.constraints[r].relation;
        if (rel == Relation::Equal) {
            y_terms[r].emplace_back(aux.add_variable("u+" + std::to_string(r)), 1);
            y_terms[r].emplace_back(aux.add_variable("u-" + std::to_string(r)), -1);
        } else {
            const int sign = (rel == Relation::LessEqual ? 1 : -1) * orient;
            y_terms[r].emplace_back(aux.add_variable("u" + std::to_string(r)), sign);
        }
    }
    // d_j = orient * (sum_r y_r A_rj - c_j) as a linear form in u plus a constant.
    const auto reduced_cost_row = [&](std::size_t j) {
        std::vector<Rational> row(aux.variables.size(), 0);
        for (std::size_t r = 0; r < m; ++r)
            for (auto [var, sign] : y_terms[r]) row[var] += orient * sign * lp.constraints[r].coefficients[j];
        return std::pair{row, Rational(-orient * lp.objective[j])};
    };
    for (std::size_t j = 0; j < n; ++j) {
        auto [row, constant] = reduced_cost_row(j);
        aux.add_constraint(row, Relation::GreaterEqual, -constant, "reduced cost " + lp.variables[j]);
    }
    {
        std::vector<Rational> row(aux.variables.size(), 0);
        for (std::size_t r = 0; r < m; ++r)
            for (auto [var, sign] : y_terms[r]) row[var] += sign * lp.constraints[r].rhs;
        aux.add_constraint(row, Relation::Equal, optimal.optimum - lp.objective_constant, "dual objective");
    }

    std::vector<Rational> sum = optimal.dual;
    std::size_t count = 1;
    for (std::size_t q : focus) {
        if (q >= n) throw std::out_of_range("focus variable out of range");
        LinearProgram probe = aux;
        auto [row, constant] = reduced_cost_row(q);
        probe.objective = row;
        probe.objective_constant = constant;
        probe.add_constraint(row, Relation::LessEqual, 1 - constant, "cap");
        const LPResult r = solve_lp(probe);
        if (r.status != Status::Optimal) continue;
        for (std::size_t c = 0; c < m; ++c)
            for (auto [var, sign] : y_terms[c]) sum[c] += sign * r.primal[var];
        ++count;
    }

    LPResult out = optimal;
    for (std::size_t r = 0; r < m; ++r) out.dual[r] = sum[r] / Rational(static_cast<unsigned long>(count));
    out.reduced_costs = reduced_costs_of(lp, out.dual);
    return out;
}

}  // namespace codecert::lp
