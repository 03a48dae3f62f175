#pragma once

#include "codecert/rational.hpp"
#include "codecert/simplex.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace codecert::lp {

/// Hamming(n) or Johnson(n, w). Distances are always true Hamming distances;
/// Johnson distances are even.
struct Scheme {
    enum class Kind { Hamming, Johnson };
    Kind kind = Kind::Hamming;
    int n = 0;
    int w = 0;

    static Scheme hamming(int n);
    static Scheme johnson(int n, int w);

    /// {0..n} for Hamming, {0, 2, .., 2 min(w, n-w)} for Johnson.
    std::vector<int> distance_classes() const;
    bool is_distance(int i) const;
    /// |N|: 2^n or C(n, w).
    Integer space_size() const;
    /// Distance-preserving group: 2^n n! for Hamming, n! (doubled when n = 2w) for Johnson.
    Integer group_order() const;
    std::string name() const;
};

/// K_k(i) = sum_r (-1)^r C(i,r) C(n-i,k-r). Throws std::out_of_range unless 0 <= k, i <= n.
std::int64_t krawtchouk(int n, int k, int i);

/// E_k(j) = sum_r (-1)^r C(j,r) C(w-j,k-r) C(n-w-j,k-r), j the half-distance.
/// Throws std::out_of_range unless 0 <= k, j <= min(w, n-w).
std::int64_t eberlein(int n, int w, int k, int j);

/// Linear form sum c_i a_i + t * (1 + sum_{i>0} a_i) + constant. The "total"
/// term t stands for the code size.
struct DistanceExpr {
    std::map<int, Rational> terms;
    Rational total = 0;
    Rational constant = 0;

    static DistanceExpr variable(int i, Rational coefficient = 1);
    static DistanceExpr size();
};

struct DistanceConstraint {
    DistanceExpr lhs;  // compared against zero after parsing
    Relation relation = Relation::GreaterEqual;
    std::string text;

    static DistanceConstraint zero(int i);
    static DistanceConstraint at_least(int i, Rational bound);
    static DistanceConstraint size_equals(Rational size);
};

/// Parses "a_14>=2/672", "a_8+a_12-3a_16<=5", "a_8 - a_12 - 3a_16 + 5 >= 0",
/// "total=256". Relations: <=, >=, =, ==. Throws std::invalid_argument.
DistanceConstraint parse_distance_constraint(std::string_view text);
DistanceExpr parse_distance_expr(std::string_view text);

struct DelsarteProblem {
    Scheme scheme;
    int d = 1;
    std::vector<DistanceConstraint> extra;
    std::optional<DistanceExpr> objective;  // default: the code size 1 + sum a_i
    Sense sense = Sense::Maximize;
};

struct DelsarteSolution {
    DelsarteProblem problem;
    LinearProgram lp;
    LPResult result;
    std::vector<int> distances;  // LP variable index -> distance

    bool optimal() const { return result.status == Status::Optimal; }
    /// a_i for every distance class, a_0 = 1 and zeros below d included.
    std::map<int, Rational> distribution() const;
    std::optional<std::size_t> variable_of(int distance) const;
};

/// Builds and solves the LP: a_0 = 1, a_i = 0 for 0 < i < d, a_i >= 0, the
/// Delsarte inequalities of the scheme, and the extra constraints.
DelsarteSolution solve_delsarte(const DelsarteProblem& problem);
DelsarteSolution delsarte_bound(const Scheme& scheme, int d, std::vector<DistanceConstraint> extra = {});

class NothingToCertify : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ForbiddenDistance {
    int distance = 0;
    DelsarteSolution certificate;  // the LP with a_i >= 2/M added; optimum < M or infeasible
};

struct ForbiddenReport {
    DelsarteSolution base;
    std::vector<int> tested;
    std::vector<ForbiddenDistance> forbidden;

    std::vector<int> distances() const;
};

/// Re-solves with a_i >= 2/M for every distance i >= d not already pinned to
/// zero by an extra constraint; i is forbidden when the optimum drops below M.
/// Throws NothingToCertify when the base optimum is below M.
ForbiddenReport forbidden_distances(const Scheme& scheme, int d, const Integer& target,
                                    std::vector<DistanceConstraint> extra = {});

/// Hamming: 2^n C(n,t). Johnson: C(n,w) C(n-w,t/2) C(w,t/2).
Integer orbit_norm(const Scheme& scheme, int t);

/// size * a_t / orbit_norm(t). Throws std::invalid_argument for an invalid t.
Rational orbit_pair_value(const Scheme& scheme, int t, const Rational& size, const Rational& a_t);

}  // namespace codecert::lp
