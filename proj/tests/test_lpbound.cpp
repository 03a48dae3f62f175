#include "codecert/code.hpp"
#include "codecert/delsarte.hpp"
#include "codecert/golay.hpp"
#include "codecert/simplex.hpp"

#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>

using namespace codecert;
using namespace codecert::lp;

namespace {

std::vector<DistanceConstraint> divisible_by_four(int n, int d) {
    std::vector<DistanceConstraint> out;
    for (int i = d; i <= n; ++i)
        if (i % 4) out.push_back(DistanceConstraint::zero(i));
    return out;
}

// Solves A x = b exactly; nullopt when singular.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(a[piv][col]) == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// Maximum over all vertices of {A x <= b, x >= 0}.
std::optional<Rational> vertex_enumeration(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                                           const std::vector<Rational>& c) {
    const std::size_t n = c.size(), m = b.size();
    std::vector<std::vector<Rational>> rows = a;
    std::vector<Rational> rhs = b;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> e(n, 0);
        e[j] = -1;
        rows.push_back(e);
        rhs.push_back(0);
    }
    std::optional<Rational> best;
    std::vector<bool> pick(m + n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
    std::sort(pick.begin(), pick.end());
    do {
        std::vector<std::vector<Rational>> sa;
        std::vector<Rational> sb;
        for (std::size_t r = 0; r < m + n; ++r)
            if (pick[r]) {
                sa.push_back(rows[r]);
                sb.push_back(rhs[r]);
            }
        const auto x = solve_exact(sa, sb);
        if (!x) continue;
        bool feasible = true;
        for (std::size_t r = 0; r < m + n && feasible; ++r) {
            Rational lhs = 0;
            for (std::size_t j = 0; j < n; ++j) lhs += rows[r][j] * (*x)[j];
            feasible = lhs <= rhs[r];
        }
        if (!feasible) continue;
        Rational v = 0;
        for (std::size_t j = 0; j < n; ++j) v += c[j] * (*x)[j];
        if (!best || v > *best) best = v;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return best;
}

}  // namespace

TEST_CASE("krawtchouk values") {
    for (int n = 1; n <= 12; ++n)
        for (int i = 0; i <= n; ++i) {
            CHECK(krawtchouk(n, 0, i) == 1);
            CHECK(krawtchouk(n, 1, i) == n - 2 * i);
        }
    for (int k = 0; k <= 12; ++k) CHECK(krawtchouk(12, k, 0) == binomial(12, static_cast<unsigned>(k)));
    CHECK_THROWS_AS(krawtchouk(5, 6, 0), std::out_of_range);
    CHECK_THROWS_AS(krawtchouk(5, 0, -1), std::out_of_range);
}

TEST_CASE("krawtchouk orthogonality, n <= 12") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l) {
                Integer s = 0;
                for (int i = 0; i <= n; ++i)
                    s += binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)) * krawtchouk(n, k, i) * krawtchouk(n, l, i);
                const Integer expect = k == l ? (Integer(1) << n) * binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) : Integer(0);
                CHECK(s == expect);
            }
}

TEST_CASE("eberlein values and orthogonality") {
    CHECK(eberlein(24, 12, 0, 3) == 1);
    CHECK(eberlein(24, 12, 2, 0) == binomial(12, 2) * binomial(12, 2));
    for (auto [n, w] : {std::pair{10, 4}, {12, 6}, {9, 3}, {13, 5}}) {
        const int m = std::min(w, n - w);
        for (int k = 0; k <= m; ++k)
            for (int l = 0; l <= m; ++l) {
                Integer s = 0;
                for (int j = 0; j <= m; ++j) {
                    const Integer mult = binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) -
                                         (j ? binomial(static_cast<unsigned>(n), static_cast<unsigned>(j - 1)) : Integer(0));
                    s += mult * eberlein(n, w, k, j) * eberlein(n, w, l, j);
                }
                const Integer expect = k == l ? binomial(static_cast<unsigned>(n), static_cast<unsigned>(w)) *
                                                    binomial(static_cast<unsigned>(w), static_cast<unsigned>(k)) *
                                                    binomial(static_cast<unsigned>(n - w), static_cast<unsigned>(k))
                                              : Integer(0);
                CHECK(s == expect);
            }
    }
    CHECK_THROWS_AS(eberlein(10, 4, 5, 0), std::out_of_range);
}

TEST_CASE("simplex small cases") {
    LinearProgram p;
    p.add_variable("a_1", 1);
    p.add_constraint({1}, Relation::LessEqual, 3);
    LPResult r = solve_lp(p);
    REQUIRE(r.status == Status::Optimal);
    CHECK(r.optimum == 3);
    CHECK(check_optimality(p, r).ok());

    LinearProgram inf;
    inf.add_variable("x", 1);
    inf.add_constraint({1}, Relation::GreaterEqual, 2);
    inf.add_constraint({1}, Relation::LessEqual, 1);
    CHECK(solve_lp(inf).status == Status::Infeasible);

    LinearProgram unb;
    unb.add_variable("x", 1);
    unb.add_constraint({1}, Relation::GreaterEqual, 2);
    CHECK_THROWS_AS(solve_lp(unb), UnboundedError);

    LinearProgram mn;
    mn.sense = Sense::Minimize;
    mn.add_variable("x", 2);
    mn.add_variable("y", 3);
    mn.add_constraint({1, 1}, Relation::Equal, 4);
    mn.add_constraint({1, 0}, Relation::LessEqual, 3);
    const LPResult m = solve_lp(mn);
    REQUIRE(m.status == Status::Optimal);
    CHECK(m.optimum == 9);
    CHECK(check_optimality(mn, m).ok());
}

TEST_CASE("simplex against vertex enumeration") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> coef(-4, 6);
    int compared = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 2), m = 2 + static_cast<std::size_t>(trial % 3);
        std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n));
        std::vector<Rational> b(m), c(n);
        for (auto& row : a)
            for (auto& x : row) x = coef(rng);
        for (auto& x : b) {
            x = Rational(coef(rng) + 5, 1 + static_cast<int>(rng() % 3));
            x.canonicalize();
        }
        for (auto& x : c) x = coef(rng);
        a.push_back(std::vector<Rational>(n, 1));  // keep it bounded
        b.push_back(10);

        LinearProgram p;
        for (std::size_t j = 0; j < n; ++j) p.add_variable("x" + std::to_string(j), c[j]);
        for (std::size_t r = 0; r < a.size(); ++r) p.add_constraint(a[r], Relation::LessEqual, b[r]);
        const LPResult res = solve_lp(p);
        const auto best = vertex_enumeration(a, b, c);
        REQUIRE(best.has_value() == (res.status == Status::Optimal));
        if (best) {
            CHECK(res.optimum == *best);
            CHECK(check_optimality(p, res).ok());
            ++compared;
        }
    }
    CHECK(compared > 50);
}

TEST_CASE("Delsarte bounds") {
    const DelsarteSolution j24 = delsarte_bound(Scheme::johnson(24, 12), 8);
    REQUIRE(j24.optimal());
    CHECK(j24.result.optimum == 2576);
    CHECK(check_optimality(j24.lp, j24.result).ok());

    const DelsarteSolution j23 = delsarte_bound(Scheme::johnson(23, 11), 8);
    REQUIRE(j23.optimal());
    CHECK(j23.result.optimum == Rational(58121, 41));
    CHECK(check_optimality(j23.lp, j23.result).ok());

    // Hamming(n, 1) is the whole space.
    CHECK(delsarte_bound(Scheme::hamming(6), 1).result.optimum == 64);
}

TEST_CASE("Hamming(20,8) with 4-divisibility") {
    auto extra = divisible_by_four(20, 8);
    extra.push_back(DistanceConstraint::at_least(20, Rational(2, 256)));
    const DelsarteSolution s = delsarte_bound(Scheme::hamming(20), 8, extra);
    REQUIRE(s.optimal());
    CHECK(s.result.optimum < 256);

    for (auto [i, hi] : {std::pair{8, 130}, {12, 120}, {16, 5}}) {
        for (Sense sense : {Sense::Maximize, Sense::Minimize}) {
            DelsarteProblem p{Scheme::hamming(20), 8, divisible_by_four(20, 8), DistanceExpr::variable(i), sense};
            p.extra.push_back(DistanceConstraint::zero(20));
            p.extra.push_back(DistanceConstraint::size_equals(256));
            const DelsarteSolution r = solve_delsarte(p);
            REQUIRE(r.optimal());
            CHECK(r.result.optimum == hi);
        }
    }
    // The LP values agree with the constructed code.
    const DistanceDistribution b = distance_distribution(golay::build_shortened(4).to_code());
    CHECK(b.a[8] == 130);
    CHECK(b.a[12] == 120);
    CHECK(b.a[16] == 5);
}

TEST_CASE("forbidden distances") {
    const ForbiddenReport j = forbidden_distances(Scheme::johnson(24, 12), 8, 2576);
    CHECK(j.distances() == std::vector<int>{10, 14, 18, 20, 22});
    for (const ForbiddenDistance& f : j.forbidden) {
        REQUIRE(f.certificate.optimal());
        CHECK(f.certificate.result.optimum < 2576);
        CHECK(check_optimality(f.certificate.lp, f.certificate.result).ok());
    }
    const ForbiddenReport h = forbidden_distances(Scheme::hamming(20), 8, 256, divisible_by_four(20, 8));
    CHECK(h.distances() == std::vector<int>{20});
    CHECK(h.tested == std::vector<int>{8, 12, 16, 20});
    CHECK_THROWS_AS(forbidden_distances(Scheme::johnson(24, 12), 8, 2577), NothingToCertify);
}

TEST_CASE("adding constraints never increases the optimum") {
    const Rational base = delsarte_bound(Scheme::hamming(16), 6).result.optimum;
    std::vector<DistanceConstraint> extra;
    Rational last = base;
    for (int i : {7, 9, 11, 13}) {
        extra.push_back(DistanceConstraint::zero(i));
        const Rational now = delsarte_bound(Scheme::hamming(16), 6, extra).result.optimum;
        CHECK(now <= last);
        last = now;
    }
}

TEST_CASE("constraint parsing") {
    const DistanceConstraint a = parse_distance_constraint("a_14>=2/672");
    CHECK(a.relation == Relation::GreaterEqual);
    CHECK(a.lhs.terms.at(14) == 1);
    CHECK(a.lhs.constant == Rational(-1, 336));
    const DistanceConstraint b = parse_distance_constraint("a_8 - a_12 - 3a_16 + 5 >= 0");
    CHECK(b.lhs.terms.at(16) == -3);
    CHECK(b.lhs.constant == 5);
    const DistanceConstraint c = parse_distance_constraint("total=256");
    CHECK(c.relation == Relation::Equal);
    CHECK(c.lhs.total == 1);
    CHECK(parse_distance_constraint("a_8+a_12<=5").relation == Relation::LessEqual);
    CHECK_THROWS_AS(parse_distance_constraint("a_8 >> 3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_distance_constraint("b_8 >= 3"), std::invalid_argument);
}

TEST_CASE("orbit pair values") {
    CHECK(orbit_pair_value(Scheme::hamming(20), 8, 256, 0) == 0);
    Rational expect(Integer(256 * 5), (Integer(1) << 20) * binomial(20, 16));
    expect.canonicalize();
    CHECK(orbit_pair_value(Scheme::hamming(20), 16, 256, 5) == expect);
    Rational j(Integer(672), binomial(22, 11));
    j.canonicalize();
    CHECK(orbit_pair_value(Scheme::johnson(22, 11), 0, 672, 1) == j);
    CHECK_THROWS_AS(orbit_pair_value(Scheme::johnson(22, 11), 3, 672, 1), std::invalid_argument);
}

TEST_CASE("complementary dual exposes forbidden distances") {
    const DelsarteSolution s = delsarte_bound(Scheme::johnson(24, 12), 8);
    std::vector<std::size_t> focus;
    for (std::size_t v = 0; v < s.distances.size(); ++v) focus.push_back(v);
    const LPResult d = complementary_dual(s.lp, s.result, focus);
    CHECK(check_optimality(s.lp, d).ok());
    std::vector<int> positive;
    for (std::size_t v = 0; v < s.distances.size(); ++v)
        if (sgn(d.reduced_costs[v]) > 0) positive.push_back(s.distances[v]);
    CHECK(positive == std::vector<int>{10, 14, 18, 20, 22});
}
