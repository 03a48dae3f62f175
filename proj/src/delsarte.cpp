#include "codecert/delsarte.hpp"

#include <algorithm>
#include <cctype>

namespace codecert::lp {

// --- schemes -------------------------------------------------------------------

Scheme Scheme::hamming(int n) {
    if (n < 1 || n > 64) throw std::invalid_argument("Hamming scheme needs 1 <= n <= 64");
    return {Kind::Hamming, n, 0};
}

Scheme Scheme::johnson(int n, int w) {
    if (n < 1 || n > 64 || w < 1 || w > n) throw std::invalid_argument("Johnson scheme needs 0 < w <= n <= 64");
    return {Kind::Johnson, n, w};
}

std::vector<int> Scheme::distance_classes() const {
    std::vector<int> out;
    if (kind == Kind::Hamming) {
        for (int i = 0; i <= n; ++i) out.push_back(i);
    } else {
        for (int j = 0; j <= std::min(w, n - w); ++j) out.push_back(2 * j);
    }
    return out;
}

bool Scheme::is_distance(int i) const {
    if (kind == Kind::Hamming) return i >= 0 && i <= n;
    return i >= 0 && i % 2 == 0 && i / 2 <= std::min(w, n - w);
}

Integer Scheme::space_size() const {
    if (kind == Kind::Hamming) {
        Integer r;
        mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(n));
        return r;
    }
    return binomial(static_cast<unsigned>(n), static_cast<unsigned>(w));
}

Integer Scheme::group_order() const {
    Integer g = factorial(static_cast<unsigned>(n));
    if (kind == Kind::Hamming) return g * space_size();
    return 2 * w == n ? Integer(2 * g) : g;
}

std::string Scheme::name() const {
    if (kind == Kind::Hamming) return "hamming(" + std::to_string(n) + ")";
    return "johnson(" + std::to_string(n) + "," + std::to_string(w) + ")";
}

// --- scheme polynomials --------------------------------------------------------

namespace {

Integer binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

std::int64_t narrow(const Integer& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("scheme polynomial value does not fit in 64 bits");
    return v.get_si();
}

}  // namespace

std::int64_t krawtchouk(int n, int k, int i) {
    if (n < 0 || k < 0 || i < 0 || k > n || i > n) throw std::out_of_range("krawtchouk: need 0 <= k, i <= n");
    Integer sum = 0;
    for (int r = 0; r <= k; ++r) {
        const Integer term = binom(i, r) * binom(n - i, k - r);
        if (r % 2) sum -= term;
        else sum += term;
    }
    return narrow(sum);
}

std::int64_t eberlein(int n, int w, int k, int j) {
    if (w < 0 || w > n) throw std::out_of_range("eberlein: need 0 <= w <= n");
    const int m = std::min(w, n - w);
    if (k < 0 || j < 0 || k > m || j > m) throw std::out_of_range("eberlein: need 0 <= k, j <= min(w, n-w)");
    Integer sum = 0;
    for (int r = 0; r <= k; ++r) {
        const Integer term = binom(j, r) * binom(w - j, k - r) * binom(n - w - j, k - r);
        if (r % 2) sum -= term;
        else sum += term;
    }
    return narrow(sum);
}

// --- constraint expressions ----------------------------------------------------

DistanceExpr DistanceExpr::variable(int i, Rational coefficient) {
    DistanceExpr e;
    e.terms[i] = std::move(coefficient);
    return e;
}

DistanceExpr DistanceExpr::size() {
    DistanceExpr e;
    e.total = 1;
    return e;
}

DistanceConstraint DistanceConstraint::zero(int i) {
    return {DistanceExpr::variable(i), Relation::Equal, "a_" + std::to_string(i) + "=0"};
}

DistanceConstraint DistanceConstraint::at_least(int i, Rational bound) {
    bound.canonicalize();
    DistanceExpr e = DistanceExpr::variable(i);
    e.constant = -bound;
    return {std::move(e), Relation::GreaterEqual, "a_" + std::to_string(i) + ">=" + to_string(bound)};
}

DistanceConstraint DistanceConstraint::size_equals(Rational size) {
    DistanceExpr e = DistanceExpr::size();
    e.constant = -size;
    return {std::move(e), Relation::Equal, "total=" + to_string(size)};
}

namespace {

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

bool is_exponent_sign(const std::string& s, std::size_t pos) {
    return pos >= 2 && (s[pos - 1] == 'e' || s[pos - 1] == 'E') && std::isdigit(static_cast<unsigned char>(s[pos - 2]));
}

Rational parse_coefficient(std::string body, const std::string& whole) {
    if (!body.empty() && body.back() == '*') body.pop_back();
    if (body.empty()) return 1;
    try {
        return parse_rational(body);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad coefficient '" + body + "' in '" + whole + "'");
    }
}

void add_term(DistanceExpr& e, const std::string& term, const std::string& whole) {
    if (term.empty()) throw std::invalid_argument("empty term in '" + whole + "'");
    Rational sign = 1;
    std::string body = term;
    if (body.front() == '+' || body.front() == '-') {
        if (body.front() == '-') sign = -1;
        body.erase(0, 1);
    }
    if (const auto pos = body.find("a_"); pos != std::string::npos) {
        const std::string index = body.substr(pos + 2);
        if (index.empty() || !std::all_of(index.begin(), index.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("bad distance index in '" + whole + "'");
        e.terms[std::stoi(index)] += sign * parse_coefficient(body.substr(0, pos), whole);
        return;
    }
    for (std::string_view word : {"total", "size"}) {
        if (body.size() >= word.size() && body.compare(body.size() - word.size(), word.size(), word) == 0) {
            e.total += sign * parse_coefficient(body.substr(0, body.size() - word.size()), whole);
            return;
        }
    }
    e.constant += sign * parse_coefficient(body, whole);
}

DistanceExpr parse_side(const std::string& s, const std::string& whole) {
    DistanceExpr e;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        if (i == s.size() || ((s[i] == '+' || s[i] == '-') && !is_exponent_sign(s, i))) {
            add_term(e, s.substr(start, i - start), whole);
            start = i;
        }
    }
    if (s.empty()) throw std::invalid_argument("empty side in '" + whole + "'");
    return e;
}

}  // namespace

DistanceExpr parse_distance_expr(std::string_view text) {
    const std::string s = strip_spaces(text);
    return parse_side(s, s);
}

DistanceConstraint parse_distance_constraint(std::string_view text) {
    const std::string s = strip_spaces(text);
    struct Op {
        std::string_view token;
        Relation relation;
    };
    constexpr Op kOps[] = {{"<=", Relation::LessEqual}, {">=", Relation::GreaterEqual},
                           {"==", Relation::Equal},     {"=", Relation::Equal}};
    for (const Op& op : kOps) {
        const auto pos = s.find(op.token);
        if (pos == std::string::npos) continue;
        const std::string rest = s.substr(pos + op.token.size());
        if (rest.find_first_of("<>=") != std::string::npos) throw std::invalid_argument("more than one relation in '" + s + "'");
        DistanceExpr lhs = parse_side(s.substr(0, pos), s);
        const DistanceExpr rhs = parse_side(rest, s);
        for (const auto& [i, c] : rhs.terms) lhs.terms[i] -= c;
        lhs.total -= rhs.total;
        lhs.constant -= rhs.constant;
        return {std::move(lhs), op.relation, s};
    }
    throw std::invalid_argument("no relation (<=, >=, =) in '" + s + "'");
}

// --- LP construction -----------------------------------------------------------

namespace {

struct Linear {
    std::vector<Rational> coefficients;
    Rational constant = 0;
};

Linear lower(const DistanceExpr& e, const Scheme& scheme, int d, const std::vector<int>& distances) {
    Linear out{std::vector<Rational>(distances.size(), 0), e.constant};
    for (const auto& [i, c] : e.terms) {
        if (!scheme.is_distance(i))
            throw std::invalid_argument("a_" + std::to_string(i) + " is not a distance class of " + scheme.name());
        if (i == 0) {
            out.constant += c;
            continue;
        }
        if (i < d) continue;
        const auto it = std::find(distances.begin(), distances.end(), i);
        out.coefficients[static_cast<std::size_t>(it - distances.begin())] += c;
    }
    if (sgn(e.total) != 0) {
        out.constant += e.total;
        for (Rational& c : out.coefficients) c += e.total;
    }
    return out;
}

bool pins_to_zero(const DistanceConstraint& c) {
    if (c.lhs.terms.size() != 1 || sgn(c.lhs.total) != 0 || sgn(c.lhs.constant) != 0) return false;
    const auto& [i, coef] = *c.lhs.terms.begin();
    if (i == 0 || sgn(coef) == 0) return false;
    return c.relation == Relation::Equal || (c.relation == Relation::LessEqual && sgn(coef) > 0) ||
           (c.relation == Relation::GreaterEqual && sgn(coef) < 0);
}

}  // namespace

std::map<int, Rational> DelsarteSolution::distribution() const {
    std::map<int, Rational> out;
    for (int i : problem.scheme.distance_classes()) out[i] = i == 0 ? Rational(1) : Rational(0);
    if (!optimal()) return out;
    for (std::size_t v = 0; v < distances.size(); ++v) out[distances[v]] = result.primal[v];
    return out;
}

std::optional<std::size_t> DelsarteSolution::variable_of(int distance) const {
    const auto it = std::find(distances.begin(), distances.end(), distance);
    if (it == distances.end()) return std::nullopt;
    return static_cast<std::size_t>(it - distances.begin());
}

DelsarteSolution solve_delsarte(const DelsarteProblem& problem) {
    if (problem.d < 1) throw std::invalid_argument("minimum distance must be at least 1");
    const Scheme& s = problem.scheme;
    DelsarteSolution sol;
    sol.problem = problem;
    for (int i : s.distance_classes())
        if (i > 0 && i >= problem.d) sol.distances.push_back(i);

    LinearProgram& lp = sol.lp;
    lp.sense = problem.sense;
    for (int i : sol.distances) lp.add_variable("a_" + std::to_string(i));

    const Linear objective = lower(problem.objective.value_or(DistanceExpr::size()), s, problem.d, sol.distances);
    lp.objective = objective.coefficients;
    lp.objective_constant = objective.constant;

    if (s.kind == Scheme::Kind::Hamming) {
        for (int k = 1; k <= s.n; ++k) {
            std::vector<Rational> row;
            for (int i : sol.distances) row.emplace_back(static_cast<long>(krawtchouk(s.n, k, i)));
            lp.add_constraint(std::move(row), Relation::GreaterEqual, -Rational(binom(s.n, k)),
                              "delsarte k=" + std::to_string(k));
        }
    } else {
        const int m = std::min(s.w, s.n - s.w);
        for (int j = 1; j <= m; ++j) {
            std::vector<Rational> row;
            for (int i : sol.distances) {
                const int t = i / 2;
                Rational q(Integer(static_cast<long>(eberlein(s.n, s.w, t, j))), binom(s.w, t) * binom(s.n - s.w, t));
                q.canonicalize();
                row.push_back(q);
            }
            lp.add_constraint(std::move(row), Relation::GreaterEqual, -1, "delsarte k=" + std::to_string(j));
        }
    }
    for (const DistanceConstraint& c : problem.extra) {
        const Linear l = lower(c.lhs, s, problem.d, sol.distances);
        lp.add_constraint(l.coefficients, c.relation, -l.constant, c.text);
    }
    sol.result = solve_lp(lp);
    return sol;
}

DelsarteSolution delsarte_bound(const Scheme& scheme, int d, std::vector<DistanceConstraint> extra) {
    return solve_delsarte({scheme, d, std::move(extra), std::nullopt, Sense::Maximize});
}

std::vector<int> ForbiddenReport::distances() const {
    std::vector<int> out;
    for (const ForbiddenDistance& f : forbidden) out.push_back(f.distance);
    return out;
}

ForbiddenReport forbidden_distances(const Scheme& scheme, int d, const Integer& target,
                                    std::vector<DistanceConstraint> extra) {
    if (target < 1) throw std::invalid_argument("target size must be positive");
    ForbiddenReport report;
    report.base = delsarte_bound(scheme, d, extra);
    if (!report.base.optimal() || report.base.result.optimum < Rational(target))
        throw NothingToCertify("LP optimum is below the target size " + target.get_str() + "; nothing to certify");

    std::vector<int> pinned;
    for (const DistanceConstraint& c : extra)
        if (pins_to_zero(c)) pinned.push_back(c.lhs.terms.begin()->first);

    Rational threshold(Integer(2), target);
    threshold.canonicalize();
    for (int i : report.base.distances) {
        if (std::find(pinned.begin(), pinned.end(), i) != pinned.end()) continue;
        report.tested.push_back(i);
        std::vector<DistanceConstraint> more = extra;
        more.push_back(DistanceConstraint::at_least(i, threshold));
        DelsarteSolution probe = delsarte_bound(scheme, d, std::move(more));
        if (!probe.optimal() || probe.result.optimum < Rational(target))
            report.forbidden.push_back({i, std::move(probe)});
    }
    return report;
}

Integer orbit_norm(const Scheme& scheme, int t) {
    if (!scheme.is_distance(t)) throw std::invalid_argument(std::to_string(t) + " is not a distance class of " + scheme.name());
    if (scheme.kind == Scheme::Kind::Hamming) return scheme.space_size() * binom(scheme.n, t);
    return scheme.space_size() * binom(scheme.n - scheme.w, t / 2) * binom(scheme.w, t / 2);
}

Rational orbit_pair_value(const Scheme& scheme, int t, const Rational& size, const Rational& a_t) {
    Rational r = size * a_t / Rational(orbit_norm(scheme, t));
    r.canonicalize();
    return r;
}

}  // namespace codecert::lp
