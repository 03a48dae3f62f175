#include "codecert/certificate.hpp"

#include "codecert/code_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace codecert::cert {

// --- blocks ------------------------------------------------------------------

Rational SymBlock::at(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    const auto it = entries.find({i, j});
    return it == entries.end() ? Rational(0) : it->second;
}

void SymBlock::set(std::size_t i, std::size_t j, const Rational& value) {
    if (i >= dim || j >= dim) throw std::out_of_range("block entry out of range");
    if (i > j) std::swap(i, j);
    if (sgn(value) == 0) entries.erase({i, j});
    else entries[{i, j}] = value;
}

std::vector<std::vector<Rational>> SymBlock::dense() const {
    std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim, 0));
    for (const auto& [ij, v] : entries) {
        a[ij.first][ij.second] = v;
        a[ij.second][ij.first] = v;
    }
    return a;
}

Rational quadratic_form(const SymBlock& block, std::span<const Rational> v) {
    if (v.size() != block.dim) throw std::invalid_argument("vector length does not match block dimension");
    Rational sum = 0;
    for (const auto& [ij, a] : block.entries) {
        const Rational term = a * v[ij.first] * v[ij.second];
        sum += ij.first == ij.second ? term : Rational(2 * term);
    }
    return sum;
}

Rational inner(const SymBlock& a, const SymBlock& b) {
    if (a.dim != b.dim) throw CertificateError("inner product of blocks '" + a.label + "' and '" + b.label + "' of different size");
    Rational sum = 0;
    for (const auto& [ij, v] : a.entries) {
        const auto it = b.entries.find(ij);
        if (it == b.entries.end()) continue;
        sum += ij.first == ij.second ? Rational(v * it->second) : Rational(2 * v * it->second);
    }
    return sum;
}

Rational inner(const BlockMatrix& a, const BlockMatrix& b) {
    Rational sum = 0;
    for (const auto& [label, block] : a) {
        const auto it = b.find(label);
        if (it != b.end()) sum += inner(block, it->second);
    }
    return sum;
}

// --- PSD ------------------------------------------------------------------------

PsdVerdict check_psd(const SymBlock& block) {
    const std::size_t n = block.dim;
    auto a = block.dense();
    std::vector<std::size_t> step(n, std::numeric_limits<std::size_t>::max());
    std::vector<std::size_t> pivots;
    std::vector<Rational> z;  // witness in the coordinates left after elimination

    for (std::size_t k = 0;; ++k) {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < n; ++i)
            if (step[i] == std::numeric_limits<std::size_t>::max()) rest.push_back(i);
        if (rest.empty()) return {};

        std::optional<std::size_t> positive, negative;
        for (std::size_t i : rest) {
            if (!negative && sgn(a[i][i]) < 0) negative = i;
            if (!positive && sgn(a[i][i]) > 0) positive = i;
        }
        if (negative) {
            z.assign(n, 0);
            z[*negative] = 1;
            break;
        }
        if (!positive) {
            std::optional<std::pair<std::size_t, std::size_t>> off;
            for (std::size_t i : rest)
                for (std::size_t j : rest)
                    if (!off && i < j && sgn(a[i][j]) != 0) off = std::pair{i, j};
            if (!off) return {};
            z.assign(n, 0);
            z[off->first] = 1;
            z[off->second] = -sgn(a[off->first][off->second]);
            break;
        }
        const std::size_t p = *positive;
        step[p] = k;
        pivots.push_back(p);
        for (std::size_t i : rest) {
            if (i == p || sgn(a[i][p]) == 0) continue;
            const Rational f = a[i][p] / a[p][p];
            for (std::size_t j : rest)
                if (j != p) a[i][j] -= f * a[p][j];
        }
    }

    // Back-substitute through the eliminated pivots, latest first.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const std::size_t p = *it;
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (step[j] > step[p]) s += a[p][j] * z[j];
        z[p] = -s / a[p][p];
    }
    PsdVerdict v;
    v.psd = false;
    v.value = quadratic_form(block, z);
    v.witness = std::move(z);
    if (sgn(v.value) >= 0) throw std::logic_error("check_psd: witness failed re-evaluation");
    return v;
}

// --- parsing ----------------------------------------------------------------------

namespace {

struct Parser {
    Certificate& c;
    std::set<std::string> matrices;  // names used in "matrix" lines
    bool saw_problem = false;
    bool saw_dual = false;

    void parse(std::istream& in, const std::string& source) {
        enum class Section { None, Problem, Dual } section = Section::None;
        BlockMatrix* target = nullptr;  // matrix receiving blocks
        SymBlock* block = nullptr;
        std::string line;
        std::size_t line_no = 0;
        const auto fail = [&](const std::string& what) { throw ParseError(source, line_no, what); };

        while (std::getline(in, line)) {
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            std::istringstream tokens(line);
            std::vector<std::string> t;
            for (std::string s; tokens >> s;) t.push_back(s);
            if (t.empty()) continue;

            if (t[0] == "PROBLEM" || t[0] == "DUAL") {
                if (t.size() != 1) fail("unexpected text after " + t[0]);
                bool& seen = t[0] == "PROBLEM" ? saw_problem : saw_dual;
                if (seen) fail("repeated " + t[0] + " section");
                seen = true;
                section = t[0] == "PROBLEM" ? Section::Problem : Section::Dual;
                target = section == Section::Dual ? &c.dual : nullptr;
                block = nullptr;
            } else if (section == Section::None) {
                fail("expected PROBLEM or DUAL");
            } else if (t[0] == "orbit") {
                if (section != Section::Problem) fail("orbit line outside PROBLEM");
                if (t.size() != 4 || t[2].rfind("b=", 0) != 0 || t[3].rfind("slot=", 0) != 0)
                    fail("expected 'orbit <label> b=<value> slot=<block>'");
                for (const OrbitSpec& o : c.orbits)
                    if (o.label == t[1]) fail("repeated orbit '" + t[1] + "'");
                try {
                    c.orbits.push_back({t[1], parse_rational(t[2].substr(2)), t[3].substr(5)});
                } catch (const std::invalid_argument& e) {
                    fail(e.what());
                }
            } else if (t[0] == "matrix") {
                if (section != Section::Problem) fail("matrix line outside PROBLEM");
                if (t.size() != 2) fail("expected 'matrix <name>'");
                if (!matrices.insert(t[1]).second) fail("repeated matrix '" + t[1] + "'");
                target = t[1] == "F0" ? &c.f0 : &c.f[t[1]];
                block = nullptr;
            } else if (t[0] == "block") {
                if (t.size() != 4 || t[2] != "dim") fail("expected 'block <label> dim <d>'");
                std::size_t dim = 0;
                try {
                    const long long d = std::stoll(t[3]);
                    if (d < 1) fail("block dimension must be positive");
                    dim = static_cast<std::size_t>(d);
                } catch (const std::logic_error&) {
                    fail("bad block dimension '" + t[3] + "'");
                }
                if (section == Section::Problem) declare(t[1], dim, fail);
                if (!target) {
                    block = nullptr;
                    continue;
                }
                if (target->count(t[1])) fail("repeated block '" + t[1] + "'");
                block = &(*target)[t[1]];
                block->label = t[1];
                block->dim = dim;
            } else {
                if (!block) fail("entry outside a block");
                if (t.size() != 3) fail("expected '<i> <j> <value>'");
                std::size_t i = 0, j = 0;
                Rational v;
                try {
                    const long long ii = std::stoll(t[0]), jj = std::stoll(t[1]);
                    if (ii < 1 || jj < 1 || static_cast<std::size_t>(ii) > block->dim || static_cast<std::size_t>(jj) > block->dim)
                        fail("entry index out of range for block '" + block->label + "'");
                    i = static_cast<std::size_t>(ii - 1);
                    j = static_cast<std::size_t>(jj - 1);
                    v = parse_rational(t[2]);
                } catch (const ParseError&) {
                    throw;
                } catch (const std::logic_error& e) {
                    fail(std::string("bad entry: ") + e.what());
                }
                const auto key = std::pair{std::min(i, j), std::max(i, j)};
                if (const auto it = block->entries.find(key); it != block->entries.end() && it->second != v)
                    fail("asymmetric or conflicting entry (" + t[0] + "," + t[1] + ") in block '" + block->label + "'");
                if (sgn(v) != 0) block->entries[key] = v;
            }
        }
    }

    template <typename Fail>
    void declare(const std::string& label, std::size_t dim, const Fail& fail) {
        for (const auto& [l, d] : c.layout)
            if (l == label) {
                if (d != dim) fail("block '" + label + "' declared with dimension " + std::to_string(d) + " and " + std::to_string(dim));
                return;
            }
        c.layout.emplace_back(label, dim);
    }

    void validate() const {
        if (!saw_problem) throw CertificateError("missing PROBLEM section");
        if (!saw_dual) throw CertificateError("missing DUAL section");
        std::map<std::string, std::size_t> dims(c.layout.begin(), c.layout.end());
        std::set<std::string> orbit_labels;
        for (const OrbitSpec& o : c.orbits) {
            orbit_labels.insert(o.label);
            const auto it = dims.find(o.slot);
            if (it == dims.end()) throw CertificateError("orbit '" + o.label + "' has unknown slot block '" + o.slot + "'");
            if (it->second != 1) throw CertificateError("slot block '" + o.slot + "' of orbit '" + o.label + "' is not 1x1");
        }
        for (const std::string& m : matrices)
            if (m != "F0" && !orbit_labels.count(m)) throw CertificateError("matrix '" + m + "' names no orbit");
        for (const auto& [label, block] : c.dual) {
            const auto it = dims.find(label);
            if (it == dims.end()) throw CertificateError("dual block '" + label + "' is not in the problem");
            if (it->second != block.dim) throw CertificateError("dual block '" + label + "' has the wrong dimension");
        }
        for (const auto& [label, dim] : c.layout)
            if (!c.dual.count(label)) throw CertificateError("dual is missing block '" + label + "'");
    }
};

void write_block(std::ostream& out, const std::string& label, std::size_t dim, const SymBlock* block) {
    out << "block " << label << " dim " << dim << "\n";
    if (!block) return;
    for (const auto& [ij, v] : block->entries) out << ij.first + 1 << " " << ij.second + 1 << " " << to_string(v) << "\n";
}

void write_matrix(std::ostream& out, const Certificate& c, const BlockMatrix& m) {
    for (const auto& [label, dim] : c.layout)
        if (const auto it = m.find(label); it != m.end() && !it->second.entries.empty()) write_block(out, label, dim, &it->second);
}

}  // namespace

Certificate read_certificate(std::istream& problem, std::istream& dual, const std::string& problem_source,
                             const std::string& dual_source) {
    Certificate c;
    Parser p{c, {}};
    p.parse(problem, problem_source);
    p.parse(dual, dual_source);
    p.validate();
    return c;
}

Certificate read_certificate_files(const std::string& problem_path, const std::string& dual_path) {
    std::ifstream p(problem_path);
    if (!p) throw ParseError(problem_path, 0, "cannot open file");
    if (problem_path == dual_path) {
        std::istringstream empty;
        return read_certificate(p, empty, problem_path, dual_path);
    }
    std::ifstream d(dual_path);
    if (!d) throw ParseError(dual_path, 0, "cannot open file");
    return read_certificate(p, d, problem_path, dual_path);
}

void write_problem(std::ostream& out, const Certificate& c) {
    out << "PROBLEM\n";
    for (const auto& [label, dim] : c.layout) out << "block " << label << " dim " << dim << "\n";
    for (const OrbitSpec& o : c.orbits) out << "orbit " << o.label << " b=" << to_string(o.b) << " slot=" << o.slot << "\n";
    out << "matrix F0\n";
    write_matrix(out, c, c.f0);
    for (const OrbitSpec& o : c.orbits) {
        const auto it = c.f.find(o.label);
        if (it == c.f.end()) continue;
        out << "matrix " << o.label << "\n";
        write_matrix(out, c, it->second);
    }
}

void write_dual(std::ostream& out, const Certificate& c) {
    out << "DUAL\n";
    for (const auto& [label, dim] : c.layout) {
        const auto it = c.dual.find(label);
        write_block(out, label, dim, it == c.dual.end() ? nullptr : &it->second);
    }
}

// --- bounds --------------------------------------------------------------------------

std::map<std::string, Rational> compute_epsilons(const Certificate& c) {
    std::map<std::string, Rational> eps;
    for (const OrbitSpec& o : c.orbits) {
        const auto it = c.f.find(o.label);
        const Rational product = it == c.f.end() ? Rational(0) : inner(it->second, c.dual);
        eps[o.label] = product - o.b;
    }
    return eps;
}

NotPsdError::NotPsdError(std::string block, PsdVerdict verdict)
    : std::runtime_error("dual block '" + block + "' is not positive semidefinite (v^T X v = " + to_string(verdict.value) + ")"),
      block_(std::move(block)),
      verdict_(std::move(verdict)) {}

OrbitBoundReport orbit_bounds(const Certificate& c, const Rational& target) {
    std::vector<const SymBlock*> blocks;
    for (const auto& [label, dim] : c.layout) {
        const auto it = c.dual.find(label);
        if (it == c.dual.end()) throw CertificateError("dual is missing block '" + label + "'");
        blocks.push_back(&it->second);
    }
    std::vector<PsdVerdict> verdicts(blocks.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(blocks.size()); ++i)
        verdicts[static_cast<std::size_t>(i)] = check_psd(*blocks[static_cast<std::size_t>(i)]);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (!verdicts[i].psd) throw NotPsdError(blocks[i]->label, verdicts[i]);

    OrbitBoundReport r;
    r.dual_objective = inner(c.f0, c.dual);
    const auto eps = compute_epsilons(c);
    for (const auto& [label, e] : eps) {
        r.epsilon_sum += e;
        r.abs_epsilon_sum += abs(e);
    }
    for (const OrbitSpec& o : c.orbits) {
        OrbitBound b;
        b.label = o.label;
        b.epsilon = eps.at(o.label);
        b.x = c.dual.at(o.slot).at(0, 0);
        b.c_signed = r.dual_objective - target + r.epsilon_sum;
        b.c_conservative = r.dual_objective - target + r.abs_epsilon_sum;
        r.orbits.push_back(std::move(b));
    }
    return r;
}

std::vector<std::string> ForbiddenOrbitReport::forbidden() const {
    std::vector<std::string> out;
    for (const OrbitVerdict& v : orbits)
        if (v.forbidden) out.push_back(v.label);
    return out;
}

ForbiddenOrbitReport forbidden_orbits(const Certificate& c, const Rational& target, const Integer& group_order) {
    if (group_order < 1) throw std::invalid_argument("group order must be positive");
    ForbiddenOrbitReport r;
    r.bounds = orbit_bounds(c, target);
    const Rational g(group_order);
    for (const OrbitBound& b : r.bounds.orbits) {
        OrbitVerdict v;
        v.label = b.label;
        // c / X < 1/|G|  <=>  c |G| < X  for X > 0.
        v.forbidden = sgn(b.x) > 0 && b.c_signed * g < b.x;
        v.forbidden_conservative = sgn(b.x) > 0 && b.c_conservative * g < b.x;
        r.disagreement = r.disagreement || v.forbidden != v.forbidden_conservative;
        r.orbits.push_back(std::move(v));
    }
    return r;
}

// --- LP embedding ----------------------------------------------------------------

LpCertificate lp_as_certificate(const lp::DelsarteSolution& solution, std::span<const int> query) {
    if (!solution.optimal()) throw std::invalid_argument("lp_as_certificate needs an optimal LP result");
    if (solution.lp.sense != lp::Sense::Maximize) throw std::invalid_argument("lp_as_certificate needs a maximization");
    const lp::Scheme& scheme = solution.problem.scheme;
    const lp::LinearProgram& prog = solution.lp;

    std::vector<std::size_t> focus;
    LpCertificate out;
    for (int t : query) {
        const auto var = solution.variable_of(t);
        if (!var) throw std::invalid_argument("distance " + std::to_string(t) + " is not an LP variable");
        focus.push_back(*var);
        out.queried.push_back("d" + std::to_string(t));
    }
    const lp::LPResult dual = lp::complementary_dual(prog, solution.result, focus);

    out.scale = sgn(solution.result.optimum) > 0 ? solution.result.optimum : Rational(1);
    const Rational& s = out.scale;
    const Rational space(scheme.space_size());
    Certificate& c = out.certificate;

    std::vector<Rational> norm;  // a_t = norm_t y_t
    for (int t : solution.distances) norm.push_back(Rational(lp::orbit_norm(scheme, t)) / s);

    const auto add_block = [&](const std::string& label) {
        c.layout.emplace_back(label, 1);
        c.dual[label] = SymBlock{label, 1, {}};
        return label;
    };
    const auto put = [&](BlockMatrix& m, const std::string& label, const Rational& v) {
        if (sgn(v) == 0) return;
        SymBlock& b = m[label];
        b.label = label;
        b.dim = 1;
        b.set(0, 0, v);
    };

    c.orbits.push_back({"d0", prog.objective_constant * space / s, add_block("s0")});
    out.distance_of["d0"] = 0;
    for (std::size_t v = 0; v < solution.distances.size(); ++v) {
        const std::string label = "d" + std::to_string(solution.distances[v]);
        c.orbits.push_back({label, prog.objective[v] * norm[v], add_block("s" + std::to_string(solution.distances[v]))});
        out.distance_of[label] = solution.distances[v];
        put(c.f[label], "s" + std::to_string(solution.distances[v]), -1);
    }
    put(c.f["d0"], "s0", -1);

    // y_0 = S/|N| as a pair of inequalities.
    const Rational y0 = s / space;
    add_block("y0+");
    put(c.f0, "y0+", y0);
    put(c.f["d0"], "y0+", 1);
    add_block("y0-");
    put(c.f0, "y0-", -y0);
    put(c.f["d0"], "y0-", -1);
    const Rational x0 = prog.objective_constant * space / s;
    put(c.dual, sgn(x0) >= 0 ? "y0+" : "y0-", abs(x0));

    for (std::size_t r = 0; r < prog.constraints.size(); ++r) {
        const lp::Constraint& row = prog.constraints[r];
        const Rational& y = dual.dual[r];
        const auto emit = [&](const std::string& label, int sign, const Rational& x) {
            add_block(label);
            put(c.f0, label, sign * row.rhs);
            for (std::size_t v = 0; v < solution.distances.size(); ++v)
                put(c.f["d" + std::to_string(solution.distances[v])], label, sign * row.coefficients[v] * norm[v]);
            put(c.dual, label, x);
        };
        const std::string base = "r" + std::to_string(r + 1);
        switch (row.relation) {
        case lp::Relation::LessEqual: emit(base, 1, y); break;
        case lp::Relation::GreaterEqual: emit(base, -1, -y); break;
        case lp::Relation::Equal:
            emit(base + "+", 1, sgn(y) > 0 ? y : Rational(0));
            emit(base + "-", -1, sgn(y) < 0 ? Rational(-y) : Rational(0));
            break;
        }
    }
    for (std::size_t v = 0; v < solution.distances.size(); ++v)
        put(c.dual, "s" + std::to_string(solution.distances[v]), dual.reduced_costs[v] * norm[v]);

    out.primal_y["d0"] = y0;
    for (std::size_t v = 0; v < solution.distances.size(); ++v)
        out.primal_y["d" + std::to_string(solution.distances[v])] = solution.result.primal[v] / norm[v];
    for (auto it = c.f.begin(); it != c.f.end();)
        it = it->second.empty() ? c.f.erase(it) : std::next(it);
    return out;
}

std::vector<SlackIdentity> slack_identity(const Certificate& c, const std::map<std::string, Rational>& y) {
    const auto value = [&](const std::string& label) {
        const auto it = y.find(label);
        return it == y.end() ? Rational(0) : it->second;
    };
    BlockMatrix m;
    for (const auto& [label, dim] : c.layout) m[label] = SymBlock{label, dim, {}};
    for (const auto& [label, block] : c.f0) m[label].entries = block.entries;
    for (const auto& [orbit, matrix] : c.f) {
        const Rational yw = value(orbit);
        if (sgn(yw) == 0) continue;
        for (const auto& [label, block] : matrix)
            for (const auto& [ij, v] : block.entries) m[label].set(ij.first, ij.second, m[label].at(ij.first, ij.second) - v * yw);
    }

    const auto eps = compute_epsilons(c);
    Rational expanded_common = inner(c.f0, c.dual);
    for (const OrbitSpec& o : c.orbits) expanded_common -= value(o.label) * (o.b + eps.at(o.label));

    std::vector<SlackIdentity> out;
    for (const OrbitSpec& o : c.orbits) {
        SlackIdentity s;
        s.label = o.label;
        for (const auto& [label, block] : m)
            if (label != o.slot) s.direct += inner(block, c.dual.at(label));
        s.expanded = expanded_common - c.dual.at(o.slot).at(0, 0) * value(o.label);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace codecert::cert
