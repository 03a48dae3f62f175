#include "codecert/cli.hpp"

#include "codecert/canon.hpp"
#include "codecert/certificate.hpp"
#include "codecert/classify20.hpp"
#include "codecert/code_io.hpp"
#include "codecert/delsarte.hpp"
#include "codecert/golay.hpp"
#include "codecert/graph.hpp"
#include "codecert/kernels.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace codecert::cli {
namespace {

class UsageError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <class T>
std::string join(const std::vector<T>& items, const char* sep = ",") {
    std::ostringstream s;
    for (std::size_t i = 0; i < items.size(); ++i) s << (i ? sep : "") << items[i];
    return s.str();
}

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    body(f);
    if (!f) throw std::runtime_error("write failed: " + path);
}

void add_code_summary(RunReport& r, const Code& c) {
    r.result("length", std::to_string(c.length()));
    r.result("size", std::to_string(c.size()));
    const auto md = min_distance(c);
    r.result("min_distance", md ? std::to_string(*md) : "inf");
}

void add_weights(RunReport& r, const Code& c) {
    const WeightEnumerator we = weight_enumerator(c);
    for (std::size_t w = 0; w < we.counts.size(); ++w)
        if (we.counts[w]) r.result("A_" + std::to_string(w), std::to_string(we.counts[w]));
}

// --- golay / cw / code -----------------------------------------------------------

RunReport golay_build(int shorten, bool punctured, const std::string& out_path) {
    if (shorten != 0 && punctured) throw UsageError("--shorten and --punctured are exclusive");
    if (shorten < 0 || shorten > 4) throw UsageError("--shorten must be 1..4");
    RunReport r;
    r.command = "golay build";
    r.input("variant", punctured ? "punctured" : shorten ? "shortened" : "extended");
    if (shorten) r.input("shorten", std::to_string(shorten));

    std::optional<LinearCode> l;
    try {
        l = punctured ? golay::build_punctured_golay() : shorten ? golay::build_shortened(shorten) : golay::build_extended_golay();
        r.check("construction_verified", true);
    } catch (const golay::VerificationFailure& e) {
        r.check("construction_verified", false, e.what());
        return r;
    }
    const Code c = l->to_code();
    r.result("dimension", std::to_string(l->dimension()));
    add_code_summary(r, c);
    add_weights(r, c);

    const std::size_t want_dim = 12 - static_cast<std::size_t>(shorten);
    const std::size_t want_d = punctured ? 7 : 8;
    const auto md = min_distance(c);
    r.check("size", c.size() == (std::size_t{1} << want_dim), "expected 2^" + std::to_string(want_dim));
    r.check("min_distance", md && *md == want_d, "expected " + std::to_string(want_d));
    if (!punctured && !shorten) {
        const bool self_dual = dual(*l) == *l;
        r.result("self_dual", yes_no(self_dual));
        r.check("self_dual", self_dual);
        const WeightEnumerator we = weight_enumerator(c);
        r.check("A_12", we.counts[12] == 2576, "expected 2576");
    }
    if (!out_path.empty()) {
        write_code_file(out_path, c);
        r.result("written", out_path);
    }
    return r;
}

RunReport code_stats(const std::string& path) {
    const Code c = read_code_file(path);
    RunReport r;
    r.command = "code stats";
    r.input("file", path);
    add_code_summary(r, c);
    if (c.empty()) return r;

    const DistanceDistribution dd = distance_distribution(c);
    for (std::size_t i = 0; i < dd.a.size(); ++i)
        if (sgn(dd.a[i]) != 0) r.result("a_" + std::to_string(i), to_string(dd.a[i]));
    add_weights(r, c);
    const SelfOrthogonality so = self_orthogonality(c);
    r.result("self_orthogonal", yes_no(so.self_orthogonal));
    r.result("odd_pairs", std::to_string(so.odd_pairs.size()));
    const LinearCode sp = span(c);
    r.result("span_dimension", std::to_string(sp.dimension()));
    r.result("linear", yes_no(sp.dimension() < 63 && (std::size_t{1} << sp.dimension()) == c.size() && c.contains(Word::zero(c.length()))));
    r.check("distribution_invariants", dd.satisfies_invariants());
    return r;
}

RunReport cw_build(int n, int d, int w, const std::string& out_path) {
    RunReport r;
    r.command = "cw build";
    r.input("n", std::to_string(n));
    r.input("d", std::to_string(d));
    r.input("w", std::to_string(w));
    const Code c = golay::build_optimal_cw(n, d, w);
    add_code_summary(r, c);
    const bool constant = std::all_of(c.begin(), c.end(), [&](const Word& u) { return weight(u) == static_cast<std::size_t>(w); });
    const auto md = min_distance(c);
    r.check("constant_weight", constant);
    r.check("min_distance_at_least_d", !md || *md >= static_cast<std::size_t>(d));
    if (!out_path.empty()) {
        write_code_file(out_path, c);
        r.result("written", out_path);
    }
    return r;
}

// --- lp --------------------------------------------------------------------------

struct LpFlags {
    std::string scheme = "hamming";
    int n = 0;
    int w = -1;
    int d = 1;
    std::vector<int> force_zero;
    int divisible_by = 0;
    std::vector<std::string> bounds;
    std::string maximize;
    std::string minimize;
};

void add_lp_flags(CLI::App* app, LpFlags& f) {
    app->add_option("--scheme", f.scheme, "hamming or johnson")->check(CLI::IsMember({"hamming", "johnson"}));
    app->add_option("--n", f.n, "length")->required();
    app->add_option("--w", f.w, "weight (johnson)");
    app->add_option("--d", f.d, "minimum distance")->required();
    app->add_option("--force-zero", f.force_zero, "distances with a_i = 0")->delimiter(',');
    app->add_option("--divisible-by", f.divisible_by, "force a_i = 0 unless k divides i");
    app->add_option("--bound", f.bounds, "extra constraint such as a_14>=2/672");
}

lp::Scheme scheme_of(const LpFlags& f) {
    if (f.n < 1 || f.n > 60) throw UsageError("--n must be 1..60");
    if (f.scheme == "johnson") {
        if (f.w < 0 || f.w > f.n) throw UsageError("johnson needs 0 <= --w <= --n");
        return lp::Scheme::johnson(f.n, f.w);
    }
    if (f.w >= 0) throw UsageError("--w only applies to the johnson scheme");
    return lp::Scheme::hamming(f.n);
}

std::vector<lp::DistanceConstraint> constraints_of(const LpFlags& f, const lp::Scheme& s) {
    std::set<int> zero(f.force_zero.begin(), f.force_zero.end());
    for (int i : zero)
        if (!s.is_distance(i) || i == 0) throw UsageError("--force-zero " + std::to_string(i) + " is not a distance of " + s.name());
    if (f.divisible_by < 0) throw UsageError("--divisible-by must be positive");
    if (f.divisible_by > 0)
        for (int i : s.distance_classes())
            if (i >= f.d && i % f.divisible_by != 0) zero.insert(i);
    std::vector<lp::DistanceConstraint> out;
    for (int i : zero)
        if (i >= f.d) out.push_back(lp::DistanceConstraint::zero(i));
    for (const auto& b : f.bounds) out.push_back(lp::parse_distance_constraint(b));
    return out;
}

void echo_lp(RunReport& r, const LpFlags& f, const lp::Scheme& s, const std::vector<lp::DistanceConstraint>& extra) {
    r.input("scheme", s.name());
    r.input("d", std::to_string(f.d));
    for (std::size_t k = 0; k < extra.size(); ++k) r.input("constraint." + std::to_string(k + 1), extra[k].text);
}

void add_solution(RunReport& r, const lp::DelsarteSolution& sol, const std::string& prefix = "") {
    r.result(prefix + "status", sol.optimal() ? "optimal" : "infeasible");
    if (!sol.optimal()) return;
    r.result(prefix + "optimum", sol.result.optimum);
    r.result(prefix + "floor", floor_of(sol.result.optimum).get_str());
    for (const auto& [i, a] : sol.distribution())
        if (sgn(a) != 0) r.result(prefix + "a_" + std::to_string(i), to_string(a));
}

RunReport lp_delsarte(const LpFlags& f) {
    const lp::Scheme s = scheme_of(f);
    lp::DelsarteProblem p;
    p.scheme = s;
    p.d = f.d;
    p.extra = constraints_of(f, s);
    if (!f.maximize.empty() && !f.minimize.empty()) throw UsageError("--maximize and --minimize are exclusive");
    if (!f.maximize.empty()) p.objective = lp::parse_distance_expr(f.maximize);
    if (!f.minimize.empty()) {
        p.objective = lp::parse_distance_expr(f.minimize);
        p.sense = lp::Sense::Minimize;
    }
    RunReport r;
    r.command = "lp delsarte";
    echo_lp(r, f, s, p.extra);
    if (!f.maximize.empty()) r.input("maximize", f.maximize);
    if (!f.minimize.empty()) r.input("minimize", f.minimize);

    lp::DelsarteSolution sol;
    try {
        sol = lp::solve_delsarte(p);
    } catch (const lp::UnboundedError& e) {
        r.result("status", "unbounded");
        r.check("bounded", false, e.what());
        return r;
    }
    add_solution(r, sol);
    r.check("feasible", sol.optimal());
    if (sol.optimal()) {
        const lp::OptimalityCheck oc = lp::check_optimality(sol.lp, sol.result);
        r.result("dual_objective", to_string(oc.dual_objective));
        r.check("zero_duality_gap", oc.ok());
    }
    return r;
}

RunReport lp_forbidden(const LpFlags& f, const std::string& target_text) {
    const lp::Scheme s = scheme_of(f);
    const auto extra = constraints_of(f, s);
    const Integer target = parse_group_order(target_text);
    RunReport r;
    r.command = "lp forbidden";
    echo_lp(r, f, s, extra);
    r.input("target", target.get_str());

    lp::ForbiddenReport rep;
    try {
        rep = lp::forbidden_distances(s, f.d, target, extra);
    } catch (const lp::NothingToCertify& e) {
        r.check("optimum_reaches_target", false, e.what());
        return r;
    }
    r.result("base.optimum", rep.base.result.optimum);
    r.result("tested", join(rep.tested));
    r.result("forbidden", join(rep.distances()));
    r.check("base_zero_duality_gap", lp::check_optimality(rep.base.lp, rep.base.result).ok());

    for (const lp::ForbiddenDistance& fd : rep.forbidden) {
        const std::string key = "certificate.a_" + std::to_string(fd.distance);
        if (fd.certificate.optimal()) {
            r.result(key, to_string(fd.certificate.result.optimum));
            const bool below = fd.certificate.result.optimum < Rational(target);
            const bool exact = lp::check_optimality(fd.certificate.lp, fd.certificate.result).ok();
            r.check("a_" + std::to_string(fd.distance) + "_certified", below && exact,
                    to_string(fd.certificate.result.optimum) + " < " + target.get_str());
        } else {
            r.result(key, "infeasible");
            r.check("a_" + std::to_string(fd.distance) + "_certified", true, "infeasible");
        }
    }

    // The same question through the certificate embedding; only meaningful
    // when the LP optimum is the target itself.
    if (rep.base.result.optimum == Rational(target) && !rep.tested.empty()) {
        const cert::LpCertificate lc = cert::lp_as_certificate(rep.base, rep.tested);
        const cert::ForbiddenOrbitReport fo = cert::forbidden_orbits(lc.certificate, Rational(target), s.group_order());
        std::vector<int> via_orbits;
        for (const auto& v : fo.orbits)
            if (v.forbidden && std::find(lc.queried.begin(), lc.queried.end(), v.label) != lc.queried.end())
                via_orbits.push_back(lc.distance_of.at(v.label));
        std::sort(via_orbits.begin(), via_orbits.end());
        r.result("orbit_forbidden", join(via_orbits));
        r.check("orbit_certificate_agrees", via_orbits == rep.distances() && !fo.disagreement);
    } else {
        r.notes.push_back("orbit cross-check skipped: LP optimum differs from target");
    }
    return r;
}

// --- equiv / classify ------------------------------------------------------------

RunReport equiv(const std::string& a_path, const std::string& b_path, const std::string& expect) {
    if (!expect.empty() && expect != "equivalent" && expect != "inequivalent")
        throw UsageError("--expect must be equivalent or inequivalent");
    const Code a = read_code_file(a_path);
    const Code b = read_code_file(b_path);
    RunReport r;
    r.command = "equiv";
    r.input("a", a_path);
    r.input("b", b_path);
    const CanonicalLabel la = canonical_form(code_to_graph(a));
    const CanonicalLabel lb = canonical_form(code_to_graph(b));
    const bool eq = a.length() == b.length() && a.size() == b.size() && la == lb;
    r.result("result", eq ? "equivalent" : "inequivalent");
    r.result("digest_a", la.digest());
    r.result("digest_b", lb.digest());
    if (!expect.empty()) r.check("expected_" + expect, (expect == "equivalent") == eq);
    return r;
}

RunReport classify_list(const std::vector<std::string>& files, int jobs) {
    RunReport r;
    r.command = "classify --list";
    std::vector<Code> codes;
    for (const auto& f : files) {
        r.input("file." + std::to_string(codes.size() + 1), f);
        codes.push_back(read_code_file(f));
    }
    const auto classes = partition_classes(codes, jobs);
    r.result("codes", std::to_string(codes.size()));
    r.result("classes", std::to_string(classes.size()));
    r.table.push_back("class  count  representative  members");
    for (std::size_t k = 0; k < classes.size(); ++k) {
        std::vector<std::string> names;
        for (std::size_t m : classes[k].members) names.push_back(files[m]);
        const std::string id = std::to_string(k + 1);
        r.table.push_back(pad(id, 7) + pad(std::to_string(classes[k].count), 7) + pad(files[classes[k].representative], 16) +
                          join(names, " "));
        r.detail("class." + id + ".count", std::to_string(classes[k].count));
        r.detail("class." + id + ".members", join(names, " "));
    }
    return r;
}

RunReport classify_div4(const std::string& emit_dir, int jobs, bool exhaustive) {
    RunReport r;
    r.command = "classify div4";
    if (exhaustive) r.input("exhaustive", "true");
    const classify20::FlipBase base = classify20::build_base();

    const classify20::VerifySummary vs =
        jobs == 1 ? classify20::serial::verify_all(base) : classify20::parallel::verify_all(base, jobs);
    r.result("verified", std::to_string(vs.passed));
    r.result("failed", std::to_string(vs.failed.size()));
    r.result("span_constant", yes_no(vs.span_constant));
    r.check("all_flip_codes_verified", vs.failed.empty() && vs.passed == 65536,
            vs.failed.empty() ? "" : "first failure mask " + classify20::mask_hex(vs.failed.front()));
    r.check("span_constant", vs.span_constant);

    const classify20::Classification cl = classify20::classify_all(base, {jobs, exhaustive});
    r.result("classes", std::to_string(cl.classes.size()));
    r.result("total", std::to_string(cl.total()));
    r.result("mask_orbits", std::to_string(cl.mask_orbits));
    r.result("labels_computed", std::to_string(cl.labels_computed));
    r.result("key_buckets", std::to_string(cl.key_buckets));
    r.result("keys_consistent", yes_no(cl.keys_consistent));
    r.table.push_back("mask  size   digest");
    for (const auto& c : cl.classes) {
        const std::string hex = classify20::mask_hex(c.mask);
        r.table.push_back(hex + "  " + pad(std::to_string(c.size), 7) + c.digest);
        r.detail("class." + hex, std::to_string(c.size));
    }
    r.check("class_sizes_sum_65536", cl.total() == 65536);
    r.check("fifteen_classes", cl.classes.size() == 15, std::to_string(cl.classes.size()) + " found");
    r.check("keys_consistent", cl.keys_consistent);

    if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (const auto& c : cl.classes) {
            const std::string path = (std::filesystem::path(emit_dir) / ("class_" + classify20::mask_hex(c.mask) + ".code")).string();
            write_code_file(path, classify20::flip_code(base, c.mask));
        }
        r.result("emitted", std::to_string(cl.classes.size()));
    }
    return r;
}

// --- cert ------------------------------------------------------------------------

RunReport cert_verify(const std::string& problem, const std::string& dual_path, const std::string& target_text,
                      const std::string& group_text) {
    const Rational target = parse_rational(target_text);
    const Integer group = parse_group_order(group_text);
    const cert::Certificate c = cert::read_certificate_files(problem, dual_path);
    RunReport r;
    r.command = "cert verify";
    r.input("problem", problem);
    r.input("dual", dual_path);
    r.input("target", to_string(target));
    r.input("group", group_text);
    r.result("blocks", std::to_string(c.layout.size()));
    r.result("orbits", std::to_string(c.orbits.size()));

    cert::ForbiddenOrbitReport fo;
    try {
        fo = cert::forbidden_orbits(c, target, group);
        r.check("dual_psd", true);
    } catch (const cert::NotPsdError& e) {
        std::vector<std::string> w;
        for (const auto& v : e.verdict().witness) w.push_back(to_string(v));
        r.result("not_psd.block", e.block());
        r.result("not_psd.witness", join(w));
        r.result("not_psd.value", to_string(e.verdict().value));
        r.check("dual_psd", false, "block " + e.block());
        return r;
    }
    r.result("dual_objective", fo.bounds.dual_objective);
    r.result("epsilon_sum", to_string(fo.bounds.epsilon_sum));
    r.result("abs_epsilon_sum", to_string(fo.bounds.abs_epsilon_sum));
    r.table.push_back("orbit  epsilon  X  c_signed  c_conservative  forbidden");
    for (std::size_t k = 0; k < fo.orbits.size(); ++k) {
        const cert::OrbitBound& b = fo.bounds.orbits[k];
        const cert::OrbitVerdict& v = fo.orbits[k];
        const std::string verdict = v.forbidden ? (v.forbidden_conservative ? "yes" : "yes (signed only)")
                                                : (v.forbidden_conservative ? "no (conservative only)" : "no");
        r.table.push_back(b.label + "  " + to_string(b.epsilon) + "  " + to_string(b.x) + "  " + to_string(b.c_signed) + "  " +
                          to_string(b.c_conservative) + "  " + verdict);
        const std::string key = "orbit." + b.label + ".";
        r.detail(key + "epsilon", to_string(b.epsilon));
        r.detail(key + "x", to_string(b.x));
        r.detail(key + "c_signed", to_string(b.c_signed));
        r.detail(key + "c_conservative", to_string(b.c_conservative));
        r.detail(key + "forbidden", yes_no(v.forbidden));
    }
    r.result("forbidden", join(fo.forbidden()));
    r.check("signed_and_conservative_agree", !fo.disagreement);
    return r;
}

RunReport cert_emit(const LpFlags& f, std::vector<int> query, const std::string& problem_out, const std::string& dual_out) {
    const lp::Scheme s = scheme_of(f);
    const auto extra = constraints_of(f, s);
    RunReport r;
    r.command = "cert emit";
    echo_lp(r, f, s, extra);
    const lp::DelsarteSolution sol = lp::delsarte_bound(s, f.d, extra);
    add_solution(r, sol, "lp.");
    r.check("feasible", sol.optimal());
    if (!sol.optimal()) return r;
    if (query.empty())
        for (int i : sol.distances)
            if (std::none_of(extra.begin(), extra.end(), [&](const lp::DistanceConstraint& c) {
                    return c.relation == lp::Relation::Equal && c.lhs.terms.size() == 1 && c.lhs.terms.count(i) &&
                           sgn(c.lhs.total) == 0 && sgn(c.lhs.constant) == 0;
                }))
                query.push_back(i);
    r.input("query", join(query));

    const cert::LpCertificate lc = cert::lp_as_certificate(sol, query);
    r.result("scale", to_string(lc.scale));
    r.result("blocks", std::to_string(lc.certificate.layout.size()));
    r.result("orbits", std::to_string(lc.certificate.orbits.size()));
    const auto eps = cert::compute_epsilons(lc.certificate);
    r.check("epsilons_zero", std::all_of(eps.begin(), eps.end(), [](const auto& e) { return sgn(e.second) == 0; }));
    const auto si = cert::slack_identity(lc.certificate, lc.primal_y);
    r.check("slack_identity", std::all_of(si.begin(), si.end(), [](const cert::SlackIdentity& x) { return x.agree(); }));

    if (problem_out == dual_out) {
        write_file(problem_out, [&](std::ostream& o) {
            cert::write_problem(o, lc.certificate);
            cert::write_dual(o, lc.certificate);
        });
    } else {
        write_file(problem_out, [&](std::ostream& o) { cert::write_problem(o, lc.certificate); });
        write_file(dual_out, [&](std::ostream& o) { cert::write_dual(o, lc.certificate); });
    }
    r.result("problem_file", problem_out);
    r.result("dual_file", dual_out);
    r.result("group", s.group_order().get_str());
    return r;
}

int finish(const RunReport& r, std::ostream& out) {
    print_report(out, r);
    return r.pass() ? kPass : kFailed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification runs for binary codes", "codecert"};
    app.require_subcommand(1);
    int jobs = 0;

    auto* golay = app.add_subcommand("golay", "Golay code family")->require_subcommand(1);
    auto* golay_build_cmd = golay->add_subcommand("build", "build and verify a Golay code");
    int shorten = 0;
    bool punctured = false;
    std::string out_path;
    golay_build_cmd->add_option("--shorten", shorten, "shorten i times, 1..4");
    golay_build_cmd->add_flag("--punctured", punctured, "the [23,12,7] code");
    golay_build_cmd->add_option("--out", out_path, "write the code here");

    auto* code = app.add_subcommand("code", "code files")->require_subcommand(1);
    auto* stats = code->add_subcommand("stats", "statistics of a code file");
    std::string file;
    stats->add_option("file", file)->required();

    auto* cw = app.add_subcommand("cw", "constant weight codes")->require_subcommand(1);
    auto* cw_build_cmd = cw->add_subcommand("build", "build an optimal constant weight code");
    int cn = 0, cd = 0, cwt = 0;
    cw_build_cmd->add_option("n", cn)->required();
    cw_build_cmd->add_option("d", cd)->required();
    cw_build_cmd->add_option("w", cwt)->required();
    cw_build_cmd->add_option("--out", out_path, "write the code here");

    auto* lpc = app.add_subcommand("lp", "Delsarte linear programs")->require_subcommand(1);
    LpFlags lpf;
    auto* delsarte = lpc->add_subcommand("delsarte", "solve the Delsarte LP");
    add_lp_flags(delsarte, lpf);
    delsarte->add_option("--maximize", lpf.maximize, "objective, default the code size");
    delsarte->add_option("--minimize", lpf.minimize, "objective to minimize");
    auto* forbidden = lpc->add_subcommand("forbidden", "certify forbidden distances");
    add_lp_flags(forbidden, lpf);
    std::string target;
    forbidden->add_option("--target", target, "code size M")->required();

    auto* eq = app.add_subcommand("equiv", "test two codes for equivalence");
    std::string a_path, b_path, expect;
    eq->add_option("a", a_path)->required();
    eq->add_option("b", b_path)->required();
    eq->add_option("--expect", expect, "equivalent or inequivalent; fail otherwise");

    auto* classify = app.add_subcommand("classify", "equivalence classification");
    std::vector<std::string> list;
    classify->add_option("--list", list, "code files to partition");
    classify->add_option("--jobs", jobs, "worker count");
    auto* div4 = classify->add_subcommand("div4", "the 65536 coset-flip codes");
    std::string emit_dir;
    bool exhaustive = false;
    div4->add_option("--emit-reps", emit_dir, "write one code file per class");
    div4->add_option("--jobs", jobs, "worker count");
    div4->add_flag("--exhaustive", exhaustive, "label every mask");

    auto* certc = app.add_subcommand("cert", "SDP-style certificates")->require_subcommand(1);
    auto* verify = certc->add_subcommand("verify", "check a certificate and bound orbits");
    std::string problem, dual_path, group;
    verify->add_option("--problem", problem)->required();
    verify->add_option("--dual", dual_path)->required();
    verify->add_option("--target", target)->required();
    verify->add_option("--group", group, "group order, e.g. 23!")->required();
    auto* emit = certc->add_subcommand("emit", "write the Delsarte LP as a certificate");
    add_lp_flags(emit, lpf);
    std::vector<int> query;
    emit->add_option("--query", query, "distances to certify")->delimiter(',');
    emit->add_option("--problem-out", problem)->required();
    emit->add_option("--dual-out", dual_path)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "codecert: " << e.what() << '\n';
        return kUsage;
    }

    const int env_jobs = kernels::default_jobs();
    if (jobs <= 0) jobs = env_jobs;

    try {
        if (golay_build_cmd->parsed()) return finish(golay_build(shorten, punctured, out_path), out);
        if (stats->parsed()) return finish(code_stats(file), out);
        if (cw_build_cmd->parsed()) return finish(cw_build(cn, cd, cwt, out_path), out);
        if (delsarte->parsed()) return finish(lp_delsarte(lpf), out);
        if (forbidden->parsed()) return finish(lp_forbidden(lpf, target), out);
        if (eq->parsed()) return finish(equiv(a_path, b_path, expect), out);
        if (div4->parsed()) {
            RunReport r = classify_div4(emit_dir, jobs, exhaustive);
            r.notes.push_back("jobs=" + std::to_string(jobs));
            return finish(r, out);
        }
        if (classify->parsed()) {
            if (list.empty()) throw UsageError("classify needs div4 or --list FILES");
            RunReport r = classify_list(list, jobs);
            r.notes.push_back("jobs=" + std::to_string(jobs));
            return finish(r, out);
        }
        if (verify->parsed()) return finish(cert_verify(problem, dual_path, target, group), out);
        if (emit->parsed()) return finish(cert_emit(lpf, query, problem, dual_path), out);
        throw UsageError("no command");
    } catch (const ParseError& e) {
        err << "codecert: " << e.what() << '\n';
        return kMalformed;
    } catch (const cert::CertificateError& e) {
        err << "codecert: " << e.what() << '\n';
        return kMalformed;
    } catch (const std::invalid_argument& e) {
        err << "codecert: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "codecert: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "codecert: " << e.what() << '\n';
        return kFailed;
    }
}

}  // namespace codecert::cli
