#include "codecert/canon.hpp"
#include "codecert/certificate.hpp"
#include "codecert/classify20.hpp"
#include "codecert/code.hpp"
#include "codecert/delsarte.hpp"
#include "codecert/golay.hpp"
#include "codecert/graph.hpp"
#include "codecert/simplex.hpp"
#include "support.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

using namespace codecert;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

using Criterion = std::function<void(Outcome&)>;

std::vector<lp::DistanceConstraint> divisible_by_four(int n, int d) {
    std::vector<lp::DistanceConstraint> out;
    for (int i = d; i <= n; ++i)
        if (i % 4) out.push_back(lp::DistanceConstraint::zero(i));
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

void golay_suite(Outcome& o) {
    const LinearCode g = golay::build_extended_golay();
    const Code c = g.to_code();
    o.require(c.size() == 4096, "size 4096");
    o.require(min_distance(c) == 8, "min distance 8");
    o.require(dual(g) == g, "self-dual");
    const WeightEnumerator we = weight_enumerator(c);
    o.require(we.counts[12] == 2576, "A_12 = 2576");
    for (int i = 1; i <= 4; ++i) {
        const Code s = golay::build_shortened(i).to_code();
        o.require(s.size() == (std::size_t{1} << (12 - i)) && min_distance(s) == 8, "shortened " + std::to_string(i));
    }
    o.detail << "size=4096 d=8 self_dual A_12=" << we.counts[12] << " shortened=2048,1024,512,256";
}

void constant_weight(Outcome& o) {
    for (auto [n, d, w, size] : {std::array{24, 8, 12, 2576}, {23, 8, 11, 1288}, {22, 8, 11, 672}, {22, 8, 10, 616}}) {
        const Code c = golay::build_optimal_cw(n, d, w);
        bool weights = true;
        for (const Word& u : c) weights = weights && weight(u) == static_cast<std::size_t>(w);
        const auto md = min_distance(c);
        o.require(c.size() == static_cast<std::size_t>(size), "size of (" + std::to_string(n) + "," + std::to_string(w) + ")");
        o.require(md && *md >= static_cast<std::size_t>(d), "min distance");
        o.require(weights, "constant weight");
        o.detail << c.size() << ' ';
    }
}

void lp_bounds(Outcome& o) {
    for (auto [n, w] : {std::pair{24, 12}, {23, 11}}) {
        const auto start = std::chrono::steady_clock::now();
        const lp::DelsarteSolution s = lp::delsarte_bound(lp::Scheme::johnson(n, w), 8);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(s.optimal(), "optimal");
        o.require(lp::check_optimality(s.lp, s.result).ok(), "zero duality gap");
        o.require(secs < 10, "runtime < 10 s");
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), s.result.optimum.get_num_mpz_t(), s.result.optimum.get_den_mpz_t());
        o.detail << "J(" << n << "," << w << ")=" << s.result.optimum.get_str() << " floor=" << fl.get_str() << ' ';
        if (n == 24) o.require(s.result.optimum == 2576, "J(24,12) = 2576");
        if (n == 23) {
            o.require(fl == 1417, "floor of J(23,11) = 1417");
            o.require(s.result.optimum == Rational(58121, 41), "J(23,11) = 58121/41");
        }
    }
}

bool strict(const lp::ForbiddenDistance& f, const Integer& target) {
    if (f.certificate.result.status == lp::Status::Infeasible) return true;
    return f.certificate.optimal() && f.certificate.result.optimum < target &&
           lp::check_optimality(f.certificate.lp, f.certificate.result).ok();
}

void forbidden(Outcome& o) {
    const lp::ForbiddenReport j = lp::forbidden_distances(lp::Scheme::johnson(24, 12), 8, 2576);
    o.require(j.distances() == std::vector<int>{10, 14, 18, 20, 22}, "Johnson forbidden set");
    std::set<int> allowed{0, 8, 12, 16, 24};
    for (int i = 1; i <= 24; ++i) {
        if (allowed.count(i)) continue;
        const bool pinned = i < 8 || i % 2 == 1;  // Johnson distances are even
        const bool certified = std::find(j.distances().begin(), j.distances().end(), i) != j.distances().end();
        o.require(pinned || certified, "a_" + std::to_string(i) + " = 0");
    }
    for (const auto& f : j.forbidden) o.require(strict(f, 2576), "strict certificate at " + std::to_string(f.distance));

    const lp::ForbiddenReport h = lp::forbidden_distances(lp::Scheme::hamming(20), 8, 256, divisible_by_four(20, 8));
    o.require(h.distances() == std::vector<int>{20}, "Hamming forbidden set");
    for (const auto& f : h.forbidden) o.require(strict(f, 256), "strict certificate at " + std::to_string(f.distance));
    o.detail << "johnson={" << join(j.distances()) << "} hamming={" << join(h.distances()) << "}";
    for (const auto& f : h.forbidden)
        if (f.certificate.optimal()) o.detail << " a_20 cert optimum=" << f.certificate.result.optimum.get_str();
}

void forcing(Outcome& o) {
    const DistanceDistribution b = distance_distribution(golay::build_shortened(4).to_code());
    for (auto [i, expect] : {std::pair{8, 130}, {12, 120}, {16, 5}}) {
        for (lp::Sense sense : {lp::Sense::Maximize, lp::Sense::Minimize}) {
            lp::DelsarteProblem p{lp::Scheme::hamming(20), 8, divisible_by_four(20, 8), lp::DistanceExpr::variable(i), sense};
            p.extra.push_back(lp::DistanceConstraint::zero(20));
            p.extra.push_back(lp::DistanceConstraint::size_equals(256));
            const lp::DelsarteSolution r = lp::solve_delsarte(p);
            o.require(r.optimal() && r.result.optimum == expect, "a_" + std::to_string(i) + " forced");
        }
        o.require(b.a[static_cast<std::size_t>(i)] == expect, "B has a_" + std::to_string(i));
        o.detail << "a_" << i << '=' << expect << ' ';
    }
    o.detail << "(max = min, equal to B)";
}

void prefix_code(Outcome& o) {
    const Code p = golay::build_prefix_replacement_code();
    const DistanceDistribution dd = distance_distribution(p);
    o.require(p.size() == 256, "size 256");
    o.require(min_distance(p) == 8, "min distance 8");
    const std::map<std::size_t, int> expect{{0, 1}, {8, 126}, {10, 16}, {12, 96}, {14, 16}, {16, 1}};
    for (std::size_t i = 0; i < dd.a.size(); ++i) {
        const auto it = expect.find(i);
        o.require(dd.a[i] == (it == expect.end() ? 0 : it->second), "a_" + std::to_string(i));
    }
    o.detail << "a_8=126 a_10=16 a_12=96 a_14=16 a_16=1";
}

void classification(Outcome& o) {
    const classify20::FlipBase base = classify20::build_base();
    const classify20::VerifySummary v = classify20::parallel::verify_all(base);
    o.require(v.passed == 65536 && v.failed.empty(), "all flip codes verified");
    const classify20::Classification c = classify20::classify_all(base);
    o.require(c.classes.size() == 15, "15 classes");
    o.require(c.total() == 65536, "class sizes sum to 65536");
    o.detail << "verified=" << v.passed << " classes=" << c.classes.size() << " total=" << c.total();
}

void equivalence(Outcome& o) {
    std::mt19937_64 rng(2024);
    const Code b = golay::build_shortened(4).to_code();
    const CanonicalLabel ref = canonical_form(code_to_graph(b));
    std::size_t agree = 0;
    for (int k = 0; k < 1000; ++k) agree += canonical_form(code_to_graph(testing::random_image(rng, b))) == ref;
    o.require(agree == 1000, "1000 images of B");
    o.require(!are_equivalent(b, golay::build_prefix_replacement_code()), "B vs prefix code");

    std::vector<Code> pool;
    for (int k = 0; k < 24; ++k) {
        const Code c = testing::random_code(rng, 6, 3 + static_cast<std::size_t>(k % 3));
        pool.push_back(c);
        pool.push_back(testing::random_image(rng, c));
    }
    std::size_t pairs = 0, disagreements = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size(); ++j) {
            if (pool[i].size() != pool[j].size()) continue;
            disagreements += are_equivalent(pool[i], pool[j]) != testing::brute_force_equivalent(pool[i], pool[j]);
            ++pairs;
        }
    o.require(pairs >= 200, ">= 200 pairs");
    o.require(disagreements == 0, "brute force agreement");
    o.detail << "images=" << agree << "/1000 pairs=" << pairs << " disagreements=" << disagreements;
}

Rational determinant(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

bool minors_nonnegative(const std::vector<std::vector<Rational>>& a) {
    const std::size_t n = a.size();
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (s >> i & 1u) idx.push_back(i);
        std::vector<std::vector<Rational>> m(idx.size(), std::vector<Rational>(idx.size()));
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m[i][j] = a[idx[i]][idx[j]];
        if (sgn(determinant(m)) < 0) return false;
    }
    return true;
}

std::size_t psd_disagreements(int trials) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> small(-3, 3);
    std::size_t bad = 0;
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 6);
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, 0));
        if (t % 2 == 0) {
            const std::size_t rank = static_cast<std::size_t>(rng() % (n + 1));
            std::vector<std::vector<Rational>> b(rank, std::vector<Rational>(n));
            for (auto& row : b)
                for (auto& x : row) {
                    x = Rational(small(rng), 1 + static_cast<int>(rng() % 4));
                    x.canonicalize();
                }
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < rank; ++k) a[i][j] += b[k][i] * b[k][j];
            if (t % 4 == 0) a[n - 1][n - 1] -= Rational(1, 5);
        } else {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    Rational x(small(rng), 1 + static_cast<int>(rng() % 3));
                    x.canonicalize();
                    a[i][j] = a[j][i] = x;
                }
            for (std::size_t i = 0; i < n; ++i) a[i][i] += static_cast<int>(rng() % 6);
        }
        cert::SymBlock block{"a", n, {}};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) block.set(i, j, a[i][j]);
        const cert::PsdVerdict v = cert::check_psd(block);
        bad += v.psd != minors_nonnegative(a);
        if (!v.psd) bad += !(cert::quadratic_form(block, v.witness) < 0);
    }
    return bad;
}

void embed(Outcome& o, const std::string& name, const lp::DelsarteSolution& s, const std::vector<int>& query,
           const std::vector<int>* expect, const Integer& group) {
    const cert::LpCertificate lc = cert::lp_as_certificate(s, query);
    bool eps_zero = true;
    for (const auto& [label, e] : cert::compute_epsilons(lc.certificate)) eps_zero = eps_zero && sgn(e) == 0;
    o.require(eps_zero, name + " epsilons zero");
    const Rational target = s.result.optimum;
    const cert::ForbiddenOrbitReport f = cert::forbidden_orbits(lc.certificate, target, group);
    bool c_zero = true;
    for (const cert::OrbitBound& b : f.bounds.orbits) c_zero = c_zero && sgn(b.c_signed) == 0;
    o.require(c_zero, name + " c = 0 at the optimum");
    o.detail << name << ": eps=0 c=0";
    if (!expect) return;
    const std::set<std::string> queried(lc.queried.begin(), lc.queried.end());
    std::vector<int> got;
    for (const std::string& label : f.forbidden())
        if (queried.count(label)) got.push_back(lc.distance_of.at(label));
    o.require(got == *expect, name + " forbidden orbits match");
    o.detail << " orbits={" << join(got) << "}";
}

void certificates(Outcome& o) {
    const lp::ForbiddenReport j = lp::forbidden_distances(lp::Scheme::johnson(24, 12), 8, 2576);
    const std::vector<int> jd = j.distances();
    embed(o, "J(24,12)", j.base, j.tested, &jd, lp::Scheme::johnson(24, 12).group_order());
    o.detail << "; ";

    const lp::DelsarteSolution j23 = lp::delsarte_bound(lp::Scheme::johnson(23, 11), 8);
    embed(o, "J(23,11)", j23, {}, nullptr, lp::Scheme::johnson(23, 11).group_order());
    o.detail << "; ";

    const lp::ForbiddenReport h = lp::forbidden_distances(lp::Scheme::hamming(20), 8, 256, divisible_by_four(20, 8));
    const std::vector<int> hd = h.distances();
    embed(o, "H(20)", h.base, h.tested, &hd, lp::Scheme::hamming(20).group_order());

    const std::size_t bad = psd_disagreements(500);
    o.require(bad == 0, "PSD checker vs principal minors");
    o.detail << "; psd 500 matrices, disagreements=" << bad;
}

void properties(Outcome& o) {
    std::size_t identity = 0, parity = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
        const std::uint64_t top = std::uint64_t{1} << n;
        std::vector<std::vector<Word>> by_weight(n + 1);
        for (std::uint64_t x = 0; x < top; ++x) by_weight[static_cast<std::size_t>(std::popcount(x))].emplace_back(n, x);
        for (std::uint64_t x = 0; x < top; ++x)
            for (std::uint64_t y = 0; y < top; ++y) {
                const Word u(n, x), v(n, y);
                identity += hamming_distance(u, v) != weight(u) + weight(v) - 2 * intersection_weight(u, v).count;
            }
        for (std::size_t w = 0; w <= n; ++w)
            for (const Word& u : by_weight[w])
                for (const Word& v : by_weight[w]) parity += !parity_distance_check(u, v, w);
    }
    o.require(identity == 0, "distance identity");
    o.require(parity == 0, "parity theorem");

    const golay::GolayFamily f = golay::build_family();
    std::vector<Code> codes{f.extended24.to_code(), f.punctured23.to_code(), golay::build_prefix_replacement_code()};
    for (const auto& [i, l] : f.shortened) codes.push_back(l.to_code());
    for (auto [n, d, w] : {std::array{24, 8, 12}, {23, 8, 11}, {22, 8, 11}, {22, 8, 10}}) codes.push_back(golay::build_optimal_cw(n, d, w));
    for (const Code& c : golay::build_prefix_replacement().constituents) codes.push_back(c);
    std::size_t invariant_failures = 0;
    for (const Code& c : codes) invariant_failures += !distance_distribution(c).satisfies_invariants();
    o.require(invariant_failures == 0, "distribution invariants");

    std::mt19937_64 rng(17);
    std::size_t greedy_failures = 0;
    for (int t = 0; t < 100; ++t) {
        const Code c = testing::random_code(rng, 10 + static_cast<std::size_t>(t % 13), 40);
        const Word seed = c[static_cast<std::size_t>(rng() % c.size())];
        const unsigned want = static_cast<unsigned>(t & 1);
        const Code out = greedy_orthogonal_subcode(c, seed, want);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t k = i + 1; k < out.size(); ++k) greedy_failures += intersection_weight(out[i], out[k]).parity != want;
    }
    o.require(greedy_failures == 0, "greedy subcode parity");
    o.detail << "n<=12 identity/parity failures=" << identity + parity << " codes=" << codes.size()
             << " invariant failures=" << invariant_failures << " greedy failures=" << greedy_failures;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        double limit;  // seconds, 0 = none
        Criterion run;
    };
    const std::vector<Entry> entries{
        {1, "golay suite", 5, golay_suite},
        {2, "constant weight codes", 5, constant_weight},
        {3, "Delsarte LP bounds", 0, lp_bounds},
        {4, "forbidden distances", 0, forbidden},
        {5, "distance distribution forcing", 0, forcing},
        {6, "prefix replacement code", 5, prefix_code},
        {7, "classification", 3600, classification},
        {8, "equivalence engine", 0, equivalence},
        {9, "certificate pipeline", 0, certificates},
        {10, "property suites", 0, properties},
    };
    int failures = 0;
    for (const Entry& e : entries) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            e.run(o);
        } catch (const std::exception& ex) {
            o.require(false, std::string("exception: ") + ex.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (e.limit > 0) o.require(secs < e.limit, "runtime limit");
        failures += !o.pass;
        std::printf("%s %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", e.id, e.name, o.detail.str().c_str(), secs);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
