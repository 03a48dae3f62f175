#pragma once

#include "codecert/delsarte.hpp"
#include "codecert/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace codecert::cert {

/// Sparse symmetric block; entries keyed by (i, j) with i <= j, 0-based.
struct SymBlock {
    std::string label;
    std::size_t dim = 0;
    std::map<std::pair<std::size_t, std::size_t>, Rational> entries;

    Rational at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rational& value);
    std::vector<std::vector<Rational>> dense() const;
};

using BlockMatrix = std::map<std::string, SymBlock>;  // a missing block is zero

struct OrbitSpec {
    std::string label;
    Rational b;
    std::string slot;  // label of the 1x1 block holding y_omega
};

/// max sum b_w y_w  s.t.  F0 - sum_w F_w y_w >= 0, and its dual
/// min <F0, X>  s.t.  <F_w, X> = b_w, X >= 0.
struct Certificate {
    std::vector<std::pair<std::string, std::size_t>> layout;  // block label, dim, in file order
    BlockMatrix f0;
    std::map<std::string, BlockMatrix> f;  // orbit label -> F_w
    std::vector<OrbitSpec> orbits;
    BlockMatrix dual;
};

class CertificateError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text format, one directive per line, '#' comments:
///   PROBLEM | DUAL                       section switch
///   orbit <label> b=<value> slot=<block> (PROBLEM)
///   matrix F0 | matrix <orbit>           (PROBLEM) following blocks belong to it
///   block <label> dim <d>                starts a block
///   <i> <j> <value>                      1-based entry; value "p/q" or decimal
/// An entry given once stands for both (i,j) and (j,i); giving both with
/// different values is an error. Problem and dual may share one stream.
/// Throws ParseError with source:line, or CertificateError on misalignment.
Certificate read_certificate(std::istream& problem, std::istream& dual, const std::string& problem_source = "<problem>",
                             const std::string& dual_source = "<dual>");
Certificate read_certificate_files(const std::string& problem_path, const std::string& dual_path);
void write_problem(std::ostream& out, const Certificate& c);
void write_dual(std::ostream& out, const Certificate& c);

struct PsdVerdict {
    bool psd = true;
    std::vector<Rational> witness;  // v with v^T A v < 0 when not psd
    Rational value;                 // v^T A v
};

/// Exact symmetric-pivoted LDL^T; a failing pivot yields a witness vector
/// which is re-evaluated against the original block before returning.
PsdVerdict check_psd(const SymBlock& block);
Rational quadratic_form(const SymBlock& block, std::span<const Rational> v);

Rational inner(const SymBlock& a, const SymBlock& b);
Rational inner(const BlockMatrix& a, const BlockMatrix& b);

/// eps_w = <X, F_w> - b_w for every orbit.
std::map<std::string, Rational> compute_epsilons(const Certificate& c);

class NotPsdError : public std::runtime_error {
public:
    NotPsdError(std::string block, PsdVerdict verdict);
    const std::string& block() const { return block_; }
    const PsdVerdict& verdict() const { return verdict_; }

private:
    std::string block_;
    PsdVerdict verdict_;
};

struct OrbitBound {
    std::string label;
    Rational epsilon;
    Rational x;               // the slot entry X_w
    Rational c_signed;        // <F0,X> - target + sum eps
    Rational c_conservative;  // <F0,X> - target + sum |eps|
};

struct OrbitBoundReport {
    Rational dual_objective;
    Rational epsilon_sum;
    Rational abs_epsilon_sum;
    std::vector<OrbitBound> orbits;
};

/// Throws NotPsdError if any dual block is not PSD.
OrbitBoundReport orbit_bounds(const Certificate& c, const Rational& target);

struct OrbitVerdict {
    std::string label;
    bool forbidden = false;               // X_w > 0 and c_signed / X_w < 1/|G|
    bool forbidden_conservative = false;  // same with c_conservative
};

struct ForbiddenOrbitReport {
    OrbitBoundReport bounds;
    std::vector<OrbitVerdict> orbits;
    bool disagreement = false;  // the two variants differ on some orbit

    std::vector<std::string> forbidden() const;
};

ForbiddenOrbitReport forbidden_orbits(const Certificate& c, const Rational& target, const Integer& group_order);

/// The Delsarte LP as a diagonal SDP. Orbit "d<t>" has y_t = S a_t / orbit_norm(t)
/// with S the LP optimum; "d0" is the single-word orbit, fixed to S/|N|.
/// Each LP row becomes 1x1 blocks (two for an equality) and each orbit gets a
/// slot block; X holds the LP dual, averaged so that reduced costs of the
/// queried distances are positive wherever some optimal dual allows it.
struct LpCertificate {
    Certificate certificate;
    Rational scale;
    std::map<std::string, int> distance_of;    // orbit label -> distance
    std::vector<std::string> queried;          // orbit labels of the query distances
    std::map<std::string, Rational> primal_y;  // from the LP primal
};

LpCertificate lp_as_certificate(const lp::DelsarteSolution& solution, std::span<const int> query);

/// 0 <= <M', X'> for each orbit, computed directly from M = F0 - sum F_w y_w
/// and through the expansion <F0,X> - sum y (b + eps) - X_w y_w.
struct SlackIdentity {
    std::string label;
    Rational direct;
    Rational expanded;
    bool agree() const { return direct == expanded; }
};

std::vector<SlackIdentity> slack_identity(const Certificate& c, const std::map<std::string, Rational>& y);

}  // namespace codecert::cert
