#pragma once

// Undirected edges of the doubled complete graph K_{2k} on {x_i} u {y_i},
// their pure-length / mixed-difference classes, perfect matchings, the
// preconditions of the two lifting constructions, and the parity counters
// behind the nonexistence argument for n = 5 (mod 8).

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "owp/core.hpp"

namespace owp {

/// Unordered edge; stored with a < b.
struct Edge {
  VertexLabel a;
  VertexLabel b;

  static Edge make(VertexLabel p, VertexLabel q);
  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

/// Pure edges carry the undirected length min(delta, k - delta) in 1..k/2;
/// mixed edges x_i y_{i+d} carry d in Z_k.
struct EdgeClass {
  enum class Kind { LeftPure, RightPure, Mixed };
  Kind kind = Kind::Mixed;
  int value = 0;

  static EdgeClass left(int d) { return {Kind::LeftPure, d}; }
  static EdgeClass right(int d) { return {Kind::RightPure, d}; }
  static EdgeClass mixed(int d) { return {Kind::Mixed, d}; }

  bool is_pure() const { return kind != Kind::Mixed; }
  auto operator<=>(const EdgeClass&) const = default;
};

std::string to_string(const EdgeClass& c);

using ClassMultiset = std::map<EdgeClass, int>;

/// A set of edges on DoubledCyclic(k). Construction does not enforce the
/// perfect-matching property; see is_one_factor.
struct OneFactor {
  int k = 0;
  std::vector<Edge> edges;
};

struct DifferenceProfile {
  std::set<int> left;   // L(S)
  std::set<int> right;  // R(S)
  std::set<int> mixed;  // M(S)
  std::set<int> xs;     // X(S)
  std::set<int> ys;     // Y(S)
  ClassMultiset classes;
};

/// Throws std::invalid_argument when an endpoint is not x_i/y_i with i < k
/// or the endpoints coincide.
EdgeClass edge_class(int k, const Edge& e);

DifferenceProfile profile(int k, const std::vector<Edge>& edges);
ClassMultiset class_multiset(int k, const std::vector<Edge>& edges);

bool is_one_factor(int k, const std::vector<Edge>& edges);
inline bool is_one_factor(const OneFactor& f) { return is_one_factor(f.k, f.edges); }

struct AssumptionReport {
  bool ok = false;
  std::vector<std::string> faults;
};

/// Preconditions for lifting a pair on K_{4l} (k = 2l): jointly one edge of
/// every left/right pure length 1..l and every mixed difference, and each
/// factor has exactly one edge of pure length l.
AssumptionReport check_assumptions_4ell(const OneFactor& f1, const OneFactor& f2, int ell);

/// Preconditions for lifting a pair on K_{4l+2} (k = 2l + 1): jointly one
/// edge of every pure length and every nonzero mixed difference, and each
/// factor has exactly one edge of mixed difference 0.
AssumptionReport check_assumptions_4ell2(const OneFactor& f1, const OneFactor& f2, int ell);

/// Mixed edges are x_j y_{j+d}. omega_e (j even, d odd) completes the
/// partition of the mixed edges.
struct ParityParameters {
  int eps_o = 0;    // j odd,  d even
  int eps_e = 0;    // j even, d even
  int omega_o = 0;  // j odd,  d odd
  int omega_e = 0;  // j even, d odd
  int lambda = 0;   // left pure edges of odd length
  int rho = 0;      // right pure edges of odd length

  bool operator==(const ParityParameters&) const = default;
};

ParityParameters parity_parameters(const OneFactor& f, int ell);

/// The counting argument evaluated on a candidate pair. Per factor, the odd
/// x-vertices and the even y-vertices number l each, which forces
///   eps_o + omega_o + lambda = l  and  eps_e + omega_o + rho = l  (mod 2).
/// Summed over both factors this forces the even-mixed-difference count to
/// be congruent to lambda_total + rho_total, while a pair meeting the lifting
/// preconditions uses every one of the l even mixed differences exactly once.
struct ParityCertificate {
  ParityParameters first;
  ParityParameters second;
  bool congruences_hold = false;  // the four per-factor congruences
  int forced_parity = 0;          // (lambda_1 + lambda_2 + rho_1 + rho_2) mod 2
  int required_parity = 0;        // l mod 2
  bool obstruction = false;       // forced_parity != required_parity
};

ParityCertificate parity_certificate(const OneFactor& f1, const OneFactor& f2, int ell);

/// Requires the pair to pass check_assumptions_4ell (throws otherwise) and
/// reports whether the parity argument rules it out. Any genuine pair has
/// no obstruction, which is why none exist for odd l.
bool parity_obstruction_holds(const OneFactor& f1, const OneFactor& f2, int ell);

/// Parses "x3"/"y0" style tokens into an edge of DoubledCyclic(k).
Edge make_edge(const std::string& a, const std::string& b);

}  // namespace owp
