#pragma once

// Explicit factorizations of K*_n: fixed starters for (C4,C5) on 9 and
// (C3,C3,C5) on 11 vertices, the (C2,C_{n-2}) family, the (C2,...,C2,C3)
// family via lifted 1-factor pairs, and doubling of undirected solutions.

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "owp/core.hpp"
#include "owp/matching.hpp"

namespace owp {

/// Thrown when a construction's preconditions are not met.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Starter {u1 u2 inf1 u6 u4, u0 u7 u3 u5} on Z_8 + inf.
TwoFactor starter_c4_c5();
/// Starter {u0 u1 u3, u2 u7 inf1, u4 u8 u6 u9 u5} on Z_10 + inf.
TwoFactor starter_c3_c3_c5();

Factorization op45();
Factorization op335();

/// u_0, then (u_{-i}, u_i) for i = 1..k, then (u_{-(i+1)}, u_i) for
/// i = k+1..final_index-1, then u_final_index. Every residue except -(k+1)
/// that the ranges reach appears once; throws ConstructionError otherwise.
DirectedCycle zigzag_starter(int modulus, int k, int final_index);

/// Starter factors of the (C2, C_{n-2}) family. For odd n >= 7 the second
/// entry is the extra factor holding all arcs of difference -l and the two
/// arcs between the infinity points; for even n it is empty.
struct TwoCycleStarter {
  VertexSpace space;
  TwoFactor starter;
  std::vector<TwoFactor> extra;
};
TwoCycleStarter starter_2_nminus2(int n);

Factorization op2_nminus2(int n);

struct OneFactorPair {
  OneFactor first;
  OneFactor second;
  int ell = 0;
  bool on_4ell = true;  // true: K_{4l} (n = 1 mod 8); false: K_{4l+2}
};

/// The 1-factor pair for n = 1, 3, 7 (mod 8), n >= 7.
OneFactorPair build_one_factor_pair(int n);

/// Lifts a pair on K_{4l} to a factorization of K*_{4l+1}.
Factorization lift_4ell(const OneFactor& f1, const OneFactor& f2, int ell);
/// Lifts a pair on K_{4l+2} to a factorization of K*_{4l+3}.
Factorization lift_4ell2(const OneFactor& f1, const OneFactor& f2, int ell);
/// The lifted starter factors (before orbit development).
std::pair<TwoFactor, TwoFactor> lifted_starters_4ell(const OneFactor& f1, const OneFactor& f2,
                                                     int ell);
std::pair<TwoFactor, TwoFactor> lifted_starters_4ell2(const OneFactor& f1,
                                                      const OneFactor& f2, int ell);

Factorization op2s3(int n);

/// Vertices are 0..n-1 (tokens u<i>). Each factor lists its undirected
/// cycles as vertex sequences.
struct UndirectedTwoFactorization {
  int n = 0;
  std::vector<std::vector<std::vector<int>>> factors;
};

/// Empty when valid; otherwise the reasons it is not a 2-factorization of K_n.
std::vector<std::string> validate_undirected(const UndirectedTwoFactorization& u);

/// Two directed copies of each undirected factor: as listed and reversed.
Factorization double_undirected(const UndirectedTwoFactorization& u);

struct ConstructionRequest {
  int n = 0;
  CycleType cycle_type;
};

struct Unsupported {
  enum class Category { KnownNonexistent, Open, OutOfScope };
  Category category = Category::OutOfScope;
  std::string reason;
};

std::string_view to_string(Unsupported::Category c);

using ConstructionResult = std::variant<Factorization, Unsupported>;

/// Routes a request to the matching construction. Throws
/// std::invalid_argument if the cycle type does not sum to n.
ConstructionResult construct(const ConstructionRequest& req);

}  // namespace owp
