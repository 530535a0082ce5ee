#pragma once

// Vertex spaces, directed cycles, 2-factors and factorizations of the
// complete symmetric digraph K*_n, together with the arc-multiset verifier.

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace owp {

/// Reduces `value` into [0, modulus).
constexpr int reduce_mod(long long value, int modulus) {
  long long r = value % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

enum class SpaceKind { CyclicPlusInf, DoubledCyclic };

/// The ambient vertex set of a construction.
///
/// CyclicPlusInf(m, t) is Z_m plus t adjoined fixed points (t <= 2).
/// DoubledCyclic(k, t) is {x_i} u {y_i} over Z_k plus t adjoined fixed
/// points (t <= 1); the lifting constructions use t = 1.
class VertexSpace {
 public:
  static VertexSpace cyclic(int modulus, int infinities = 0);
  static VertexSpace doubled(int k, int infinities = 0);

  SpaceKind kind() const { return kind_; }
  /// Z_m for cyclic spaces, Z_k for doubled ones.
  int modulus() const { return modulus_; }
  int infinities() const { return infinities_; }
  int vertex_count() const;

  bool operator==(const VertexSpace&) const = default;

 private:
  VertexSpace(SpaceKind kind, int modulus, int infinities)
      : kind_(kind), modulus_(modulus), infinities_(infinities) {}

  SpaceKind kind_;
  int modulus_;
  int infinities_;
};

/// A labelled vertex. The declaration order of the kinds is the token order
/// used by canonicalize: u < x < y < inf, then by index.
struct VertexLabel {
  enum class Kind { U, X, Y, Inf };

  Kind kind = Kind::U;
  int index = 0;  // residue for U/X/Y; 1 or 2 for Inf

  static VertexLabel u(int i) { return {Kind::U, i}; }
  static VertexLabel x(int i) { return {Kind::X, i}; }
  static VertexLabel y(int i) { return {Kind::Y, i}; }
  static VertexLabel inf(int j = 1) { return {Kind::Inf, j}; }

  auto operator<=>(const VertexLabel&) const = default;
};

/// Builds a label reduced into the space's modulus.
VertexLabel make_label(const VertexSpace& space, VertexLabel::Kind kind, long long index);

bool is_valid_label(const VertexSpace& space, const VertexLabel& v);

/// Dense index in [0, vertex_count). Requires a valid label.
int dense_index(const VertexSpace& space, const VertexLabel& v);
VertexLabel label_at(const VertexSpace& space, int dense);

/// Token form: "u3", "x0", "y5", "inf1", "inf2".
std::string to_token(const VertexLabel& v);
/// Parses a token; std::nullopt when malformed (or inf other than 1, 2).
/// Does not check a space.
std::optional<VertexLabel> parse_token(std::string_view token);

struct Arc {
  VertexLabel tail;
  VertexLabel head;
  auto operator<=>(const Arc&) const = default;
};

std::string to_string(const Arc& a);

/// A directed cycle; direction is the list order, closing back to front().
struct DirectedCycle {
  std::vector<VertexLabel> vertices;

  std::size_t length() const { return vertices.size(); }
  std::vector<Arc> arcs() const;
  bool operator==(const DirectedCycle&) const = default;
};

DirectedCycle make_cycle(const VertexSpace& space, VertexLabel::Kind kind,
                         std::initializer_list<long long> indices);

struct TwoFactor {
  std::vector<DirectedCycle> cycles;

  std::vector<Arc> arcs() const;
  std::size_t arc_count() const;
  bool operator==(const TwoFactor&) const = default;
};

/// Sorted multiset of cycle lengths.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> lengths);

  const std::vector<int>& lengths() const { return lengths_; }
  int total() const;
  std::size_t size() const { return lengths_.size(); }
  std::string to_string() const;

  bool operator==(const CycleType&) const = default;

 private:
  std::vector<int> lengths_;
};

struct Factorization {
  VertexSpace space;
  CycleType cycle_type;
  std::vector<TwoFactor> factors;
};

enum class FaultKind {
  InvalidLabel,
  RepeatedVertex,
  ShortCycle,
  NotSpanning,
  CyclesOverlap,
  WrongCycleType,
  WrongFactorCount,
};

std::string_view to_string(FaultKind kind);

struct FactorFault {
  int factor_index = -1;  // -1 for faults of the factorization as a whole
  FaultKind kind = FaultKind::InvalidLabel;
  std::string detail;
};

/// Either the cycle type of a valid 2-factor or the faults that make it invalid.
struct TwoFactorCheck {
  std::optional<CycleType> cycle_type;
  std::vector<FactorFault> faults;

  bool ok() const { return cycle_type.has_value(); }
};

TwoFactorCheck validate_two_factor(const VertexSpace& space, const TwoFactor& f);

struct VerificationReport {
  bool valid = false;
  std::size_t expected_factors = 0;
  std::size_t actual_factors = 0;
  std::vector<Arc> missing_arcs;
  std::vector<std::pair<Arc, int>> duplicated_arcs;
  std::vector<FactorFault> factor_faults;
};

/// Checks the definition directly on the arc multiset: every factor is a
/// spanning disjoint union of cycles of the declared type, there are n - 1
/// factors, and every ordered pair of distinct vertices is used exactly once.
VerificationReport verify_factorization(const Factorization& f);

/// Rotates each cycle so its smallest vertex comes first and sorts the
/// cycles of each factor by first vertex. Factor order is kept.
Factorization canonicalize(const Factorization& f);
DirectedCycle canonicalize(const DirectedCycle& c);
TwoFactor canonicalize(const TwoFactor& f);

}  // namespace owp
