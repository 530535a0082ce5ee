#include "owp/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace owp {

VertexSpace VertexSpace::cyclic(int modulus, int infinities) {
  if (modulus < 2) throw std::invalid_argument("cyclic space needs modulus >= 2");
  if (infinities < 0 || infinities > 2)
    throw std::invalid_argument("cyclic space supports 0, 1 or 2 infinity points");
  return VertexSpace(SpaceKind::CyclicPlusInf, modulus, infinities);
}

VertexSpace VertexSpace::doubled(int k, int infinities) {
  if (k < 1) throw std::invalid_argument("doubled space needs k >= 1");
  if (infinities < 0 || infinities > 1)
    throw std::invalid_argument("doubled space supports 0 or 1 infinity point");
  return VertexSpace(SpaceKind::DoubledCyclic, k, infinities);
}

int VertexSpace::vertex_count() const {
  return (kind_ == SpaceKind::DoubledCyclic ? 2 * modulus_ : modulus_) + infinities_;
}

VertexLabel make_label(const VertexSpace& space, VertexLabel::Kind kind, long long index) {
  if (kind == VertexLabel::Kind::Inf) return VertexLabel::inf(static_cast<int>(index));
  return {kind, reduce_mod(index, space.modulus())};
}

bool is_valid_label(const VertexSpace& space, const VertexLabel& v) {
  using K = VertexLabel::Kind;
  if (v.kind == K::Inf) return v.index >= 1 && v.index <= space.infinities();
  if (v.index < 0 || v.index >= space.modulus()) return false;
  if (space.kind() == SpaceKind::CyclicPlusInf) return v.kind == K::U;
  return v.kind == K::X || v.kind == K::Y;
}

int dense_index(const VertexSpace& space, const VertexLabel& v) {
  using K = VertexLabel::Kind;
  const int m = space.modulus();
  switch (v.kind) {
    case K::U:
    case K::X:
      return v.index;
    case K::Y:
      return m + v.index;
    case K::Inf:
      return (space.kind() == SpaceKind::DoubledCyclic ? 2 * m : m) + v.index - 1;
  }
  return -1;
}

VertexLabel label_at(const VertexSpace& space, int dense) {
  const int m = space.modulus();
  if (space.kind() == SpaceKind::CyclicPlusInf) {
    if (dense < m) return VertexLabel::u(dense);
    return VertexLabel::inf(dense - m + 1);
  }
  if (dense < m) return VertexLabel::x(dense);
  if (dense < 2 * m) return VertexLabel::y(dense - m);
  return VertexLabel::inf(dense - 2 * m + 1);
}

std::string to_token(const VertexLabel& v) {
  using K = VertexLabel::Kind;
  switch (v.kind) {
    case K::U:
      return "u" + std::to_string(v.index);
    case K::X:
      return "x" + std::to_string(v.index);
    case K::Y:
      return "y" + std::to_string(v.index);
    case K::Inf:
      return "inf" + std::to_string(v.index);
  }
  return {};
}

std::optional<VertexLabel> parse_token(std::string_view token) {
  using K = VertexLabel::Kind;
  K kind;
  std::string_view digits;
  if (token.starts_with("inf")) {
    kind = K::Inf;
    digits = token.substr(3);
  } else if (!token.empty() && (token[0] == 'u' || token[0] == 'x' || token[0] == 'y')) {
    kind = token[0] == 'u' ? K::U : token[0] == 'x' ? K::X : K::Y;
    digits = token.substr(1);
  } else {
    return std::nullopt;
  }
  if (digits.empty() || (digits.size() > 1 && digits[0] == '0')) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  if (kind == K::Inf && value != 1 && value != 2) return std::nullopt;
  return VertexLabel{kind, value};
}

std::string to_string(const Arc& a) { return "(" + to_token(a.tail) + "," + to_token(a.head) + ")"; }

std::vector<Arc> DirectedCycle::arcs() const {
  std::vector<Arc> out;
  out.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    out.push_back({vertices[i], vertices[(i + 1) % vertices.size()]});
  return out;
}

DirectedCycle make_cycle(const VertexSpace& space, VertexLabel::Kind kind,
                         std::initializer_list<long long> indices) {
  DirectedCycle c;
  for (long long i : indices) c.vertices.push_back(make_label(space, kind, i));
  return c;
}

std::vector<Arc> TwoFactor::arcs() const {
  std::vector<Arc> out;
  for (const auto& c : cycles) {
    auto a = c.arcs();
    out.insert(out.end(), a.begin(), a.end());
  }
  return out;
}

std::size_t TwoFactor::arc_count() const {
  std::size_t total = 0;
  for (const auto& c : cycles) total += c.length();
  return total;
}

CycleType::CycleType(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  for (int len : lengths_)
    if (len < 2) throw std::invalid_argument("cycle lengths must be >= 2");
  std::sort(lengths_.begin(), lengths_.end());
}

int CycleType::total() const { return std::accumulate(lengths_.begin(), lengths_.end(), 0); }

std::string CycleType::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < lengths_.size(); ++i) os << (i ? "," : "") << lengths_[i];
  return os.str();
}

std::string_view to_string(FaultKind kind) {
  switch (kind) {
    case FaultKind::InvalidLabel:
      return "invalid label";
    case FaultKind::RepeatedVertex:
      return "cycle repeats a vertex";
    case FaultKind::ShortCycle:
      return "cycle shorter than 2";
    case FaultKind::NotSpanning:
      return "not spanning";
    case FaultKind::CyclesOverlap:
      return "cycles overlap";
    case FaultKind::WrongCycleType:
      return "wrong cycle type";
    case FaultKind::WrongFactorCount:
      return "wrong factor count";
  }
  return "unknown";
}

TwoFactorCheck validate_two_factor(const VertexSpace& space, const TwoFactor& f) {
  TwoFactorCheck result;
  const int n = space.vertex_count();
  std::vector<int> cover(n, 0);
  std::vector<int> lengths;

  for (const auto& cycle : f.cycles) {
    if (cycle.length() < 2) {
      result.faults.push_back({-1, FaultKind::ShortCycle,
                               "cycle of length " + std::to_string(cycle.length())});
    }
    std::vector<VertexLabel> seen;
    bool labels_ok = true;
    for (const auto& v : cycle.vertices) {
      if (!is_valid_label(space, v)) {
        result.faults.push_back({-1, FaultKind::InvalidLabel, to_token(v)});
        labels_ok = false;
        continue;
      }
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) {
        result.faults.push_back({-1, FaultKind::RepeatedVertex, to_token(v)});
        continue;
      }
      seen.push_back(v);
      ++cover[dense_index(space, v)];
    }
    if (labels_ok) lengths.push_back(static_cast<int>(cycle.length()));
  }

  for (int d = 0; d < n; ++d) {
    if (cover[d] == 0)
      result.faults.push_back(
          {-1, FaultKind::NotSpanning, to_token(label_at(space, d)) + " uncovered"});
    else if (cover[d] > 1)
      result.faults.push_back({-1, FaultKind::CyclesOverlap,
                               to_token(label_at(space, d)) + " covered " +
                                   std::to_string(cover[d]) + " times"});
  }

  if (result.faults.empty()) result.cycle_type = CycleType(std::move(lengths));
  return result;
}

VerificationReport verify_factorization(const Factorization& f) {
  VerificationReport report;
  const VertexSpace& space = f.space;
  const int n = space.vertex_count();
  report.expected_factors = static_cast<std::size_t>(n - 1);
  report.actual_factors = f.factors.size();

  if (f.cycle_type.total() != n) {
    report.factor_faults.push_back({-1, FaultKind::WrongCycleType,
                                    "declared type " + f.cycle_type.to_string() +
                                        " does not sum to " + std::to_string(n)});
  }
  if (report.actual_factors != report.expected_factors) {
    report.factor_faults.push_back({-1, FaultKind::WrongFactorCount,
                                    "expected " + std::to_string(report.expected_factors) +
                                        " factors, found " +
                                        std::to_string(report.actual_factors)});
  }

  std::vector<int> usage(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t idx = 0; idx < f.factors.size(); ++idx) {
    const auto& factor = f.factors[idx];
    auto check = validate_two_factor(space, factor);
    for (auto fault : check.faults) {
      fault.factor_index = static_cast<int>(idx);
      report.factor_faults.push_back(std::move(fault));
    }
    if (check.ok() && !(*check.cycle_type == f.cycle_type)) {
      report.factor_faults.push_back({static_cast<int>(idx), FaultKind::WrongCycleType,
                                      "has type " + check.cycle_type->to_string()});
    }
    for (const auto& arc : factor.arcs()) {
      if (!is_valid_label(space, arc.tail) || !is_valid_label(space, arc.head)) continue;
      if (arc.tail == arc.head) continue;
      ++usage[dense_index(space, arc.tail) * n + dense_index(space, arc.head)];
    }
  }

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      int count = usage[a * n + b];
      Arc arc{label_at(space, a), label_at(space, b)};
      if (count == 0)
        report.missing_arcs.push_back(arc);
      else if (count > 1)
        report.duplicated_arcs.emplace_back(arc, count);
    }
  }

  report.valid = report.missing_arcs.empty() && report.duplicated_arcs.empty() &&
                 report.factor_faults.empty();
  return report;
}

DirectedCycle canonicalize(const DirectedCycle& c) {
  DirectedCycle out = c;
  if (!out.vertices.empty()) {
    auto it = std::min_element(out.vertices.begin(), out.vertices.end());
    std::rotate(out.vertices.begin(), it, out.vertices.end());
  }
  return out;
}

TwoFactor canonicalize(const TwoFactor& f) {
  TwoFactor out;
  out.cycles.reserve(f.cycles.size());
  for (const auto& c : f.cycles) out.cycles.push_back(canonicalize(c));
  std::stable_sort(out.cycles.begin(), out.cycles.end(),
                   [](const DirectedCycle& a, const DirectedCycle& b) {
                     return a.vertices < b.vertices;
                   });
  return out;
}

Factorization canonicalize(const Factorization& f) {
  Factorization out{f.space, f.cycle_type, {}};
  out.factors.reserve(f.factors.size());
  for (const auto& factor : f.factors) out.factors.push_back(canonicalize(factor));
  return out;
}

}  // namespace owp
