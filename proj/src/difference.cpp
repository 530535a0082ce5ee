#include "owp/difference.hpp"

#include <stdexcept>

namespace owp {

std::string to_string(const Difference& d) {
  using K = Difference::Kind;
  const std::string v = std::to_string(d.value);
  switch (d.kind) {
    case K::PureFin:
      return v;
    case K::InfIn:
      return "+inf" + v;
    case K::InfOut:
      return "-inf" + v;
    case K::Undef:
      return "undef";
    case K::LPure:
      return "Lpure" + v;
    case K::RPure:
      return "Rpure" + v;
    case K::LMixed:
      return "Lmixed" + v;
    case K::RMixed:
      return "Rmixed" + v;
    case K::LInfIn:
      return "L+inf";
    case K::LInfOut:
      return "L-inf";
    case K::RInfIn:
      return "R+inf";
    case K::RInfOut:
      return "R-inf";
  }
  return "?";
}

Difference arc_difference(const VertexSpace& space, const Arc& a) {
  using L = VertexLabel::Kind;
  using K = Difference::Kind;
  if (!is_valid_label(space, a.tail) || !is_valid_label(space, a.head))
    throw std::invalid_argument("arc " + to_string(a) + " has a label outside the space");
  if (a.tail == a.head) throw std::invalid_argument("arc " + to_string(a) + " is a loop");

  const int m = space.modulus();
  const auto& t = a.tail;
  const auto& h = a.head;

  if (t.kind == L::Inf && h.kind == L::Inf) return Difference::undef();

  if (space.kind() == SpaceKind::CyclicPlusInf) {
    if (h.kind == L::Inf) return Difference::inf_in(h.index);
    if (t.kind == L::Inf) return Difference::inf_out(t.index);
    return Difference::pure(reduce_mod(h.index - t.index, m));
  }

  if (h.kind == L::Inf) return {t.kind == L::X ? K::LInfIn : K::RInfIn, 0};
  if (t.kind == L::Inf) return {h.kind == L::X ? K::LInfOut : K::RInfOut, 0};
  if (t.kind == L::X && h.kind == L::X) return {K::LPure, reduce_mod(h.index - t.index, m)};
  if (t.kind == L::Y && h.kind == L::Y) return {K::RPure, reduce_mod(h.index - t.index, m)};
  if (t.kind == L::X) return {K::LMixed, reduce_mod(h.index - t.index, m)};
  return {K::RMixed, reduce_mod(t.index - h.index, m)};
}

DifferenceCoverage coverage(const VertexSpace& space, const TwoFactor& f) {
  DifferenceCoverage c;
  for (const auto& arc : f.arcs()) ++c[arc_difference(space, arc)];
  return c;
}

VertexLabel rotate(const VertexSpace& space, const VertexLabel& v, long long s) {
  if (v.kind == VertexLabel::Kind::Inf) return v;
  return {v.kind, reduce_mod(v.index + s, space.modulus())};
}

DirectedCycle rotate(const VertexSpace& space, const DirectedCycle& c, long long s) {
  DirectedCycle out;
  out.vertices.reserve(c.vertices.size());
  for (const auto& v : c.vertices) out.vertices.push_back(rotate(space, v, s));
  return out;
}

TwoFactor rotate(const VertexSpace& space, const TwoFactor& f, long long s) {
  TwoFactor out;
  out.cycles.reserve(f.cycles.size());
  for (const auto& c : f.cycles) out.cycles.push_back(rotate(space, c, s));
  return out;
}

std::vector<TwoFactor> develop_orbit(const VertexSpace& space, const TwoFactor& starter,
                                     int count) {
  if (count < 1 || count > space.modulus())
    throw std::invalid_argument("orbit length must lie in [1, modulus]");
  std::vector<TwoFactor> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(rotate(space, starter, i));
  return out;
}

bool check_exact_once(const DifferenceCoverage& c, const std::set<Difference>& target) {
  for (const auto& d : target) {
    auto it = c.find(d);
    if (it == c.end() || it->second != 1) return false;
  }
  for (const auto& [d, count] : c)
    if (count != 0 && !target.contains(d)) return false;
  return true;
}

std::set<Difference> symmetric_pure_set(int modulus, const std::vector<int>& ds) {
  std::set<Difference> out;
  for (int d : ds) {
    out.insert(Difference::pure(reduce_mod(d, modulus)));
    out.insert(Difference::pure(reduce_mod(-d, modulus)));
  }
  return out;
}

}  // namespace owp
