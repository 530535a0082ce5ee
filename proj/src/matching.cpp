#include "owp/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace owp {

namespace {

using L = VertexLabel::Kind;

void require_doubled_label(int k, const VertexLabel& v) {
  if ((v.kind != L::X && v.kind != L::Y) || v.index < 0 || v.index >= k)
    throw std::invalid_argument("label " + to_token(v) + " is not a vertex of K_" +
                                std::to_string(2 * k));
}

std::string class_list(const std::vector<EdgeClass>& cs) {
  std::string out;
  for (const auto& c : cs) out += (out.empty() ? "" : " ") + to_string(c);
  return out;
}

// Counts against a target class set; every target must appear `expected`
// times and nothing else may appear.
void compare_classes(const ClassMultiset& have, const std::map<EdgeClass, int>& want,
                     std::vector<std::string>& faults) {
  std::vector<EdgeClass> missing, extra;
  for (const auto& [c, n] : want) {
    auto it = have.find(c);
    int got = it == have.end() ? 0 : it->second;
    if (got < n) missing.push_back(c);
    if (got > n) extra.push_back(c);
  }
  for (const auto& [c, n] : have)
    if (n > 0 && !want.contains(c)) extra.push_back(c);
  if (!missing.empty()) faults.push_back("classes not covered: " + class_list(missing));
  if (!extra.empty()) faults.push_back("classes over-covered: " + class_list(extra));
}

ClassMultiset merged(const ClassMultiset& a, const ClassMultiset& b) {
  ClassMultiset out = a;
  for (const auto& [c, n] : b) out[c] += n;
  return out;
}

}  // namespace

Edge Edge::make(VertexLabel p, VertexLabel q) {
  if (q < p) std::swap(p, q);
  return {p, q};
}

std::string to_string(const Edge& e) { return to_token(e.a) + to_token(e.b); }

std::string to_string(const EdgeClass& c) {
  switch (c.kind) {
    case EdgeClass::Kind::LeftPure:
      return "L" + std::to_string(c.value);
    case EdgeClass::Kind::RightPure:
      return "R" + std::to_string(c.value);
    case EdgeClass::Kind::Mixed:
      return "M" + std::to_string(c.value);
  }
  return "?";
}

EdgeClass edge_class(int k, const Edge& e) {
  require_doubled_label(k, e.a);
  require_doubled_label(k, e.b);
  if (e.a == e.b) throw std::invalid_argument("edge " + to_string(e) + " is a loop");
  if (e.a.kind == e.b.kind) {
    int delta = reduce_mod(e.b.index - e.a.index, k);
    int length = std::min(delta, k - delta);
    return e.a.kind == L::X ? EdgeClass::left(length) : EdgeClass::right(length);
  }
  const VertexLabel& x = e.a.kind == L::X ? e.a : e.b;
  const VertexLabel& y = e.a.kind == L::X ? e.b : e.a;
  return EdgeClass::mixed(reduce_mod(y.index - x.index, k));
}

ClassMultiset class_multiset(int k, const std::vector<Edge>& edges) {
  ClassMultiset out;
  for (const auto& e : edges) ++out[edge_class(k, e)];
  return out;
}

DifferenceProfile profile(int k, const std::vector<Edge>& edges) {
  DifferenceProfile p;
  for (const auto& e : edges) {
    EdgeClass c = edge_class(k, e);
    ++p.classes[c];
    switch (c.kind) {
      case EdgeClass::Kind::LeftPure:
        p.left.insert(c.value);
        break;
      case EdgeClass::Kind::RightPure:
        p.right.insert(c.value);
        break;
      case EdgeClass::Kind::Mixed:
        p.mixed.insert(c.value);
        break;
    }
    for (const auto& v : {e.a, e.b}) (v.kind == L::X ? p.xs : p.ys).insert(v.index);
  }
  return p;
}

bool is_one_factor(int k, const std::vector<Edge>& edges) {
  if (k < 1 || edges.size() != static_cast<std::size_t>(k)) return false;
  std::vector<int> cover(2 * static_cast<std::size_t>(k), 0);
  for (const auto& e : edges) {
    for (const auto& v : {e.a, e.b}) {
      if ((v.kind != L::X && v.kind != L::Y) || v.index < 0 || v.index >= k) return false;
      ++cover[(v.kind == L::X ? 0 : k) + v.index];
    }
    if (e.a == e.b) return false;
  }
  for (int c : cover)
    if (c != 1) return false;
  return true;
}

AssumptionReport check_assumptions_4ell(const OneFactor& f1, const OneFactor& f2, int ell) {
  if (ell < 1) throw std::invalid_argument("l must be positive");
  const int k = 2 * ell;
  if (f1.k != k || f2.k != k)
    throw std::invalid_argument("both 1-factors must live on K_" + std::to_string(2 * k));

  AssumptionReport report;
  if (!is_one_factor(f1)) report.faults.push_back("F1 is not a 1-factor");
  if (!is_one_factor(f2)) report.faults.push_back("F2 is not a 1-factor");

  const auto c1 = class_multiset(k, f1.edges);
  const auto c2 = class_multiset(k, f2.edges);
  std::map<EdgeClass, int> want;
  for (int d = 1; d <= ell; ++d) {
    want[EdgeClass::left(d)] = 1;
    want[EdgeClass::right(d)] = 1;
  }
  for (int d = 0; d < k; ++d) want[EdgeClass::mixed(d)] = 1;
  compare_classes(merged(c1, c2), want, report.faults);

  auto length_ell = [&](const ClassMultiset& c) {
    int n = 0;
    for (const auto& [cls, count] : c)
      if (cls.is_pure() && cls.value == ell) n += count;
    return n;
  };
  if (int n = length_ell(c1); n != 1)
    report.faults.push_back("F1 has " + std::to_string(n) + " edges of pure length " +
                            std::to_string(ell));
  if (int n = length_ell(c2); n != 1)
    report.faults.push_back("F2 has " + std::to_string(n) + " edges of pure length " +
                            std::to_string(ell));

  report.ok = report.faults.empty();
  return report;
}

AssumptionReport check_assumptions_4ell2(const OneFactor& f1, const OneFactor& f2, int ell) {
  if (ell < 1) throw std::invalid_argument("l must be positive");
  const int k = 2 * ell + 1;
  if (f1.k != k || f2.k != k)
    throw std::invalid_argument("both 1-factors must live on K_" + std::to_string(2 * k));

  AssumptionReport report;
  if (!is_one_factor(f1)) report.faults.push_back("F1 is not a 1-factor");
  if (!is_one_factor(f2)) report.faults.push_back("F2 is not a 1-factor");

  const auto c1 = class_multiset(k, f1.edges);
  const auto c2 = class_multiset(k, f2.edges);
  std::map<EdgeClass, int> want;
  for (int d = 1; d <= ell; ++d) {
    want[EdgeClass::left(d)] = 1;
    want[EdgeClass::right(d)] = 1;
  }
  for (int d = 1; d < k; ++d) want[EdgeClass::mixed(d)] = 1;
  want[EdgeClass::mixed(0)] = 2;
  compare_classes(merged(c1, c2), want, report.faults);

  auto zero_count = [](const ClassMultiset& c) {
    auto it = c.find(EdgeClass::mixed(0));
    return it == c.end() ? 0 : it->second;
  };
  if (int n = zero_count(c1); n != 1)
    report.faults.push_back("F1 has " + std::to_string(n) + " edges of mixed difference 0");
  if (int n = zero_count(c2); n != 1)
    report.faults.push_back("F2 has " + std::to_string(n) + " edges of mixed difference 0");

  report.ok = report.faults.empty();
  return report;
}

ParityParameters parity_parameters(const OneFactor& f, int ell) {
  if (ell < 1 || f.k != 2 * ell)
    throw std::invalid_argument("parity parameters need a 1-factor of K_{4l}");
  ParityParameters p;
  for (const auto& e : f.edges) {
    EdgeClass c = edge_class(f.k, e);
    switch (c.kind) {
      case EdgeClass::Kind::LeftPure:
        p.lambda += c.value % 2;
        break;
      case EdgeClass::Kind::RightPure:
        p.rho += c.value % 2;
        break;
      case EdgeClass::Kind::Mixed: {
        const int j = (e.a.kind == L::X ? e.a : e.b).index;
        const bool j_odd = j % 2 == 1;
        const bool d_odd = c.value % 2 == 1;
        if (!d_odd)
          (j_odd ? p.eps_o : p.eps_e) += 1;
        else
          (j_odd ? p.omega_o : p.omega_e) += 1;
        break;
      }
    }
  }
  return p;
}

ParityCertificate parity_certificate(const OneFactor& f1, const OneFactor& f2, int ell) {
  ParityCertificate cert;
  cert.first = parity_parameters(f1, ell);
  cert.second = parity_parameters(f2, ell);

  const int want = ell % 2;
  auto per_factor = [&](const ParityParameters& p) {
    return (p.eps_o + p.omega_o + p.lambda) % 2 == want &&
           (p.eps_e + p.omega_o + p.rho) % 2 == want;
  };
  cert.congruences_hold = per_factor(cert.first) && per_factor(cert.second);
  cert.forced_parity =
      (cert.first.lambda + cert.second.lambda + cert.first.rho + cert.second.rho) % 2;
  cert.required_parity = want;
  cert.obstruction = cert.forced_parity != cert.required_parity;
  return cert;
}

bool parity_obstruction_holds(const OneFactor& f1, const OneFactor& f2, int ell) {
  auto report = check_assumptions_4ell(f1, f2, ell);
  if (!report.ok)
    throw std::invalid_argument("pair does not meet the lifting preconditions: " +
                                report.faults.front());
  return parity_certificate(f1, f2, ell).obstruction;
}

Edge make_edge(const std::string& a, const std::string& b) {
  auto p = parse_token(a);
  auto q = parse_token(b);
  if (!p || !q) throw std::invalid_argument("malformed edge token " + a + "/" + b);
  return Edge::make(*p, *q);
}

}  // namespace owp
