#include "owp/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "owp/difference.hpp"

namespace owp {

namespace {

using L = VertexLabel::Kind;

VertexLabel U(const VertexSpace& s, long long i) { return make_label(s, L::U, i); }

// Edge-set builder for the doubled vertex set over Z_k. Ranges with lo > hi
// are empty.
class EdgeBuilder {
 public:
  explicit EdgeBuilder(int k) : k_(k) {}

  void xx(long long i, long long j) { add(L::X, i, L::X, j); }
  void yy(long long i, long long j) { add(L::Y, i, L::Y, j); }
  void xy(long long i, long long j) { add(L::X, i, L::Y, j); }

  OneFactor finish() { return {k_, std::move(edges_)}; }

 private:
  void add(L ka, long long i, L kb, long long j) {
    edges_.push_back(Edge::make({ka, reduce_mod(i, k_)}, {kb, reduce_mod(j, k_)}));
  }

  int k_;
  std::vector<Edge> edges_;
};

TwoFactor two_cycle_lift(const OneFactor& f, const std::vector<DirectedCycle>& special,
                         const std::set<Edge>& skip) {
  TwoFactor out;
  for (const auto& e : f.edges) {
    if (skip.contains(e)) continue;
    out.cycles.push_back({{e.a, e.b}});
  }
  out.cycles.insert(out.cycles.end(), special.begin(), special.end());
  return out;
}

CycleType twos_and_three(int twos) {
  std::vector<int> t(static_cast<std::size_t>(twos), 2);
  t.push_back(3);
  return CycleType(std::move(t));
}

// Case n = 1 (mod 8): n = 4l + 1, l even, pair on K_{4l}.
OneFactorPair pair_case1(int ell) {
  const int k = 2 * ell;
  EdgeBuilder a(k);
  for (int i = 1; i <= ell - 1; ++i) a.xy(i, ell - i);
  for (int i = ell + 1; i <= 2 * ell - 2; ++i) a.xy(i, ell - 1 - i);
  a.xx(0, 2 * ell - 1);
  a.yy(0, ell);
  a.xy(ell, 2 * ell - 1);

  EdgeBuilder b(k);
  const int h = ell / 2;
  for (int i = 1; i <= h - 1; ++i) b.xx(i, 2 * ell - i);
  for (int i = h; i <= ell - 2; ++i) b.xx(i, 2 * ell - i - 1);
  for (int i = 1; i <= h - 1; ++i) b.yy(i, ell - i);
  for (int i = ell; i <= 3 * h - 1; ++i) b.yy(i, ell - 1 - i);
  b.xx(0, ell);
  b.xy(ell - 1, 0);
  b.xy(3 * h, h);
  return {a.finish(), b.finish(), ell, true};
}

// Case n = 3 (mod 8): n = 4l + 3, l even, pair on K_{4l+2}.
OneFactorPair pair_case3(int ell) {
  const int k = 2 * ell + 1;
  const int h = ell / 2;
  EdgeBuilder a(k);
  for (int i = 1; i <= ell - 1; ++i)
    if (i != h) a.xy(i, ell - i);
  for (int i = ell + 1; i <= 2 * ell; ++i) a.xy(i, 3 * ell + 1 - i);
  a.xy(0, 0);
  a.xx(h, ell);
  a.yy(h, ell);

  EdgeBuilder b(k);
  if (ell == 2) {
    b.xx(0, 2);
    b.yy(0, 2);
    b.xy(1, 3);
    b.xy(3, 1);
    b.xy(4, 4);
    return {a.finish(), b.finish(), ell, false};
  }

  const int j = ell % 4 == 2 ? (ell - 10) / 4 : (3 * ell - 8) / 4;
  // l = 6 keeps only B2, B4, B5 and l = 4 only B1, B3, B5; for l >= 8 all
  // five families are used.
  const bool use_b13 = ell != 6;
  const bool use_b24 = ell != 4;
  if (use_b13) {
    for (int i = 0; i <= j; ++i) b.yy(i, 2 * ell - 2 - i);
    for (int i = 0; i <= j; ++i) b.xx(i, 2 * ell - 2 - i);
  }
  if (use_b24) {
    for (int i = j + 3; i <= ell - 1; ++i) b.yy(i, 2 * ell - i);
    for (int i = j + 3; i <= ell - 1; ++i) b.xx(i, 2 * ell - i);
  }
  b.xx(j + 1, j + 2);
  b.yy(j + 1, j + 2);
  b.xy(2 * ell - 1, 2 * ell - 1);
  b.xy(ell, 2 * ell);
  b.xy(2 * ell, ell);
  return {a.finish(), b.finish(), ell, false};
}

// Case n = 7 (mod 8): n = 4l + 3, l odd, pair on K_{4l+2}.
OneFactorPair pair_case7(int ell) {
  const int k = 2 * ell + 1;
  if (ell == 1) {
    EdgeBuilder a(k), b(k);
    a.xy(0, 0);
    a.xx(1, 2);
    a.yy(1, 2);
    b.xy(0, 2);
    b.xy(1, 1);
    b.xy(2, 0);
    return {a.finish(), b.finish(), ell, false};
  }

  EdgeBuilder a(k);
  for (int i = 1; i <= ell - 1; ++i) a.xy(i, ell - i);
  for (int i = ell + 1; i <= 2 * ell; ++i)
    if (i != (3 * ell + 1) / 2) a.xy(i, ell - i);
  a.xy(0, 0);
  a.xx(ell, (3 * ell + 1) / 2);
  a.yy(ell, (3 * ell + 1) / 2);

  EdgeBuilder b(k);
  if (ell % 4 == 1) {
    const int hi1 = (ell - 9) / 4;  // -1 when l = 5: families B1, B3 drop out
    if (ell >= 9) {
      for (int i = 0; i <= hi1; ++i) b.xx(i, 2 * ell - 2 - i);
      for (int i = 0; i <= hi1; ++i) b.yy(i, 2 * ell - 2 - i);
    }
    for (int i = (ell + 3) / 4; i <= ell - 1; ++i) b.xx(i, 2 * ell - i);
    for (int i = (ell + 3) / 4; i <= ell - 1; ++i) b.yy(i, 2 * ell - i);
    b.xx((ell - 5) / 4, (ell - 1) / 4);
    b.yy((ell - 5) / 4, (ell - 1) / 4);
    b.xy(ell, 2 * ell);
    b.xy(2 * ell - 1, 2 * ell - 1);
    b.xy(2 * ell, ell);
  } else if (ell == 3) {
    b.xx(0, 6);
    b.xx(1, 4);
    b.yy(0, 6);
    b.yy(1, 4);
    b.xy(2, 5);
    b.xy(3, 3);
    b.xy(5, 2);
  } else {
    auto b1_range = [&](auto&& emit) {
      for (int i = 0; i <= (ell - 3) / 4; ++i) emit(i);
      for (int i = (3 * ell + 3) / 4; i <= ell - 1; ++i) emit(i);
    };
    b1_range([&](int i) { b.xx(i, 2 * ell - i); });
    for (int i = (ell + 1) / 4; i <= (3 * ell - 5) / 4; ++i) b.xx(i, 2 * ell - i - 1);
    b1_range([&](int i) { b.yy(i, 2 * ell - i); });
    for (int i = (ell + 1) / 4; i <= (3 * ell - 5) / 4; ++i) b.yy(i, 2 * ell - i - 1);
    b.xy((3 * ell - 1) / 4, (7 * ell - 1) / 4);
    b.xy(ell, ell);
    b.xy((7 * ell - 1) / 4, (3 * ell - 1) / 4);
  }
  return {a.finish(), b.finish(), ell, false};
}

}  // namespace

TwoFactor starter_c4_c5() {
  const auto s = VertexSpace::cyclic(8, 1);
  return {{DirectedCycle{{U(s, 1), U(s, 2), VertexLabel::inf(), U(s, 6), U(s, 4)}},
           make_cycle(s, L::U, {0, 7, 3, 5})}};
}

TwoFactor starter_c3_c3_c5() {
  const auto s = VertexSpace::cyclic(10, 1);
  return {{make_cycle(s, L::U, {0, 1, 3}),
           DirectedCycle{{U(s, 2), U(s, 7), VertexLabel::inf()}},
           make_cycle(s, L::U, {4, 8, 6, 9, 5})}};
}

Factorization op45() {
  const auto s = VertexSpace::cyclic(8, 1);
  return {s, CycleType({4, 5}), develop_orbit(s, starter_c4_c5(), 8)};
}

Factorization op335() {
  const auto s = VertexSpace::cyclic(10, 1);
  return {s, CycleType({3, 3, 5}), develop_orbit(s, starter_c3_c3_c5(), 10)};
}

DirectedCycle zigzag_starter(int modulus, int k, int final_index) {
  if (modulus < 3 || modulus % 2 == 0)
    throw ConstructionError("zigzag starter needs an odd modulus >= 3");
  const auto s = VertexSpace::cyclic(modulus);
  DirectedCycle c;
  c.vertices.push_back(U(s, 0));
  for (int i = 1; i <= k; ++i) {
    c.vertices.push_back(U(s, -i));
    c.vertices.push_back(U(s, i));
  }
  for (int i = k + 1; i <= final_index - 1; ++i) {
    c.vertices.push_back(U(s, -(i + 1)));
    c.vertices.push_back(U(s, i));
  }
  c.vertices.push_back(U(s, final_index));

  std::set<VertexLabel> seen(c.vertices.begin(), c.vertices.end());
  if (seen.size() != c.vertices.size() || seen.contains(U(s, -(k + 1))))
    throw ConstructionError("zigzag sequence is not simple for modulus " +
                            std::to_string(modulus) + ", k " + std::to_string(k));
  return c;
}

TwoCycleStarter starter_2_nminus2(int n) {
  if (n < 6) throw ConstructionError("the zigzag starters need n >= 6");
  if (n % 2 == 1) {
    const int ell = (n - 3) / 2;
    const int m = 2 * ell + 1;
    const int k = ell / 2;
    const auto s = VertexSpace::cyclic(m, 2);

    DirectedCycle big = zigzag_starter(m, k, ell);
    big.vertices.push_back(VertexLabel::inf(2));
    DirectedCycle small{{U(s, -(k + 1)), VertexLabel::inf(1)}};

    DirectedCycle all_minus_ell;
    for (int i = 0; i <= ell - 1; ++i) {
      all_minus_ell.vertices.push_back(U(s, i));
      all_minus_ell.vertices.push_back(U(s, -(ell - i)));
    }
    all_minus_ell.vertices.push_back(U(s, ell));
    DirectedCycle infinities{{VertexLabel::inf(1), VertexLabel::inf(2)}};

    return {s, TwoFactor{{big, small}}, {TwoFactor{{all_minus_ell, infinities}}}};
  }

  const int m = n - 1;
  const int k = (n - 4 + 3) / 4;  // ceil((n - 4) / 4)
  const auto s = VertexSpace::cyclic(m, 1);
  DirectedCycle big = zigzag_starter(m, k, (n - 2) / 2);
  DirectedCycle small{{U(s, -(k + 1)), VertexLabel::inf()}};
  return {s, TwoFactor{{big, small}}, {}};
}

Factorization op2_nminus2(int n) {
  if (n < 5) throw ConstructionError("(C2, C_{n-2})-factorizations need n >= 5");
  const CycleType type({2, n - 2});
  if (n == 5) {
    const auto s = VertexSpace::cyclic(4, 1);
    TwoFactor r0{{make_cycle(s, L::U, {0, 1, 2}), DirectedCycle{{U(s, 3), VertexLabel::inf()}}}};
    TwoFactor r1{{make_cycle(s, L::U, {3, 2, 1}), DirectedCycle{{U(s, 0), VertexLabel::inf()}}}};
    return {s, type, {r0, r1, rotate(s, r0, 2), rotate(s, r1, 2)}};
  }
  auto st = starter_2_nminus2(n);
  Factorization f{st.space, type, develop_orbit(st.space, st.starter, st.space.modulus())};
  f.factors.insert(f.factors.end(), st.extra.begin(), st.extra.end());
  return f;
}

OneFactorPair build_one_factor_pair(int n) {
  if (n % 8 == 5)
    throw ConstructionError(
        "n = 5 (mod 8): no 1-factor pair of K_{n-1} meets the lifting preconditions "
        "(parity obstruction)");
  if (n < 7 || (n % 8 != 1 && n % 8 != 3 && n % 8 != 7))
    throw ConstructionError("1-factor pairs are built for n = 1, 3, 7 (mod 8), n >= 7");
  if (n % 8 == 1) return pair_case1((n - 1) / 4);
  if (n % 8 == 3) return pair_case3((n - 3) / 4);
  return pair_case7((n - 3) / 4);
}

std::pair<TwoFactor, TwoFactor> lifted_starters_4ell(const OneFactor& f1, const OneFactor& f2,
                                                     int ell) {
  auto report = check_assumptions_4ell(f1, f2, ell);
  if (!report.ok) {
    std::string msg = "1-factor pair fails the K_{4l} lifting preconditions:";
    for (const auto& f : report.faults) msg += " " + f + ";";
    throw ConstructionError(msg);
  }
  const int k = 2 * ell;
  auto lift = [&](const OneFactor& f) {
    for (const auto& e : f.edges) {
      EdgeClass c = edge_class(k, e);
      if (c.is_pure() && c.value == ell) {
        // both endpoints share a side; a < b so the arc (a, b) has difference l
        DirectedCycle tri{{e.a, e.b, VertexLabel::inf()}};
        return two_cycle_lift(f, {tri}, {e});
      }
    }
    throw ConstructionError("no edge of pure length l");
  };
  return {lift(f1), lift(f2)};
}

std::pair<TwoFactor, TwoFactor> lifted_starters_4ell2(const OneFactor& f1,
                                                      const OneFactor& f2, int ell) {
  auto report = check_assumptions_4ell2(f1, f2, ell);
  if (!report.ok) {
    std::string msg = "1-factor pair fails the K_{4l+2} lifting preconditions:";
    for (const auto& f : report.faults) msg += " " + f + ";";
    throw ConstructionError(msg);
  }
  const int k = 2 * ell + 1;
  auto lift = [&](const OneFactor& f, bool x_first) {
    for (const auto& e : f.edges) {
      if (edge_class(k, e) == EdgeClass::mixed(0)) {
        const VertexLabel& x = e.a.kind == L::X ? e.a : e.b;
        const VertexLabel& y = e.a.kind == L::X ? e.b : e.a;
        DirectedCycle tri = x_first ? DirectedCycle{{x, y, VertexLabel::inf()}}
                                    : DirectedCycle{{y, x, VertexLabel::inf()}};
        return two_cycle_lift(f, {tri}, {e});
      }
    }
    throw ConstructionError("no edge of mixed difference 0");
  };
  return {lift(f1, true), lift(f2, false)};
}

Factorization lift_4ell(const OneFactor& f1, const OneFactor& f2, int ell) {
  auto [s1, s2] = lifted_starters_4ell(f1, f2, ell);
  const auto space = VertexSpace::doubled(2 * ell, 1);
  Factorization f{space, twos_and_three(2 * ell - 1), develop_orbit(space, s1, 2 * ell)};
  auto second = develop_orbit(space, s2, 2 * ell);
  f.factors.insert(f.factors.end(), second.begin(), second.end());
  return f;
}

Factorization lift_4ell2(const OneFactor& f1, const OneFactor& f2, int ell) {
  auto [s1, s2] = lifted_starters_4ell2(f1, f2, ell);
  const auto space = VertexSpace::doubled(2 * ell + 1, 1);
  Factorization f{space, twos_and_three(2 * ell), develop_orbit(space, s1, 2 * ell + 1)};
  auto second = develop_orbit(space, s2, 2 * ell + 1);
  f.factors.insert(f.factors.end(), second.begin(), second.end());
  return f;
}

Factorization op2s3(int n) {
  auto pair = build_one_factor_pair(n);
  return pair.on_4ell ? lift_4ell(pair.first, pair.second, pair.ell)
                      : lift_4ell2(pair.first, pair.second, pair.ell);
}

std::vector<std::string> validate_undirected(const UndirectedTwoFactorization& u) {
  std::vector<std::string> faults;
  const int n = u.n;
  if (n < 3 || n % 2 == 0) {
    faults.push_back("n must be odd and at least 3");
    return faults;
  }
  if (u.factors.size() != static_cast<std::size_t>((n - 1) / 2))
    faults.push_back("expected " + std::to_string((n - 1) / 2) + " factors, found " +
                     std::to_string(u.factors.size()));

  std::vector<int> edge_use(static_cast<std::size_t>(n) * n, 0);
  std::optional<std::vector<int>> first_type;
  for (std::size_t fi = 0; fi < u.factors.size(); ++fi) {
    const std::string where = "factor " + std::to_string(fi) + ": ";
    std::vector<int> cover(static_cast<std::size_t>(n), 0);
    std::vector<int> type;
    for (const auto& cycle : u.factors[fi]) {
      if (cycle.size() < 3) faults.push_back(where + "cycle shorter than 3");
      type.push_back(static_cast<int>(cycle.size()));
      bool in_range = true;
      for (int v : cycle) {
        if (v < 0 || v >= n) {
          faults.push_back(where + "vertex " + std::to_string(v) + " out of range");
          in_range = false;
        } else {
          ++cover[v];
        }
      }
      if (!in_range || cycle.size() < 3) continue;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        if (a == b) continue;
        ++edge_use[std::min(a, b) * n + std::max(a, b)];
      }
    }
    for (int v = 0; v < n; ++v)
      if (cover[v] != 1)
        faults.push_back(where + "vertex " + std::to_string(v) + " covered " +
                         std::to_string(cover[v]) + " times");
    std::sort(type.begin(), type.end());
    if (!first_type)
      first_type = type;
    else if (*first_type != type)
      faults.push_back(where + "cycle type differs from factor 0");
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (edge_use[a * n + b] != 1)
        faults.push_back("edge u" + std::to_string(a) + "u" + std::to_string(b) + " used " +
                         std::to_string(edge_use[a * n + b]) + " times");
  return faults;
}

Factorization double_undirected(const UndirectedTwoFactorization& u) {
  auto faults = validate_undirected(u);
  if (!faults.empty()) throw ConstructionError("invalid undirected 2-factorization: " + faults.front());

  const auto s = VertexSpace::cyclic(u.n);
  std::vector<int> lengths;
  for (const auto& cycle : u.factors.front()) lengths.push_back(static_cast<int>(cycle.size()));
  Factorization f{s, CycleType(std::move(lengths)), {}};
  for (const auto& factor : u.factors) {
    TwoFactor forward, backward;
    for (const auto& cycle : factor) {
      DirectedCycle c;
      for (int v : cycle) c.vertices.push_back(VertexLabel::u(v));
      backward.cycles.push_back({{c.vertices.rbegin(), c.vertices.rend()}});
      forward.cycles.push_back(std::move(c));
    }
    f.factors.push_back(std::move(forward));
    f.factors.push_back(std::move(backward));
  }
  return f;
}

std::string_view to_string(Unsupported::Category c) {
  switch (c) {
    case Unsupported::Category::KnownNonexistent:
      return "known-nonexistent";
    case Unsupported::Category::Open:
      return "open";
    case Unsupported::Category::OutOfScope:
      return "out-of-scope";
  }
  return "unknown";
}

ConstructionResult construct(const ConstructionRequest& req) {
  const int n = req.n;
  const auto& t = req.cycle_type.lengths();
  if (t.empty() || req.cycle_type.total() != n)
    throw std::invalid_argument("cycle type " + req.cycle_type.to_string() +
                                " does not sum to n = " + std::to_string(n));

  using C = Unsupported::Category;
  const bool uniform = std::all_of(t.begin(), t.end(), [&](int v) { return v == t.front(); });
  const bool twos_then_three =
      t.back() == 3 && t.size() >= 2 &&
      std::all_of(t.begin(), t.end() - 1, [](int v) { return v == 2; });

  if (n == 9 && t == std::vector<int>{4, 5}) return op45();
  if (n == 11 && t == std::vector<int>{3, 3, 5}) return op335();
  if (n >= 5 && t.size() == 2 && t[0] == 2) return op2_nminus2(n);
  if (twos_then_three) {
    if (n % 8 == 1 || n % 8 == 3 || n % 8 == 7) return op2s3(n);
    return Unsupported{C::Open,
                       "n = 5 (mod 8): existence of a (C2,...,C2,C3)-factorization of K*_" +
                           std::to_string(n) +
                           " is open; the lifted 1-factor pair construction is ruled out by "
                           "a parity obstruction"};
  }
  if (n == 6 && t == std::vector<int>{3, 3})
    return Unsupported{C::KnownNonexistent,
                       "no solution exists: K*_6 has no (C3,C3)-factorization (uniform "
                       "3-cycles require 3 | n and n != 6)"};
  if (n == 4 && t == std::vector<int>{4})
    return Unsupported{C::KnownNonexistent,
                       "no solution exists: K*_4 has no directed Hamiltonian factorization "
                       "(uniform 4-cycles require 4 | n and n != 4)"};
  if (n == 6 && t == std::vector<int>{6})
    return Unsupported{C::KnownNonexistent,
                       "no solution exists: K*_6 has no directed Hamiltonian factorization"};
  if (uniform)
    return Unsupported{C::OutOfScope,
                       "uniform cycle lengths are settled by earlier results whose "
                       "constructions are not implemented here; try `search` for small n"};
  if (n % 2 == 1 && t.size() == 2)
    return Unsupported{C::OutOfScope,
                       "two-table case with n odd: double an undirected solution with "
                       "`double`"};
  return Unsupported{C::OutOfScope, "no construction for cycle type " +
                                        req.cycle_type.to_string() + " on " +
                                        std::to_string(n) + " vertices"};
}

}  // namespace owp
