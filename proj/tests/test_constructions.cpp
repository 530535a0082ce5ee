#include "doctest.h"

#include <algorithm>

#include "oracle.hpp"
#include "owp/constructions.hpp"
#include "owp/difference.hpp"

using namespace owp;

namespace {

bool contains_cycle(const TwoFactor& f, const std::vector<std::string>& tokens) {
  const auto want = canonicalize(DirectedCycle{[&] {
    std::vector<VertexLabel> v;
    for (const auto& t : tokens) v.push_back(*parse_token(t));
    return v;
  }()});
  return std::any_of(f.cycles.begin(), f.cycles.end(),
                     [&](const DirectedCycle& c) { return canonicalize(c) == want; });
}

std::set<std::string> tokens(std::initializer_list<const char*> edges) {
  return {edges.begin(), edges.end()};
}

}  // namespace

TEST_CASE("(4,5) on 9 vertices") {
  const auto f = op45();
  CHECK(f.factors.size() == 8);
  CHECK(f.cycle_type == CycleType({4, 5}));
  REQUIRE(f.factors.front().cycles.size() == 2);
  CHECK(oracle::cycle_tokens(f.factors[0].cycles[0]) ==
        std::vector<std::string>{"u1", "u2", "inf1", "u6", "u4"});
  CHECK(oracle::cycle_tokens(f.factors[0].cycles[1]) ==
        std::vector<std::string>{"u0", "u7", "u3", "u5"});
  CHECK(oracle::check_factorization(f).valid);

  int holders = 0, where = -1;
  for (int i = 0; i < 8; ++i) {
    auto arcs = f.factors[i].arcs();
    if (std::find(arcs.begin(), arcs.end(), Arc{VertexLabel::u(0), VertexLabel::u(7)}) != arcs.end()) {
      ++holders;
      where = i;
    }
  }
  CHECK(holders == 1);
  CHECK(where == 0);
}

TEST_CASE("(3,3,5) on 11 vertices") {
  const auto f = op335();
  CHECK(f.factors.size() == 10);
  CHECK(contains_cycle(f.factors[0], {"u2", "u7", "inf1"}));
  CHECK(contains_cycle(f.factors[0], {"u0", "u1", "u3"}));
  CHECK(contains_cycle(f.factors[0], {"u4", "u8", "u6", "u9", "u5"}));
  CHECK(oracle::check_factorization(f).valid);
}

TEST_CASE("zigzag starters") {
  CHECK(oracle::cycle_tokens(zigzag_starter(7, 1, 3)) ==
        std::vector<std::string>{"u0", "u6", "u1", "u4", "u2", "u3"});
  CHECK(oracle::cycle_tokens(zigzag_starter(5, 1, 2)) ==
        std::vector<std::string>{"u0", "u4", "u1", "u2"});
  CHECK(oracle::cycle_tokens(zigzag_starter(9, 2, 4)) ==
        std::vector<std::string>{"u0", "u8", "u1", "u7", "u2", "u5", "u3", "u4"});
  CHECK_THROWS_AS(zigzag_starter(7, 1, 5), ConstructionError);
}

TEST_CASE("(C2, C_{n-2}) family") {
  SUBCASE("n = 5") {
    const auto f = op2_nminus2(5);
    REQUIRE(f.factors.size() == 4);
    CHECK(contains_cycle(f.factors[0], {"u0", "u1", "u2"}));
    CHECK(contains_cycle(f.factors[0], {"u3", "inf1"}));
    CHECK(oracle::check_factorization(f).valid);
  }
  SUBCASE("n = 9 starter") {
    const auto st = starter_2_nminus2(9);
    CHECK(contains_cycle(st.starter, {"u5", "inf1"}));
  }
  SUBCASE("n = 10") {
    const auto f = op2_nminus2(10);
    CHECK(f.factors.size() == 9);
    CHECK(oracle::check_factorization(f).valid);
  }
  SUBCASE("all n up to 40") {
    for (int n = 5; n <= 40; ++n) {
      CAPTURE(n);
      const auto f = op2_nminus2(n);
      CHECK(f.cycle_type == CycleType({2, n - 2}));
      CHECK(oracle::check_factorization(f).valid);
    }
  }
  CHECK_THROWS_AS(op2_nminus2(4), ConstructionError);
}

TEST_CASE("1-factor pairs") {
  SUBCASE("n = 33 first factor holds A3") {
    const auto p = build_one_factor_pair(33);
    CHECK(p.ell == 8);
    CHECK(p.on_4ell);
    const auto have = oracle::edge_tokens(p.first);
    for (const auto* e : {"x0x15", "y0y8", "x8y15"}) CHECK(have.count(e) == 1);
  }
  SUBCASE("n = 7") {
    const auto p = build_one_factor_pair(7);
    CHECK_FALSE(p.on_4ell);
    CHECK(oracle::edge_tokens(p.first) == tokens({"x0y0", "x1x2", "y1y2"}));
    CHECK(oracle::edge_tokens(p.second) == tokens({"x0y2", "x1y1", "x2y0"}));
  }
  SUBCASE("n = 15") {
    const auto p = build_one_factor_pair(15);
    CHECK(oracle::edge_tokens(p.second) ==
          tokens({"x0x6", "x1x4", "y0y6", "y1y4", "x2y5", "x3y3", "x5y2"}));
  }
  SUBCASE("preconditions hold by direct class counting") {
    for (int n = 7; n <= 211; n += 2) {
      if (n % 8 == 5) continue;
      CAPTURE(n);
      const auto p = build_one_factor_pair(n);
      const int k = p.first.k;
      CHECK(k == p.second.k);
      // Joint class counts must hit every class exactly once (M0 twice on K_{4l+2}).
      std::map<std::string, int> joint = oracle::class_counts(p.first);
      for (const auto& [c, m] : oracle::class_counts(p.second)) joint[c] += m;
      std::map<std::string, int> want;
      for (int d = 1; d <= p.ell; ++d) want["L" + std::to_string(d)] = want["R" + std::to_string(d)] = 1;
      for (int d = 0; d < k; ++d) want["M" + std::to_string(d)] = 1;
      if (!p.on_4ell) want["M0"] = 2;
      CHECK(joint == want);
      CHECK(is_one_factor(p.first));
      CHECK(is_one_factor(p.second));
      const auto report = p.on_4ell ? check_assumptions_4ell(p.first, p.second, p.ell)
                                    : check_assumptions_4ell2(p.first, p.second, p.ell);
      CHECK(report.ok);
    }
  }
  CHECK_THROWS_AS(build_one_factor_pair(13), ConstructionError);
  CHECK_THROWS_AS(build_one_factor_pair(10), ConstructionError);
}

TEST_CASE("lifting") {
  SUBCASE("K_{4l}, l = 2") {
    const auto p = build_one_factor_pair(9);
    const auto [s1, s2] = lifted_starters_4ell(p.first, p.second, 2);
    for (const auto& s : {s1, s2}) {
      int threes = 0;
      for (const auto& c : s.cycles) threes += c.length() == 3;
      CHECK(threes == 1);
    }
    const auto f = lift_4ell(p.first, p.second, 2);
    CHECK(f.factors.size() == 8);
    CHECK(f.cycle_type == CycleType({2, 2, 2, 3}));
    CHECK(oracle::check_factorization(f).valid);
  }
  SUBCASE("the pure length l edge becomes a 3-cycle through infinity") {
    OneFactor f1{4, {make_edge("x1", "y1"), make_edge("x0", "x3"), make_edge("y0", "y2"),
                     make_edge("x2", "y3")}};
    OneFactor f2{4, {make_edge("x0", "x2"), make_edge("x1", "y3"), make_edge("x3", "y2"),
                     make_edge("y0", "y1")}};
    const auto [s1, s2] = lifted_starters_4ell(f1, f2, 2);
    CHECK(contains_cycle(s1, {"y0", "y2", "inf1"}));
  }
  SUBCASE("K_{4l+2}, l = 1") {
    const auto p = build_one_factor_pair(7);
    const auto [s1, s2] = lifted_starters_4ell2(p.first, p.second, 1);
    CHECK(contains_cycle(s1, {"x0", "y0", "inf1"}));
    CHECK(contains_cycle(s2, {"y1", "x1", "inf1"}));
    const auto f = lift_4ell2(p.first, p.second, 1);
    CHECK(f.factors.size() == 6);
    CHECK(f.cycle_type == CycleType({2, 2, 3}));
    CHECK(oracle::check_factorization(f).valid);
  }
  SUBCASE("lifted x/y arcs are the doubled 1-factors without the special edge") {
    const auto p = build_one_factor_pair(17);
    const int ell = p.ell;
    const auto f = lift_4ell(p.first, p.second, ell);
    const auto space = VertexSpace::doubled(2 * ell, 1);
    for (int step = 0; step < 2 * ell; ++step) {
      for (int which = 0; which < 2; ++which) {
        const auto& src = which == 0 ? p.first : p.second;
        std::set<Arc> want;
        for (const auto& e : src.edges) {
          const auto a = rotate(space, e.a, step), b = rotate(space, e.b, step);
          if (edge_class(src.k, e).is_pure() && edge_class(src.k, e).value == ell) continue;
          want.insert({a, b});
          want.insert({b, a});
        }
        std::set<Arc> have;
        for (const auto& c : f.factors[which * 2 * ell + step].cycles)
          if (c.length() == 2)
            for (const auto& arc : c.arcs()) have.insert(arc);
        CHECK(have == want);
      }
    }
  }
  SUBCASE("bad pairs are rejected") {
    const auto p = build_one_factor_pair(9);
    CHECK_THROWS_AS(lift_4ell(p.first, p.first, 2), ConstructionError);
    const auto q = build_one_factor_pair(7);
    CHECK_THROWS_AS(lift_4ell2(q.first, q.first, 1), ConstructionError);
  }
}

TEST_CASE("(C2, ..., C2, C3) family") {
  const auto f9 = op2s3(9);
  CHECK(f9.factors.size() == 8);
  CHECK(f9.cycle_type == CycleType({2, 2, 2, 3}));
  const auto f15 = op2s3(15);
  CHECK(f15.factors.size() == 14);
  CHECK(f15.cycle_type == CycleType({2, 2, 2, 2, 2, 2, 3}));
  for (int n : {7, 9, 11, 15, 17, 19, 23, 25, 27, 31, 33, 35, 39, 41, 43, 47, 51, 55}) {
    CAPTURE(n);
    CHECK(oracle::check_factorization(op2s3(n)).valid);
  }
  CHECK_THROWS_AS(op2s3(13), ConstructionError);
  CHECK_THROWS_AS(op2s3(12), ConstructionError);
}

TEST_CASE("doubling undirected 2-factorizations") {
  UndirectedTwoFactorization k5{5, {{{0, 1, 2, 3, 4}}, {{0, 2, 4, 1, 3}}}};
  CHECK(validate_undirected(k5).empty());
  const auto f = double_undirected(k5);
  CHECK(f.factors.size() == 4);
  CHECK(f.cycle_type == CycleType({5}));
  CHECK(oracle::check_factorization(f).valid);
  std::size_t arcs = 0;
  for (const auto& factor : f.factors) arcs += factor.arc_count();
  CHECK(arcs == 20);

  UndirectedTwoFactorization k7{7, {{{0, 1, 2, 3, 4, 5, 6}}, {{0, 2, 4, 6, 1, 3, 5}}, {{0, 3, 6, 2, 5, 1, 4}}}};
  CHECK(oracle::check_factorization(double_undirected(k7)).valid);

  UndirectedTwoFactorization broken{5, {{{0, 1, 2, 3, 4}}, {{0, 2, 4, 3, 1}}}};
  CHECK_FALSE(validate_undirected(broken).empty());
  CHECK_THROWS_AS(double_undirected(broken), ConstructionError);
  UndirectedTwoFactorization missing{5, {{{0, 1, 2, 3, 4}}}};
  CHECK_FALSE(validate_undirected(missing).empty());
  UndirectedTwoFactorization even{4, {{{0, 1, 2, 3}}}};
  CHECK_FALSE(validate_undirected(even).empty());
}

TEST_CASE("dispatcher") {
  auto is_fact = [](const ConstructionResult& r) { return std::holds_alternative<Factorization>(r); };
  auto category = [](const ConstructionResult& r) { return std::get<Unsupported>(r).category; };

  CHECK(is_fact(construct({9, CycleType({4, 5})})));
  CHECK(is_fact(construct({11, CycleType({3, 3, 5})})));
  CHECK(is_fact(construct({12, CycleType({2, 10})})));
  CHECK(is_fact(construct({15, CycleType({2, 2, 2, 2, 2, 2, 3})})));

  const auto r6 = construct({6, CycleType({3, 3})});
  REQUIRE_FALSE(is_fact(r6));
  CHECK(category(r6) == Unsupported::Category::KnownNonexistent);

  const auto r13 = construct({13, CycleType({2, 2, 2, 2, 2, 3})});
  REQUIRE_FALSE(is_fact(r13));
  CHECK(category(r13) == Unsupported::Category::Open);
  CHECK(std::get<Unsupported>(r13).reason.find("open") != std::string::npos);

  const auto r8 = construct({8, CycleType({3, 5})});
  REQUIRE_FALSE(is_fact(r8));
  CHECK(category(r8) == Unsupported::Category::OutOfScope);

  CHECK_THROWS_AS(construct({10, CycleType({4, 5})}), std::invalid_argument);
}
