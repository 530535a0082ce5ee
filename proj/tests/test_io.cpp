#include "doctest.h"

#include "oracle.hpp"
#include "owp/constructions.hpp"
#include "owp/io.hpp"

using namespace owp;

namespace {

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("cycle type specs") {
  CHECK(parse_cycle_type("4,5").lengths() == std::vector<int>{4, 5});
  CHECK(parse_cycle_type("2^7,3").lengths() == std::vector<int>{2, 2, 2, 2, 2, 2, 2, 3});
  CHECK(parse_cycle_type(" 5 , 3 ,3").lengths() == std::vector<int>{3, 3, 5});
  CHECK(parse_cycle_type("3, 2 ^ 2").lengths() == std::vector<int>{2, 2, 3});

  const auto bad = error_of([] { parse_cycle_type("3,x"); });
  CHECK(bad.find("term 2") != std::string::npos);
  CHECK(bad.find("offset 2") != std::string::npos);
  CHECK_THROWS_AS(parse_cycle_type("1,4"), ParseError);
  CHECK_THROWS_AS(parse_cycle_type(""), ParseError);
  CHECK_THROWS_AS(parse_cycle_type("4,"), ParseError);
  CHECK_THROWS_AS(parse_cycle_type("2^0"), ParseError);
  CHECK_THROWS_AS(parse_cycle_type("2^x"), ParseError);
}

TEST_CASE("factorization documents round-trip byte for byte") {
  for (const auto& f : {op45(), op335(), op2_nminus2(5), op2_nminus2(9), op2_nminus2(12),
                        op2s3(7), op2s3(9), op2s3(11)}) {
    const auto text = serialize_factorization(f);
    const auto back = parse_factorization(text);
    CHECK(serialize_factorization(back) == text);
    CHECK(oracle::check_factorization(back).valid);
  }
}

TEST_CASE("document layout") {
  const auto doc = factorization_to_json(canonicalize(op45()));
  std::vector<std::string> keys;
  for (const auto& [key, value] : doc.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"format", "n", "space", "cycle_type", "factors"});
  CHECK(doc["format"] == "owp-factorization/1");
  CHECK(doc["space"]["kind"] == "cyclic");
  CHECK(doc["space"]["modulus"] == 8);
  CHECK(doc["space"]["infinities"] == 1);
  CHECK(doc["factors"][0][0][0] == "u0");

  const auto lifted = factorization_to_json(op2s3(9));
  CHECK(lifted["space"]["kind"] == "doubled");
  CHECK(lifted["space"]["k"] == 4);

  const auto text = serialize_factorization(op45());
  CHECK(text.substr(0, 4) == "{\n  ");
  CHECK(text.back() == '\n');
}

TEST_CASE("parse errors") {
  auto doc = nlohmann::json::parse(serialize_factorization(op45()));

  auto truncated = doc;
  truncated["factors"].erase(truncated["factors"].size() - 1);
  CHECK(error_of([&] { factorization_from_json(truncated); }).find("expected 8 factors") !=
        std::string::npos);
  CHECK_NOTHROW(factorization_from_json(truncated, ParseOptions{.verify = false}));

  auto tag = doc;
  tag["format"] = "owp-factorization/2";
  CHECK(error_of([&] { factorization_from_json(tag); }).find("format") != std::string::npos);

  auto token = doc;
  token["factors"][0][0][0] = "inf2";
  CHECK(error_of([&] { factorization_from_json(token); }).find("inf2") != std::string::npos);

  auto swapped = doc;
  std::swap(swapped["factors"][0][0][1], swapped["factors"][0][0][2]);
  CHECK(error_of([&] { factorization_from_json(swapped); }).find("not a valid") !=
        std::string::npos);

  auto size = doc;
  size["n"] = 10;
  CHECK_THROWS_AS(factorization_from_json(size), ParseError);

  CHECK_THROWS_AS(parse_factorization("{"), ParseError);
  CHECK_THROWS_AS(parse_factorization("[]"), ParseError);
}

TEST_CASE("matching documents") {
  const auto m = parse_matching(
      R"({"format": "owp-matching/1", "k": 3, "edges": [["x0","y0"],["x1","x2"],["y1","y2"]]})");
  CHECK(m.k == 3);
  CHECK(oracle::edge_tokens(m) == oracle::edge_tokens(build_one_factor_pair(7).first));
  CHECK(serialize_matching(parse_matching(serialize_matching(m))) == serialize_matching(m));

  CHECK_THROWS_AS(parse_matching(R"({"format": "owp-matching/1", "k": 3, "edges": [["x0","y3"]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_matching(R"({"format": "owp-matching/1", "k": 3, "edges": [["x0"]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_matching(R"({"format": "owp-undirected/1", "k": 3, "edges": []})"),
                  ParseError);
}

TEST_CASE("undirected documents") {
  const auto u = parse_undirected(
      R"({"format": "owp-undirected/1", "n": 5,
          "factors": [[["u0","u1","u2","u3","u4"]], [["u0","u2","u4","u1","u3"]]]})");
  CHECK(u.n == 5);
  REQUIRE(u.factors.size() == 2);
  CHECK(u.factors[1][0] == std::vector<int>{0, 2, 4, 1, 3});
  const auto again = parse_undirected(undirected_to_json(u).dump());
  CHECK(again.factors == u.factors);
}

TEST_CASE("reports and profiles") {
  auto f = op45();
  f.factors.pop_back();
  const auto j = report_to_json(verify_factorization(f));
  CHECK(j["valid"] == false);
  CHECK(j["missing_arcs"].size() == 9);
  CHECK(j["expected_factors"] == 8);
  CHECK(j["actual_factors"] == 7);

  const auto p = profile_to_json(profile(3, build_one_factor_pair(7).first.edges));
  CHECK(p["M"] == nlohmann::json::array({0}));
  CHECK(p["L"] == nlohmann::json::array({1}));
  CHECK(p["classes"]["R1"] == 1);
}

TEST_CASE("text format") {
  const auto text = to_text(op45());
  CHECK(text.find("factor 0:") != std::string::npos);
  CHECK(text.find("  u0 u7 u3 u5\n") != std::string::npos);
  CHECK(text.find("  u1 u2 inf1 u6 u4\n") != std::string::npos);
}
