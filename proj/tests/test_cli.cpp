#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "owp/cli.hpp"
#include "owp/io.hpp"

using namespace owp;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "owp_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("construct") {
  auto r = run({"construct", "--n", "11", "--type", "3,3,5"});
  CHECK(r.code == 0);
  const auto f = parse_factorization(r.out);
  CHECK(f.factors.size() == 10);

  auto open = run({"construct", "--n", "13", "--type", "2^5,3"});
  CHECK(open.code == 3);
  CHECK(open.out.empty());
  CHECK(open.err.find("open") != std::string::npos);

  auto none = run({"construct", "--n", "6", "--type", "3,3"});
  CHECK(none.code == 3);

  CHECK(run({"construct", "--n", "9", "--type", "3,x"}).code == 2);
  CHECK(run({"construct", "--n", "10", "--type", "4,5"}).code == 2);
  CHECK(run({"construct", "--type", "4,5"}).code == 2);
  CHECK(run({"construct", "--n", "9", "--type", "4,5", "--format", "yaml"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);

  auto text = run({"construct", "--n", "9", "--type", "4,5", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("factor 7:") != std::string::npos);

  const auto path = scratch("op45.json");
  auto to_file = run({"construct", "--n", "9", "--type", "4,5", "--out", path.string()});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(fs::exists(path));
}

TEST_CASE("verify") {
  const auto good = scratch("good.json");
  write(good, run({"construct", "--n", "12", "--type", "2,10"}).out);
  auto ok = run({"verify", good.string()});
  CHECK(ok.code == 0);
  CHECK(ok.out.empty());

  auto doc = nlohmann::json::parse(run({"construct", "--n", "9", "--type", "4,5"}).out);
  doc["factors"].erase(0);
  const auto bad = scratch("bad.json");
  write(bad, doc.dump());
  auto r = run({"verify", bad.string()});
  CHECK(r.code == 1);
  const auto report = nlohmann::json::parse(r.out);
  CHECK(report["valid"] == false);
  CHECK(report["missing_arcs"].size() == 9);

  const auto junk = scratch("junk.json");
  write(junk, "{ not json");
  CHECK(run({"verify", junk.string()}).code == 2);
  CHECK(run({"verify", scratch("absent.json").string()}).code == 2);
}

TEST_CASE("search and pair-search") {
  auto none = run({"search", "--n", "6", "--type", "3,3"});
  CHECK(none.code == 1);
  CHECK(nlohmann::json::parse(none.out)["status"] == "exhausted-none");
  CHECK(none.err.find("nodes explored") != std::string::npos);

  auto found = run({"search", "--n", "5", "--type", "2,3"});
  CHECK(found.code == 0);
  const auto doc = nlohmann::json::parse(found.out);
  REQUIRE(doc["solutions"].size() == 1);
  CHECK(verify_factorization(factorization_from_json(doc["solutions"][0])).valid);

  auto all = run({"search", "--n", "4", "--type", "2,2", "--all"});
  CHECK(all.code == 0);

  auto slow = run({"search", "--n", "8", "--type", "8", "--all", "--max-seconds", "0.05"});
  CHECK((slow.code == 4 || slow.code == 0));
  CHECK(run({"search", "--n", "4", "--type", "4", "--max-seconds", "-1"}).code == 2);

  CHECK(run({"pair-search", "--ell", "1"}).code == 1);
  auto l2 = run({"pair-search", "--ell", "2"});
  CHECK(l2.code == 0);
  CHECK(nlohmann::json::parse(l2.out)["pair"].size() == 2);
  CHECK(run({"pair-search", "--ell", "0"}).code == 2);
}

TEST_CASE("profile and double") {
  const auto m = scratch("m.json");
  write(m, R"({"format": "owp-matching/1", "k": 3, "edges": [["x0","y0"],["x1","x2"],["y1","y2"]]})");
  auto p = run({"profile", "--in", m.string()});
  CHECK(p.code == 0);
  CHECK(nlohmann::json::parse(p.out)["M"] == nlohmann::json::array({0}));

  const auto u = scratch("k5.json");
  write(u, R"({"format": "owp-undirected/1", "n": 5,
               "factors": [[["u0","u1","u2","u3","u4"]], [["u0","u2","u4","u1","u3"]]]})");
  auto d = run({"double", "--in", u.string()});
  CHECK(d.code == 0);
  CHECK(verify_factorization(parse_factorization(d.out)).valid);

  const auto broken = scratch("k5_broken.json");
  write(broken, R"({"format": "owp-undirected/1", "n": 5,
                    "factors": [[["u0","u1","u2","u3","u4"]], [["u0","u2","u4","u3","u1"]]]})");
  auto e = run({"double", "--in", broken.string()});
  CHECK(e.code == 1);
  CHECK(e.out.empty());
  CHECK_FALSE(e.err.empty());
}
