#include "owp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "owp/constructions.hpp"
#include "owp/io.hpp"
#include "owp/search.hpp"

namespace owp {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + out_path);
  file << text;
}

int search_exit(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return exit_code::kOk;
    case SearchStatus::ExhaustedNone:
      return exit_code::kNegative;
    case SearchStatus::TimedOut:
      return exit_code::kTimedOut;
  }
  return exit_code::kUsage;
}

SearchLimits limits_from(std::optional<double> max_seconds, bool all) {
  SearchLimits limits;
  limits.max_seconds = max_seconds;
  if (all) limits.max_solutions.reset();
  return limits;
}

struct Options {
  int n = 0;
  std::string type;
  std::string out_path;
  std::string format = "json";
  std::string in_path;
  bool all = false;
  std::optional<double> max_seconds;
  int ell = 0;
};

int do_construct(const Options& o, std::ostream& out, std::ostream& err) {
  const CycleType type = parse_cycle_type(o.type);
  if (type.total() != o.n)
    throw UsageError("cycle type " + type.to_string() + " sums to " +
                     std::to_string(type.total()) + ", not " + std::to_string(o.n));
  auto result = construct({o.n, type});
  if (auto* u = std::get_if<Unsupported>(&result)) {
    err << "unsupported (" << to_string(u->category) << "): " << u->reason << '\n';
    return exit_code::kUnsupported;
  }
  const auto& f = std::get<Factorization>(result);
  emit(o.format == "text" ? to_text(f) : serialize_factorization(f), o.out_path, out);
  return exit_code::kOk;
}

int do_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto f = parse_factorization(read_file(path), ParseOptions{.verify = false});
  const auto report = verify_factorization(f);
  if (report.valid) {
    err << "valid\n";
    return exit_code::kOk;
  }
  out << report_to_json(report).dump(2) << '\n';
  return exit_code::kNegative;
}

int do_search(const Options& o, std::ostream& out, std::ostream& err) {
  const CycleType type = parse_cycle_type(o.type);
  if (type.total() != o.n)
    throw UsageError("cycle type " + type.to_string() + " does not sum to " + std::to_string(o.n));
  const auto outcome = search_factorization(o.n, type, limits_from(o.max_seconds, o.all));
  err << "nodes explored: " << outcome.nodes_explored << '\n';
  ordered_json doc;
  doc["status"] = to_string(outcome.status);
  doc["nodes_explored"] = outcome.nodes_explored;
  ordered_json sols = ordered_json::array();
  for (const auto& f : outcome.solutions) sols.push_back(factorization_to_json(canonicalize(f)));
  doc["solutions"] = sols;
  out << doc.dump(2) << '\n';
  return search_exit(outcome.status);
}

int do_pair_search(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.ell < 1) throw UsageError("--ell must be positive");
  const auto outcome = search_pair_4ell(o.ell, limits_from(o.max_seconds, false));
  err << "nodes explored: " << outcome.nodes_explored << '\n';
  ordered_json doc;
  doc["status"] = to_string(outcome.status);
  doc["ell"] = o.ell;
  doc["nodes_explored"] = outcome.nodes_explored;
  doc["first_candidates"] = outcome.first_candidates;
  doc["frontiers_checked"] = outcome.frontiers_checked;
  doc["congruence_failures"] = outcome.congruence_failures;
  doc["frontiers_obstructed"] = outcome.frontiers_obstructed;
  if (outcome.pair)
    doc["pair"] = {matching_to_json(outcome.pair->first), matching_to_json(outcome.pair->second)};
  else
    doc["pair"] = nullptr;
  out << doc.dump(2) << '\n';
  return search_exit(outcome.status);
}

int do_profile(const Options& o, std::ostream& out) {
  const auto m = parse_matching(read_file(o.in_path));
  auto doc = profile_to_json(profile(m.k, m.edges));
  out << doc.dump(2) << '\n';
  return exit_code::kOk;
}

int do_double(const Options& o, std::ostream& out, std::ostream& err) {
  const auto u = parse_undirected(read_file(o.in_path));
  const auto faults = validate_undirected(u);
  if (!faults.empty()) {
    for (const auto& f : faults) err << f << '\n';
    return exit_code::kNegative;
  }
  emit(serialize_factorization(double_undirected(u)), o.out_path, out);
  return exit_code::kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directed 2-factorizations of complete symmetric digraphs", "owp"};
  app.require_subcommand(1);
  Options o;

  auto* construct_cmd = app.add_subcommand("construct", "Build a factorization of K*_n");
  construct_cmd->add_option("--n", o.n, "number of vertices")->required();
  construct_cmd->add_option("--type", o.type, "cycle type, e.g. 4,5 or 2^7,3")->required();
  construct_cmd->add_option("--out", o.out_path, "write to a file instead of stdout");
  construct_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a factorization document");
  verify_cmd->add_option("path", verify_path)->required();

  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for small n");
  search_cmd->add_option("--n", o.n)->required();
  search_cmd->add_option("--type", o.type)->required();
  search_cmd->add_flag("--all", o.all, "collect every solution");
  search_cmd->add_option("--max-seconds", o.max_seconds)->check(CLI::PositiveNumber);

  auto* pair_cmd = app.add_subcommand("pair-search", "Search 1-factor pairs of K_{4l}");
  pair_cmd->add_option("--ell", o.ell)->required();
  pair_cmd->add_option("--max-seconds", o.max_seconds)->check(CLI::PositiveNumber);

  auto* profile_cmd = app.add_subcommand("profile", "Edge classes of a matching");
  profile_cmd->add_option("--in", o.in_path)->required();

  auto* double_cmd = app.add_subcommand("double", "Orient an undirected 2-factorization both ways");
  double_cmd->add_option("--in", o.in_path)->required();
  double_cmd->add_option("--out", o.out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  try {
    if (*construct_cmd) return do_construct(o, out, err);
    if (*verify_cmd) return do_verify(verify_path, out, err);
    if (*search_cmd) return do_search(o, out, err);
    if (*pair_cmd) return do_pair_search(o, out, err);
    if (*profile_cmd) return do_profile(o, out);
    if (*double_cmd) return do_double(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  return exit_code::kUsage;
}

}  // namespace owp
