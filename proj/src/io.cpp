#include "owp/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace owp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<int> parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

template <typename T>
T get_field(const nlohmann::json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field \"") + key + "\" has the wrong type");
  }
}

void check_format(const nlohmann::json& doc, std::string_view expected) {
  auto tag = get_field<std::string>(doc, "format");
  if (tag != expected)
    throw ParseError("unknown format tag \"" + tag + "\" (expected \"" + std::string(expected) +
                     "\")");
}

VertexLabel parse_label(const VertexSpace& space, const std::string& token) {
  auto v = parse_token(token);
  if (!v || !is_valid_label(space, *v))
    throw ParseError("vertex token \"" + token + "\" is not valid in this space");
  return *v;
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

CycleType parse_cycle_type(std::string_view spec) {
  std::vector<int> lengths;
  std::size_t offset = 0;
  int term_no = 0;
  while (true) {
    ++term_no;
    const std::size_t comma = spec.find(',', offset);
    const std::string_view term =
        spec.substr(offset, comma == std::string_view::npos ? std::string_view::npos
                                                            : comma - offset);
    auto fail = [&](const std::string& why) {
      throw ParseError("cycle type term " + std::to_string(term_no) + " at offset " +
                       std::to_string(offset) + " (\"" + std::string(trim(term)) + "\"): " + why);
    };

    const std::size_t caret = term.find('^');
    auto base = parse_int(term.substr(0, caret));
    if (!base) fail("expected an integer");
    if (*base < 2) fail("cycle lengths must be at least 2");
    int count = 1;
    if (caret != std::string_view::npos) {
      auto c = parse_int(term.substr(caret + 1));
      if (!c) fail("expected an integer count after '^'");
      if (*c < 1) fail("count must be positive");
      count = *c;
    }
    lengths.insert(lengths.end(), static_cast<std::size_t>(count), *base);

    if (comma == std::string_view::npos) break;
    offset = comma + 1;
  }
  return CycleType(std::move(lengths));
}

ordered_json factorization_to_json(const Factorization& f) {
  ordered_json doc;
  doc["format"] = kFactorizationFormat;
  doc["n"] = f.space.vertex_count();
  ordered_json space;
  if (f.space.kind() == SpaceKind::CyclicPlusInf) {
    space["kind"] = "cyclic";
    space["modulus"] = f.space.modulus();
  } else {
    space["kind"] = "doubled";
    space["k"] = f.space.modulus();
  }
  space["infinities"] = f.space.infinities();
  doc["space"] = space;
  doc["cycle_type"] = f.cycle_type.lengths();
  ordered_json factors = ordered_json::array();
  for (const auto& factor : f.factors) {
    ordered_json cycles = ordered_json::array();
    for (const auto& c : factor.cycles) {
      ordered_json tokens = ordered_json::array();
      for (const auto& v : c.vertices) tokens.push_back(to_token(v));
      cycles.push_back(tokens);
    }
    factors.push_back(cycles);
  }
  doc["factors"] = factors;
  return doc;
}

std::string serialize_factorization(const Factorization& f) {
  return dump(factorization_to_json(canonicalize(f)));
}

Factorization factorization_from_json(const nlohmann::json& doc, const ParseOptions& opts) {
  check_format(doc, kFactorizationFormat);
  const int n = get_field<int>(doc, "n");
  const auto space_doc = get_field<nlohmann::json>(doc, "space");
  const auto kind = get_field<std::string>(space_doc, "kind");
  const int infinities = get_field<int>(space_doc, "infinities");

  std::optional<VertexSpace> space;
  try {
    if (kind == "cyclic")
      space = VertexSpace::cyclic(get_field<int>(space_doc, "modulus"), infinities);
    else if (kind == "doubled")
      space = VertexSpace::doubled(get_field<int>(space_doc, "k"), infinities);
    else
      throw ParseError("unknown space kind \"" + kind + "\"");
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid space: ") + e.what());
  }
  if (space->vertex_count() != n)
    throw ParseError("space has " + std::to_string(space->vertex_count()) +
                     " vertices but n = " + std::to_string(n));

  CycleType type;
  try {
    type = CycleType(get_field<std::vector<int>>(doc, "cycle_type"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid cycle type: ") + e.what());
  }
  if (type.total() != n) throw ParseError("cycle type " + type.to_string() + " does not sum to n");

  Factorization f{*space, type, {}};
  const auto factors = get_field<std::vector<std::vector<std::vector<std::string>>>>(doc, "factors");
  for (const auto& factor : factors) {
    TwoFactor tf;
    for (const auto& cycle : factor) {
      DirectedCycle c;
      for (const auto& token : cycle) c.vertices.push_back(parse_label(*space, token));
      tf.cycles.push_back(std::move(c));
    }
    f.factors.push_back(std::move(tf));
  }

  if (opts.verify) {
    if (f.factors.size() != static_cast<std::size_t>(n - 1))
      throw ParseError("expected " + std::to_string(n - 1) + " factors, found " +
                       std::to_string(f.factors.size()));
    auto report = verify_factorization(f);
    if (!report.valid) {
      std::string why;
      if (!report.factor_faults.empty()) {
        const auto& fault = report.factor_faults.front();
        why = "factor " + std::to_string(fault.factor_index) + ": " +
              std::string(to_string(fault.kind)) + " (" + fault.detail + ")";
      } else if (!report.missing_arcs.empty()) {
        why = "arc " + to_string(report.missing_arcs.front()) + " is missing";
      } else {
        why = "arc " + to_string(report.duplicated_arcs.front().first) + " is used " +
              std::to_string(report.duplicated_arcs.front().second) + " times";
      }
      throw ParseError("not a valid factorization: " + why);
    }
  }
  return f;
}

Factorization parse_factorization(std::string_view text, const ParseOptions& opts) {
  return factorization_from_json(parse_json(text), opts);
}

ordered_json matching_to_json(const OneFactor& f) {
  ordered_json doc;
  doc["format"] = kMatchingFormat;
  doc["k"] = f.k;
  ordered_json edges = ordered_json::array();
  for (const auto& e : f.edges) edges.push_back({to_token(e.a), to_token(e.b)});
  doc["edges"] = edges;
  return doc;
}

std::string serialize_matching(const OneFactor& f) {
  OneFactor sorted = f;
  std::sort(sorted.edges.begin(), sorted.edges.end());
  return dump(matching_to_json(sorted));
}

OneFactor matching_from_json(const nlohmann::json& doc) {
  check_format(doc, kMatchingFormat);
  const int k = get_field<int>(doc, "k");
  if (k < 1) throw ParseError("k must be positive");
  const auto space = VertexSpace::doubled(k);
  OneFactor f{k, {}};
  for (const auto& pair : get_field<std::vector<std::vector<std::string>>>(doc, "edges")) {
    if (pair.size() != 2) throw ParseError("each edge must list exactly two tokens");
    auto a = parse_label(space, pair[0]);
    auto b = parse_label(space, pair[1]);
    if (a == b) throw ParseError("edge " + pair[0] + pair[1] + " is a loop");
    f.edges.push_back(Edge::make(a, b));
  }
  return f;
}

OneFactor parse_matching(std::string_view text) { return matching_from_json(parse_json(text)); }

ordered_json undirected_to_json(const UndirectedTwoFactorization& u) {
  ordered_json doc;
  doc["format"] = kUndirectedFormat;
  doc["n"] = u.n;
  ordered_json factors = ordered_json::array();
  for (const auto& factor : u.factors) {
    ordered_json cycles = ordered_json::array();
    for (const auto& cycle : factor) {
      ordered_json tokens = ordered_json::array();
      for (int v : cycle) tokens.push_back("u" + std::to_string(v));
      cycles.push_back(tokens);
    }
    factors.push_back(cycles);
  }
  doc["factors"] = factors;
  return doc;
}

UndirectedTwoFactorization undirected_from_json(const nlohmann::json& doc) {
  check_format(doc, kUndirectedFormat);
  UndirectedTwoFactorization u;
  u.n = get_field<int>(doc, "n");
  if (u.n < 2) throw ParseError("n must be at least 2");
  const auto space = VertexSpace::cyclic(u.n);
  for (const auto& factor :
       get_field<std::vector<std::vector<std::vector<std::string>>>>(doc, "factors")) {
    std::vector<std::vector<int>> cycles;
    for (const auto& cycle : factor) {
      std::vector<int> vs;
      for (const auto& token : cycle) vs.push_back(parse_label(space, token).index);
      cycles.push_back(std::move(vs));
    }
    u.factors.push_back(std::move(cycles));
  }
  return u;
}

UndirectedTwoFactorization parse_undirected(std::string_view text) {
  return undirected_from_json(parse_json(text));
}

ordered_json report_to_json(const VerificationReport& r) {
  auto arc_json = [](const Arc& a) { return ordered_json::array({to_token(a.tail), to_token(a.head)}); };
  ordered_json doc;
  doc["valid"] = r.valid;
  doc["expected_factors"] = r.expected_factors;
  doc["actual_factors"] = r.actual_factors;
  ordered_json missing = ordered_json::array();
  for (const auto& a : r.missing_arcs) missing.push_back(arc_json(a));
  doc["missing_arcs"] = missing;
  ordered_json dup = ordered_json::array();
  for (const auto& [a, count] : r.duplicated_arcs)
    dup.push_back(ordered_json{{"arc", arc_json(a)}, {"count", count}});
  doc["duplicated_arcs"] = dup;
  ordered_json faults = ordered_json::array();
  for (const auto& f : r.factor_faults)
    faults.push_back(
        ordered_json{{"factor", f.factor_index}, {"kind", to_string(f.kind)}, {"detail", f.detail}});
  doc["factor_faults"] = faults;
  return doc;
}

ordered_json profile_to_json(const DifferenceProfile& p) {
  ordered_json doc;
  doc["L"] = p.left;
  doc["R"] = p.right;
  doc["M"] = p.mixed;
  doc["X"] = p.xs;
  doc["Y"] = p.ys;
  ordered_json classes = ordered_json::object();
  for (const auto& [c, count] : p.classes) classes[to_string(c)] = count;
  doc["classes"] = classes;
  return doc;
}

std::string to_text(const Factorization& f) {
  std::ostringstream os;
  const auto canon = canonicalize(f);
  os << "n = " << f.space.vertex_count() << ", type (" << f.cycle_type.to_string() << "), "
     << canon.factors.size() << " factors\n";
  for (std::size_t i = 0; i < canon.factors.size(); ++i) {
    os << "factor " << i << ":\n";
    for (const auto& c : canon.factors[i].cycles) {
      os << " ";
      for (const auto& v : c.vertices) os << ' ' << to_token(v);
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace owp
