#pragma once

// Cycle-type specs and the JSON document formats:
//   owp-factorization/1, owp-matching/1, owp-undirected/1.

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "owp/constructions.hpp"
#include "owp/core.hpp"
#include "owp/matching.hpp"

namespace owp {

inline constexpr std::string_view kFactorizationFormat = "owp-factorization/1";
inline constexpr std::string_view kMatchingFormat = "owp-matching/1";
inline constexpr std::string_view kUndirectedFormat = "owp-undirected/1";

/// Malformed user input (bad cycle-type spec, bad document).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "4,5" or "2^7,3"; whitespace-tolerant, result sorted.
CycleType parse_cycle_type(std::string_view spec);

using ordered_json = nlohmann::ordered_json;

ordered_json factorization_to_json(const Factorization& f);
/// Canonicalizes, then dumps with two-space indentation and a trailing newline.
std::string serialize_factorization(const Factorization& f);

struct ParseOptions {
  /// Enforce n - 1 factors and run verify_factorization.
  bool verify = true;
};

Factorization factorization_from_json(const nlohmann::json& doc, const ParseOptions& opts = {});
Factorization parse_factorization(std::string_view text, const ParseOptions& opts = {});

ordered_json matching_to_json(const OneFactor& f);
std::string serialize_matching(const OneFactor& f);
OneFactor matching_from_json(const nlohmann::json& doc);
OneFactor parse_matching(std::string_view text);

ordered_json undirected_to_json(const UndirectedTwoFactorization& u);
UndirectedTwoFactorization undirected_from_json(const nlohmann::json& doc);
UndirectedTwoFactorization parse_undirected(std::string_view text);

ordered_json report_to_json(const VerificationReport& r);
ordered_json profile_to_json(const DifferenceProfile& p);

/// One factor per block, one cycle per line.
std::string to_text(const Factorization& f);

}  // namespace owp
