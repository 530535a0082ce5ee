#pragma once

// Exhaustive oracles: backtracking search for factorizations of small K*_n
// and for 1-factor pairs meeting the K_{4l} lifting preconditions.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "owp/core.hpp"
#include "owp/matching.hpp"

namespace owp {

struct SearchLimits {
  std::optional<double> max_seconds;  // unset: unlimited
  std::optional<std::size_t> max_solutions = 1;  // unset: all
};

enum class SearchStatus { Found, ExhaustedNone, TimedOut };

std::string_view to_string(SearchStatus s);

struct SearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedNone;
  std::vector<Factorization> solutions;
  std::uint64_t nodes_explored = 0;
};

/// Factor-by-factor backtracking on an n x n arc occupancy table.
///
/// Symmetry reduction: vertices are relabelled so the first factor is
/// (0 1 .. m1-1)(m1 .. m1+m2-1)..., and factors are ordered by the
/// out-neighbour of vertex 0 (factor i contains the arc (0, i+1)). Both are
/// sound, so ExhaustedNone proves nonexistence. When the search stops on a
/// solution limit or a deadline, the solutions found so far are returned
/// (status Found if any). Throws std::invalid_argument when the type does
/// not sum to n or n < 2.
SearchOutcome search_factorization(int n, const CycleType& type, const SearchLimits& limits = {});

using ClassFilter = std::function<bool(const ClassMultiset&)>;

/// Calls `visit` for every perfect matching of K_{2k} on {x_i} u {y_i} that
/// passes `filter` (empty filter accepts all). Order: the smallest uncovered
/// vertex (x_0 < ... < x_{k-1} < y_0 < ...) is matched first, partners in
/// increasing order. `visit` returns false to stop early.
void for_each_one_factor(int k, const ClassFilter& filter,
                         const std::function<bool(const OneFactor&)>& visit);

std::vector<OneFactor> enumerate_one_factors(int k, const ClassFilter& filter = {});

struct PairSearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedNone;
  std::optional<std::pair<OneFactor, OneFactor>> pair;
  std::uint64_t nodes_explored = 0;
  std::uint64_t first_candidates = 0;  // matchings with distinct classes, one length-l edge
  // Parity bookkeeping over every candidate whose complementary class set is
  // known: the per-factor congruences must hold for the candidate, and the
  // parity forced on the even-mixed-difference count is compared with l.
  std::uint64_t frontiers_checked = 0;
  std::uint64_t congruence_failures = 0;
  std::uint64_t frontiers_obstructed = 0;
};

/// Looks for 1-factors F1, F2 of K_{4l} meeting the lifting preconditions.
/// Every matching with pairwise distinct edge classes and exactly one edge of
/// pure length l is indexed by its class set; each candidate F1 is then
/// paired with any matching whose class set is the exact complement.
PairSearchOutcome search_pair_4ell(int ell, const SearchLimits& limits = {});

}  // namespace owp
