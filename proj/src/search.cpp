#include "owp/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace owp {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(std::optional<double> seconds) {
    if (seconds)
      end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(*seconds));
  }
  // Polls the clock every 4096 calls.
  bool expired() {
    if (!end_) return false;
    if ((++calls_ & 0xFFF) != 0) return expired_;
    expired_ = Clock::now() >= *end_;
    return expired_;
  }

 private:
  std::optional<Clock::time_point> end_;
  std::uint64_t calls_ = 0;
  bool expired_ = false;
};

class FactorizationSearch {
 public:
  FactorizationSearch(int n, const CycleType& type, const SearchLimits& limits)
      : n_(n),
        type_(type),
        limits_(limits),
        deadline_(limits.max_seconds),
        used_(static_cast<std::size_t>(n) * n, 0),
        covered_(static_cast<std::size_t>(n), 0) {}

  SearchOutcome run() {
    // First factor in canonical form.
    std::vector<std::vector<int>> first;
    int next = 0;
    for (int len : type_.lengths()) {
      std::vector<int> cycle;
      for (int i = 0; i < len; ++i) cycle.push_back(next++);
      first.push_back(cycle);
    }
    for (const auto& c : first) mark_cycle(c, 1);
    factors_.push_back(first);

    if (n_ == 2) {
      record();
    } else {
      begin_factor();
    }
    if (stopped_by_deadline_ && outcome_.solutions.empty())
      outcome_.status = SearchStatus::TimedOut;
    else
      outcome_.status =
          outcome_.solutions.empty() ? SearchStatus::ExhaustedNone : SearchStatus::Found;
    return std::move(outcome_);
  }

 private:
  bool should_stop() {
    if (stop_) return true;
    if (deadline_.expired()) {
      stop_ = true;
      stopped_by_deadline_ = true;
    }
    return stop_;
  }

  void mark_cycle(const std::vector<int>& c, int delta) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      used_[a * n_ + b] += delta;
    }
  }

  void record() {
    Factorization f{VertexSpace::cyclic(n_), type_, {}};
    for (const auto& factor : factors_) {
      TwoFactor tf;
      for (const auto& c : factor) {
        DirectedCycle dc;
        for (int v : c) dc.vertices.push_back(VertexLabel::u(v));
        tf.cycles.push_back(std::move(dc));
      }
      f.factors.push_back(std::move(tf));
    }
    outcome_.solutions.push_back(std::move(f));
    if (limits_.max_solutions && outcome_.solutions.size() >= *limits_.max_solutions)
      stop_ = true;
  }

  // Starts factor number factors_.size().
  void begin_factor() {
    if (static_cast<int>(factors_.size()) == n_ - 1) {
      record();
      return;
    }
    std::fill(covered_.begin(), covered_.end(), 0);
    current_.clear();
    for (int len : type_.lengths()) ++remaining_[len];
    factors_.emplace_back();
    next_cycle();
    factors_.pop_back();
    for (int len : type_.lengths()) --remaining_[len];
  }

  void next_cycle() {
    if (should_stop()) return;
    int start = -1;
    for (int v = 0; v < n_; ++v)
      if (!covered_[v]) {
        start = v;
        break;
      }
    if (start < 0) {
      factors_.back() = current_;
      auto saved_cover = covered_;
      auto saved_current = current_;
      begin_factor();
      covered_ = std::move(saved_cover);
      current_ = std::move(saved_current);
      return;
    }
    for (auto& [len, count] : remaining_) {
      if (count == 0) continue;
      --count;
      path_.assign(1, start);
      covered_[start] = 1;
      extend(len);
      covered_[start] = 0;
      ++count;
      if (stop_) return;
    }
  }

  void extend(int len) {
    ++outcome_.nodes_explored;
    if (should_stop()) return;
    const int last = path_.back();
    const int start = path_.front();
    if (static_cast<int>(path_.size()) == len) {
      if (used_[last * n_ + start]) return;
      mark_cycle(path_, 1);
      current_.push_back(path_);
      auto saved = path_;
      next_cycle();
      path_ = saved;
      current_.pop_back();
      mark_cycle(path_, -1);
      return;
    }
    // Factor i sends vertex 0 to i + 1.
    const bool forced = start == 0 && path_.size() == 1;
    const int forced_to = static_cast<int>(factors_.size());
    for (int w = start + 1; w < n_; ++w) {
      if (covered_[w] || used_[last * n_ + w]) continue;
      if (forced && w != forced_to) continue;
      covered_[w] = 1;
      path_.push_back(w);
      extend(len);
      path_.pop_back();
      covered_[w] = 0;
      if (stop_) return;
    }
  }

  int n_;
  CycleType type_;
  SearchLimits limits_;
  Deadline deadline_;
  std::vector<int> used_;
  std::vector<char> covered_;
  std::map<int, int> remaining_;
  std::vector<std::vector<std::vector<int>>> factors_;
  std::vector<std::vector<int>> current_;
  std::vector<int> path_;
  SearchOutcome outcome_;
  bool stop_ = false;
  bool stopped_by_deadline_ = false;
};

VertexLabel doubled_vertex(int k, int dense) {
  return dense < k ? VertexLabel::x(dense) : VertexLabel::y(dense - k);
}

// Perfect-matching enumerator over the 2k doubled vertices; `admit` prunes
// partial matchings and `retract` undoes its bookkeeping.
class MatchingEnumerator {
 public:
  MatchingEnumerator(int k, std::function<bool(const Edge&, const EdgeClass&)> admit,
                     std::function<void(const Edge&, const EdgeClass&)> retract,
                     std::function<bool(const OneFactor&)> complete, Deadline* deadline)
      : k_(k),
        admit_(std::move(admit)),
        retract_(std::move(retract)),
        complete_(std::move(complete)),
        deadline_(deadline),
        matched_(2 * static_cast<std::size_t>(k), 0) {}

  std::uint64_t nodes = 0;
  bool timed_out = false;

  void run() { recurse(); }

 private:
  void recurse() {
    if (stop_) return;
    ++nodes;
    if (deadline_ && deadline_->expired()) {
      timed_out = true;
      stop_ = true;
      return;
    }
    int first = -1;
    for (int v = 0; v < 2 * k_; ++v)
      if (!matched_[v]) {
        first = v;
        break;
      }
    if (first < 0) {
      if (!complete_({k_, edges_})) stop_ = true;
      return;
    }
    matched_[first] = 1;
    for (int w = first + 1; w < 2 * k_; ++w) {
      if (matched_[w]) continue;
      Edge e = Edge::make(doubled_vertex(k_, first), doubled_vertex(k_, w));
      EdgeClass c = edge_class(k_, e);
      if (!admit_(e, c)) continue;
      matched_[w] = 1;
      edges_.push_back(e);
      recurse();
      edges_.pop_back();
      matched_[w] = 0;
      retract_(e, c);
      if (stop_) break;
    }
    matched_[first] = 0;
  }

  int k_;
  std::function<bool(const Edge&, const EdgeClass&)> admit_;
  std::function<void(const Edge&, const EdgeClass&)> retract_;
  std::function<bool(const OneFactor&)> complete_;
  Deadline* deadline_;
  std::vector<char> matched_;
  std::vector<Edge> edges_;
  bool stop_ = false;
};

}  // namespace

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::ExhaustedNone:
      return "exhausted-none";
    case SearchStatus::TimedOut:
      return "timed-out";
  }
  return "unknown";
}

SearchOutcome search_factorization(int n, const CycleType& type, const SearchLimits& limits) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (type.size() == 0 || type.total() != n)
    throw std::invalid_argument("cycle type " + type.to_string() + " does not sum to " +
                                std::to_string(n));
  return FactorizationSearch(n, type, limits).run();
}

void for_each_one_factor(int k, const ClassFilter& filter,
                         const std::function<bool(const OneFactor&)>& visit) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  MatchingEnumerator e(
      k, [](const Edge&, const EdgeClass&) { return true; },
      [](const Edge&, const EdgeClass&) {},
      [&](const OneFactor& f) {
        if (filter && !filter(class_multiset(k, f.edges))) return true;
        return visit(f);
      },
      nullptr);
  e.run();
}

std::vector<OneFactor> enumerate_one_factors(int k, const ClassFilter& filter) {
  std::vector<OneFactor> out;
  for_each_one_factor(k, filter, [&](const OneFactor& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

PairSearchOutcome search_pair_4ell(int ell, const SearchLimits& limits) {
  if (ell < 1) throw std::invalid_argument("l must be positive");
  if (ell > 16) throw std::invalid_argument("class sets for l > 16 exceed 64 bits");
  const int k = 2 * ell;
  Deadline deadline(limits.max_seconds);

  auto bit = [ell](const EdgeClass& c) -> int {
    switch (c.kind) {
      case EdgeClass::Kind::LeftPure:
        return c.value - 1;
      case EdgeClass::Kind::RightPure:
        return ell + c.value - 1;
      case EdgeClass::Kind::Mixed:
        return 2 * ell + c.value;
    }
    return -1;
  };
  const int class_count = 4 * ell;
  const std::uint64_t full =
      class_count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << class_count) - 1;

  std::vector<OneFactor> candidates;
  std::vector<std::uint64_t> masks;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_mask;

  std::uint64_t mask = 0;
  int length_ell = 0;
  MatchingEnumerator e(
      k,
      [&](const Edge&, const EdgeClass& c) {
        const std::uint64_t b = std::uint64_t{1} << bit(c);
        if (mask & b) return false;
        const bool is_ell = c.is_pure() && c.value == ell;
        if (is_ell && length_ell == 1) return false;
        mask |= b;
        length_ell += is_ell;
        return true;
      },
      [&](const Edge&, const EdgeClass& c) {
        mask &= ~(std::uint64_t{1} << bit(c));
        length_ell -= c.is_pure() && c.value == ell;
      },
      [&](const OneFactor& f) {
        if (length_ell == 1) {
          by_mask[mask].push_back(candidates.size());
          candidates.push_back(f);
          masks.push_back(mask);
        }
        return true;
      },
      &deadline);
  e.run();

  PairSearchOutcome out;
  out.nodes_explored = e.nodes;
  out.first_candidates = candidates.size();
  if (e.timed_out) {
    out.status = SearchStatus::TimedOut;
    return out;
  }

  auto odd_pure = [&](std::uint64_t m, bool left) {
    int count = 0;
    for (int d = 1; d <= ell; d += 2)
      if (m & (std::uint64_t{1} << ((left ? 0 : ell) + d - 1))) ++count;
    return count;
  };

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& f1 = candidates[i];
    const std::uint64_t complement = full & ~masks[i];

    ++out.frontiers_checked;
    const auto p1 = parity_parameters(f1, ell);
    const int want = ell % 2;
    if ((p1.eps_o + p1.omega_o + p1.lambda) % 2 != want ||
        (p1.eps_e + p1.omega_o + p1.rho) % 2 != want)
      ++out.congruence_failures;
    const int forced =
        (p1.lambda + p1.rho + odd_pure(complement, true) + odd_pure(complement, false)) % 2;
    if (forced != want) ++out.frontiers_obstructed;

    auto it = by_mask.find(complement);
    if (it == by_mask.end() || out.pair) continue;
    const auto& f2 = candidates[it->second.front()];
    auto report = check_assumptions_4ell(f1, f2, ell);
    if (report.ok) out.pair = std::make_pair(f1, f2);
  }
  out.status = out.pair ? SearchStatus::Found : SearchStatus::ExhaustedNone;
  return out;
}

}  // namespace owp
