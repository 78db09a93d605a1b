#pragma once

// Bounded depth-first search over intersection arrays of a fixed diameter.
// Values are assigned in the order k, c_1, b_1, c_2, b_2, ..., c_D; partial
// arrays are cut as soon as a_i < 0, a non-integral k_i, b_i < c_j (i+j <= D)
// or a decidable filter conjunct rules them out. Complete arrays go through
// the integer rules first and the spectral rules only if those pass.

#include "drg/exceptions.hpp"
#include "drg/filter.hpp"
#include "drg/intersection_array.hpp"
#include "drg/rules.hpp"

#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace drg {

inline constexpr std::int64_t kMaxValencyCap = 64;
inline constexpr int kMaxDiameterCap = 12;
inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr std::uint64_t kProgressInterval = 1'000'000;

class SearchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SearchSpec {
  int diameter = 0;
  std::int64_t k_min = 3;
  std::int64_t k_max = 0;
  std::string filter;               // empty: no filter
  Assumption assumption = Assumption::None;
  std::vector<std::string> rules;   // empty: all rules
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct Survivor {
  IntersectionArray array;
  RuleReport report;
  std::optional<std::string> exception;
};

struct SearchResult {
  SearchSpec spec;
  std::vector<Survivor> survivors;          // canonical array order
  std::map<std::string, std::uint64_t> pruned;  // rule id or "filter" -> count
  std::uint64_t nodes = 0;                  // partial assignments visited
  std::uint64_t complete_arrays = 0;        // arrays reaching rule evaluation
  bool complete = true;                     // false if the node budget ran out
  double wall_seconds = 0;                  // not part of the JSON document
};

using ProgressFn = std::function<void(std::uint64_t nodes, const ArrayState&)>;

namespace enumerate_detail {

inline void validate(const SearchSpec& spec) {
  if (spec.diameter < 1 || spec.diameter > kMaxDiameterCap)
    throw SearchError("diameter must be in 1.." + std::to_string(kMaxDiameterCap));
  if (spec.k_max < 2 || spec.k_max > kMaxValencyCap)
    throw SearchError("max-k must be in 2.." + std::to_string(kMaxValencyCap) + " (hard cap exceeded)");
  if (spec.k_min < 2 || spec.k_min > spec.k_max) throw SearchError("min-k must be in 2..max-k");
  for (const auto& id : spec.rules)
    if (!is_rule_id(id)) throw SearchError("unknown rule id '" + id + "'");
}

inline EvaluateOptions options_for(const SearchSpec& spec, bool spectral) { return {spec.rules, spectral}; }

inline IntersectionArray to_array(const ArrayState& s) {
  std::vector<std::int64_t> b(s.b.begin(), s.b.begin() + s.D), c(s.c.begin() + 1, s.c.end());
  return {b, c};
}

/// Integer rules first; the spectral ones only when nothing fired. Returns
/// the report if the array survives, otherwise counts the first violation.
inline std::optional<RuleReport> judge(const IntersectionArray& arr, const SearchSpec& spec, SearchResult& res) {
  ++res.complete_arrays;
  RuleReport cheap = evaluate(arr, spec.assumption, options_for(spec, false));
  if (const auto* v = cheap.first_violation()) {
    ++res.pruned[v->rule_id];
    return std::nullopt;
  }
  RuleReport full = evaluate(arr, spec.assumption, options_for(spec, true));
  if (const auto* v = full.first_violation()) {
    ++res.pruned[v->rule_id];
    return std::nullopt;
  }
  return full;
}

class Search {
 public:
  Search(const SearchSpec& spec, const Filter& filter, SearchResult& res, const ProgressFn& progress)
      : spec_(spec), filter_(filter), res_(res), progress_(progress) {
    use_r0_ = rule_selected(options_for(spec, true), "R0");
    use_r3_ = rule_selected(options_for(spec, true), "R3");
  }

  void run() {
    const int D = spec_.diameter;
    s_.D = D;
    s_.b.assign(static_cast<std::size_t>(D + 1), 0);
    s_.c.assign(static_cast<std::size_t>(D + 1), 0);
    kdist_.assign(static_cast<std::size_t>(D + 1), 0);
    kdist_[0] = 1;
    for (std::int64_t k = spec_.k_min; k <= spec_.k_max && !aborted_; ++k) {
      s_.k = k;
      s_.b[0] = k;
      if (!visit() || !pass_filter(0)) continue;
      assign_c(1);
    }
    res_.complete = !aborted_;
  }

 private:
  bool visit() {
    if (aborted_) return false;
    if (res_.nodes >= spec_.node_budget) {
      aborted_ = true;
      return false;
    }
    ++res_.nodes;
    if (progress_ && res_.nodes % kProgressInterval == 0) progress_(res_.nodes, s_);
    return true;
  }

  bool pass_filter(int position) {
    if (filter_.accepts_at(s_, position)) return true;
    ++res_.pruned["filter"];
    return false;
  }

  bool cut(const char* rule) {
    ++res_.pruned[rule];
    return false;
  }

  /// c_i in c_{i-1}..k (c_1 = 1), then b_i or, for i = D, the complete array.
  void assign_c(int i) {
    const int D = s_.D;
    const std::int64_t lo = i == 1 ? 1 : s_.c[static_cast<std::size_t>(i - 1)];
    const std::int64_t hi = i == 1 ? 1 : s_.k;
    for (std::int64_t ci = lo; ci <= hi && !aborted_; ++ci) {
      s_.c[static_cast<std::size_t>(i)] = ci;
      if (!visit() || !c_ok(i) || !pass_filter(position_of_c(i))) continue;
      if (i == D) complete();
      else assign_b(i);
    }
  }

  bool c_ok(int i) {
    const int D = s_.D;
    const std::int64_t ci = s_.c[static_cast<std::size_t>(i)];
    if (use_r0_) {
      // b_i is not known yet, so only a_D = k - c_D is decided here.
      if (i == D && s_.k - ci < 0) return cut("R0");
      const __int128 prod = kdist_[static_cast<std::size_t>(i - 1)] * s_.b[static_cast<std::size_t>(i - 1)];
      if (prod % ci != 0) return cut("R0");
      kdist_[static_cast<std::size_t>(i)] = prod / ci;
    }
    // b_j >= c_i for j <= D - i; b is nonincreasing so the smallest known one decides.
    if (use_r3_ && i <= D) {
      const int j = std::min(i - 1, D - i);
      if (s_.b[static_cast<std::size_t>(j)] < ci) return cut("R3");
    }
    return true;
  }

  /// b_i in 1..b_{i-1} (strictly below b_0 for i = 1).
  void assign_b(int i) {
    const std::int64_t hi = i == 1 ? s_.k - 1 : s_.b[static_cast<std::size_t>(i - 1)];
    for (std::int64_t bi = hi; bi >= 1 && !aborted_; --bi) {
      s_.b[static_cast<std::size_t>(i)] = bi;
      if (!visit() || !b_ok(i) || !pass_filter(position_of_b(i, s_.D))) continue;
      assign_c(i + 1);
    }
  }

  bool b_ok(int i) {
    const int D = s_.D;
    const std::int64_t bi = s_.b[static_cast<std::size_t>(i)];
    if (use_r0_ && s_.a(i) < 0) return cut("R0");
    if (use_r3_) {
      const int j = std::min(i, D - i);
      if (j >= 1 && bi < s_.c[static_cast<std::size_t>(j)]) return cut("R3");
    }
    return true;
  }

  void complete() {
    s_.b[static_cast<std::size_t>(s_.D)] = 0;
    if (!filter_.accepts(s_)) {
      ++res_.pruned["filter"];
      return;
    }
    const IntersectionArray arr = to_array(s_);
    if (auto report = judge(arr, spec_, res_))
      res_.survivors.push_back({arr, std::move(*report), match_exception(arr)});
  }

  const SearchSpec& spec_;
  const Filter& filter_;
  SearchResult& res_;
  const ProgressFn& progress_;
  ArrayState s_;
  std::vector<__int128> kdist_;
  bool use_r0_ = true, use_r3_ = true;
  bool aborted_ = false;
};

inline void finish(SearchResult& res, std::chrono::steady_clock::time_point start) {
  std::sort(res.survivors.begin(), res.survivors.end(),
            [](const Survivor& x, const Survivor& y) { return x.array < y.array; });
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace enumerate_detail

/// Pruned depth-first search. Throws SearchError for an invalid spec and
/// FilterError for a malformed filter.
inline SearchResult enumerate(const SearchSpec& spec, const ProgressFn& progress = {}) {
  enumerate_detail::validate(spec);
  const Filter filter = Filter::parse(spec.filter, spec.diameter);
  const auto start = std::chrono::steady_clock::now();
  SearchResult res;
  res.spec = spec;
  enumerate_detail::Search(spec, filter, res, progress).run();
  enumerate_detail::finish(res, start);
  return res;
}

/// Reference path: every monotone array in the search box is built in full
/// and judged only by the filter and the complete rule evaluation.
inline SearchResult enumerate_unpruned(const SearchSpec& spec) {
  enumerate_detail::validate(spec);
  const Filter filter = Filter::parse(spec.filter, spec.diameter);
  const auto start = std::chrono::steady_clock::now();
  SearchResult res;
  res.spec = spec;
  const int D = spec.diameter;
  ArrayState s;
  s.D = D;
  s.b.assign(static_cast<std::size_t>(D + 1), 0);
  s.c.assign(static_cast<std::size_t>(D + 1), 0);

  // Odometer over b_1 > ... and c_2 <= ...; c_1 = 1, b_0 = k.
  std::function<void(int)> fill_b, fill_c;
  fill_c = [&](int i) {
    if (i > D) {
      fill_b(1);
      return;
    }
    for (std::int64_t ci = s.c[static_cast<std::size_t>(i - 1)]; ci <= s.k; ++ci) {
      s.c[static_cast<std::size_t>(i)] = ci;
      fill_c(i + 1);
    }
  };
  fill_b = [&](int i) {
    if (i >= D) {
      ++res.nodes;
      if (!filter.accepts(s)) {
        ++res.pruned["filter"];
        return;
      }
      const IntersectionArray arr = enumerate_detail::to_array(s);
      if (auto report = enumerate_detail::judge(arr, spec, res))
        res.survivors.push_back({arr, std::move(*report), match_exception(arr)});
      return;
    }
    const std::int64_t hi = i == 1 ? s.k - 1 : s.b[static_cast<std::size_t>(i - 1)];
    for (std::int64_t bi = 1; bi <= hi; ++bi) {
      s.b[static_cast<std::size_t>(i)] = bi;
      fill_b(i + 1);
    }
  };
  for (std::int64_t k = spec.k_min; k <= spec.k_max; ++k) {
    s.k = k;
    s.b[0] = k;
    s.c[1] = 1;
    fill_c(2);
  }
  enumerate_detail::finish(res, start);
  return res;
}

inline nlohmann::json to_json(const SearchSpec& spec) {
  nlohmann::json j;
  j["diameter"] = spec.diameter;
  j["k_min"] = spec.k_min;
  j["k_max"] = spec.k_max;
  j["filter"] = spec.filter;
  j["assumptions"] = nlohmann::json::array();
  if (spec.assumption != Assumption::None) j["assumptions"].push_back(to_string(spec.assumption));
  j["rules"] = spec.rules.empty() ? nlohmann::json("all") : nlohmann::json(spec.rules);
  j["node_budget"] = spec.node_budget;
  return j;
}

/// Survivors as JSON; identical for the pruned and unpruned searches.
inline nlohmann::json survivors_json(const SearchResult& res) {
  auto out = nlohmann::json::array();
  for (const auto& s : res.survivors) {
    nlohmann::json e;
    e["array"] = render_array(s.array);
    e["exception"] = s.exception ? nlohmann::json(*s.exception) : nlohmann::json(nullptr);
    e["report"] = to_json(s.report);
    out.push_back(std::move(e));
  }
  return out;
}

/// Deterministic result document; timing is deliberately left out.
inline nlohmann::json to_json(const SearchResult& res) {
  nlohmann::json j;
  j["spec"] = to_json(res.spec);
  j["complete"] = res.complete;
  j["nodes"] = res.nodes;
  j["complete_arrays"] = res.complete_arrays;
  j["pruned"] = res.pruned;
  j["survivors"] = survivors_json(res);
  return j;
}

}  // namespace drg
