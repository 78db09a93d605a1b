#pragma once

// Feasibility conditions for intersection arrays as independent rules with
// stable ids R0..R22. Each rule inspects the array, its derived parameters
// and (for R4, R21, R22) its spectrum, and returns a verdict with a witness.

#include "drg/derived.hpp"
#include "drg/exceptions.hpp"
#include "drg/intersection_array.hpp"
#include "drg/spectra.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace drg {

enum class Assumption { None, ContainsQuadrangle, QuadrangleFree };
enum class Status { Pass, Violated, NotApplicable, Undecided };
enum class Overall { FeasibleSoFar, Infeasible, Undecided };

inline const char* to_string(Assumption a) {
  switch (a) {
    case Assumption::None: return "none";
    case Assumption::ContainsQuadrangle: return "contains-quadrangle";
    case Assumption::QuadrangleFree: return "quadrangle-free";
  }
  return "?";
}

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Violated: return "violated";
    case Status::NotApplicable: return "not_applicable";
    case Status::Undecided: return "undecided";
  }
  return "?";
}

inline const char* to_string(Overall o) {
  switch (o) {
    case Overall::FeasibleSoFar: return "feasible-so-far";
    case Overall::Infeasible: return "infeasible";
    case Overall::Undecided: return "undecided";
  }
  return "?";
}

struct RuleVerdict {
  std::string rule_id;
  Status status = Status::NotApplicable;
  std::string witness;
  std::string paper_ref;
};

struct RuleReport {
  IntersectionArray array;
  Assumption assumption = Assumption::None;
  std::vector<RuleVerdict> verdicts;  // rule-id order
  Overall overall = Overall::FeasibleSoFar;
  std::vector<std::string> info;      // informational flags, never verdicts

  const RuleVerdict* find(std::string_view id) const {
    for (const auto& v : verdicts)
      if (v.rule_id == id) return &v;
    return nullptr;
  }
  const RuleVerdict* first_violation() const {
    for (const auto& v : verdicts)
      if (v.status == Status::Violated) return &v;
    return nullptr;
  }
};

/// Inputs shared by all rules of one evaluation. The spectrum is computed on
/// first use and cached for the remaining spectral rules.
class RuleContext {
 public:
  RuleContext(const IntersectionArray& arr, Assumption assumption)
      : arr_(arr), derived_(derive(arr, {.p_table = false})), assumption_(assumption) {}

  const IntersectionArray& arr() const noexcept { return arr_; }
  const DerivedParams& derived() const noexcept { return derived_; }
  Assumption assumption() const noexcept { return assumption_; }

  const Spectrum& spectrum() const {
    if (!spectrum_) spectrum_ = full_spectrum(arr_);
    return *spectrum_;
  }

 private:
  const IntersectionArray& arr_;
  DerivedParams derived_;
  Assumption assumption_;
  mutable std::optional<Spectrum> spectrum_;
};

struct RuleInfo {
  std::string id;
  std::string name;
  std::string paper_ref;  // the condition being checked, stated as a formula
  bool spectral = false;
  std::function<RuleVerdict(const RuleContext&)> check;
};

namespace rules_detail {

using i64 = std::int64_t;

inline std::string seq(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

inline std::string var(const char* s, int i, i64 v) { return std::string(s) + "_" + std::to_string(i) + "=" + std::to_string(v); }

inline bool strictly_increasing_c(const IntersectionArray& arr, int* where = nullptr) {
  for (int i = 2; i <= arr.diameter(); ++i)
    if (arr.c(i) <= arr.c(i - 1)) {
      if (where) *where = i;
      return false;
    }
  return true;
}

struct Verdicts {
  const std::string& id;
  const std::string& ref;
  RuleVerdict pass(std::string w = {}) const { return {id, Status::Pass, std::move(w), ref}; }
  RuleVerdict violated(std::string w) const { return {id, Status::Violated, std::move(w), ref}; }
  RuleVerdict na(std::string w = {}) const { return {id, Status::NotApplicable, std::move(w), ref}; }
  RuleVerdict undecided(std::string w) const { return {id, Status::Undecided, std::move(w), ref}; }
};

inline std::vector<RuleInfo> build_catalog() {
  std::vector<RuleInfo> rules;
  auto add = [&rules](std::string id, std::string name, std::string ref, bool spectral,
                      std::function<RuleVerdict(const RuleContext&, const Verdicts&)> fn) {
    RuleInfo info{std::move(id), std::move(name), std::move(ref), spectral, {}};
    info.check = [fn = std::move(fn), id = info.id, ref = info.paper_ref](const RuleContext& ctx) {
      return fn(ctx, Verdicts{id, ref});
    };
    rules.push_back(std::move(info));
  };

  add("R0", "nonneg-a", "a_i >= 0 for all i; k_i and n positive integers", false,
      [](const RuleContext& ctx, const Verdicts& v) {
        const auto& d = ctx.derived();
        for (std::size_t i = 0; i < d.a.size(); ++i)
          if (d.a[i] < 0) return v.violated(var("a", static_cast<int>(i), d.a[i]) + " < 0");
        for (std::size_t i = 0; i < d.kdist.size(); ++i)
          if (!is_integer(d.kdist[i]))
            return v.violated("k_" + std::to_string(i) + "=" + to_string(d.kdist[i]) + " is not an integer");
        if (!is_integer(d.n)) return v.violated("n=" + to_string(d.n) + " is not an integer");
        return v.pass("n=" + num(d.n).str());
      });

  add("R1", "b-monotone", "k = b_0 > b_1 >= ... >= b_{D-1}", false, [](const RuleContext& ctx, const Verdicts& v) {
    const auto& arr = ctx.arr();
    if (arr.diameter() >= 2 && !(arr.b(0) > arr.b(1))) return v.violated(seq({var("b", 0, arr.b(0)), var("b", 1, arr.b(1))}) + ": b_0 <= b_1");
    for (int i = 1; i + 1 < arr.diameter(); ++i)
      if (arr.b(i) < arr.b(i + 1))
        return v.violated(seq({var("b", i, arr.b(i)), var("b", i + 1, arr.b(i + 1))}) + ": b increases");
    return v.pass();
  });

  add("R2", "c-monotone", "1 = c_1 <= c_2 <= ... <= c_D", false, [](const RuleContext& ctx, const Verdicts& v) {
    const auto& arr = ctx.arr();
    if (arr.c(1) != 1) return v.violated(var("c", 1, arr.c(1)) + " != 1");
    for (int i = 1; i < arr.diameter(); ++i)
      if (arr.c(i) > arr.c(i + 1))
        return v.violated(seq({var("c", i, arr.c(i)), var("c", i + 1, arr.c(i + 1))}) + ": c decreases");
    return v.pass();
  });

  add("R3", "b-ge-c", "b_i >= c_j whenever i + j <= D", false, [](const RuleContext& ctx, const Verdicts& v) {
    const auto& arr = ctx.arr();
    const int D = arr.diameter();
    for (int i = 0; i < D; ++i)
      for (int j = 1; i + j <= D; ++j)
        if (arr.b(i) < arr.c(j)) return v.violated(seq({var("b", i, arr.b(i)), var("c", j, arr.c(j))}) + ": b_i < c_j with i+j <= D");
    return v.pass();
  });

  add("R4", "mult-integral", "every eigenvalue multiplicity n / sum_j k_j u_j(theta)^2 is an integer", true,
      [](const RuleContext& ctx, const Verdicts& v) {
        const auto& s = ctx.spectrum();
        bool undecided = false;
        std::string ms;
        for (std::size_t i = 0; i < s.mults.size(); ++i) {
          const auto& m = s.mults[i];
          if (m.integral == Certified::no) {
            std::string val = m.exact ? to_string(*m.exact)
                                      : "in [" + to_string(m.lo) + ", " + to_string(m.hi) + "] (contains no integer)";
            return v.violated("m(theta_" + std::to_string(i) + " ~ " + std::to_string(s.thetas[i].approx()) + ") = " + val);
          }
          if (m.integral == Certified::undecided) undecided = true;
          if (!ms.empty()) ms += ",";
          ms += m.exact ? num(*m.exact).str() : "?";
        }
        if (undecided) return v.undecided("a multiplicity could not be pinned at the precision cap");
        return v.pass("multiplicities (" + ms + ")");
      });

  add("R5", "a-propagation", "D >= 4, k >= 3, a_i != 0 and 2c_i + c_{D-i} > k imply a_{i-1} != 0", false,
      [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        const int D = arr.diameter();
        if (D < 4 || arr.k() < 3) return v.na("requires D >= 4 and k >= 3");
        for (int i = 2; i <= D; ++i) {
          i64 lhs = 2 * arr.c(i) + arr.c(D - i);
          if (arr.a(i) != 0 && lhs > arr.k() && arr.a(i - 1) == 0)
            return v.violated("i=" + std::to_string(i) + ": " + var("a", i, arr.a(i)) + " != 0, 2c_" + std::to_string(i) +
                              "+c_" + std::to_string(D - i) + "=" + std::to_string(lhs) + " > k=" + std::to_string(arr.k()) +
                              ", but " + var("a", i - 1, 0));
        }
        return v.pass();
      });

  add("R5q", "a-propagation-count", "a_i != 0 implies c_{D-i} + 2c_i - k_{i-1} a_{i-1} / k <= k", false,
      [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        const auto& d = ctx.derived();
        const int D = arr.diameter();
        if (D < 2) return v.na("requires D >= 2");
        for (int i = 2; i <= D; ++i) {
          if (arr.a(i) == 0) continue;
          Rational lhs = Rational(arr.c(D - i) + 2 * arr.c(i)) - d.kdist[static_cast<std::size_t>(i - 1)] * arr.a(i - 1) / arr.k();
          if (lhs > arr.k())
            return v.violated("i=" + std::to_string(i) + ": " + var("a", i, arr.a(i)) + " != 0 and c_" + std::to_string(D - i) +
                              "+2c_" + std::to_string(i) + "-k_" + std::to_string(i - 1) + "a_" + std::to_string(i - 1) +
                              "/k = " + to_string(lhs) + " > k=" + std::to_string(arr.k()));
        }
        return v.pass();
      });

  add("R6", "triangle-c-half-diameter", "a_1 != 0 implies c_{floor(D/2)} <= k/3", false,
      [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        if (arr.diameter() < 2) return v.na("requires D >= 2");
        if (arr.a(1) == 0) return v.na("a_1 = 0");
        const int h = arr.diameter() / 2;
        if (3 * arr.c(h) > arr.k())
          return v.violated(var("a", 1, arr.a(1)) + " != 0 and 3c_" + std::to_string(h) + "=" + std::to_string(3 * arr.c(h)) +
                            " > k=" + std::to_string(arr.k()));
        return v.pass();
      });

  add("R7", "large-c2-bipartite", "D >= 4, k >= 3, c_2 > k/3 imply D <= 5 and bipartite", false,
      [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        const int D = arr.diameter();
        if (D < 4 || arr.k() < 3 || !(3 * arr.c(2) > arr.k())) return v.na();
        if (ctx.derived().bipartite && D <= 5) return v.pass();
        std::string why = !ctx.derived().bipartite ? "not bipartite" : "D=" + std::to_string(D) + " > 5";
        return v.violated("3c_2=" + std::to_string(3 * arr.c(2)) + " > k=" + std::to_string(arr.k()) + " but " + why);
      });

  add("R8", "bipartite-even-divisibility", "bipartite with D = 2t >= 4, k >= 3: k_2 / (k-1) = k / c_2 is an integer",
      false, [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        const int D = arr.diameter();
        // Bipartite pattern: no a_i > 0. Negative entries are R0's business.
        bool pattern = true;
        for (int i = 0; i <= D; ++i) pattern &= arr.a(i) <= 0;
        if (!pattern || D < 4 || D % 2 != 0 || arr.k() < 3) return v.na();
        if (arr.k() % arr.c(2) == 0) return v.pass("k/c_2=" + std::to_string(arr.k() / arr.c(2)));
        return v.violated("k/c_2=" + std::to_string(arr.k()) + "/" + std::to_string(arr.c(2)) + " is not an integer");
      });

  add("R9", "small-kD-antipodal", "k >= 3, D >= 3, a_D = 0, k_{D-1} < 2k imply k_D = 1, or D = 3 and bipartite",
      false, [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        const auto& d = ctx.derived();
        const int D = arr.diameter();
        if (arr.k() < 3 || D < 3 || arr.a(D) != 0) return v.na();
        const Rational& kprev = d.kdist[static_cast<std::size_t>(D - 1)];
        const Rational& kD = d.kdist.back();
        if (!(kprev < 2 * arr.k()) || kD < 2) return v.na();
        if (D == 3 && d.bipartite) return v.pass("D=3 and bipartite");
        return v.violated("a_D=0, k_" + std::to_string(D - 1) + "=" + to_string(kprev) + " < 2k=" +
                          std::to_string(2 * arr.k()) + ", k_D=" + to_string(kD) + " >= 2");
      });

  add("R10", "diameter-three", "D = 3: bipartite, Taylor, or c_2 <= k/2, b_2 <= k_3/2 and c_3 <= k_2/2", false,
      [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        const auto& d = ctx.derived();
        if (arr.diameter() != 3) return v.na();
        if (d.bipartite) return v.pass("bipartite");
        if (is_taylor_form(arr)) return v.pass("Taylor array");
        const Rational& k2 = d.kdist[2];
        const Rational& k3 = d.kdist[3];
        if (2 * arr.c(2) > arr.k())
          return v.violated("c_2=" + std::to_string(arr.c(2)) + " > k/2 (neither bipartite nor Taylor)");
        if (Rational(2 * arr.b(2)) > k3)
          return v.violated("b_2=" + std::to_string(arr.b(2)) + " > k_3/2 with k_3=" + to_string(k3));
        if (Rational(2 * arr.c(3)) > k2)
          return v.violated("c_3=" + std::to_string(arr.c(3)) + " > k_2/2 with k_2=" + to_string(k2));
        return v.pass();
      });

  add("R11", "quadrangle-a1-bound", "with an induced quadrangle: a_1 + 2 <= 2k/D", false,
      [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        if (ctx.assumption() != Assumption::ContainsQuadrangle) return v.na("quadrangle not asserted");
        const i64 lhs = arr.diameter() * (arr.a(1) + 2);
        if (lhs > 2 * arr.k())
          return v.violated("D(a_1+2)=" + std::to_string(lhs) + " > 2k=" + std::to_string(2 * arr.k()));
        return v.pass();
      });

  add("R12", "quadrangle-c2-bound", "with an induced quadrangle and D >= 4: c_2 <= 2k/D, equality only for Hadamard (D=4) or the D-cube",
      false, [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        const int D = arr.diameter();
        if (ctx.assumption() != Assumption::ContainsQuadrangle) return v.na("quadrangle not asserted");
        if (D < 4) return v.na("requires D >= 4");
        const i64 lhs = D * arr.c(2), rhs = 2 * arr.k();
        if (lhs > rhs) return v.violated("Dc_2=" + std::to_string(lhs) + " > 2k=" + std::to_string(rhs));
        if (lhs == rhs) {
          if (D == 4 && is_hadamard_form(arr)) return v.pass("equality: Hadamard array");
          if (D >= 5 && is_cube_array(arr)) return v.pass("equality: " + std::to_string(D) + "-cube");
          return v.violated("c_2 = 2k/D but array is not " + std::string(D == 4 ? "of Hadamard form" : "the D-cube"));
        }
        return v.pass();
      });

  add("R13", "c2-third-d45", "D in {4,5}, k >= 3: c_2 <= k/3 unless Hadamard (D=4) or the 5-cube", false,
      [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        const int D = arr.diameter();
        if ((D != 4 && D != 5) || arr.k() < 3 || !(3 * arr.c(2) > arr.k())) return v.na();
        if (D == 4 && is_hadamard_form(arr)) return v.pass("exception: hadamard-" + std::to_string(arr.k()));
        if (D == 5 && is_cube_array(arr)) return v.pass("exception: 5-cube");
        return v.violated("3c_2=" + std::to_string(3 * arr.c(2)) + " > k=" + std::to_string(arr.k()) + " and not an exception");
      });

  add("R14", "c2-quarter-d6", "D >= 6, k >= 3: c_2 <= k/4 unless 6-cube, 7-cube, gen. dodecagon (1,2), Biggs-Smith or Foster",
      false, [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        const int D = arr.diameter();
        if (D < 6 || arr.k() < 3 || !(4 * arr.c(2) > arr.k())) return v.na();
        if ((D == 6 || D == 7) && is_cube_array(arr)) return v.pass("exception: " + std::to_string(D) + "-cube");
        for (auto name : kSporadicNames)
          if (is_sporadic(arr, name)) return v.pass("exception: " + std::string(name));
        return v.violated("4c_2=" + std::to_string(4 * arr.c(2)) + " > k=" + std::to_string(arr.k()) + " and not an exception");
      });

  add("R15", "strict-c-large-c2", "D >= 2t, c_2 > k/(t+1), c strictly increasing imply D in {2t,2t+1} and Hadamard (D=4) or D-cube",
      false, [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        const int D = arr.diameter();
        const int t = D / 2;  // largest admissible t; the c_2 condition is weakest there
        if (t < 2) return v.na("requires D >= 4");
        if (!((t + 1) * arr.c(2) > arr.k())) return v.na("c_2 <= k/(t+1) for t=" + std::to_string(t));
        if (!strictly_increasing_c(arr)) return v.na("c not strictly increasing");
        if (D == 4 && is_hadamard_form(arr)) return v.pass("t=2: Hadamard array");
        if (D >= 5 && is_cube_array(arr)) return v.pass("t=" + std::to_string(t) + ": " + std::to_string(D) + "-cube");
        return v.violated("t=" + std::to_string(t) + ": " + std::to_string(t + 1) + "c_2=" + std::to_string((t + 1) * arr.c(2)) +
                          " > k=" + std::to_string(arr.k()) + ", c strictly increasing, array is neither Hadamard nor cube");
      });

  // Strict increase is forced by c_2 >= 2 together with c_2 > a_1 (the
  // hypothesis the classification arguments actually use). The growth bound
  // c_i >= (i/2) c_2 is only applied for D >= 4: the crown graphs (D = 3) have
  // c_3 = k < (3/2)(k-1).
  add("R16", "c-growth", "c_2 >= 2 and c_2 > a_1 imply c strictly increasing, and c_i >= (i/2) c_2 when D >= 4", false,
      [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        const int D = arr.diameter();
        if (D < 2 || arr.c(2) < 2 || !(arr.c(2) > arr.a(1))) return v.na();
        int where = 0;
        if (!strictly_increasing_c(arr, &where))
          return v.violated("c_2=" + std::to_string(arr.c(2)) + " > a_1=" + std::to_string(arr.a(1)) + " but " +
                            var("c", where - 1, arr.c(where - 1)) + ", " + var("c", where, arr.c(where)));
        if (D >= 4)
          for (int i = 2; i <= D; ++i)
            if (2 * arr.c(i) < i * arr.c(2))
              return v.violated(var("c", i, arr.c(i)) + " < (" + std::to_string(i) + "/2)c_2=" +
                                to_string(Rational(i * arr.c(2), 2)));
        return v.pass();
      });

  add("R17", "c3-three-halves", "D >= 4 and c_2 >= 2 imply c_3 >= (3/2) c_2", false,
      [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        if (arr.diameter() < 4 || arr.c(2) < 2) return v.na();
        if (2 * arr.c(3) < 3 * arr.c(2))
          return v.violated(var("c", 3, arr.c(3)) + " < (3/2)c_2=" + to_string(Rational(3 * arr.c(2), 2)));
        return v.pass();
      });

  add("R18", "c3-lower-bound", "2c_2 > c_3 implies c_3 - 1 - c_2(c_2-1) >= -c_2(c_2-1)(c_2-2)^2 / (2b_2)", false,
      [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        if (arr.diameter() < 3 || arr.b(2) <= 0 || !(2 * arr.c(2) > arr.c(3))) return v.na();
        const i64 c2 = arr.c(2), c3 = arr.c(3), b2 = arr.b(2);
        Rational lhs = Rational(c3 - 1 - c2 * (c2 - 1));
        Rational rhs = -Rational(c2 * (c2 - 1) * (c2 - 2) * (c2 - 2), 2 * b2);
        if (lhs < rhs)
          return v.violated("c_3-1-c_2(c_2-1)=" + to_string(lhs) + " < -c_2(c_2-1)(c_2-2)^2/(2b_2)=" + to_string(rhs));
        return v.pass();
      });

  // a_1 != 0 forces a_i != 0 only for i <= D-1 (octahedron: a_1 = 2, a_2 = 0, D = 2).
  add("R19", "a2-forces-a1", "D >= 3: a_2 = 0 implies a_1 = 0", false, [](const RuleContext& ctx, const Verdicts& v) {
    const auto& arr = ctx.arr();
    if (arr.diameter() < 3) return v.na("requires D >= 3");
    if (arr.a(2) == 0 && arr.a(1) != 0) return v.violated("a_2=0 but " + var("a", 1, arr.a(1)));
    return v.pass();
  });

  add("R20", "tail-vanish", "a_{D-2} = 0 and c_{D-2} > k/2 imply a_{D-1} = a_D = 0", false,
      [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        const int D = arr.diameter();
        if (D < 2 || arr.a(D - 2) != 0 || !(2 * arr.c(D - 2) > arr.k())) return v.na();
        if (arr.a(D - 1) == 0 && arr.a(D) == 0) return v.pass();
        return v.violated("a_" + std::to_string(D - 2) + "=0, 2c_" + std::to_string(D - 2) + "=" + std::to_string(2 * arr.c(D - 2)) +
                          " > k, but " + var("a", D - 1, arr.a(D - 1)) + ", " + var("a", D, arr.a(D)));
      });

  add("R21", "k2c2-eigenvalue", "a_1 = 0, c_2 >= 2: 4c_2/(c_2+2) <= b_1/(theta_1+1) + 1 (induced K_{2,c_2})", true,
      [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        if (arr.diameter() < 2 || arr.a(1) != 0 || arr.c(2) < 2) return v.na();
        const auto& s = ctx.spectrum();
        Certified c = kst_bound_holds(arr, s, 2, arr.c(2));
        std::string inst = "4c_2/(c_2+2)=" + to_string(Rational(4 * arr.c(2), arr.c(2) + 2)) + ", b_1=" +
                           std::to_string(arr.b(1)) + ", theta_1~" + std::to_string(s.thetas[1].approx());
        if (c == Certified::yes) return v.pass(inst);
        if (c == Certified::no) return v.violated(inst + ": bound fails");
        return v.undecided(inst + ": comparison undecided");
      });

  add("R22", "theta1-interlacing", "D >= 2t, t >= 3: theta_1 >= sqrt(c_{t-1} b_{t-2} + c_{t-2} b_{t-3})", true,
      [](const RuleContext& ctx, const Verdicts& v) {
        const auto& arr = ctx.arr();
        const int D = arr.diameter();
        if (D < 6) return v.na("requires D >= 6");
        const auto& s = ctx.spectrum();
        bool undecided = false;
        for (int t = 3; 2 * t <= D; ++t) {
          auto bound = theta1_lower_bound(arr, t);
          Order o = compare(s.thetas[1], bound.value);
          if (o == Order::less)
            return v.violated("t=" + std::to_string(t) + ": theta_1~" + std::to_string(s.thetas[1].approx()) + " < sqrt(" +
                              to_string(bound.radicand) + ")");
          if (o == Order::undecided) undecided = true;
        }
        if (undecided) return v.undecided("theta_1 comparison undecided at the precision cap");
        return v.pass();
      });

  return rules;
}

}  // namespace rules_detail

/// All rules in id order: R0..R5, R5q, R6..R22.
inline const std::vector<RuleInfo>& rule_catalog() {
  static const std::vector<RuleInfo> rules = rules_detail::build_catalog();
  return rules;
}

inline bool is_rule_id(std::string_view id) {
  for (const auto& r : rule_catalog())
    if (r.id == id) return true;
  return false;
}

struct EvaluateOptions {
  std::vector<std::string> rules;  // empty: every rule
  bool spectral = true;            // false: skip R4, R21, R22 (they are omitted from the report)
};

inline bool rule_selected(const EvaluateOptions& opts, const std::string& id) {
  return opts.rules.empty() || std::find(opts.rules.begin(), opts.rules.end(), id) != opts.rules.end();
}

inline RuleReport evaluate(const IntersectionArray& arr, Assumption assumption = Assumption::None,
                           const EvaluateOptions& opts = {}) {
  RuleContext ctx(arr, assumption);
  RuleReport report{arr, assumption, {}, Overall::FeasibleSoFar, {}};
  bool violated = false, undecided = false;
  for (const auto& rule : rule_catalog()) {
    if (!rule_selected(opts, rule.id)) continue;
    if (rule.spectral && !opts.spectral) continue;
    auto verdict = rule.check(ctx);
    violated |= verdict.status == Status::Violated;
    undecided |= verdict.status == Status::Undecided;
    report.verdicts.push_back(std::move(verdict));
  }
  report.overall = violated ? Overall::Infeasible : (undecided ? Overall::Undecided : Overall::FeasibleSoFar);

  // An expected but unproven bound for k >= 3, D >= 4; reported, never enforced.
  const int D = arr.diameter();
  if (arr.k() >= 3 && D >= 4 && D * arr.c(2) > 2 * arr.k() && assumption != Assumption::ContainsQuadrangle)
    report.info.push_back("c_2 > 2k/D: outside the expected bound c_2 <= 2k/D (conjectured to fail only finitely often for k >= 3, D >= 4)");
  return report;
}

inline nlohmann::json to_json(const RuleReport& r) {
  nlohmann::json j;
  j["array"] = render_array(r.array);
  j["assumptions"] = nlohmann::json::array();
  if (r.assumption != Assumption::None) j["assumptions"].push_back(to_string(r.assumption));
  auto& rules = j["rules"] = nlohmann::json::array();
  for (const auto& v : r.verdicts)
    rules.push_back({{"id", v.rule_id}, {"status", to_string(v.status)}, {"witness", v.witness}, {"paper_ref", v.paper_ref}});
  j["overall"] = to_string(r.overall);
  j["info"] = r.info;
  return j;
}

/// Human-readable rendering with the same content as to_json.
inline std::string to_text(const RuleReport& r) {
  std::ostringstream out;
  out << "array: " << render_array(r.array) << "\n";
  out << "assumptions: " << (r.assumption == Assumption::None ? "none" : to_string(r.assumption)) << "\n";
  for (const auto& v : r.verdicts) {
    out << v.rule_id << std::string(v.rule_id.size() < 4 ? 4 - v.rule_id.size() : 0, ' ') << " " << to_string(v.status);
    if (!v.witness.empty()) out << "  " << v.witness;
    out << "\n      [" << v.paper_ref << "]\n";
  }
  for (const auto& i : r.info) out << "info: " << i << "\n";
  out << "overall: " << to_string(r.overall) << "\n";
  return out.str();
}

}  // namespace drg
