// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any fails.

#include "drg.hpp"

#include "support/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace drg;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) why << what;
      else why << "; " << what;
      ok = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::set<std::string> survivor_set(const SearchResult& r) {
  std::set<std::string> out;
  for (const auto& s : r.survivors) out.insert(render_array(s.array));
  return out;
}

SearchResult run_search(int D, std::int64_t k_max, const std::string& filter) {
  SearchSpec spec;
  spec.diameter = D;
  spec.k_max = k_max;
  spec.filter = filter;
  return enumerate(spec);
}

void check_survivors(Outcome& out, const SearchResult& r, const std::set<std::string>& allowed,
                     const std::set<std::string>& required) {
  out.require(r.complete, "search incomplete");
  auto got = survivor_set(r);
  for (const auto& s : got) out.require(allowed.count(s) == 1, "unexpected survivor " + s);
  for (const auto& s : required) out.require(got.count(s) == 1, "missing survivor " + s);
}

// Criterion 1: D = 4, k <= 24, 3c_2 > k.
void hadamard_d4(Outcome& out) {
  const auto t = std::chrono::steady_clock::now();
  auto r = run_search(4, 24, "3*c_2 > k");
  out.require(r.complete, "search incomplete");
  for (const auto& s : r.survivors) {
    const auto k = s.array.k();
    const bool form = k % 2 == 0 && s.array == IntersectionArray({k, k - 1, k / 2, 1}, {1, k / 2, k - 1, k});
    out.require(form, "survivor not of Hadamard form: " + render_array(s.array));
  }
  out.require(survivor_set(r).count(render_array(hadamard_array(8))) == 1, "hadamard_array(8) missing");
  const double dt = seconds_since(t);
  out.require(dt < 60, "took " + std::to_string(dt) + " s");
  if (out.ok) out.why << r.survivors.size() << " survivors, all Hadamard form, " << dt << " s";
}

// Criterion 2: D = 5, k <= 24, 3c_2 > k.
void cube_d5(Outcome& out) {
  const auto t = std::chrono::steady_clock::now();
  auto r = run_search(5, 24, "3*c_2 > k");
  const std::string cube5 = render_array(IntersectionArray({5, 4, 3, 2, 1}, {1, 2, 3, 4, 5}));
  check_survivors(out, r, {cube5}, {cube5});
  const double dt = seconds_since(t);
  out.require(dt < 120, "took " + std::to_string(dt) + " s");
  if (out.ok) out.why << "survivors {" << cube5 << "}, " << dt << " s";
}

// Criterion 3: D in {6,7,8}, k <= 16, 4c_2 > k.
void large_diameter(Outcome& out) {
  const auto t = std::chrono::steady_clock::now();
  const auto name = [](std::string_view n) { return render_array(sporadic(n).array); };
  const std::string c6 = render_array(cube_array(6)), c7 = render_array(cube_array(7));
  const std::vector<std::pair<int, std::set<std::string>>> cases{
      {6, {c6, name("gen_dodecagon_12")}}, {7, {c7, name("biggs_smith")}}, {8, {name("foster")}}};
  std::ostringstream summary;
  for (const auto& [D, expected] : cases) {
    auto r = run_search(D, 16, "4*c_2 > k");
    check_survivors(out, r, expected, expected);
    summary << "D=" << D << ": " << r.survivors.size() << " survivors; ";
  }
  const double dt = seconds_since(t);
  out.require(dt < 600, "took " + std::to_string(dt) + " s");
  if (out.ok) out.why << summary.str() << dt << " s";
}

// Criterion 4: equality cases of c_2 <= 2k/D under an induced quadrangle.
void quadrangle_equality(Outcome& out) {
  auto r12 = [](const IntersectionArray& arr) {
    auto rep = evaluate(arr, Assumption::ContainsQuadrangle, {.rules = {"R12"}, .spectral = false});
    return rep.verdicts.at(0).status;
  };
  for (std::int64_t k : {4, 8, 12, 16})
    out.require(r12(hadamard_array(k)) == Status::Pass, "hadamard_array(" + std::to_string(k) + ") not passed");
  int mutants = 0;
  for (int D = 5; D <= 8; ++D) {
    auto cube = cube_array(D);
    out.require(r12(cube) == Status::Pass, std::to_string(D) + "-cube not passed");
    // Mutations keeping c_2 = 2 = 2k/D: raise one c_i (i >= 3) or lower one b_i (i >= 2) by one.
    for (int i = 3; i <= D; ++i) {
      std::vector<std::int64_t> b, c;
      for (int j = 0; j < D; ++j) b.push_back(cube.b(j));
      for (int j = 1; j <= D; ++j) c.push_back(cube.c(j));
      c[static_cast<std::size_t>(i - 1)] += 1;
      IntersectionArray m(b, c);
      out.require(r12(m) == Status::Violated, "mutant " + render_array(m) + " not violated");
      ++mutants;
    }
    for (int i = 2; i < D; ++i) {
      std::vector<std::int64_t> b, c;
      for (int j = 0; j < D; ++j) b.push_back(cube.b(j));
      for (int j = 1; j <= D; ++j) c.push_back(cube.c(j));
      if (b[static_cast<std::size_t>(i)] <= 1) continue;
      b[static_cast<std::size_t>(i)] -= 1;
      IntersectionArray m(b, c);
      out.require(r12(m) == Status::Violated, "mutant " + render_array(m) + " not violated");
      ++mutants;
    }
  }
  if (out.ok) out.why << "4 Hadamard + 4 cube arrays pass, " << mutants << " mutated cube arrays violated";
}

struct Witness {
  std::string name;
  oracle::Adj adj;
  IntersectionArray expected;
};

std::vector<Witness> witnesses() {
  std::vector<Witness> out;
  for (int D = 2; D <= 7; ++D) out.push_back({std::to_string(D) + "-cube", oracle::cube(D), cube_array(D)});
  for (int k = 2; k <= 6; ++k) out.push_back({"crown-" + std::to_string(k), build_crown(k).adj, crown_array(k)});
  out.push_back({"hadamard-4", build_hadamard(2).adj, hadamard_array(4)});
  out.push_back({"hadamard-8", build_hadamard(3).adj, hadamard_array(8)});
  out.push_back({"icosahedron", build_icosahedron().adj, taylor_array(5, 2)});
  for (auto n : kSporadicNames)
    out.push_back({std::string(n), load_graph(std::string(DRG_DATA_DIR) + "/" + std::string(n) + ".drg").adj,
                   sporadic(n).array});
  return out;
}

/// Number of z with d(x,z) = D and d(y,z) = 2, for one pair x, y at distance D.
std::int64_t count_pDD2(const oracle::Adj& adj, int D) {
  auto dx = oracle::distances(adj, 0);
  int y = -1;
  for (std::size_t v = 0; v < dx.size() && y < 0; ++v)
    if (dx[v] == D) y = static_cast<int>(v);
  auto dy = oracle::distances(adj, y);
  std::int64_t count = 0;
  for (std::size_t z = 0; z < adj.size(); ++z) count += dx[z] == D && dy[z] == 2;
  return count;
}

// Criterion 5: oracle suite over constructed and shipped graphs.
void oracle_suite(Outcome& out) {
  const auto t = std::chrono::steady_clock::now();
  int graphs = 0;
  for (const auto& w : witnesses()) {
    const std::string& nm = w.name;
    Graph g{nm, w.adj};
    auto verdict = verify_drg(g);
    if (!std::holds_alternative<DrgCertificate>(verdict)) {
      out.require(false, nm + " not distance-regular");
      continue;
    }
    const auto& cert = std::get<DrgCertificate>(verdict);
    out.require(cert.array == w.expected, nm + ": extracted array differs from catalog");
    auto [b, c] = oracle::bc_from_vertex0(w.adj);
    out.require(IntersectionArray(b, c) == w.expected, nm + ": BFS array differs from catalog");

    const auto d = derive(w.expected);
    const auto layers = oracle::layer_sizes(w.adj);
    out.require(layers.size() == d.kdist.size(), nm + ": diameter mismatch");
    for (std::size_t i = 0; i < layers.size() && i < d.kdist.size(); ++i)
      out.require(d.kdist[i] == layers[i], nm + ": k_" + std::to_string(i) + " mismatch");
    out.require(d.n == static_cast<std::int64_t>(w.adj.size()), nm + ": n mismatch");

    const auto s = full_spectrum(w.expected);
    const auto clusters = oracle::cluster(oracle::adjacency_eigenvalues_desc(w.adj));
    out.require(clusters.size() == s.thetas.size(), nm + ": number of distinct eigenvalues differs");
    for (std::size_t i = 0; i < clusters.size() && i < s.thetas.size(); ++i) {
      const auto& th = s.thetas[i];
      const double lo = to_double(th.lo()) - 1e-9, hi = to_double(th.hi()) + 1e-9;
      out.require(clusters[i].first >= lo && clusters[i].first <= hi, nm + ": theta_" + std::to_string(i) + " mismatch");
      out.require(s.mults[i].exact && *s.mults[i].exact == clusters[i].second,
                  nm + ": m(theta_" + std::to_string(i) + ") mismatch");
    }

    const int D = w.expected.diameter();
    if (D >= 2 && w.expected.a(D) == 0)
      out.require(p_closed_form_DD2(w.expected) == count_pDD2(w.adj, D), nm + ": p^D_{D2} closed form mismatch");
    ++graphs;
  }
  const double dt = seconds_since(t);
  out.require(dt < 300, "took " + std::to_string(dt) + " s");
  if (out.ok) out.why << graphs << " graphs agree with BFS, eigen-solve and triple counts, " << dt << " s";
}

// Criterion 6: k/c_2 integral for bipartite even-D catalog graphs; synthetic violation.
void bipartite_divisibility(Outcome& out) {
  int checked = 0;
  for (const auto& e : catalog()) {
    const auto& arr = e.array;
    const int D = arr.diameter();
    if (D % 2 != 0 || !derive(arr, {.p_table = false}).bipartite) continue;
    out.require(arr.k() % arr.c(2) == 0, e.name + ": k/c_2 not integral");
    if (D >= 4) {
      auto rep = evaluate(arr, Assumption::None, {.rules = {"R8"}, .spectral = false});
      out.require(rep.verdicts.at(0).status != Status::Violated, e.name + ": R8 violated");
    }
    ++checked;
  }
  auto bad = evaluate(parse_array("{6,5,4,1;1,4,5,6}"), Assumption::None, {.rules = {"R8"}, .spectral = false});
  out.require(bad.verdicts.at(0).status == Status::Violated, "{6,5,4,1;1,4,5,6} not violated");
  if (out.ok) out.why << checked << " bipartite even-D catalog arrays divisible; synthetic array violated";
}

// Criterion 7: interlacing on random principal submatrices of intersection matrices.
void interlacing(Outcome& out) {
  std::mt19937 rng(20240611);
  int checks = 0;
  for (const auto& e : catalog()) {
    const auto tri = intersection_matrix(e.array);
    const auto full = eigenvalues(e.array).thetas;
    const std::size_t n = tri.size();
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::size_t> idx;
      while (idx.empty())
        for (std::size_t i = 0; i < n; ++i)
          if (rng() % 2) idx.push_back(i);
      auto sub = principal_submatrix_eigenvalues(tri, idx);
      auto verdict = interlace_check(full, sub);
      if (verdict != Certified::yes) {
        std::ostringstream msg;
        msg << e.name << " trial " << trial << ": " << to_string(verdict);
        out.require(false, msg.str());
      }
      ++checks;
    }
  }
  if (out.ok) out.why << checks << " submatrices interlace";
}

// Criterion 8: theta_1 >= sqrt(c_2 b_1 + c_1 b_0) for the 6- and 7-cube.
void theta1_bound(Outcome& out) {
  std::ostringstream summary;
  for (int D : {6, 7}) {
    const auto arr = cube_array(D);
    auto theta1 = eigenvalues(arr).thetas.at(1);
    auto bound = theta1_lower_bound(arr, 3);
    out.require(bound.radicand == arr.c(2) * arr.b(1) + arr.c(1) * arr.b(0), "radicand formula");
    out.require(theta1.width() <= pow2(-40), std::to_string(D) + "-cube: theta_1 interval too wide");
    const auto o = compare(theta1, bound.value);
    out.require(o == Order::greater || o == Order::equal, std::to_string(D) + "-cube: theta_1 below bound");
    // Independent floating-point check of the same inequality.
    const double th = oracle::adjacency_eigenvalues_desc(oracle::cube(D))[1];
    out.require(th * th + 1e-9 >= to_double(bound.radicand), std::to_string(D) + "-cube: numeric check failed");
    summary << (D == 6 ? "" : ", ") << D << "-cube theta_1=" << theta1.approx() << " >= sqrt(" << to_string(bound.radicand) << ")";
  }
  if (out.ok) out.why << summary.str();
}

// Criterion 9: D = 3, k <= 8, pruned vs exhaustive.
void pruning_soundness(Outcome& out) {
  SearchSpec spec;
  spec.diameter = 3;
  spec.k_max = 8;
  const auto pruned = survivors_json(enumerate(spec)).dump();
  const auto brute_result = enumerate_unpruned(spec);
  const auto brute = survivors_json(brute_result).dump();
  out.require(pruned == brute, "survivor lists differ");
  if (out.ok) out.why << brute_result.survivors.size() << " survivors, " << pruned.size() << " bytes identical";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Outcome&)>> criteria{
      {"D=4 classification, k<=24, 3c_2>k", hadamard_d4},
      {"D=5 classification, k<=24, 3c_2>k", cube_d5},
      {"D=6,7,8 classification, k<=16, 4c_2>k", large_diameter},
      {"quadrangle bound equality cases", quadrangle_equality},
      {"oracle suite", oracle_suite},
      {"bipartite even-D divisibility", bipartite_divisibility},
      {"interlacing on principal submatrices", interlacing},
      {"theta_1 lower bound, t=3", theta1_bound},
      {"pruning soundness, D=3, k<=8", pruning_soundness},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    failures += !out.ok;
    std::cout << "criterion " << (i + 1) << " " << (out.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
              << out.why.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
