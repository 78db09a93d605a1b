#include "drg/exceptions.hpp"
#include "drg/graph.hpp"
#include "drg/rules.hpp"

#include "support/oracle.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace drg;

namespace {

IntersectionArray A(const char* s) { return parse_array(s); }

Status status_of(const RuleReport& r, const char* id) {
  const auto* v = r.find(id);
  REQUIRE(v != nullptr);
  return v->status;
}

struct Witness {
  std::string name;
  Graph graph;
};

std::vector<Witness> witness_graphs() {
  std::vector<Witness> out;
  for (int D = 2; D <= 7; ++D) out.push_back({std::to_string(D) + "-cube", build_cube(D)});
  for (int k = 2; k <= 6; ++k) out.push_back({"crown-" + std::to_string(k), build_crown(k)});
  for (int m : {2, 3}) out.push_back({"hadamard-" + std::to_string(1 << m), build_hadamard(m)});
  out.push_back({"icosahedron", build_icosahedron()});
  out.push_back({"K5", build_complete(5)});
  for (auto name : kSporadicNames)
    out.push_back({std::string(name), load_graph(std::string(DRG_DATA_DIR) + "/" + std::string(name) + ".drg")});
  return out;
}

IntersectionArray random_array(std::mt19937& rng) {
  const int D = std::uniform_int_distribution<int>(2, 7)(rng);
  const std::int64_t k = std::uniform_int_distribution<std::int64_t>(3, 12)(rng);
  std::vector<std::int64_t> b{k}, c{1};
  for (int i = 1; i < D; ++i) {
    b.push_back(std::uniform_int_distribution<std::int64_t>(1, b.back())(rng));
    c.push_back(std::uniform_int_distribution<std::int64_t>(c.back(), k)(rng));
  }
  return IntersectionArray(b, c);
}

}  // namespace

TEST_CASE("6-cube passes every rule", "[rules]") {
  auto r = evaluate(cube_array(6));
  CHECK(r.overall == Overall::FeasibleSoFar);
  CHECK(r.first_violation() == nullptr);
  for (const auto& v : r.verdicts) {
    INFO(v.rule_id << " " << v.witness);
    CHECK((v.status == Status::Pass || v.status == Status::NotApplicable));
  }
}

TEST_CASE("{10,9,5,1;1,4,5,10} is infeasible with an a-propagation witness at i=2", "[rules]") {
  auto r = evaluate(A("{10,9,5,1;1,4,5,10}"));
  CHECK(r.overall == Overall::Infeasible);
  CHECK(status_of(r, "R5") == Status::Violated);
  const auto* v = r.find("R5");
  CHECK(v->witness.find("i=2") != std::string::npos);
  CHECK(v->witness.find("12 > k=10") != std::string::npos);
  CHECK(status_of(r, "R0") == Status::Violated);  // k_2 = 45/2
}

TEST_CASE("Foster array passes, the c_2 > k/4 rule via the exception list", "[rules]") {
  auto r = evaluate(sporadic("foster").array);
  CHECK(r.overall == Overall::FeasibleSoFar);
  CHECK(status_of(r, "R14") == Status::Pass);
  CHECK(r.find("R14")->witness.find("foster") != std::string::npos);
  // c_i is not strictly increasing, so the strict-increase proposition does not apply.
  CHECK(status_of(r, "R15") == Status::NotApplicable);
}

TEST_CASE("catalog arrays are feasible so far with and without assumptions that hold", "[rules][soundness]") {
  for (const auto& e : catalog()) {
    INFO(e.name);
    auto r = evaluate(e.array);
    CHECK(r.first_violation() == nullptr);
    CHECK(r.overall == Overall::FeasibleSoFar);
  }
}

TEST_CASE("BFS-extracted arrays of witness graphs never violate a rule", "[rules][soundness]") {
  for (const auto& w : witness_graphs()) {
    INFO(w.name);
    auto verdict = verify_drg(w.graph);
    REQUIRE(std::holds_alternative<DrgCertificate>(verdict));
    const auto& cert = std::get<DrgCertificate>(verdict);
    auto [b, c] = oracle::bc_from_vertex0(w.graph.adj);
    CHECK(cert.array == IntersectionArray(b, c));
    const auto assumption = find_induced_quadrangle(w.graph) ? Assumption::ContainsQuadrangle : Assumption::QuadrangleFree;
    auto r = evaluate(cert.array, assumption);
    for (const auto& v : r.verdicts) {
      INFO(v.rule_id << " " << v.witness);
      CHECK(v.status != Status::Violated);
      CHECK(v.status != Status::Undecided);
    }
  }
}

TEST_CASE("a-propagation fires exactly when its implication fails", "[rules][R5]") {
  std::mt19937 rng(7331);
  int fired = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    auto arr = random_array(rng);
    INFO(render_array(arr));
    const int D = arr.diameter();
    bool expected = false;
    if (D >= 4 && arr.k() >= 3)
      for (int i = 2; i <= D; ++i)
        if (arr.a(i) != 0 && 2 * arr.c(i) + arr.c(D - i) > arr.k() && arr.a(i - 1) == 0) expected = true;
    auto r = evaluate(arr, Assumption::None, {.rules = {"R5"}});
    REQUIRE(r.verdicts.size() == 1);
    CHECK((r.verdicts[0].status == Status::Violated) == expected);
    fired += expected;
  }
  CHECK(fired > 0);
}

TEST_CASE("verdicts do not depend on which other rules run", "[rules]") {
  std::mt19937 rng(99);
  std::vector<IntersectionArray> arrays;
  for (const auto& e : catalog()) arrays.push_back(e.array);
  for (int i = 0; i < 40; ++i) arrays.push_back(random_array(rng));
  for (const auto& arr : arrays) {
    INFO(render_array(arr));
    for (auto assumption : {Assumption::None, Assumption::ContainsQuadrangle}) {
      auto full = evaluate(arr, assumption);
      // Each rule alone, in reverse catalog order.
      const auto& rules = rule_catalog();
      for (auto it = rules.rbegin(); it != rules.rend(); ++it) {
        auto single = evaluate(arr, assumption, {.rules = {it->id}});
        REQUIRE(single.verdicts.size() == 1);
        const auto* v = full.find(it->id);
        REQUIRE(v != nullptr);
        CHECK(single.verdicts[0].status == v->status);
        CHECK(single.verdicts[0].witness == v->witness);
      }
    }
  }
}

TEST_CASE("report lists rules in catalog order and overall matches verdicts", "[rules]") {
  auto r = evaluate(A("{6,5,4,1;1,4,5,6}"));
  REQUIRE(r.verdicts.size() == rule_catalog().size());
  for (std::size_t i = 0; i < r.verdicts.size(); ++i) CHECK(r.verdicts[i].rule_id == rule_catalog()[i].id);
  CHECK(r.verdicts.front().rule_id == "R0");
  CHECK(r.verdicts.back().rule_id == "R22");
  CHECK(r.overall == Overall::Infeasible);

  auto no_spectral = evaluate(cube_array(5), Assumption::None, {.rules = {}, .spectral = false});
  CHECK(no_spectral.find("R4") == nullptr);
  CHECK(no_spectral.find("R21") == nullptr);
  CHECK(no_spectral.find("R22") == nullptr);
  CHECK(no_spectral.find("R5") != nullptr);
}

TEST_CASE("bipartite even-diameter divisibility", "[rules][R8]") {
  auto r = evaluate(A("{6,5,4,1;1,4,5,6}"));
  CHECK(status_of(r, "R8") == Status::Violated);
  for (const auto& e : catalog()) {
    const auto& arr = e.array;
    auto d = derive(arr, {.p_table = false});
    if (!d.bipartite || arr.diameter() % 2 != 0 || arr.diameter() < 4) continue;
    INFO(e.name);
    CHECK(arr.k() % arr.c(2) == 0);
    CHECK(status_of(evaluate(arr), "R8") == Status::Pass);
  }
}

TEST_CASE("quadrangle c_2 bound and its equality cases", "[rules][R12]") {
  for (std::int64_t k : {4, 8, 12, 16}) {
    auto r = evaluate(hadamard_array(k), Assumption::ContainsQuadrangle);
    CHECK(status_of(r, "R12") == Status::Pass);
  }
  for (int D = 5; D <= 8; ++D) CHECK(status_of(evaluate(cube_array(D), Assumption::ContainsQuadrangle), "R12") == Status::Pass);

  // 6-cube with c_5 raised to 6: still c_2 = 2k/D, no longer the cube.
  auto mutated = A("{6,5,4,3,2,1;1,2,3,4,6,6}");
  CHECK(status_of(evaluate(mutated, Assumption::ContainsQuadrangle), "R12") == Status::Violated);
  CHECK(status_of(evaluate(mutated, Assumption::None), "R12") == Status::NotApplicable);
  CHECK(status_of(evaluate(A("{10,8,6,4,2;1,4,6,8,10}"), Assumption::ContainsQuadrangle), "R12") == Status::Violated);
  CHECK(status_of(evaluate(A("{5,4,3,2,1;1,3,3,4,5}"), Assumption::ContainsQuadrangle), "R12") == Status::Violated);
  CHECK(status_of(evaluate(cube_array(3), Assumption::ContainsQuadrangle), "R12") == Status::NotApplicable);
}

TEST_CASE("quadrangle-sensitive rule only under the assertion", "[rules][R11]") {
  CHECK(status_of(evaluate(cube_array(4), Assumption::ContainsQuadrangle), "R11") == Status::Pass);
  CHECK(status_of(evaluate(cube_array(4), Assumption::QuadrangleFree), "R11") == Status::NotApplicable);
  CHECK(status_of(evaluate(taylor_array(5, 2), Assumption::ContainsQuadrangle), "R11") == Status::Violated);
}

TEST_CASE("informational flag for c_2 > 2k/D is never a verdict", "[rules][info]") {
  auto r = evaluate(hadamard_array(8));  // 4 c_2 = 16 = 2k: not above
  CHECK(r.info.empty());
  auto five = evaluate(A("{5,4,3,2,1;1,3,3,4,5}"));
  CHECK(five.info.size() == 1);
  auto quad = evaluate(A("{5,4,3,2,1;1,3,3,4,5}"), Assumption::ContainsQuadrangle);
  CHECK(quad.info.empty());
  auto j = to_json(five);
  CHECK(j["info"].size() == 1);
}

TEST_CASE("JSON and text carry the same verdicts", "[rules][json]") {
  auto r = evaluate(A("{10,9,5,1;1,4,5,10}"), Assumption::QuadrangleFree);
  auto j = to_json(r);
  CHECK(j["array"] == "{10,9,5,1;1,4,5,10}");
  CHECK(j["assumptions"] == nlohmann::json::array({"quadrangle-free"}));
  CHECK(j["overall"] == "infeasible");
  CHECK(j["rules"].size() == r.verdicts.size());
  const auto text = to_text(r);
  for (const auto& v : j["rules"]) {
    CHECK(text.find(v["id"].get<std::string>() + " ") != std::string::npos);
    if (!v["witness"].get<std::string>().empty()) CHECK(text.find(v["witness"].get<std::string>()) != std::string::npos);
    CHECK(text.find(v["paper_ref"].get<std::string>()) != std::string::npos);
  }
  CHECK(text.find("overall: infeasible") != std::string::npos);
}

TEST_CASE("rule ids", "[rules]") {
  CHECK(is_rule_id("R5q"));
  CHECK(is_rule_id("R22"));
  CHECK_FALSE(is_rule_id("R23"));
  CHECK_FALSE(is_rule_id("r5"));
  CHECK(rule_catalog().size() == 24);
}
