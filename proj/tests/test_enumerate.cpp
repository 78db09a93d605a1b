#include "drg/enumerate.hpp"
#include "drg/exceptions.hpp"
#include "drg/filter.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace drg;

namespace {

ArrayState state_of(const IntersectionArray& arr) {
  ArrayState s;
  s.D = arr.diameter();
  s.k = arr.k();
  for (int i = 0; i <= s.D; ++i) {
    s.b.push_back(arr.b(i));
    s.c.push_back(arr.c(i));
  }
  return s;
}

std::string filter_error(const char* text, int D) {
  try {
    Filter::parse(text, D);
  } catch (const FilterError& e) {
    return e.what();
  }
  return "<no error>";
}

std::vector<std::string> arrays_of(const SearchResult& r) {
  std::vector<std::string> out;
  for (const auto& s : r.survivors) out.push_back(render_array(s.array));
  return out;
}

}  // namespace

TEST_CASE("filter expressions evaluate on complete arrays", "[filter]") {
  auto cube = state_of(cube_array(4));
  CHECK(Filter::parse("3*c_2 > k", 4).accepts(state_of(hadamard_array(8))));
  CHECK(Filter::parse("3*c2 > k", 4).accepts(cube));
  CHECK_FALSE(Filter::parse("4*c_2 > k + 4", 4).accepts(cube));
  CHECK(Filter::parse("a_1 == 0 && b_1 >= c_3", 4).accepts(cube));
  CHECK(Filter::parse("a1 == 0 and -(b_1 - 5) * 2 == 4", 4).accepts(cube));
  CHECK(Filter::parse("D == 4 && k != 5 && c_4 <= k && b_3 < 2", 4).accepts(cube));
  CHECK_FALSE(Filter::parse("a_1 != 0", 4).accepts(cube));
  CHECK(Filter::parse("", 4).empty());
  CHECK(Filter::parse("   ", 4).accepts(cube));
  CHECK(Filter::parse("k>1", 4).text() == "k>1");
}

TEST_CASE("malformed filters report a column", "[filter]") {
  CHECK(filter_error("3*c_2 >", 4).find("column 8") != std::string::npos);
  CHECK(filter_error("3*x_2 > k", 4).find("column 3") != std::string::npos);
  CHECK(filter_error("c_5 > 1", 4).find("out of range") != std::string::npos);
  CHECK(filter_error("c_0 > 1", 4).find("out of range") != std::string::npos);
  CHECK(filter_error("b_4 > 1", 4).find("out of range") != std::string::npos);
  CHECK(filter_error("a_5 > 1", 4).find("out of range") != std::string::npos);
  CHECK(filter_error("k > 1 &", 4).find("malformed filter at column") != std::string::npos);
  CHECK(filter_error("(k > 1", 4).find("malformed") != std::string::npos);
  CHECK(filter_error("k 1", 4).find("comparison") != std::string::npos);
  CHECK(filter_error("k > 99999999999999999999", 4).find("too large") != std::string::npos);
  CHECK(filter_error("k > 1 or k < 2", 4).find("malformed") != std::string::npos);
  CHECK_NOTHROW(Filter::parse("b_0 == k && a_0 == 0", 4));
}

TEST_CASE("filter overflow is an error, not a wrap", "[filter]") {
  auto f = Filter::parse("k * 4611686018427387904 > 0", 2);
  CHECK_THROWS_AS(f.accepts(state_of(cube_array(2))), FilterError);
}

TEST_CASE("variables become decidable in assignment order", "[filter]") {
  const int D = 4;
  CHECK(position_of_b(0, D) == 0);
  CHECK(position_of_c(1) == 1);
  CHECK(position_of_b(1, D) == 2);
  CHECK(position_of_c(2) == 3);
  CHECK(position_of_b(3, D) == 6);
  CHECK(position_of_c(4) == 7);
  // A conjunct on c_2 is checked at position 3 only.
  auto f = Filter::parse("3*c_2 > k", D);
  auto s = state_of(cube_array(4));  // c_2 = 2, k = 4: holds
  CHECK(f.accepts_at(s, 3));
  s.c[2] = 1;
  CHECK_FALSE(f.accepts_at(s, 3));
  CHECK(f.accepts_at(s, 2));
  CHECK(f.accepts_at(s, 4));
}

TEST_CASE("pruned search equals generate-then-filter", "[enumerate]") {
  for (int D : {2, 3}) {
    SearchSpec spec;
    spec.diameter = D;
    spec.k_max = D == 2 ? 9 : 7;
    auto pruned = enumerate(spec);
    auto brute = enumerate_unpruned(spec);
    CHECK(pruned.complete);
    CHECK(survivors_json(pruned).dump() == survivors_json(brute).dump());
    CHECK(pruned.nodes > 0);
  }
  SearchSpec filtered;
  filtered.diameter = 4;
  filtered.k_max = 10;
  filtered.filter = "3*c_2 > k";
  CHECK(survivors_json(enumerate(filtered)).dump() == survivors_json(enumerate_unpruned(filtered)).dump());
}

TEST_CASE("D=4 with 3c_2 > k leaves only Hadamard-form arrays", "[enumerate]") {
  SearchSpec spec;
  spec.diameter = 4;
  spec.k_max = 12;
  spec.filter = "3*c_2 > k";
  auto r = enumerate(spec);
  REQUIRE_FALSE(r.survivors.empty());
  for (const auto& s : r.survivors) {
    INFO(render_array(s.array));
    CHECK(is_hadamard_form(s.array));
    CHECK(s.exception.has_value());
  }
  // k = 6 is removed by the c_3 inequality for 2c_2 > c_3; no Hadamard matrix of order 6 exists.
  CHECK(arrays_of(r) == std::vector<std::string>{"{4,3,2,1;1,2,3,4}", "{8,7,4,1;1,4,7,8}", "{10,9,5,1;1,5,9,10}",
                                                   "{12,11,6,1;1,6,11,12}"});
  CHECK(r.pruned.count("R18") == 1);
}

TEST_CASE("search is deterministic", "[enumerate]") {
  SearchSpec spec;
  spec.diameter = 3;
  spec.k_max = 8;
  auto a = to_json(enumerate(spec)).dump();
  auto b = to_json(enumerate(spec)).dump();
  CHECK(a == b);
}

TEST_CASE("more rules never add survivors", "[enumerate]") {
  SearchSpec few;
  few.diameter = 3;
  few.k_max = 8;
  few.rules = {"R0", "R1", "R2", "R3"};
  SearchSpec all = few;
  all.rules.clear();
  auto loose = arrays_of(enumerate(few));
  auto tight = arrays_of(enumerate(all));
  std::set<std::string> loose_set(loose.begin(), loose.end());
  for (const auto& t : tight) CHECK(loose_set.count(t) == 1);
  CHECK(tight.size() < loose.size());
  // Every catalog array of diameter 3 with k <= 8 survives the full rule set.
  std::set<std::string> tight_set(tight.begin(), tight.end());
  for (const auto& e : catalog())
    if (e.array.diameter() == 3 && e.array.k() >= 3 && e.array.k() <= 8) CHECK(tight_set.count(render_array(e.array)) == 1);
}

TEST_CASE("node budget stops the search and marks it incomplete", "[enumerate]") {
  SearchSpec spec;
  spec.diameter = 6;
  spec.k_max = 16;
  spec.node_budget = 5000;
  std::uint64_t calls = 0;
  auto r = enumerate(spec, [&](std::uint64_t, const ArrayState&) { ++calls; });
  CHECK_FALSE(r.complete);
  CHECK(r.nodes == 5000);
  CHECK(calls == 0);
  CHECK(to_json(r)["complete"] == false);
}

TEST_CASE("invalid search specs are rejected", "[enumerate]") {
  SearchSpec spec;
  spec.diameter = 3;
  spec.k_max = 65;
  CHECK_THROWS_AS(enumerate(spec), SearchError);
  spec.k_max = 8;
  spec.diameter = 13;
  CHECK_THROWS_AS(enumerate(spec), SearchError);
  spec.diameter = 3;
  spec.rules = {"R99"};
  CHECK_THROWS_AS(enumerate(spec), SearchError);
  spec.rules.clear();
  spec.k_min = 9;
  CHECK_THROWS_AS(enumerate(spec), SearchError);
  spec.k_min = 3;
  spec.filter = "c_9 > 1";
  CHECK_THROWS_AS(enumerate(spec), FilterError);
}

TEST_CASE("result JSON", "[enumerate][json]") {
  SearchSpec spec;
  spec.diameter = 5;
  spec.k_max = 10;
  spec.filter = "3*c_2 > k";
  auto j = to_json(enumerate(spec));
  CHECK(j["spec"]["diameter"] == 5);
  CHECK(j["spec"]["rules"] == "all");
  CHECK(j["complete"] == true);
  REQUIRE(j["survivors"].size() == 1);
  CHECK(j["survivors"][0]["array"] == "{5,4,3,2,1;1,2,3,4,5}");
  CHECK(j["survivors"][0]["exception"] == "5-cube");
  CHECK(j["survivors"][0]["report"]["overall"] == "feasible-so-far");
  CHECK_FALSE(j.contains("wall_seconds"));
}
