#pragma once

// Named families and sporadic graphs that the classification results allow
// as exceptions, all at the level of intersection arrays.

#include "drg/derived.hpp"
#include "drg/intersection_array.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace drg {

enum class Family { Cube, Hadamard, CrownD3, Taylor, Sporadic };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::Cube: return "Cube";
    case Family::Hadamard: return "Hadamard";
    case Family::CrownD3: return "CrownD3";
    case Family::Taylor: return "Taylor";
    case Family::Sporadic: return "Sporadic";
  }
  return "?";
}

struct NamedArray {
  std::string name;
  Family family;
  IntersectionArray array;
  std::string provenance;
};

/// {D, D-1, ..., 1; 1, 2, ..., D}
inline IntersectionArray cube_array(int D) {
  if (D < 2) throw std::invalid_argument("cube_array requires D >= 2");
  std::vector<std::int64_t> b, c;
  for (int i = 0; i < D; ++i) {
    b.push_back(D - i);
    c.push_back(i + 1);
  }
  return {b, c};
}

/// {k, k-1, k/2, 1; 1, k/2, k-1, k}
inline IntersectionArray hadamard_array(std::int64_t k) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("hadamard_array requires even k >= 4");
  return {{k, k - 1, k / 2, 1}, {1, k / 2, k - 1, k}};
}

/// K_{k+1,k+1} minus a perfect matching: {k, k-1, 1; 1, k-1, k}
inline IntersectionArray crown_array(std::int64_t k) {
  if (k < 2) throw std::invalid_argument("crown_array requires k >= 2");
  return {{k, k - 1, 1}, {1, k - 1, k}};
}

/// {k, mu, 1; 1, mu, k}
inline IntersectionArray taylor_array(std::int64_t k, std::int64_t mu) {
  if (mu < 1 || mu >= k) throw std::invalid_argument("taylor_array requires 1 <= mu < k");
  return {{k, mu, 1}, {1, mu, k}};
}

inline constexpr std::array<std::string_view, 3> kSporadicNames{"foster", "biggs_smith", "gen_dodecagon_12"};

inline NamedArray sporadic(std::string_view name) {
  if (name == "foster")
    return {"foster", Family::Sporadic, {{3, 2, 2, 2, 2, 1, 1, 1}, {1, 1, 1, 1, 2, 2, 2, 3}},
            "cubic, 90 vertices; adjacency in data/foster.drg"};
  if (name == "biggs_smith")
    return {"biggs_smith", Family::Sporadic, {{3, 2, 2, 2, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 3}},
            "cubic, 102 vertices; adjacency in data/biggs_smith.drg"};
  if (name == "gen_dodecagon_12")
    return {"gen_dodecagon_12", Family::Sporadic, {{3, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 3}},
            "generalized dodecagon of order (1,2), 126 vertices; adjacency in data/gen_dodecagon_12.drg"};
  throw std::invalid_argument("unknown sporadic graph '" + std::string(name) + "'");
}

inline bool is_cube_array(const IntersectionArray& arr) {
  const int D = arr.diameter();
  if (D < 2) return false;
  for (int i = 0; i < D; ++i)
    if (arr.b(i) != D - i || arr.c(i + 1) != i + 1) return false;
  return true;
}

/// Parameter-level check only; Hadamard matrix existence is not examined.
inline bool is_hadamard_form(const IntersectionArray& arr) {
  const auto k = arr.k();
  if (arr.diameter() != 4 || k < 4 || k % 2 != 0) return false;
  return arr == hadamard_array(k);
}

inline bool is_crown_form(const IntersectionArray& arr) {
  return arr.diameter() == 3 && arr == crown_array(arr.k());
}

inline bool is_taylor_form(const IntersectionArray& arr) {
  return arr.diameter() == 3 && arr.b(2) == 1 && arr.c(2) == arr.b(1) && arr.c(3) == arr.k() && arr.b(1) < arr.k();
}

inline bool is_sporadic(const IntersectionArray& arr, std::string_view name) { return sporadic(name).array == arr; }

/// First match in family order Cube, Hadamard, Crown, Taylor, Sporadic.
inline std::optional<std::string> match_exception(const IntersectionArray& arr) {
  if (is_cube_array(arr)) return std::to_string(arr.diameter()) + "-cube";
  if (is_hadamard_form(arr)) return "hadamard-" + std::to_string(arr.k());
  if (is_crown_form(arr)) return "crown-" + std::to_string(arr.k());
  if (is_taylor_form(arr)) return "taylor-" + std::to_string(arr.k()) + "-" + std::to_string(arr.b(1));
  for (auto name : kSporadicNames)
    if (is_sporadic(arr, name)) return std::string(name);
  return std::nullopt;
}

/// Instances listed by `drg catalog list`.
inline std::vector<NamedArray> catalog() {
  std::vector<NamedArray> out;
  for (int D = 2; D <= 8; ++D)
    out.push_back({std::to_string(D) + "-cube", Family::Cube, cube_array(D), "hypercube, Hamming distance 1"});
  for (std::int64_t k : {4, 8, 12, 16})
    out.push_back({"hadamard-" + std::to_string(k), Family::Hadamard, hadamard_array(k),
                   "Hadamard graph of a Hadamard matrix of order " + std::to_string(k)});
  for (std::int64_t k = 2; k <= 6; ++k)
    out.push_back({"crown-" + std::to_string(k), Family::CrownD3, crown_array(k),
                   "K_{" + std::to_string(k + 1) + "," + std::to_string(k + 1) + "} minus a perfect matching"});
  out.push_back({"icosahedron", Family::Taylor, taylor_array(5, 2), "Taylor graph {k,mu,1;1,mu,k} with k=5, mu=2"});
  for (auto name : kSporadicNames) out.push_back(sporadic(name));
  return out;
}

}  // namespace drg
