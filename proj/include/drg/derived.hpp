#pragma once

#include "drg/intersection_array.hpp"
#include "drg/rational.hpp"

#include "json.hpp"

#include <cstdint>
#include <vector>

namespace drg {

/// p[i][j][h] = number of w with d(x,w) = j and d(y,w) = h, for d(x,y) = i.
using PTable = std::vector<std::vector<std::vector<Rational>>>;

struct DerivedParams {
  std::vector<std::int64_t> a;   // a_0 .. a_D, may be negative for infeasible input
  std::vector<Rational> kdist;   // k_0 .. k_D
  Rational n;
  PTable p;                      // empty when derived without the table
  bool bipartite = false;        // all a_i = 0
  bool antipodal2 = false;       // k_D = 1

  bool has_p_table() const noexcept { return !p.empty(); }
};

struct DeriveOptions {
  bool p_table = true;
};

namespace detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

inline RationalMatrix multiply(const RationalMatrix& x, const RationalMatrix& y) {
  const std::size_t m = x.size();
  RationalMatrix out(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < m; ++l) {
      if (x[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (y[l][j] != 0) out[i][j] += x[i][l] * y[l][j];
    }
  return out;
}

}  // namespace detail

/// Triple intersection numbers via the regular representation of the
/// distance algebra: M_j[i][h] = p^i_{jh}, M_0 = I, M_1 = the intersection
/// matrix, and A A_j = b_{j-1} A_{j-1} + a_j A_j + c_{j+1} A_{j+1} gives
/// M_{j+1} = (M_1 M_j - a_j M_j - b_{j-1} M_{j-1}) / c_{j+1}.
inline PTable p_table(const IntersectionArray& arr) {
  const int D = arr.diameter();
  const std::size_t m = static_cast<std::size_t>(D) + 1;
  std::vector<detail::RationalMatrix> M(m, detail::RationalMatrix(m, std::vector<Rational>(m)));
  for (std::size_t i = 0; i < m; ++i) M[0][i][i] = 1;
  for (int i = 0; i <= D; ++i) {
    auto row = static_cast<std::size_t>(i);
    if (i > 0) M[1][row][row - 1] = arr.c(i);
    M[1][row][row] = arr.a(i);
    if (i < D) M[1][row][row + 1] = arr.b(i);
  }
  for (int j = 1; j < D; ++j) {
    auto next = detail::multiply(M[1], M[static_cast<std::size_t>(j)]);
    const auto& cur = M[static_cast<std::size_t>(j)];
    const auto& prev = M[static_cast<std::size_t>(j - 1)];
    const Rational cj1 = arr.c(j + 1);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < m; ++s)
        next[r][s] = (next[r][s] - arr.a(j) * cur[r][s] - arr.b(j - 1) * prev[r][s]) / cj1;
    M[static_cast<std::size_t>(j + 1)] = std::move(next);
  }
  PTable p(m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t h = 0; h < m; ++h) p[i][j][h] = M[j][i][h];
  return p;
}

inline DerivedParams derive(const IntersectionArray& arr, DeriveOptions opts = {}) {
  const int D = arr.diameter();
  DerivedParams out;
  out.a.reserve(static_cast<std::size_t>(D) + 1);
  out.kdist.reserve(static_cast<std::size_t>(D) + 1);
  out.bipartite = true;
  for (int i = 0; i <= D; ++i) {
    out.a.push_back(arr.a(i));
    if (arr.a(i) != 0) out.bipartite = false;
  }
  out.kdist.emplace_back(1);
  for (int i = 1; i <= D; ++i)
    out.kdist.push_back(out.kdist.back() * arr.b(i - 1) / arr.c(i));
  out.n = 0;
  for (const auto& ki : out.kdist) out.n += ki;
  out.antipodal2 = out.kdist.back() == 1;
  if (opts.p_table) out.p = p_table(arr);
  return out;
}

/// (a_D(a_D - 1 - a_1) + c_D(b_{D-1} - 1)) / c_2; agrees with p^D_{D2} when a_D = 0.
inline Rational p_closed_form_DD2(const IntersectionArray& arr) {
  const int D = arr.diameter();
  if (D < 2) throw std::invalid_argument("p_closed_form_DD2 requires D >= 2");
  const std::int64_t aD = arr.a(D);
  return Rational(aD * (aD - 1 - arr.a(1)) + arr.c(D) * (arr.b(D - 1) - 1), arr.c(2));
}

/// p^1_{i-1,i-1} = k_{i-1} a_{i-1} / k.
inline Rational p_closed_form_1ii(const IntersectionArray& arr, int i) {
  if (i < 2 || i > arr.diameter()) throw std::invalid_argument("p_closed_form_1ii requires 2 <= i <= D");
  Rational k_prev = 1;
  for (int j = 1; j < i; ++j) k_prev = k_prev * arr.b(j - 1) / arr.c(j);
  return k_prev * arr.a(i - 1) / arr.k();
}

inline nlohmann::json to_json(const IntersectionArray& arr, const DerivedParams& d) {
  nlohmann::json j;
  j["array"] = render_array(arr);
  j["D"] = arr.diameter();
  j["a"] = d.a;
  auto& ks = j["k"] = nlohmann::json::array();
  for (const auto& ki : d.kdist) ks.push_back(to_string(ki));
  j["n"] = to_string(d.n);
  j["bipartite"] = d.bipartite;
  j["antipodal2"] = d.antipodal2;
  if (d.has_p_table()) {
    auto& p = j["p"] = nlohmann::json::array();
    for (const auto& plane : d.p) {
      auto jp = nlohmann::json::array();
      for (const auto& row : plane) {
        auto jr = nlohmann::json::array();
        for (const auto& v : row) jr.push_back(to_string(v));
        jp.push_back(std::move(jr));
      }
      p.push_back(std::move(jp));
    }
  }
  return j;
}

}  // namespace drg
