#pragma once

// Eigenvalues of the tridiagonal intersection matrix, their multiplicities,
// and the spectral bounds used by the rule catalog.

#include "drg/algebraic.hpp"
#include "drg/derived.hpp"
#include "drg/intersection_array.hpp"
#include "drg/precision.hpp"
#include "drg/rational.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace drg {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Three-valued outcome of an interval-certified predicate.
enum class Certified { yes, no, undecided };

inline const char* to_string(Certified c) {
  switch (c) {
    case Certified::yes: return "yes";
    case Certified::no: return "no";
    case Certified::undecided: return "undecided";
  }
  return "?";
}

/// Row i holds (c_i, a_i, b_i) on the sub-, main and superdiagonal.
inline IntMatrix intersection_matrix(const IntersectionArray& arr) {
  const int D = arr.diameter();
  IntMatrix m(static_cast<std::size_t>(D) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(D) + 1, 0));
  for (int i = 0; i <= D; ++i) {
    auto r = static_cast<std::size_t>(i);
    if (i > 0) m[r][r - 1] = arr.c(i);
    m[r][r] = arr.a(i);
    if (i < D) m[r][r + 1] = arr.b(i);
  }
  return m;
}

/// det(xI - T) for a tridiagonal T given by its diagonal and the products
/// T[i][i+1] * T[i+1][i] of its off-diagonal pairs.
inline Polynomial tridiagonal_charpoly(const std::vector<std::int64_t>& diag,
                                       const std::vector<std::int64_t>& offdiag_products) {
  Polynomial prev{1}, cur{1};
  bool first = true;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    Polynomial next = Polynomial{-diag[i], 1} * cur;
    if (!first) next = next - prev * BigInt(offdiag_products[i - 1]);
    prev = std::move(cur);
    cur = std::move(next);
    first = false;
  }
  return cur;
}

inline Polynomial characteristic_polynomial(const IntersectionArray& arr) {
  std::vector<std::int64_t> diag, off;
  for (int i = 0; i <= arr.diameter(); ++i) diag.push_back(arr.a(i));
  for (int i = 1; i <= arr.diameter(); ++i) off.push_back(arr.b(i - 1) * arr.c(i));
  return tridiagonal_charpoly(diag, off);
}

/// m(theta) either pinned exactly or enclosed in [lo, hi].
struct Multiplicity {
  std::optional<Rational> exact;
  Rational lo, hi;
  Certified integral = Certified::undecided;
};

struct Spectrum {
  std::vector<AlgebraicReal> thetas;  // theta_0 > theta_1 > ... > theta_D
  std::vector<Multiplicity> mults;    // empty until multiplicities() runs
  Rational n;

  bool has_multiplicities() const noexcept { return !mults.empty(); }
};

/// Sorts descending with exact comparison.
inline void sort_descending(std::vector<AlgebraicReal>& xs) {
  std::sort(xs.begin(), xs.end(),
            [](const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == Order::greater; });
}

inline Spectrum eigenvalues(const IntersectionArray& arr, int bits = precision_bits()) {
  Spectrum s;
  s.thetas = real_roots(characteristic_polynomial(arr), bits);
  std::reverse(s.thetas.begin(), s.thetas.end());
  s.n = derive(arr, {.p_table = false}).n;
  return s;
}

namespace detail {

using RatPoly = std::vector<Rational>;  // constant term first

inline RatPoly ratpoly_mul(const RatPoly& x, const RatPoly& y) {
  RatPoly r(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  return r;
}

inline void ratpoly_axpy(RatPoly& acc, const Rational& s, const RatPoly& x) {
  if (acc.size() < x.size()) acc.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] += s * x[i];
}

/// Standard sequence u_0 .. u_D as polynomials in theta.
inline std::vector<RatPoly> standard_sequence_polys(const IntersectionArray& arr) {
  const int D = arr.diameter();
  std::vector<RatPoly> u;
  u.push_back({Rational(1)});
  if (D >= 1) u.push_back({Rational(0), Rational(1, arr.k())});
  for (int j = 1; j < D; ++j) {
    // b_j u_{j+1} = (theta - a_j) u_j - c_j u_{j-1}
    RatPoly next = ratpoly_mul({Rational(-arr.a(j)), Rational(1)}, u[static_cast<std::size_t>(j)]);
    ratpoly_axpy(next, Rational(-arr.c(j)), u[static_cast<std::size_t>(j - 1)]);
    for (auto& v : next) v /= arr.b(j);
    u.push_back(std::move(next));
  }
  return u;
}

/// sum_j k_j u_j(theta)^2 as a polynomial in theta.
inline RatPoly norm_poly(const IntersectionArray& arr, const std::vector<Rational>& kdist) {
  auto u = standard_sequence_polys(arr);
  RatPoly s{Rational(0)};
  for (std::size_t j = 0; j < u.size(); ++j) ratpoly_axpy(s, kdist[j], ratpoly_mul(u[j], u[j]));
  return s;
}

inline Rational ratpoly_eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

struct Interval {
  Rational lo, hi;
};

inline Interval interval_mul(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

inline Interval ratpoly_eval(const RatPoly& p, const Interval& x) {
  Interval acc{0, 0};
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = interval_mul(acc, x);
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

/// Integer polynomial with the same roots as the rational one.
inline Polynomial clear_denominators(const RatPoly& p) {
  BigInt l = 1;
  for (const auto& v : p) l = boost::multiprecision::lcm(l, den(v));
  std::vector<BigInt> c;
  for (const auto& v : p) c.push_back(num(v) * (l / den(v)));
  return Polynomial(std::move(c));
}

/// True iff the (square-free-polynomial) root theta is a root of q.
inline bool is_root_of(const AlgebraicReal& theta, const Polynomial& q) {
  if (theta.is_rational()) return q.sign_at(theta.value()) == 0;
  Polynomial g = gcd(theta.poly(), q);
  if (g.degree() < 1) return false;
  return g.sign_at(theta.lo()) * g.sign_at(theta.hi()) < 0;
}

// Dyadic endpoints keep reports readable; the enclosure only widens.
inline void round_outward(Multiplicity& m, int bits) {
  const Rational scale = pow2(bits);
  m.lo = Rational(drg::floor(m.lo * scale)) / scale;
  m.hi = Rational(drg::ceil(m.hi * scale)) / scale;
}

inline Multiplicity multiplicity_of(const AlgebraicReal& theta_in, const RatPoly& norm, const Rational& n,
                                    int bits) {
  Multiplicity m;
  if (theta_in.is_rational()) {
    Rational v = n / ratpoly_eval(norm, theta_in.value());
    m.exact = v;
    m.lo = m.hi = v;
    m.integral = is_integer(v) ? Certified::yes : Certified::no;
    return m;
  }
  AlgebraicReal theta = theta_in;
  theta.refine_bits(bits);
  const Rational cap = pow2(-kComparisonCapBits);
  std::optional<BigInt> tested;  // candidate already shown not to be exact
  while (true) {
    if (theta.is_rational()) return multiplicity_of(theta, norm, n, bits);
    Interval s = ratpoly_eval(norm, Interval{theta.lo(), theta.hi()});
    if (s.lo > 0) {
      m.lo = n / s.hi;
      m.hi = n / s.lo;
      BigInt first = drg::ceil(m.lo), last = drg::floor(m.hi);
      if (first > last) {
        round_outward(m, bits);
        m.integral = Certified::no;
        return m;
      }
      if (first == last && tested != first) {
        // Exact test: theta is a root of first * norm(x) - n.
        RatPoly t = norm;
        for (auto& v : t) v *= Rational(first);
        t[0] -= n;
        if (is_root_of(theta, clear_denominators(t))) {
          m.exact = Rational(first);
          m.lo = m.hi = *m.exact;
          m.integral = Certified::yes;
          return m;
        }
        tested = first;
      }
    }
    if (theta.width() <= cap) {
      round_outward(m, bits);
      m.integral = Certified::undecided;
      return m;
    }
    theta.refine_to(theta.width() / 16);
  }
}

}  // namespace detail

/// Fills mults via m(theta) = n / sum_j k_j u_j(theta)^2.
inline Spectrum multiplicities(const IntersectionArray& arr, Spectrum spectrum, int bits = precision_bits()) {
  auto d = derive(arr, {.p_table = false});
  auto norm = detail::norm_poly(arr, d.kdist);
  spectrum.mults.clear();
  for (const auto& theta : spectrum.thetas) spectrum.mults.push_back(detail::multiplicity_of(theta, norm, d.n, bits));
  return spectrum;
}

inline Spectrum full_spectrum(const IntersectionArray& arr, int bits = precision_bits()) {
  return multiplicities(arr, eigenvalues(arr, bits), bits);
}

/// Standard sequence values u_0(theta) .. u_D(theta) at a rational theta.
inline std::vector<Rational> standard_sequence(const IntersectionArray& arr, const Rational& theta) {
  std::vector<Rational> out;
  for (const auto& p : detail::standard_sequence_polys(arr)) out.push_back(detail::ratpoly_eval(p, theta));
  return out;
}

/// 1 - k / theta_D, the largest possible clique size. Requires theta_D < 0.
inline AlgebraicReal delsarte_clique_bound(const IntersectionArray& arr, const Spectrum& spectrum) {
  AlgebraicReal theta = spectrum.thetas.back();
  if (compare(theta, Rational(0)) != Order::less)
    throw std::domain_error("delsarte_clique_bound requires a negative smallest eigenvalue");
  const BigInt k = arr.k();
  if (theta.is_rational()) return AlgebraicReal::rational(1 - Rational(k) / theta.value());
  while (theta.hi() >= 0) theta.bisect();
  if (theta.is_rational()) return AlgebraicReal::rational(1 - Rational(k) / theta.value());
  // y = 1 - k/theta  <=>  theta = k / (1 - y); clear the (1 - y)^deg denominator.
  const Polynomial& p = theta.poly();
  const int deg = p.degree();
  Polynomial one_minus_y{1, -1};
  std::vector<Polynomial> pw{Polynomial{1}};
  for (int i = 1; i <= deg; ++i) pw.push_back(pw.back() * one_minus_y);
  Polynomial q;
  BigInt kpow = 1;
  for (int i = 0; i <= deg; ++i) {
    q = q + pw[static_cast<std::size_t>(deg - i)] * (p.coeff(i) * kpow);
    kpow *= k;
  }
  // y is increasing in theta on theta < 0.
  Rational lo = 1 - Rational(k) / theta.lo(), hi = 1 - Rational(k) / theta.hi();
  return AlgebraicReal::root(squarefree_part(q), lo, hi);
}

/// Whether 2st/(s+t) <= b_1/(theta_1 + 1) + 1. `undecided` also covers
/// theta_1 = -1, where the right-hand side is undefined.
inline Certified kst_bound_holds(const IntersectionArray& arr, const Spectrum& spectrum, std::int64_t s,
                                 std::int64_t t) {
  if (s <= 0 || t <= 0) throw std::invalid_argument("kst_bound_holds requires s, t >= 1");
  if (spectrum.thetas.size() < 2) throw std::invalid_argument("kst_bound_holds requires D >= 1");
  const Rational f = Rational(2 * s * t, s + t) - 1;  // need f <= b1 / (theta1 + 1)
  const Rational b1 = arr.b(1);
  const AlgebraicReal& theta1 = spectrum.thetas[1];
  Order vs_minus_one = compare(theta1, Rational(-1));
  if (vs_minus_one == Order::equal || vs_minus_one == Order::undecided) return Certified::undecided;
  auto to_cert = [](bool b) { return b ? Certified::yes : Certified::no; };
  if (vs_minus_one == Order::greater) {
    if (f <= 0) return Certified::yes;
    // theta1 + 1 <= b1 / f
    Order o = compare(theta1, b1 / f - 1);
    return to_cert(o != Order::greater);
  }
  // theta1 + 1 < 0: f (theta1 + 1) >= b1
  if (f > 0) return to_cert(false);
  if (f == 0) return to_cert(b1 == 0);
  Order o = compare(theta1, b1 / f - 1);
  return to_cert(o != Order::greater);
}

struct Theta1Bound {
  Rational radicand;  // c_{t-1} b_{t-2} + c_{t-2} b_{t-3}
  AlgebraicReal value;
};

/// Largest eigenvalue of the 3x3 block of the distance-(t-3..t-1) layers,
/// a lower bound for theta_1 whenever D >= 2t.
inline Theta1Bound theta1_lower_bound(const IntersectionArray& arr, int t) {
  if (t < 3 || t - 1 > arr.diameter())
    throw std::out_of_range("theta1_lower_bound requires 3 <= t <= D + 1");
  Rational r = Rational(arr.c(t - 1) * arr.b(t - 2) + arr.c(t - 2) * arr.b(t - 3));
  return {r, sqrt_of(r)};
}

/// theta_{n-m+i}(A) <= theta_i(B) <= theta_i(A) for i = 1..m, both lists
/// sorted descending (multisets, repeats allowed).
inline Certified interlace_check(const std::vector<AlgebraicReal>& a_eigs, const std::vector<AlgebraicReal>& b_eigs) {
  const std::size_t n = a_eigs.size(), m = b_eigs.size();
  if (m > n) return Certified::no;
  bool undecided = false;
  for (std::size_t i = 0; i < m; ++i) {
    Order upper = compare(b_eigs[i], a_eigs[i]);
    Order lower = compare(a_eigs[n - m + i], b_eigs[i]);
    if (upper == Order::greater || lower == Order::greater) return Certified::no;
    if (upper == Order::undecided || lower == Order::undecided) undecided = true;
  }
  return undecided ? Certified::undecided : Certified::yes;
}

/// Eigenvalue multiset (descending) of the principal submatrix of a
/// tridiagonal matrix on the given row/column indices. The submatrix splits
/// into tridiagonal blocks wherever the selected indices are not consecutive
/// or an off-diagonal pair vanishes.
inline std::vector<AlgebraicReal> principal_submatrix_eigenvalues(const IntMatrix& tri, std::vector<std::size_t> idx,
                                                                  int bits = precision_bits()) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<AlgebraicReal> out;
  std::size_t start = 0;
  while (start < idx.size()) {
    std::vector<std::int64_t> diag{tri[idx[start]][idx[start]]}, off;
    std::size_t end = start + 1;
    while (end < idx.size() && idx[end] == idx[end - 1] + 1) {
      std::int64_t prod = tri[idx[end - 1]][idx[end]] * tri[idx[end]][idx[end - 1]];
      if (prod == 0) break;
      if (prod < 0) throw std::invalid_argument("principal_submatrix_eigenvalues: matrix not similar to symmetric");
      off.push_back(prod);
      diag.push_back(tri[idx[end]][idx[end]]);
      ++end;
    }
    for (auto& r : real_roots(tridiagonal_charpoly(diag, off), bits)) out.push_back(std::move(r));
    start = end;
  }
  sort_descending(out);
  return out;
}

inline nlohmann::json to_json(const AlgebraicReal& x) {
  if (x.is_rational()) return {{"exact", to_string(x.value())}};
  return {{"interval", {to_string(x.lo()), to_string(x.hi())}}, {"approx", x.approx()}};
}

inline nlohmann::json to_json(const Multiplicity& m) {
  nlohmann::json j;
  if (m.exact) j["exact"] = to_string(*m.exact);
  else j["interval"] = {to_string(m.lo), to_string(m.hi)};
  j["integral"] = to_string(m.integral);
  return j;
}

inline nlohmann::json to_json(const Spectrum& s) {
  nlohmann::json j;
  auto& th = j["thetas"] = nlohmann::json::array();
  for (const auto& t : s.thetas) th.push_back(to_json(t));
  auto& ms = j["mults"] = nlohmann::json::array();
  for (const auto& m : s.mults) ms.push_back(to_json(m));
  j["n"] = to_string(s.n);
  return j;
}

}  // namespace drg
