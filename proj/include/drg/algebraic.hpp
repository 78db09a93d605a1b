#pragma once

// Real algebraic numbers as (square-free integer polynomial, isolating
// interval), with exact comparison. Rational values are held exactly.

#include "drg/polynomial.hpp"
#include "drg/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace drg {

/// Finest interval width (2^-cap) tried before a comparison is reported undecided.
inline constexpr int kComparisonCapBits = 200;

enum class Order { less, equal, greater, undecided };

inline const char* to_string(Order o) {
  switch (o) {
    case Order::less: return "less";
    case Order::equal: return "equal";
    case Order::greater: return "greater";
    case Order::undecided: return "undecided";
  }
  return "?";
}

class AlgebraicReal {
 public:
  AlgebraicReal() : exact_(Rational(0)) {}

  static AlgebraicReal rational(Rational v) {
    AlgebraicReal out;
    out.exact_ = std::move(v);
    out.lo_ = out.hi_ = *out.exact_;
    return out;
  }

  /// The unique root of a square-free `poly` in the open interval (lo, hi).
  /// Requires poly(lo) and poly(hi) nonzero with opposite signs.
  static AlgebraicReal root(Polynomial poly, Rational lo, Rational hi) {
    AlgebraicReal out;
    out.exact_.reset();
    out.poly_ = std::move(poly);
    out.lo_ = std::move(lo);
    out.hi_ = std::move(hi);
    out.sign_lo_ = out.poly_.sign_at(out.lo_);
    if (out.sign_lo_ == 0 || out.sign_lo_ == out.poly_.sign_at(out.hi_))
      throw std::invalid_argument("AlgebraicReal::root: interval does not bracket a simple root");
    return out;
  }

  bool is_rational() const noexcept { return exact_.has_value(); }
  const Rational& value() const {
    if (!exact_) throw std::logic_error("AlgebraicReal::value on irrational number");
    return *exact_;
  }
  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  Rational width() const { return hi_ - lo_; }
  const Polynomial& poly() const noexcept { return poly_; }

  double approx() const { return exact_ ? to_double(*exact_) : to_double((lo_ + hi_) / 2); }

  /// Halves the interval; becomes exact if the midpoint is the root.
  void bisect() {
    if (exact_) return;
    Rational mid = (lo_ + hi_) / 2;
    int s = poly_.sign_at(mid);
    if (s == 0) {
      exact_ = mid;
      lo_ = hi_ = mid;
    } else if (s == sign_lo_) {
      lo_ = std::move(mid);
    } else {
      hi_ = std::move(mid);
    }
  }

  void refine_to(const Rational& max_width) {
    while (!exact_ && width() > max_width) bisect();
  }

  void refine_bits(int bits) { refine_to(pow2(-bits)); }

  /// If the root equals a rational with denominator dividing some q <= max_den,
  /// make it exact. Used after isolation; two such rationals differ by at
  /// least 1/max_den^2.
  void detect_rational(const BigInt& max_den) {
    if (exact_) return;
    refine_to(Rational(1, max_den * max_den + 1));
    for (BigInt q = 1; q <= max_den && !exact_; ++q) {
      if (max_den % q != 0) continue;
      BigInt p = drg::ceil(lo_ * q);
      Rational cand(p, q);
      if (cand >= hi_) continue;
      if (poly_.sign_at(cand) == 0) {
        exact_ = cand;
        lo_ = hi_ = cand;
      }
    }
  }

  std::string str() const {
    if (exact_) return to_string(*exact_);
    return "(" + to_string(lo_) + ", " + to_string(hi_) + ")";
  }

 private:
  std::optional<Rational> exact_;
  Polynomial poly_;
  Rational lo_, hi_;
  int sign_lo_ = 0;
};

/// Exact comparison with a rational.
inline Order compare(const AlgebraicReal& a, const Rational& r) {
  if (a.is_rational()) {
    return a.value() < r ? Order::less : (a.value() > r ? Order::greater : Order::equal);
  }
  if (r <= a.lo()) return Order::greater;
  if (r >= a.hi()) return Order::less;
  int s = a.poly().sign_at(r);
  if (s == 0) return Order::equal;
  // Root lies on the side of r where the sign differs from sign at r.
  return s == a.poly().sign_at(a.lo()) ? Order::greater : Order::less;
}

inline Order flip(Order o) {
  if (o == Order::less) return Order::greater;
  if (o == Order::greater) return Order::less;
  return o;
}

/// Exact comparison of two algebraic reals. Equality is decided through the
/// gcd of the defining polynomials; separation by bisecting down to
/// 2^-cap_bits, after which the answer is `undecided`.
inline Order compare(AlgebraicReal a, AlgebraicReal b, int cap_bits = kComparisonCapBits) {
  if (a.is_rational()) return flip(compare(b, a.value()));
  if (b.is_rational()) return compare(a, b.value());
  const Rational cap = pow2(-cap_bits);
  bool equality_checked = false;
  while (true) {
    if (a.is_rational()) return flip(compare(b, a.value()));
    if (b.is_rational()) return compare(a, b.value());
    if (a.hi() <= b.lo()) return Order::less;
    if (b.hi() <= a.lo()) return Order::greater;
    if (!equality_checked) {
      equality_checked = true;
      Polynomial g = gcd(a.poly(), b.poly());
      if (g.degree() >= 1) {
        Rational lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
        // g divides both square-free polynomials, so it has at most one root in
        // each isolating interval and none at their endpoints.
        if (g.sign_at(lo) * g.sign_at(hi) < 0) return Order::equal;
      }
    }
    if (a.width() <= cap && b.width() <= cap) return Order::undecided;
    if (a.width() >= b.width()) a.bisect();
    else b.bisect();
  }
}

namespace detail {

inline void isolate(const Polynomial& f, const std::vector<Polynomial>& sturm, const Rational& lo,
                    const Rational& hi, int v_lo, int v_hi, std::vector<AlgebraicReal>& out) {
  const int count = v_lo - v_hi;
  if (count <= 0) return;
  if (count == 1) {
    out.push_back(AlgebraicReal::root(f, lo, hi));
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (f.sign_at(mid) != 0) {
    int v_mid = sign_variations(sturm, mid);
    isolate(f, sturm, lo, mid, v_lo, v_mid, out);
    isolate(f, sturm, mid, hi, v_mid, v_hi, out);
    return;
  }
  // mid is a root: step off it on both sides until no other root is crossed.
  const int v_mid = sign_variations(sturm, mid);  // counts mid as already passed
  Rational eps = (hi - lo) / 4;
  while (true) {
    Rational left = mid - eps, right = mid + eps;
    if (f.sign_at(left) != 0 && f.sign_at(right) != 0) {
      int vl = sign_variations(sturm, left), vr = sign_variations(sturm, right);
      if (vl - v_mid == 1 && v_mid - vr == 0) {
        isolate(f, sturm, lo, left, v_lo, vl, out);
        out.push_back(AlgebraicReal::rational(mid));
        isolate(f, sturm, right, hi, vr, v_hi, out);
        return;
      }
    }
    eps /= 2;
  }
}

}  // namespace detail

/// All distinct real roots of f in increasing order. Rational roots are
/// returned exactly; the rest carry isolating intervals no wider than
/// 2^-precision_bits.
inline std::vector<AlgebraicReal> real_roots(const Polynomial& f, int precision_bits = 40) {
  if (f.is_zero()) throw std::invalid_argument("real_roots of the zero polynomial");
  std::vector<AlgebraicReal> out;
  Polynomial g = squarefree_part(f);
  if (g.degree() <= 0) return out;
  auto sturm = sturm_sequence(g);
  Rational bound(root_bound(g));
  detail::isolate(g, sturm, -bound, bound, sign_variations(sturm, -bound), sign_variations(sturm, bound), out);
  const BigInt lc = abs(g.lc());
  for (auto& r : out) {
    // Rational roots p/q have q | lc(g); only attempt that search when cheap.
    if (lc <= 4096) r.detect_rational(lc);
    r.refine_bits(precision_bits);
  }
  return out;
}

/// sqrt(r) for r >= 0, exact when r is a perfect rational square.
inline AlgebraicReal sqrt_of(const Rational& r) {
  if (r < 0) throw std::domain_error("sqrt_of negative rational");
  BigInt p = num(r), q = den(r);
  BigInt sp = sqrt(p), sq = sqrt(q);
  if (sp * sp == p && sq * sq == q) return AlgebraicReal::rational(Rational(sp, sq));
  // q x^2 - p has exactly the roots +-sqrt(p/q); bracket the positive one.
  Polynomial poly(std::vector<BigInt>{BigInt(-p), BigInt(0), q});
  Rational lo(sp, sq + 1), hi(sp + 1, sq);
  return AlgebraicReal::root(poly, lo, hi);
}

}  // namespace drg
