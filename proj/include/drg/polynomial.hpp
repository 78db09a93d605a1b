#pragma once

// Dense univariate polynomials with arbitrary-precision integer coefficients,
// enough algebra for Sturm sequences: pseudo-division, primitive gcd and
// square-free parts.

#include "drg/rational.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drg {

class Polynomial {
 public:
  Polynomial() = default;
  /// Coefficients from the constant term upward.
  explicit Polynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<long long> coeffs) {
    for (auto v : coeffs) c_.emplace_back(v);
    normalize();
  }

  static Polynomial monomial(const BigInt& coeff, int degree) {
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
    c.back() = coeff;
    return Polynomial(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const BigInt& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
  const BigInt& lc() const { return c_.back(); }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }

  bool operator==(const Polynomial&) const = default;

  Polynomial operator+(const Polynomial& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Polynomial(std::move(r));
  }
  Polynomial operator-() const {
    auto r = c_;
    for (auto& v : r) v = -v;
    return Polynomial(std::move(r));
  }
  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
  }
  Polynomial operator*(const BigInt& s) const {
    auto r = c_;
    for (auto& v : r) v *= s;
    return Polynomial(std::move(r));
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long long>(i);
    return Polynomial(std::move(r));
  }

  /// gcd of the coefficients, positive; 0 for the zero polynomial.
  BigInt content() const {
    BigInt g = 0;
    for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
    return g;
  }

  /// Divides out the content, keeping the sign of the leading coefficient.
  Polynomial primitive() const {
    if (is_zero()) return {};
    BigInt g = content();
    auto r = c_;
    for (auto& v : r) v /= g;
    return Polynomial(std::move(r));
  }

  /// Same as primitive() but with a positive leading coefficient.
  Polynomial primitive_positive() const {
    auto p = primitive();
    return (!p.is_zero() && p.lc() < 0) ? -p : p;
  }

  /// Exact value at a rational point.
  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Sign of the value at x = p/q, via q^deg f(p/q) in integer arithmetic.
  int sign_at(const Rational& x) const {
    if (is_zero()) return 0;
    const BigInt p = num(x), q = den(x);
    BigInt acc = 0, qpow = 1;
    // Horner on the homogenized form: sum c_i p^i q^(n-i).
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * p + *it * qpow;
      qpow *= q;
    }
    // qpow overshoots by one factor of q; q > 0 so the sign is unaffected.
    return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const auto& v = c_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      if (!out.empty()) out += v < 0 ? " - " : " + ";
      else if (v < 0) out += "-";
      BigInt a = abs(v);
      if (a != 1 || i == 0) out += a.str();
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

inline Polynomial operator*(const BigInt& s, const Polynomial& p) { return p * s; }

/// lc(g)^(deg f - deg g + 1) f = q g + r, returns r. g must be nonzero.
inline Polynomial pseudo_remainder(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("pseudo_remainder by zero polynomial");
  std::vector<BigInt> r = f.coeffs();
  const int dg = g.degree();
  const BigInt& lg = g.lc();
  int dr = static_cast<int>(r.size()) - 1;
  int steps = std::max(0, f.degree() - dg + 1);
  while (dr >= dg && dr >= 0) {
    BigInt lr = r[static_cast<std::size_t>(dr)];
    for (auto& v : r) v *= lg;
    const int shift = dr - dg;
    for (int i = 0; i <= dg; ++i) r[static_cast<std::size_t>(i + shift)] -= lr * g.coeff(i);
    --steps;
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
  }
  for (; steps > 0; --steps)
    for (auto& v : r) v *= lg;
  return Polynomial(std::move(r));
}

/// Exact quotient f / g over the integers; throws if g does not divide f.
inline Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<BigInt> r = f.coeffs();
  const int dg = g.degree();
  if (f.degree() < dg) {
    if (f.is_zero()) return {};
    throw std::domain_error("exact_divide: degree too small");
  }
  std::vector<BigInt> q(static_cast<std::size_t>(f.degree() - dg) + 1);
  for (int dr = f.degree(); dr >= dg; --dr) {
    const BigInt& top = r[static_cast<std::size_t>(dr)];
    if (top == 0) continue;
    BigInt rem;
    BigInt t;
    divide_qr(top, g.lc(), t, rem);
    if (rem != 0) throw std::domain_error("exact_divide: not divisible");
    q[static_cast<std::size_t>(dr - dg)] = t;
    for (int i = 0; i <= dg; ++i) r[static_cast<std::size_t>(dr - dg + i)] -= t * g.coeff(i);
  }
  for (const auto& v : r)
    if (v != 0) throw std::domain_error("exact_divide: nonzero remainder");
  return Polynomial(std::move(q));
}

/// Primitive gcd with positive leading coefficient.
inline Polynomial gcd(Polynomial f, Polynomial g) {
  f = f.primitive_positive();
  g = g.primitive_positive();
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    auto r = pseudo_remainder(f, g).primitive_positive();
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

/// f / gcd(f, f'), primitive with positive leading coefficient.
inline Polynomial squarefree_part(const Polynomial& f) {
  if (f.degree() <= 0) return f.primitive_positive();
  auto g = gcd(f, f.derivative());
  return exact_divide(f.primitive_positive(), g).primitive_positive();
}

/// Sturm chain f, f', -rem(f, f'), ... with remainders made primitive.
/// Positive rescaling keeps every sign-variation count intact.
inline std::vector<Polynomial> sturm_sequence(const Polynomial& f) {
  std::vector<Polynomial> seq{f, f.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    const auto& a = seq[seq.size() - 2];
    const auto& b = seq.back();
    auto r = pseudo_remainder(a, b);
    // pseudo_remainder multiplied by lc(b)^e; undo a negative factor.
    const int e = std::max(0, a.degree() - b.degree() + 1);
    if (b.lc() < 0 && (e % 2 == 1)) r = -r;
    if (r.is_zero()) break;
    // primitive() keeps the sign; the content is positive.
    seq.push_back((-r).primitive());
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

inline int sign_variations(const std::vector<Polynomial>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/// Cauchy bound: every real root lies strictly inside (-B, B).
inline BigInt root_bound(const Polynomial& f) {
  BigInt m = 0;
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, BigInt(abs(f.coeff(i))));
  BigInt lc = abs(f.lc());
  return 1 + (m + lc - 1) / lc + 1;
}

}  // namespace drg
