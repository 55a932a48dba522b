#pragma once

#include <complex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kneadkit/errors.hpp"

namespace kneadkit {

using BigInt = boost::multiprecision::cpp_int;

/// Integer-coefficient univariate polynomial, coefficients ascending by
/// degree, no trailing zeros. The zero polynomial has an empty list.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(BigInt c) {
    if (c != 0) c_.push_back(std::move(c));
  }
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly x() { return IntPoly(std::vector<BigInt>{0, 1}); }
  static IntPoly monomial(size_t deg, BigInt c = 1) {
    std::vector<BigInt> v(deg + 1);
    v[deg] = std::move(c);
    return IntPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }

  /// Index of the lowest nonzero coefficient (number of roots at the origin).
  size_t valuation() const {
    size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return k;
  }

  IntPoly shifted_down(size_t k) const {  // divide by x^k, exact
    require(valuation() >= k, errc::internal, "inexact monomial division");
    return IntPoly(std::vector<BigInt>(c_.begin() + k, c_.end()));
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(r));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(r));
  }
  IntPoly operator-() const {
    std::vector<BigInt> r(c_);
    for (auto& x : r) x = -x;
    return IntPoly(std::move(r));
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(r));
  }
  friend IntPoly operator*(const BigInt& s, const IntPoly& a) {
    std::vector<BigInt> r(a.c_);
    for (auto& x : r) x *= s;
    return IntPoly(std::move(r));
  }
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  std::complex<long double> eval(std::complex<long double> z) const {
    std::complex<long double> acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * z + static_cast<long double>(c_[i]);
    return acc;
  }

  IntPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<int64_t>(i);
    return IntPoly(std::move(r));
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
    return g;
  }

  /// Divide every coefficient by s; s must divide exactly.
  IntPoly div_scalar_exact(const BigInt& s) const {
    require(s != 0, errc::internal, "division by zero scalar");
    std::vector<BigInt> r(c_);
    for (auto& x : r) {
      require(x % s == 0, errc::internal, "inexact scalar division");
      x /= s;
    }
    return IntPoly(std::move(r));
  }

  /// Exact polynomial division: returns q with *this == q * d. Used inside
  /// fraction-free elimination where exactness is guaranteed by theory.
  IntPoly div_exact(const IntPoly& d) const {
    require(!d.is_zero(), errc::internal, "division by zero polynomial");
    if (is_zero()) return {};
    require(degree() >= d.degree(), errc::internal, "inexact polynomial division (degree)");
    std::vector<BigInt> rem(c_);
    std::vector<BigInt> q(degree() - d.degree() + 1);
    for (int k = degree() - d.degree(); k >= 0; --k) {
      BigInt lead = rem[k + d.degree()];
      require(lead % d.leading() == 0, errc::internal, "inexact polynomial division (lead)");
      BigInt f = lead / d.leading();
      q[k] = f;
      if (f != 0)
        for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= f * d.c_[i];
    }
    for (const auto& x : rem)
      require(x == 0, errc::internal, "inexact polynomial division (remainder)");
    return IntPoly(std::move(q));
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      BigInt a = c_[i];
      if (!s.empty()) s += a > 0 ? " + " : " - ";
      else if (a < 0) s += "-";
      BigInt mag = boost::multiprecision::abs(a);
      bool unit = mag == 1 && i > 0;
      if (!unit) s += mag.str();
      if (i > 0) {
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

/// Primitive part with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt c = p.content();
  if (p.leading() < 0) c = -c;
  return p.div_scalar_exact(c);
}

/// gcd over Z[x] via the primitive Euclidean algorithm with pseudo-division.
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  while (!b.is_zero()) {
    // pseudo remainder of a by b
    IntPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      IntPoly t = b.leading() * r - r.leading() * (b * IntPoly::monomial(r.degree() - b.degree()));
      require(t.degree() < r.degree(), errc::internal, "pseudo-division did not reduce");
      r = t;
    }
    a = b;
    b = primitive_part(r);
  }
  return primitive_part(a);
}

}  // namespace kneadkit
