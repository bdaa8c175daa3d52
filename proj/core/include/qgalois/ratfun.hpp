#pragma once

#include <optional>
#include <string>

#include "qgalois/poly.hpp"

namespace qgalois {

// Rational function num/den over K: gcd(num, den) = 1, den monic.
class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(Poly num);
  RatFun(Poly num, Poly den);
  static RatFun constant(FieldPtr f, Var v, const KConst& c);
  static RatFun variable(FieldPtr f, Var v);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field() ? num_.field() : den_.field(); }
  Var var() const { return den_.var(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  KConst constant_value() const;  // requires is_constant()

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend RatFun operator*(RatFun a, const KConst& c);
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  RatFun inverse() const;
  RatFun pow(long k) const;

  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

int compare(const RatFun& a, const RatFun& b);

// The constant q_v with sigma(v) = q_v * v: q for x, q^(1/2) for x2.
KConst sigma_base(const FieldPtr& f, Var v);
// f(c * v).
RatFun scale_var(const RatFun& f, const KConst& c);
// sigma^n.
RatFun sigma(const RatFun& f, long n = 1);
// Euler derivation: delta(x) = x, delta(x2) = x2 / 2.
RatFun delta(const RatFun& f);
RatFun dlog(const RatFun& f);

RatFun to_k2(const RatFun& f);
std::optional<RatFun> from_k2(const RatFun& f);
RatFun conjugate(const RatFun& f);  // x2 -> -x2

}  // namespace qgalois
