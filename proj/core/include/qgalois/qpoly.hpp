#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace qgalois {

// Dense univariate polynomial over Q, coefficients stored low to high.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly constant(const mpq_class& c);
  static QPoly monomial(const mpq_class& c, int k);
  static QPoly var() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& operator[](int i) const;
  const mpq_class& lead() const;
  int valuation() const;  // -1 for zero

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const mpq_class& c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  QPoly monic() const;
  QPoly derivative() const;
  QPoly shift_exponent(int k) const;  // multiply by x^k, k >= 0
  QPoly strip_valuation() const;      // divide by x^valuation
  QPoly scale_var(const mpq_class& c) const;     // p(c*x)
  QPoly taylor_shift(const mpq_class& c) const;  // p(x + c)
  QPoly compose(const QPoly& inner) const;
  mpq_class eval(const mpq_class& x) const;
  QPoly pow(unsigned k) const;
  // Common denominator d and primitive integer content are removed; returns the
  // primitive integer polynomial with positive leading coefficient.
  std::vector<mpz_class> primitive_integer() const;
  static QPoly from_integer(const std::vector<mpz_class>& z);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

int compare(const QPoly& a, const QPoly& b);

void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem);
QPoly operator/(const QPoly& a, const QPoly& b);  // quotient
QPoly operator%(const QPoly& a, const QPoly& b);
bool divides(const QPoly& d, const QPoly& a);
QPoly gcd(const QPoly& a, const QPoly& b);  // monic, gcd(0,0) = 0
// s*a + t*b = g (monic gcd)
QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);
// Squarefree decomposition: returns (multiplicity, monic factor) pairs.
std::vector<std::pair<int, QPoly>> squarefree(const QPoly& a);

// Newton interpolation through (xs[i], ys[i]).
QPoly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys);

}  // namespace qgalois
