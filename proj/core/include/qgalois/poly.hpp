#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgalois/field.hpp"
#include "qgalois/zfactor.hpp"

namespace qgalois {

// Polynomial variable: x, or x2 with x = x2^2.
enum class Var { X, X2 };

// Dense polynomial over K, coefficients low to high.
class Poly {
 public:
  Poly() = default;
  Poly(FieldPtr f, Var v, std::vector<KConst> coeffs);
  static Poly constant(FieldPtr f, Var v, const KConst& c);
  static Poly monomial(FieldPtr f, Var v, const KConst& c, int k);
  static Poly variable(FieldPtr f, Var v) { return monomial(std::move(f), v, 1, 1); }
  static Poly from_rational(FieldPtr f, Var v, const QPoly& p);

  const FieldPtr& field() const { return f_; }
  Var var() const { return v_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<KConst>& coeffs() const { return c_; }
  const KConst& operator[](int i) const;
  const KConst& lead() const;
  int valuation() const;  // -1 for zero
  bool is_rational() const;
  QPoly to_rational() const;  // requires is_rational()

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const KConst& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const KConst& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly monic() const;
  Poly derivative() const;
  Poly euler() const;  // sum i c_i v^i
  Poly shift_exponent(int k) const;
  Poly strip_valuation() const;
  Poly scale_var(const KConst& c) const;     // p(c v)
  Poly taylor_shift(const KConst& c) const;  // p(v + c)
  KConst eval(const KConst& v) const;
  Poly pow(unsigned k) const;
  Poly with_var(Var v) const;

  std::string to_string() const;

 private:
  void trim();
  FieldPtr f_;
  Var v_ = Var::X;
  std::vector<KConst> c_;
};

int compare(const Poly& a, const Poly& b);
struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const { return compare(a, b) < 0; }
};

void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);
Poly gcd(const Poly& a, const Poly& b);  // monic
Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t);
std::vector<std::pair<int, Poly>> squarefree(const Poly& a);

struct Factorization {
  KConst unit;
  std::vector<std::pair<Poly, int>> factors;  // monic irreducible, sorted
};

// Complete factorization over K.
Factorization factor(const Poly& p, std::uint64_t seed = kDefaultSeed);
// Monic irreducible factors of a squarefree polynomial.
std::vector<Poly> factor_squarefree(const Poly& p, std::uint64_t seed = kDefaultSeed);

// (l, c) with p2(v) = c * p1(Q^l v), for monic irreducible p1, p2.
std::optional<std::pair<long, KConst>> shift_class(const Poly& p1, const Poly& p2, const KConst& Q);

// Canonical member R of the Q^Z-shift class of a monic irreducible p, with
// offset k such that p(v) = c * R(Q^k v); the roots of p are Q^(-k) * roots(R).
struct ClassMember {
  Poly rep;
  long offset = 0;
  KConst scale;
};
ClassMember canonical_member(const Poly& p, const KConst& Q);

// Multiplication in K[v]/(m).
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
// Inverse in K[v]/(m); m irreducible.
Poly invmod(const Poly& a, const Poly& m);

}  // namespace qgalois
