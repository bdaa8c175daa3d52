#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgalois/lattice.hpp"
#include "qgalois/qpoly.hpp"

namespace qgalois {

enum class FieldMode { Formal, Concrete };

struct FieldSpec {
  FieldMode mode = FieldMode::Formal;
  mpq_class q_value = 0;  // Concrete mode only
  int root_depth = 2;     // the tower provides q^(1/2^e)
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Element of the constant field K, stored as num/den in the tower generator
// g = q^(1/2^e). Formal mode: K = Q(s), den monic, gcd(num, den) = 1.
// Concrete mode: K = Q[t]/(m), den = 1 and deg num < deg m.
// A default-constructed value is zero; values without a field pointer are
// plain rationals and combine with any field.
class KConst {
 public:
  KConst() = default;
  KConst(long v) : num_(QPoly::constant(v)) {}  // NOLINT(google-explicit-constructor)
  KConst(const mpq_class& v) : num_(QPoly::constant(v)) {}  // NOLINT(google-explicit-constructor)
  KConst(FieldPtr f, QPoly num, QPoly den = QPoly::constant(1));

  const FieldPtr& field() const { return f_; }
  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_.is_constant() && num_[0] == 1; }
  bool is_rational() const { return num_.degree() <= 0 && den_.degree() == 0; }
  mpq_class rational() const;  // requires is_rational()

  KConst operator-() const;
  KConst& operator+=(const KConst& o);
  KConst& operator-=(const KConst& o);
  KConst& operator*=(const KConst& o);
  KConst& operator/=(const KConst& o);
  friend KConst operator+(KConst a, const KConst& b) { return a += b; }
  friend KConst operator-(KConst a, const KConst& b) { return a -= b; }
  friend KConst operator*(KConst a, const KConst& b) { return a *= b; }
  friend KConst operator/(KConst a, const KConst& b) { return a /= b; }
  friend bool operator==(const KConst& a, const KConst& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const KConst& a, const KConst& b) { return !(a == b); }

  KConst inverse() const;
  KConst pow(long k) const;

  // Text in the input grammar: q, sqrt(q), root(q,N), rationals.
  std::string to_string() const;

 private:
  friend class Field;
  void normalize();
  FieldPtr f_;
  QPoly num_;
  QPoly den_ = QPoly::constant(1);
};

// Canonical total order (denominator first, then numerator).
int compare(const KConst& a, const KConst& b);
struct KConstLess {
  bool operator()(const KConst& a, const KConst& b) const { return compare(a, b) < 0; }
};

class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr create(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  FieldMode mode() const { return spec_.mode; }
  int depth() const { return spec_.root_depth; }
  // Concrete mode: degree and minimal polynomial of the generator.
  int degree() const { return modulus_.degree(); }
  const QPoly& modulus() const { return modulus_; }

  KConst rational(const mpq_class& v) const;
  KConst generator() const;            // q^(1/2^e)
  KConst q() const { return q_root(0); }
  KConst q_root(int level) const;      // q^(1/2^level); DepthError if level > e
  KConst from_gen_poly(const QPoly& p) const;

  // Valuation homomorphism K^x -> Z with nu(q) != 0.
  long valuation(const KConst& h) const;
  long q_valuation() const { return nu_q_; }

  // Norm to Q (Concrete), or h itself when rational.
  mpq_class norm(const KConst& h) const;

 private:
  explicit Field(const FieldSpec& spec);
  friend class KConst;
  void reduce(KConst& k) const;
  FieldSpec spec_;
  QPoly modulus_;
  mpz_class prime_;  // Concrete mode: prime used by the valuation
  long nu_q_ = 0;
};

// h = c * q^j with c free of the tower generator (c rational), j in (1/2^e)Z.
std::optional<std::pair<KConst, mpq_class>> q_power_decompose(const KConst& h, const FieldPtr& field);

// Least n >= 1 with c^n = 1 in K.
std::optional<long> root_of_unity_order(const KConst& c);

// Z-basis of {(n_1..n_m) : prod g_i^{n_i} = 1}, in HNF.
IntMat multiplicative_relations(const std::vector<KConst>& gs, const FieldPtr& field);

// Z-basis of {(n_1..n_m, t) : prod h_i^{n_i} = q^t}, in HNF.
IntMat mult_relation_lattice(const std::vector<KConst>& hs, const FieldPtr& field);

// Least m >= 1 with h^m in Q^Z for the given base Q (Q not a root of unity).
// Returns (m, t) with h^m = Q^t.
std::optional<std::pair<long, long>> power_torsion(const KConst& h, const KConst& base, const FieldPtr& field);

}  // namespace qgalois
