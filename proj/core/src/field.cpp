#include "qgalois/field.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "qgalois/errors.hpp"
#include "qgalois/zfactor.hpp"

namespace qgalois {

namespace {

const FieldPtr& pick(const FieldPtr& a, const FieldPtr& b) { return a ? a : b; }

bool is_monomial(const QPoly& p) {
  int nz = 0;
  for (auto& c : p.coeffs()) nz += (c != 0);
  return nz == 1;
}

// Text for g^k where g = q^(1/2^e).
std::string gen_power(long k, int e) {
  long n = 1L << e;
  long g = std::gcd(k, n);
  long num = k / g, den = n / g;
  std::string base;
  if (den == 1) base = "q";
  else if (den == 2) base = "sqrt(q)";
  else base = "root(q," + std::to_string(den) + ")";
  if (num == 1) return base;
  return base + "^" + std::to_string(num);
}

std::string render_gen_poly(const QPoly& p, int e) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const mpq_class& c = p[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    mpq_class a = abs(c);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << gen_power(i, e);
    }
  }
  return os.str();
}

long vp(mpz_class n, const mpz_class& p) {
  long v = 0;
  if (n == 0) return 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

mpq_class det(std::vector<std::vector<mpq_class>> m) {
  const size_t n = m.size();
  mpq_class d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[c][c];
      for (size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return d;
}

int sign_at(const QPoly& f, const mpq_class& x) {
  mpq_class v = f.eval(x);
  return sgn(v);
}

}  // namespace

// ---------------------------------------------------------------- KConst

KConst::KConst(FieldPtr f, QPoly num, QPoly den) : f_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void KConst::normalize() {
  if (den_.is_zero()) fail(ErrorCode::ZeroInput, "zero denominator in constant");
  if (num_.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  if (den_.is_constant() && num_.is_constant()) {
    num_ = QPoly::constant(num_[0] / den_[0]);
    den_ = QPoly::constant(1);
    return;
  }
  if (!f_) fail(ErrorCode::Internal, "non-rational constant without a field");
  f_->reduce(*this);
}

void Field::reduce(KConst& k) const {
  if (mode() == FieldMode::Concrete) {
    if (!k.den_.is_constant()) {
      QPoly s, t;
      QPoly g = xgcd(k.den_, modulus_, s, t);
      if (g.degree() != 0) fail(ErrorCode::ZeroInput, "non-invertible denominator");
      k.num_ = (k.num_ * s) % modulus_;
    } else {
      k.num_ = (k.num_ * (1 / k.den_[0])) % modulus_;
    }
    k.den_ = QPoly::constant(1);
    if (k.num_.degree() >= modulus_.degree()) k.num_ = k.num_ % modulus_;
    return;
  }
  if (k.den_.is_constant()) {
    k.num_ *= 1 / k.den_[0];
    k.den_ = QPoly::constant(1);
    return;
  }
  if (is_monomial(k.den_)) {
    // Only powers of the generator can cancel.
    const int m = std::min(k.den_.degree(), k.num_.valuation());
    if (m > 0) {
      k.num_ = k.num_.strip_valuation().shift_exponent(k.num_.valuation() - m);
      k.den_ = QPoly::monomial(k.den_.lead(), k.den_.degree() - m);
    }
    if (k.den_.is_constant()) {
      k.num_ *= 1 / k.den_[0];
      k.den_ = QPoly::constant(1);
      return;
    }
    mpq_class inv = 1 / k.den_.lead();
    k.num_ *= inv;
    k.den_ = QPoly::monomial(1, k.den_.degree());
    return;
  }
  QPoly g = gcd(k.num_, k.den_);
  if (g.degree() > 0) {
    k.num_ = k.num_ / g;
    k.den_ = k.den_ / g;
  }
  mpq_class lc = k.den_.lead();
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    k.num_ *= inv;
    k.den_ *= inv;
  }
}

mpq_class KConst::rational() const {
  if (!is_rational()) fail(ErrorCode::Internal, "constant is not rational");
  return num_[0];
}

KConst KConst::operator-() const {
  KConst r = *this;
  r.num_ = -r.num_;
  return r;
}

KConst& KConst::operator+=(const KConst& o) {
  f_ = pick(f_, o.f_);
  if (o.is_zero()) return *this;
  if (is_zero()) {
    num_ = o.num_;
    den_ = o.den_;
    return *this;
  }
  if (den_ == o.den_ && den_.is_constant()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

KConst& KConst::operator-=(const KConst& o) { return *this += -o; }

KConst& KConst::operator*=(const KConst& o) {
  f_ = pick(f_, o.f_);
  if (is_zero() || o.is_zero()) {
    num_ = QPoly();
    den_ = QPoly::constant(1);
    return *this;
  }
  if (o.is_rational()) {
    num_ *= o.num_[0];
    return *this;
  }
  if (is_rational()) {
    mpq_class r = num_[0];
    num_ = o.num_ * r;
    den_ = o.den_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  if (f_->mode() == FieldMode::Concrete) {
    num_ = num_ % f_->modulus();
    return *this;
  }
  if (den_.is_constant()) return *this;
  normalize();
  return *this;
}

KConst& KConst::operator/=(const KConst& o) { return *this *= o.inverse(); }

KConst KConst::inverse() const {
  if (is_zero()) fail(ErrorCode::ZeroInput, "inverse of zero constant");
  if (is_rational()) {
    KConst r = *this;
    r.num_ = QPoly::constant(1 / num_[0]);
    return r;
  }
  return KConst(f_, den_, num_);
}

KConst KConst::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  KConst r(1), b = *this;
  r.f_ = f_;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

std::string KConst::to_string() const {
  if (is_rational()) return num_.is_zero() ? "0" : num_[0].get_str();
  const int e = f_->depth();
  std::string n = render_gen_poly(num_, e);
  if (den_.is_constant()) return n;
  std::string d = render_gen_poly(den_, e);
  bool nsimple = is_monomial(num_);
  bool dsimple = is_monomial(den_) && den_.lead() == 1;
  return (nsimple ? n : "(" + n + ")") + "/" + (dsimple ? d : "(" + d + ")");
}

int compare(const KConst& a, const KConst& b) {
  int c = compare(a.den(), b.den());
  if (c != 0) return c;
  return compare(a.num(), b.num());
}

// ---------------------------------------------------------------- Field

Field::Field(const FieldSpec& spec) : spec_(spec) {}

FieldPtr Field::create(const FieldSpec& spec) {
  if (spec.root_depth < 0 || spec.root_depth > 6) fail(ErrorCode::InvalidField, "root_depth must be in [0, 6]");
  std::shared_ptr<Field> f(new Field(spec));
  const long n = 1L << spec.root_depth;
  if (spec.mode == FieldMode::Formal) {
    f->nu_q_ = n;
    return f;
  }
  const mpq_class& q = spec.q_value;
  if (q == 0 || q == 1 || q == -1) fail(ErrorCode::InvalidField, "q must not be 0, 1 or -1");
  QPoly tn = QPoly::monomial(1, static_cast<int>(n)) - QPoly::constant(q);
  std::vector<QPoly> facs = factor_squarefree_rational(tn);
  QPoly chosen;
  if (facs.size() == 1) {
    chosen = facs[0];
  } else if (q > 0) {
    // Factor carrying the positive real root q^(1/n), isolated by bisection.
    mpq_class lo = 0, hi = q > 1 ? q : mpq_class(1);
    for (;;) {
      std::vector<const QPoly*> changing;
      for (auto& g : facs)
        if (sign_at(g, lo) * sign_at(g, hi) < 0) changing.push_back(&g);
      if (changing.size() == 1) {
        chosen = *changing[0];
        break;
      }
      mpq_class mid = (lo + hi) / 2;
      mpq_class pw = 1;
      for (long i = 0; i < n; ++i) pw *= mid;
      if (pw == q) {
        for (auto& g : facs)
          if (g.eval(mid) == 0) chosen = g;
        break;
      }
      (pw < q ? lo : hi) = mid;
    }
  } else {
    chosen = *std::min_element(facs.begin(), facs.end(),
                               [](const QPoly& a, const QPoly& b) { return compare(a, b) < 0; });
  }
  f->modulus_ = chosen;
  mpz_class support = abs(q.get_num()) > 1 ? mpz_class(q.get_num()) : mpz_class(q.get_den());
  f->prime_ = prime_divisor(support);
  f->nu_q_ = f->valuation(f->q());
  return f;
}

KConst Field::rational(const mpq_class& v) const { return KConst(shared_from_this(), QPoly::constant(v)); }

KConst Field::from_gen_poly(const QPoly& p) const { return KConst(shared_from_this(), p); }

KConst Field::generator() const { return from_gen_poly(QPoly::var()); }

KConst Field::q_root(int level) const {
  if (level < 0 || level > depth())
    fail(ErrorCode::DepthError, "q^(1/" + std::to_string(1L << std::max(level, 0)) + ") needs root_depth >= " +
                                    std::to_string(level));
  return from_gen_poly(QPoly::monomial(1, 1 << (depth() - level)));
}

mpq_class Field::norm(const KConst& h) const {
  if (h.is_rational()) {
    mpq_class r = h.rational();
    if (mode() == FieldMode::Concrete) {
      mpq_class p = 1;
      for (int i = 0; i < degree(); ++i) p *= r;
      return p;
    }
    return r;
  }
  if (mode() != FieldMode::Concrete) fail(ErrorCode::Internal, "norm of a transcendental element");
  const int d = degree();
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d, mpq_class(0)));
  QPoly col = h.num();
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[i][j] = col[i];
    col = col.shift_exponent(1) % modulus_;
  }
  return det(std::move(m));
}

long Field::valuation(const KConst& h) const {
  if (h.is_zero()) fail(ErrorCode::ZeroInput, "valuation of zero");
  if (mode() == FieldMode::Formal) return h.num().valuation() - h.den().valuation();
  mpq_class n = norm(h);
  return vp(n.get_num(), prime_) - vp(n.get_den(), prime_);
}

// ---------------------------------------------------------------- operations

std::optional<std::pair<KConst, mpq_class>> q_power_decompose(const KConst& h, const FieldPtr& f) {
  if (h.is_zero()) fail(ErrorCode::ZeroInput, "q_power_decompose of zero");
  mpq_class j(f->valuation(h), f->q_valuation());
  j.canonicalize();
  const long n = 1L << f->depth();
  if ((n % j.get_den()) != 0) return std::nullopt;
  mpz_class k = j.get_num() * (n / j.get_den());
  KConst c = h / f->generator().pow(k.get_si());
  if (!c.is_rational()) return std::nullopt;
  return std::make_pair(c, j);
}

std::optional<long> root_of_unity_order(const KConst& c) {
  if (c.is_zero()) fail(ErrorCode::ZeroInput, "root_of_unity_order of zero");
  if (c.is_rational()) {
    if (c.rational() == 1) return 1;
    if (c.rational() == -1) return 2;
    return std::nullopt;
  }
  const FieldPtr& f = c.field();
  if (f->mode() == FieldMode::Formal) return std::nullopt;
  // phi(n) <= [K:Q] bounds n.
  const long d = f->degree();
  const long limit = 4 * d * d + 2;
  KConst p = c;
  for (long n = 1; n <= limit; ++n) {
    if (p.is_one()) return n;
    p *= c;
  }
  return std::nullopt;
}

std::optional<std::pair<long, long>> power_torsion(const KConst& h, const KConst& base, const FieldPtr& f) {
  mpq_class j(f->valuation(h), f->valuation(base));
  j.canonicalize();
  long a = j.get_num().get_si(), b = j.get_den().get_si();
  KConst c = h.pow(b) / base.pow(a);
  auto ord = root_of_unity_order(c);
  if (!ord) return std::nullopt;
  return std::make_pair(b * *ord, a * *ord);
}

namespace {

// Adds constraint rows encoding prod r_i^{n_i} = 1 for rationals r_i placed in
// columns cols[i], with one spare column for the sign parity.
void add_rational_rows(const std::vector<mpq_class>& rs, const std::vector<size_t>& cols, size_t sign_col,
                       size_t ncols, IntMat& rows) {
  std::vector<mpz_class> ints;
  for (auto& r : rs) {
    ints.push_back(r.get_num());
    ints.push_back(r.get_den());
  }
  auto base = coprime_base(ints);
  for (size_t b = 0; b < base.size(); ++b) {
    IntVec row(ncols, mpz_class(0));
    for (size_t i = 0; i < rs.size(); ++i) {
      IntVec en = base_exponents(rs[i].get_num(), {base[b]});
      IntVec ed = base_exponents(rs[i].get_den(), {base[b]});
      row[cols[i]] += en[0] - ed[0];
    }
    rows.push_back(std::move(row));
  }
  IntVec srow(ncols, mpz_class(0));
  for (size_t i = 0; i < rs.size(); ++i)
    if (rs[i] < 0) srow[cols[i]] += 1;
  srow[sign_col] = -2;
  rows.push_back(std::move(srow));
}

}  // namespace

IntMat multiplicative_relations(const std::vector<KConst>& gs, const FieldPtr& field) {
  for (auto& g : gs)
    if (g.is_zero()) fail(ErrorCode::ZeroInput, "multiplicative relation with zero");
  const size_t m = gs.size();
  bool all_rational = std::all_of(gs.begin(), gs.end(), [](const KConst& g) { return g.is_rational(); });
  if (all_rational || field->mode() == FieldMode::Formal) {
    // Columns: n_1..n_m, sign parity.
    const size_t ncols = m + 1;
    IntMat rows;
    std::vector<QPoly> irr;
    std::vector<std::map<size_t, long>> expo(m);
    auto index_of = [&](const QPoly& p) {
      for (size_t i = 0; i < irr.size(); ++i)
        if (irr[i] == p) return i;
      irr.push_back(p);
      return irr.size() - 1;
    };
    std::vector<mpq_class> rs(m);
    for (size_t i = 0; i < m; ++i) {
      rs[i] = gs[i].num().lead() / gs[i].den().lead();
      for (int part = 0; part < 2; ++part) {
        const QPoly& p = part == 0 ? gs[i].num() : gs[i].den();
        if (p.degree() <= 0) continue;
        for (auto& [fac, mult] : factor_rational(p).factors) expo[i][index_of(fac)] += part == 0 ? mult : -mult;
      }
    }
    for (size_t k = 0; k < irr.size(); ++k) {
      IntVec row(ncols, mpz_class(0));
      for (size_t i = 0; i < m; ++i) {
        auto it = expo[i].find(k);
        if (it != expo[i].end()) row[i] = it->second;
      }
      rows.push_back(std::move(row));
    }
    std::vector<size_t> cols(m);
    for (size_t i = 0; i < m; ++i) cols[i] = i;
    add_rational_rows(rs, cols, m, ncols, rows);
    return project_lattice(integer_kernel(rows, ncols), m);
  }
  // Concrete tower of degree > 1: elements must be rational multiples of t^k.
  KConst t = field->generator();
  long j0 = 0;
  KConst tp = t;
  for (long j = 1; j <= (1L << field->depth()); ++j, tp *= t)
    if (tp.is_rational()) {
      j0 = j;
      break;
    }
  KConst rho = t.pow(j0);
  // Columns: n_1..n_m, w (exponent of rho), sign parity.
  const size_t ncols = m + 2;
  std::vector<mpq_class> rs;
  std::vector<long> ks;
  for (auto& g : gs) {
    if (!is_monomial(g.num()))
      throw UnsupportedConstant("multiplicative relations need rational multiples of powers of the generator",
                                field->modulus().to_string("t"));
    rs.push_back(g.num().lead());
    ks.push_back(g.num().degree());
  }
  rs.push_back(rho.rational());
  std::vector<size_t> cols(m + 1);
  for (size_t i = 0; i <= m; ++i) cols[i] = i;
  IntMat rows;
  add_rational_rows(rs, cols, m + 1, ncols, rows);
  IntVec trow(ncols, mpz_class(0));
  for (size_t i = 0; i < m; ++i) trow[i] = ks[i];
  trow[m] = -j0;
  rows.push_back(std::move(trow));
  return project_lattice(integer_kernel(rows, ncols), m);
}

IntMat mult_relation_lattice(const std::vector<KConst>& hs, const FieldPtr& field) {
  std::vector<KConst> gs = hs;
  gs.push_back(field->q());
  IntMat rel = multiplicative_relations(gs, field);
  for (auto& v : rel) v.back() = -v.back();
  return hermite_normal_form(std::move(rel));
}

}  // namespace qgalois
