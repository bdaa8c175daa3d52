#include "qgalois/qpoly.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <sstream>

namespace qgalois {

namespace {
const mpq_class kZero(0);

constexpr std::uint64_t kPrimes[] = {2305843009213693951ULL, 1000000000000000003ULL};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1u) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1u;
  }
  return r;
}

std::vector<std::uint64_t> reduce_mod(const std::vector<mpz_class>& z, std::uint64_t p) {
  std::vector<std::uint64_t> r(z.size());
  for (size_t i = 0; i < z.size(); ++i) r[i] = mpz_fdiv_ui(z[i].get_mpz_t(), p);
  return r;
}

// Degree of gcd(a, b) over F_p; the leading coefficients must be nonzero mod p.
int gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t inv = inv_mod(b.back(), p);
    const size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
      const std::uint64_t f = mul_mod(a.back(), inv, p);
      const size_t shift = a.size() - 1 - db;
      for (size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + p - mul_mod(f, b[j], p)) % p;
      trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}
}

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const mpq_class& c) { return QPoly(std::vector<mpq_class>{c}); }

QPoly QPoly::monomial(const mpq_class& c, int k) {
  if (c == 0) return {};
  std::vector<mpq_class> v(k + 1, mpq_class(0));
  v[k] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& QPoly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

const mpq_class& QPoly::lead() const { return c_.empty() ? kZero : c_.back(); }

int QPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const mpq_class& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

namespace {

// Integer numerators over the common denominator den.
std::vector<mpz_class> over_common_denominator(const std::vector<mpq_class>& c, mpz_class& den) {
  den = 1;
  for (auto& x : c)
    if (x.get_den() != 1) den = lcm(den, mpz_class(x.get_den()));
  std::vector<mpz_class> z(c.size());
  for (size_t i = 0; i < c.size(); ++i) z[i] = den == 1 ? mpz_class(c[i].get_num()) : c[i].get_num() * (den / c[i].get_den());
  return z;
}

}  // namespace

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  mpz_class da, db;
  const std::vector<mpz_class> za = over_common_denominator(a.c_, da), zb = over_common_denominator(b.c_, db);
  std::vector<mpz_class> r(za.size() + zb.size() - 1);
  for (size_t i = 0; i < za.size(); ++i) {
    if (za[i] == 0) continue;
    for (size_t j = 0; j < zb.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), za[i].get_mpz_t(), zb[j].get_mpz_t());
  }
  const mpz_class d = da * db;
  std::vector<mpq_class> out(r.size());
  for (size_t k = 0; k < r.size(); ++k) {
    out[k] = mpq_class(r[k], d);
    if (d != 1) out[k].canonicalize();
  }
  return QPoly(std::move(out));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  mpq_class inv = 1 / lead();
  return *this * inv;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return QPoly(std::move(r));
}

QPoly QPoly::shift_exponent(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<mpq_class> r(k, mpq_class(0));
  r.insert(r.end(), c_.begin(), c_.end());
  return QPoly(std::move(r));
}

QPoly QPoly::strip_valuation() const {
  int v = valuation();
  if (v <= 0) return *this;
  return QPoly(std::vector<mpq_class>(c_.begin() + v, c_.end()));
}

QPoly QPoly::scale_var(const mpq_class& c) const {
  QPoly r = *this;
  mpq_class p = 1;
  for (auto& x : r.c_) {
    x *= p;
    p *= c;
  }
  r.trim();
  return r;
}

QPoly QPoly::taylor_shift(const mpq_class& c) const {
  // Horner in x + c.
  std::vector<mpq_class> r = c_;
  const int n = degree();
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) r[j] += c * r[j + 1];
  return QPoly(std::move(r));
}

QPoly QPoly::compose(const QPoly& inner) const {
  QPoly r;
  for (int i = degree(); i >= 0; --i) r = r * inner + QPoly::constant(c_[i]);
  return r;
}

mpq_class QPoly::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
  return r;
}

QPoly QPoly::pow(unsigned k) const {
  QPoly r = QPoly::constant(1), b = *this;
  while (k) {
    if (k & 1u) r = r * b;
    k >>= 1u;
    if (k) b = b * b;
  }
  return r;
}

std::vector<mpz_class> QPoly::primitive_integer() const {
  std::vector<mpz_class> z;
  if (is_zero()) return z;
  mpz_class den = 1;
  for (auto& c : c_) den = lcm(den, mpz_class(c.get_den()));
  mpz_class g = 0;
  z.reserve(c_.size());
  for (auto& c : c_) {
    mpz_class v = c.get_num() * (den / c.get_den());
    z.push_back(v);
    g = gcd(g, v);
  }
  if (z.back() < 0) g = -g;
  for (auto& v : z) v /= g;
  return z;
}

QPoly QPoly::from_integer(const std::vector<mpz_class>& z) {
  std::vector<mpq_class> c(z.size());
  for (size_t i = 0; i < z.size(); ++i) c[i] = z[i];
  return QPoly(std::move(c));
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    mpq_class c = c_[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    mpq_class a = abs(c);
    if (i == 0 || a != 1) {
      os << a.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

int compare(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
  assert(!b.is_zero());
  if (a.degree() < b.degree()) {
    quo = QPoly();
    rem = a;
    return;
  }
  std::vector<mpq_class> r = a.coeffs();
  const int db = b.degree();
  std::vector<mpq_class> q(a.degree() - db + 1, mpq_class(0));
  mpq_class inv = 1 / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    mpq_class f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  r.resize(db);
  quo = QPoly(std::move(q));
  rem = QPoly(std::move(r));
}

QPoly operator/(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  return q;
}

QPoly operator%(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  return r;
}

bool divides(const QPoly& d, const QPoly& a) { return (a % d).is_zero(); }

namespace {

// Heuristic gcd: the integer gcd of the values at a large xi, read back in
// balanced base xi, is confirmed by exact division.
std::optional<QPoly> heuristic_gcd(const QPoly& a, const QPoly& b, const std::vector<mpz_class>& za,
                                   const std::vector<mpz_class>& zb) {
  auto height = [](const std::vector<mpz_class>& z) {
    mpz_class h = 0;
    for (auto& c : z) h = std::max(h, mpz_class(abs(c)));
    return h;
  };
  auto eval = [](const std::vector<mpz_class>& z, const mpz_class& x) {
    mpz_class r = 0;
    for (size_t i = z.size(); i-- > 0;) r = r * x + z[i];
    return r;
  };
  mpz_class xi = 2 * std::min(height(za), height(zb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class g = gcd(eval(za, xi), eval(zb, xi));
    std::vector<mpz_class> digits;
    const mpz_class half = xi / 2;
    while (g != 0) {
      mpz_class d = g % xi;
      if (d > half) d -= xi;
      else if (d < -half) d += xi;
      digits.push_back(d);
      g = (g - d) / xi;
    }
    QPoly cand = QPoly::from_integer(digits);
    if (cand.degree() > 0 && divides(cand, a) && divides(cand, b)) return cand.monic();
    if (cand.degree() == 0 && !cand.is_zero()) break;
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return QPoly::constant(1);
  // Coprimality modulo a prime not dividing either leading coefficient implies it over Q.
  const std::vector<mpz_class> za = a.primitive_integer(), zb = b.primitive_integer();
  for (std::uint64_t p : kPrimes) {
    if (mpz_fdiv_ui(za.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(zb.back().get_mpz_t(), p) == 0) continue;
    const int d = gcd_degree_mod(reduce_mod(za, p), reduce_mod(zb, p), p);
    if (d == 0) return QPoly::constant(1);
    if (d == b.degree() && divides(b, a)) return b.monic();
    if (d == a.degree() && divides(a, b)) return a.monic();
    break;
  }
  if (auto g = heuristic_gcd(a, b, za, zb)) return *g;
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
  QPoly r0 = a, r1 = b, s0 = QPoly::constant(1), s1, t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = QPoly();
    t = QPoly();
    return r0;
  }
  mpq_class inv = 1 / r0.lead();
  s = s0 * inv;
  t = t0 * inv;
  return r0 * inv;
}

std::vector<std::pair<int, QPoly>> squarefree(const QPoly& a) {
  // Yun's algorithm over a field of characteristic zero.
  std::vector<std::pair<int, QPoly>> out;
  if (a.degree() <= 0) return out;
  QPoly f = a.monic();
  QPoly d = f.derivative();
  QPoly g = gcd(f, d);
  QPoly b = f / g, c = d / g;
  QPoly dd = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly h = gcd(b, dd);
    if (h.degree() > 0) out.emplace_back(i, h);
    b = b / h;
    c = dd / h;
    dd = c - b.derivative();
    ++i;
  }
  return out;
}

QPoly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  const size_t n = xs.size();
  std::vector<mpq_class> dd = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QPoly r;
  for (size_t k = n; k-- > 0;) {
    r = r * QPoly(std::vector<mpq_class>{-xs[k], 1}) + QPoly::constant(dd[k]);
  }
  return r;
}

}  // namespace qgalois
