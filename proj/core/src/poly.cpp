#include "qgalois/poly.hpp"

#include <algorithm>
#include <sstream>

#include "qgalois/errors.hpp"

namespace qgalois {

namespace {

const KConst kZeroK;

const FieldPtr& pick(const FieldPtr& a, const FieldPtr& b) { return a ? a : b; }

}  // namespace

Poly::Poly(FieldPtr f, Var v, std::vector<KConst> coeffs) : f_(std::move(f)), v_(v), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(FieldPtr f, Var v, const KConst& c) { return Poly(std::move(f), v, {c}); }

Poly Poly::monomial(FieldPtr f, Var v, const KConst& c, int k) {
  if (c.is_zero()) return Poly(std::move(f), v, {});
  std::vector<KConst> cs(k + 1);
  cs[k] = c;
  return Poly(std::move(f), v, std::move(cs));
}

Poly Poly::from_rational(FieldPtr f, Var v, const QPoly& p) {
  std::vector<KConst> cs;
  cs.reserve(p.coeffs().size());
  for (auto& c : p.coeffs()) cs.emplace_back(c);
  return Poly(std::move(f), v, std::move(cs));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const KConst& Poly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroK;
  return c_[i];
}

const KConst& Poly::lead() const { return c_.empty() ? kZeroK : c_.back(); }

int Poly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

bool Poly::is_rational() const {
  return std::all_of(c_.begin(), c_.end(), [](const KConst& c) { return c.is_rational(); });
}

QPoly Poly::to_rational() const {
  std::vector<mpq_class> r;
  r.reserve(c_.size());
  for (auto& c : c_) r.push_back(c.rational());
  return QPoly(std::move(r));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  f_ = pick(f_, o.f_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  f_ = pick(f_, o.f_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const KConst& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  const FieldPtr& f = pick(a.f_, b.f_);
  if (a.is_zero() || b.is_zero()) return Poly(f, a.v_, {});
  std::vector<KConst> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(f, a.v_, std::move(r));
}

Poly Poly::monic() const {
  if (is_zero() || lead().is_one()) return *this;
  return *this * lead().inverse();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(f_, v_, {});
  std::vector<KConst> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * KConst(static_cast<long>(i));
  return Poly(f_, v_, std::move(r));
}

Poly Poly::euler() const {
  Poly r = *this;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] *= KConst(static_cast<long>(i));
  r.trim();
  return r;
}

Poly Poly::shift_exponent(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<KConst> r(k);
  r.insert(r.end(), c_.begin(), c_.end());
  return Poly(f_, v_, std::move(r));
}

Poly Poly::strip_valuation() const {
  int v = valuation();
  if (v <= 0) return *this;
  return Poly(f_, v_, std::vector<KConst>(c_.begin() + v, c_.end()));
}

Poly Poly::scale_var(const KConst& c) const {
  Poly r = *this;
  KConst p(1);
  for (auto& x : r.c_) {
    x *= p;
    p *= c;
  }
  r.trim();
  return r;
}

Poly Poly::taylor_shift(const KConst& c) const {
  std::vector<KConst> r = c_;
  const int n = degree();
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) r[j] += c * r[j + 1];
  return Poly(f_, v_, std::move(r));
}

KConst Poly::eval(const KConst& x) const {
  KConst r;
  for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r = constant(f_, v_, 1), b = *this;
  while (k) {
    if (k & 1u) r = r * b;
    k >>= 1u;
    if (k) b = b * b;
  }
  return r;
}

Poly Poly::with_var(Var v) const {
  Poly r = *this;
  r.v_ = v;
  return r;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  const std::string var = v_ == Var::X ? "x" : "x2";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const KConst& c = c_[i];
    if (c.is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (c.is_rational()) {
      mpq_class r = c.rational();
      if (!first) os << (r < 0 ? " - " : " + ");
      else if (r < 0) os << "-";
      mpq_class a = abs(r);
      if (i == 0) os << a.get_str();
      else if (a == 1) os << mono;
      else os << a.get_str() << "*" << mono;
    } else {
      std::string cs = c.to_string();
      const bool single = cs.find(' ') == std::string::npos;
      const bool neg = single && cs[0] == '-';
      if (neg) cs.erase(0, 1);
      if (!first) os << (neg ? " - " : " + ");
      else if (neg) os << "-";
      os << (single ? cs : "(" + cs + ")");
      if (i > 0) os << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

int compare(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    int c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  if (b.is_zero()) fail(ErrorCode::ZeroInput, "polynomial division by zero");
  const FieldPtr& f = a.field() ? a.field() : b.field();
  if (a.degree() < b.degree()) {
    quo = Poly(f, a.var(), {});
    rem = a;
    return;
  }
  std::vector<KConst> r = a.coeffs();
  const int db = b.degree();
  std::vector<KConst> q(a.degree() - db + 1);
  KConst inv = b.lead().inverse();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    KConst fct = r[i] * inv;
    for (int j = 0; j < db; ++j)
      if (!b[j].is_zero()) r[i - db + j] -= fct * b[j];
    q[i - db] = std::move(fct);
  }
  r.resize(db);
  quo = Poly(f, a.var(), std::move(q));
  rem = Poly(f, a.var(), std::move(r));
}

Poly operator/(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  return q;
}

Poly operator%(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  return r;
}

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

namespace {

using BiPoly = std::vector<QPoly>;  // coefficient of v^i as a polynomial in the tower generator

// Formal mode: p scaled to a primitive polynomial in Q[s][v].
BiPoly primitive_bipoly(const Poly& p) {
  QPoly D = QPoly::constant(1);
  for (auto& c : p.coeffs()) {
    if (c.den().is_constant()) continue;
    D = D * (c.den() / gcd(D, c.den()));
  }
  BiPoly P(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) P[i] = p[i].num() * (D / p[i].den());
  QPoly cont;
  for (auto& c : P) cont = gcd(cont, c);
  if (cont.degree() > 0 || (!cont.is_zero() && cont.lead() != 1))
    for (auto& c : P) c = c / cont;
  return P;
}

void trim(BiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

BiPoly primitive_part(BiPoly p) {
  QPoly cont;
  for (auto& c : p) cont = gcd(cont, c);
  if (!cont.is_zero())
    for (auto& c : p) c = c / cont;
  return p;
}

BiPoly pseudo_remainder(BiPoly a, const BiPoly& b) {
  const size_t db = b.size() - 1;
  const QPoly& lb = b.back();
  while (a.size() > db) {
    const size_t shift = a.size() - 1 - db;
    QPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  return a;
}

bool formal_field(const Poly& p) { return p.field() && p.field()->mode() == FieldMode::Formal; }

Poly from_bipoly(const FieldPtr& f, Var v, const BiPoly& p) {
  std::vector<KConst> kc;
  for (auto& c : p) kc.emplace_back(f, c);
  return Poly(f, v, std::move(kc)).monic();
}

int s_degree(const BiPoly& p) {
  int d = 0;
  for (auto& c : p) d = std::max(d, c.degree());
  return d;
}

QPoly eval_s(const BiPoly& p, const mpq_class& s0) {
  std::vector<mpq_class> c(p.size());
  for (size_t i = 0; i < p.size(); ++i) c[i] = p[i].eval(s0);
  return QPoly(std::move(c));
}

// Primitive remainder sequence over Q[s].
BiPoly prs_gcd(BiPoly x, BiPoly y) {
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    BiPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(std::move(r));
  }
  return x;
}

// Gcd over Q(s) by evaluation at s = 1, 2, ... and interpolation. With
// gamma = gcd of the leading coefficients, gamma * G / lc(G) has s-degree at
// most deg(gamma) + min(deg_s A, deg_s B); points of minimal gcd degree are
// lucky and the result is confirmed by pseudo-division.
Poly formal_gcd(const Poly& a, const Poly& b) {
  const BiPoly A = primitive_bipoly(a), B = primitive_bipoly(b);
  const QPoly gamma = gcd(A.back(), B.back());
  const int bound = gamma.degree() + std::min(s_degree(A), s_degree(B));
  int best = std::min(a.degree(), b.degree()) + 1;
  std::vector<mpq_class> xs;
  std::vector<QPoly> gs;
  for (long k = 1; k <= bound + 64; ++k) {
    const mpq_class s0(k);
    if (A.back().eval(s0) == 0 || B.back().eval(s0) == 0) continue;
    QPoly g = gcd(eval_s(A, s0), eval_s(B, s0));
    if (g.degree() == 0) return Poly::constant(a.field(), a.var(), 1);
    if (g.degree() > best) continue;
    if (g.degree() < best) {
      best = g.degree();
      xs.clear();
      gs.clear();
    }
    xs.push_back(s0);
    gs.push_back(g * gamma.eval(s0));
    if (static_cast<int>(xs.size()) < bound + 1) continue;
    BiPoly H(best + 1);
    std::vector<mpq_class> ys(xs.size());
    for (int i = 0; i <= best; ++i) {
      for (size_t j = 0; j < xs.size(); ++j) ys[j] = gs[j][i];
      H[i] = interpolate(xs, ys);
    }
    H = primitive_part(std::move(H));
    if (pseudo_remainder(A, H).empty() && pseudo_remainder(B, H).empty()) return from_bipoly(a.field(), a.var(), H);
  }
  return from_bipoly(a.field(), a.var(), prs_gcd(A, B));
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Poly::constant(a.field(), a.var(), 1);
  if (formal_field(a) && !(a.is_rational() && b.is_rational())) return formal_gcd(a, b);
  Poly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x;
}

Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
  const FieldPtr& f = a.field() ? a.field() : b.field();
  Poly r0 = a, r1 = b, s0 = Poly::constant(f, a.var(), 1), s1(f, a.var(), {}), t0(f, a.var(), {}),
       t1 = Poly::constant(f, a.var(), 1);
  while (!r1.is_zero()) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = s1;
    t = t1;
    return r0;
  }
  KConst inv = r0.lead().inverse();
  s = s0 * inv;
  t = t0 * inv;
  return r0 * inv;
}

std::vector<std::pair<int, Poly>> squarefree(const Poly& a) {
  std::vector<std::pair<int, Poly>> out;
  if (a.degree() <= 0) return out;
  Poly f = a.monic();
  Poly d = f.derivative();
  Poly g = gcd(f, d);
  Poly b = f / g, c = d / g;
  Poly dd = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly h = gcd(b, dd);
    if (h.degree() > 0) out.emplace_back(i, h);
    b = b / h;
    c = dd / h;
    dd = c - b.derivative();
    ++i;
  }
  return out;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly invmod(const Poly& a, const Poly& m) {
  Poly s, t;
  Poly g = xgcd(a % m, m, s, t);
  if (g.degree() != 0) fail(ErrorCode::ZeroInput, "element not invertible modulo " + m.to_string());
  return s % m;
}

// ---------------------------------------------------------------- factoring

namespace {

QPoly trunc(const QPoly& p, int n) {
  if (p.degree() < n) return p;
  return QPoly(std::vector<mpq_class>(p.coeffs().begin(), p.coeffs().begin() + n));
}

BiPoly bi_mul(const BiPoly& a, const BiPoly& b, int n) {
  if (a.empty() || b.empty()) return {};
  BiPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += trunc(a[i] * b[j], n);
  }
  return r;
}

mpq_class nth_candidate(int k) {
  // 1, 2, -1, 3, -2, 4, ...
  if (k == 0) return 1;
  return (k % 2 == 1) ? mpq_class((k + 3) / 2) : mpq_class(-(k / 2));
}

// Formal mode: F monic squarefree over Q(s), degree >= 2.
std::vector<Poly> factor_formal(const Poly& F, std::uint64_t seed) {
  const FieldPtr& f = F.field();
  const int n = F.degree();
  BiPoly P = primitive_bipoly(F);
  int ds = 0;
  for (auto& c : P) ds = std::max(ds, c.degree());
  const QPoly lcP = P[n];

  mpq_class s0;
  QPoly f0;
  for (int k = 0;; ++k) {
    if (k > 400) fail(ErrorCode::Internal, "no lucky evaluation point for bivariate factorization");
    s0 = nth_candidate(k);
    if (lcP.eval(s0) == 0) continue;
    std::vector<mpq_class> cs(n + 1);
    for (int i = 0; i <= n; ++i) cs[i] = P[i].eval(s0);
    f0 = QPoly(cs);
    if (gcd(f0, f0.derivative()).degree() > 0) continue;
    break;
  }
  std::vector<QPoly> g = factor_squarefree_rational(f0, seed);
  if (g.size() == 1) return {F};

  const int N = 2 * ds + 1;
  BiPoly Pz(n + 1);
  for (int i = 0; i <= n; ++i) Pz[i] = P[i].taylor_shift(s0);
  QPoly lcz = lcP.taylor_shift(s0);
  std::vector<mpq_class> inv(N);
  inv[0] = 1 / lcz[0];
  for (int k = 1; k < N; ++k) {
    mpq_class acc = 0;
    for (int j = 1; j <= k; ++j) acc += lcz[j] * inv[k - j];
    inv[k] = -acc * inv[0];
  }
  QPoly invz(inv);
  BiPoly T(n + 1);
  for (int i = 0; i <= n; ++i) T[i] = trunc(Pz[i] * invz, N);

  const size_t r = g.size();
  std::vector<QPoly> bez(r);
  for (size_t i = 0; i < r; ++i) {
    QPoly prod = QPoly::constant(1);
    for (size_t j = 0; j < r; ++j)
      if (j != i) prod = prod * g[j];
    QPoly s, t;
    xgcd(prod % g[i], g[i], s, t);
    bez[i] = s;
  }
  std::vector<BiPoly> G(r);
  for (size_t i = 0; i < r; ++i) {
    G[i].resize(g[i].degree() + 1);
    for (int c = 0; c <= g[i].degree(); ++c) G[i][c] = QPoly::constant(g[i][c]);
  }
  for (int j = 1; j < N; ++j) {
    BiPoly prod{QPoly::constant(1)};
    for (auto& gi : G) prod = bi_mul(prod, gi, j + 1);
    std::vector<mpq_class> e(n + 1);
    bool nonzero = false;
    for (int k = 0; k <= n; ++k) {
      e[k] = T[k][j] - (k < static_cast<int>(prod.size()) ? prod[k][j] : mpq_class(0));
      if (e[k] != 0) nonzero = true;
    }
    if (!nonzero) continue;
    QPoly ex(e);
    for (size_t i = 0; i < r; ++i) {
      QPoly d = (ex * bez[i]) % g[i];
      for (int c = 0; c <= d.degree(); ++c) G[i][c] += QPoly::monomial(d[c], j);
    }
  }

  std::vector<Poly> result;
  std::vector<size_t> live(r);
  for (size_t i = 0; i < r; ++i) live[i] = i;
  Poly cur = F;
  size_t s = 1;
  while (2 * s <= live.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      BiPoly cand{trunc(lcz, N)};
      for (size_t i : idx) cand = bi_mul(cand, G[live[i]], N);
      QPoly ccont;
      for (auto& c : cand) {
        c = c.taylor_shift(-s0);
        ccont = gcd(ccont, c);
      }
      std::vector<KConst> kc;
      for (auto& c : cand) kc.emplace_back(f, c / ccont);
      Poly cp = Poly(f, F.var(), std::move(kc)).monic();
      Poly qq, rr;
      divmod(cur, cp, qq, rr);
      if (rr.is_zero()) {
        result.push_back(cp);
        cur = qq;
        std::vector<size_t> next;
        for (size_t i = 0; i < live.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(live[i]);
        live = std::move(next);
        found = true;
        break;
      }
      int pos = static_cast<int>(s) - 1;
      while (pos >= 0 && idx[pos] == live.size() - s + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (size_t i = pos + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++s;
  }
  if (cur.degree() > 0) result.push_back(cur.monic());
  return result;
}

// Concrete tower of degree > 1: Trager's norm method.
std::vector<Poly> factor_trager(const Poly& F, std::uint64_t seed) {
  const FieldPtr& f = F.field();
  const int d = f->degree();
  const int n = F.degree();
  KConst theta = f->generator();
  for (long k = 0;; ++k) {
    if (k > 50) fail(ErrorCode::Internal, "no squarefree norm found");
    KConst shift = theta * KConst(k);
    Poly G = F.taylor_shift(-shift);
    std::vector<mpq_class> xs, ys;
    for (int i = 0; i <= d * n; ++i) {
      xs.emplace_back(i);
      ys.push_back(f->norm(G.eval(KConst(i))));
    }
    QPoly N = interpolate(xs, ys);
    if (gcd(N, N.derivative()).degree() > 0) continue;
    std::vector<Poly> out;
    for (auto& Ni : factor_squarefree_rational(N, seed)) {
      Poly h = gcd(G, Poly::from_rational(f, F.var(), Ni));
      if (h.degree() > 0) out.push_back(h.taylor_shift(shift).monic());
    }
    return out;
  }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& p, std::uint64_t seed) {
  if (p.is_zero()) fail(ErrorCode::ZeroInput, "factor of zero polynomial");
  std::vector<Poly> out;
  if (p.degree() <= 0) return out;
  Poly F = p.monic();
  const FieldPtr& f = F.field();
  if (F.valuation() > 0) {
    out.push_back(Poly::variable(f, F.var()));
    F = F.strip_valuation();
  }
  if (F.degree() == 1) {
    out.push_back(F);
  } else if (F.degree() >= 2) {
    std::vector<Poly> facs;
    const bool algebraic = f->mode() == FieldMode::Concrete && f->degree() > 1;
    if (F.is_rational()) {
      // Q is algebraically closed in Q(s), but not in a proper number field.
      for (auto& g : factor_squarefree_rational(F.to_rational(), seed)) {
        Poly gk = Poly::from_rational(f, F.var(), g);
        if (algebraic && gk.degree() > 1) {
          auto sub = factor_trager(gk, seed);
          facs.insert(facs.end(), sub.begin(), sub.end());
        } else {
          facs.push_back(gk);
        }
      }
    } else if (f->mode() == FieldMode::Formal) {
      facs = factor_formal(F, seed);
    } else {
      facs = factor_trager(F, seed);
    }
    out.insert(out.end(), facs.begin(), facs.end());
  }
  std::sort(out.begin(), out.end(), PolyLess());
  return out;
}

Factorization factor(const Poly& p, std::uint64_t seed) {
  if (p.is_zero()) fail(ErrorCode::ZeroInput, "factor of zero polynomial");
  Factorization r;
  r.unit = p.lead();
  for (auto& [mult, part] : squarefree(p))
    for (auto& g : factor_squarefree(part, seed)) r.factors.emplace_back(g, mult);
  std::sort(r.factors.begin(), r.factors.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
  return r;
}

// ---------------------------------------------------------------- shift classes

std::optional<std::pair<long, KConst>> shift_class(const Poly& p1, const Poly& p2, const KConst& Q) {
  if (p1.degree() != p2.degree()) return std::nullopt;
  const int n = p1.degree();
  if (n <= 0) return std::make_pair(0L, KConst(1));
  const bool z1 = p1[0].is_zero(), z2 = p2[0].is_zero();
  if (z1 || z2) {
    if (p1 == p2) return std::make_pair(0L, KConst(1));
    return std::nullopt;
  }
  const FieldPtr& f = p1.field() ? p1.field() : p2.field();
  long num = f->valuation(p1[0]) - f->valuation(p2[0]);
  long den = n * f->valuation(Q);
  if (num % den != 0) return std::nullopt;
  long l = num / den;
  KConst c = Q.pow(-l * n);
  if (p1.scale_var(Q.pow(l)) * c != p2) return std::nullopt;
  return std::make_pair(l, c);
}

ClassMember canonical_member(const Poly& p, const KConst& Q) {
  const int n = p.degree();
  if (n <= 0 || p[0].is_zero()) return {p, 0, KConst(1)};
  const FieldPtr& f = p.field();
  long v = f->valuation(p[0]);
  long D = n * f->valuation(Q);
  long a = std::abs(D);
  long fl = (v >= 0) ? v / a : -((-v + a - 1) / a);
  long l = D > 0 ? fl : -fl;  // R(v) = Q^{-l n} p(Q^l v)
  if (l == 0) return {p, 0, KConst(1)};
  Poly R = p.scale_var(Q.pow(l)) * Q.pow(-l * n);
  // p(v) = Q^{l n} R(Q^{-l} v)
  return {R, -l, Q.pow(l * n)};
}

}  // namespace qgalois
