#include "qgalois/residues.hpp"

#include <map>

#include "qgalois/errors.hpp"

namespace qgalois {

namespace {

using Series = std::vector<Poly>;  // coefficients of t^0..t^(k-1), each in K[y]/(P)

Series taylor_at_root(const Poly& p, const Poly& P, int k) {
  const FieldPtr& f = P.field();
  const Var v = P.var();
  Poly zero(f, v, {});
  Poly y = Poly::variable(f, v);
  Series acc(k, zero);
  for (int i = p.degree(); i >= 0; --i) {
    Series nw(k, zero);
    for (int j = 0; j < k; ++j) {
      if (!acc[j].is_zero()) nw[j] = mulmod(acc[j], y, P);
      if (j > 0) nw[j] += acc[j - 1];
    }
    nw[0] += Poly::constant(f, v, p[i]);
    acc = std::move(nw);
  }
  return acc;
}

Series series_mul(const Series& a, const Series& b, const Poly& P) {
  const int k = static_cast<int>(a.size());
  Series r(k, Poly(P.field(), P.var(), {}));
  for (int i = 0; i < k; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j < k; ++j)
      if (!b[j].is_zero()) r[i + j] += mulmod(a[i], b[j], P);
  }
  return r;
}

Series series_inv(const Series& a, const Poly& P) {
  const int k = static_cast<int>(a.size());
  Series r(k, Poly(P.field(), P.var(), {}));
  Poly inv0 = invmod(a[0], P);
  r[0] = inv0;
  for (int n = 1; n < k; ++n) {
    Poly acc(P.field(), P.var(), {});
    for (int j = 1; j <= n; ++j)
      if (!a[j].is_zero() && !r[n - j].is_zero()) acc += mulmod(a[j], r[n - j], P);
    r[n] = mulmod(-acc, inv0, P);
  }
  return r;
}

// Laurent coefficients alpha_1..alpha_k of num/den at the roots of P, where
// P^k exactly divides den: num/den = sum_j alpha_j / (v - y)^j + O(1).
std::vector<Poly> laurent_coefficients(const Poly& num, const Poly& den, const Poly& P, int k) {
  Poly rest = den / P.pow(k);
  Series pt = taylor_at_root(P, P, k + 1);
  Series ptil(pt.begin() + 1, pt.end());
  Series denom = ptil;
  for (int i = 1; i < k; ++i) denom = series_mul(denom, ptil, P);
  denom = series_mul(denom, taylor_at_root(rest, P, k), P);
  Series g = series_mul(taylor_at_root(num, P, k), series_inv(denom, P), P);
  std::vector<Poly> alpha(k);
  for (int j = 1; j <= k; ++j) alpha[j - 1] = g[k - j];
  return alpha;
}

bool is_variable(const Poly& p) { return p.degree() == 1 && p[0].is_zero(); }

// f = A / v^s + B / D' with D' = den / v^s coprime to v, deg B < deg D'.
void split_at_zero(const RatFun& f, Poly& A, Poly& B, Poly& Dp, int& s) {
  const Poly& N = f.num();
  const Poly& D = f.den();
  s = D.valuation();
  Dp = D.strip_valuation();
  const FieldPtr& fld = f.field();
  Poly vs = Poly::monomial(fld, f.var(), 1, s);
  if (Dp.is_constant()) {
    B = Poly(fld, f.var(), {});
    A = N * Dp.lead().inverse();
    return;
  }
  B = mulmod(N % Dp, invmod(vs % Dp, Dp), Dp);
  A = (N - B * vs) / Dp;
}

struct PolyJLess {
  bool operator()(const std::pair<Poly, int>& a, const std::pair<Poly, int>& b) const {
    int c = compare(a.first, b.first);
    if (c != 0) return c < 0;
    return a.second < b.second;
  }
};

}  // namespace

Poly ResidueTable::lookup(const Poly& rep, int j) const {
  for (auto& e : entries)
    if (e.j == j && e.rep == rep) return e.value;
  return Poly(rep.field(), rep.var(), {});
}

long DlogResidueData::lookup(const Poly& rep) const {
  for (auto& [p, e] : orbit_integers)
    if (p == rep) return e;
  return 0;
}

KConst shift_constant(const FieldPtr& f, Var v, int step) { return sigma_base(f, v).pow(step); }

Poly orbit_representative(const Poly& p, int step) {
  Poly m = p.monic();
  return canonical_member(m, shift_constant(m.field(), m.var(), step)).rep;
}

KConst qdres_infinity(const RatFun& f) {
  if (f.is_zero()) return KConst(0);
  Poly A, B, Dp;
  int s;
  split_at_zero(f, A, B, Dp, s);
  return A[s];
}

ResidueTable residue_table(const RatFun& f, int step) {
  ResidueTable t;
  if (f.is_zero()) return t;
  t.at_infinity = qdres_infinity(f);
  if (f.den().is_constant()) return t;
  const KConst Q = shift_constant(f.field(), f.var(), step);
  std::map<std::pair<Poly, int>, Poly, PolyJLess> acc;
  for (auto& [P, k] : factor(f.den()).factors) {
    if (is_variable(P)) continue;
    std::vector<Poly> alpha = laurent_coefficients(f.num(), f.den(), P, k);
    ClassMember cm = canonical_member(P, Q);
    const long l = -cm.offset;  // roots(P) = Q^l roots(rep)
    KConst ql = Q.pow(l);
    for (int j = 1; j <= k; ++j) {
      if (alpha[j - 1].is_zero()) continue;
      Poly val = (alpha[j - 1].scale_var(ql) % cm.rep) * Q.pow(-l * j);
      auto key = std::make_pair(cm.rep, j);
      auto it = acc.find(key);
      if (it == acc.end()) acc.emplace(key, val);
      else it->second += val;
    }
  }
  for (auto& [key, val] : acc)
    if (!val.is_zero()) t.entries.push_back({key.first, key.second, val});
  return t;
}

Poly qdres(const RatFun& f, const Poly& cls, int j, int step) {
  if (j < 1) fail(ErrorCode::InvalidMultiplicity, "residue order must be >= 1");
  Poly rep = orbit_representative(cls, step);
  return residue_table(f, step).lookup(rep, j);
}

DlogResidueData dlog_residue_data(const RatFun& u, int step) {
  if (u.is_zero()) fail(ErrorCode::ZeroInput, "dlog_residue_data of zero");
  DlogResidueData d;
  d.degree_at_infinity = u.num().degree() - u.den().degree();
  const KConst Q = shift_constant(u.field(), u.var(), step);
  std::map<Poly, long, PolyLess> acc;
  for (int part = 0; part < 2; ++part) {
    const Poly& p = part == 0 ? u.num() : u.den();
    if (p.degree() <= 0) continue;
    for (auto& [P, k] : factor(p).factors) {
      if (is_variable(P)) continue;
      acc[canonical_member(P, Q).rep] += part == 0 ? k : -k;
    }
  }
  for (auto& [rep, e] : acc)
    if (e != 0) d.orbit_integers.emplace_back(rep, e);
  return d;
}

bool is_summable(const RatFun& f, int step) {
  ResidueTable t = residue_table(f, step);
  return t.entries.empty() && t.at_infinity.is_zero();
}

std::optional<KConst> summable_plus_constant(const RatFun& f, int step) {
  ResidueTable t = residue_table(f, step);
  if (!t.entries.empty()) return std::nullopt;
  return t.at_infinity;
}

std::optional<RatFun> telescope_witness(const RatFun& f, int step) {
  if (f.is_zero()) return f;
  const FieldPtr& fld = f.field();
  const Var v = f.var();
  const KConst Q = shift_constant(fld, v, step);
  Poly A, B, Dp;
  int s;
  split_at_zero(f, A, B, Dp, s);
  if (!A[s].is_zero()) return std::nullopt;
  std::vector<KConst> hc(A.degree() + 1);
  for (int i = 0; i <= A.degree(); ++i) {
    if (i == s || A[i].is_zero()) continue;
    hc[i] = A[i] / (Q.pow(i - s) - KConst(1));
  }
  RatFun h(Poly(fld, v, std::move(hc)), Poly::monomial(fld, v, 1, s));
  if (!Dp.is_constant()) {
    auto sig = [&](const RatFun& g, long n) { return scale_var(g, Q.pow(n)); };
    std::map<Poly, RatFun, PolyLess> moved;
    for (auto& [P, k] : factor(Dp).factors) {
      Poly Pk = P.pow(k);
      Poly other = Dp / Pk;
      Poly num = mulmod(B % Pk, invmod(other % Pk, Pk), Pk);
      RatFun T(num, Pk);
      ClassMember cm = canonical_member(P, Q);
      const long l = -cm.offset;
      if (l > 0) {
        for (long i = 0; i < l; ++i) h -= sig(T, i);
      } else {
        for (long i = l; i < 0; ++i) h += sig(T, i);
      }
      RatFun Tm = sig(T, l);
      auto it = moved.find(cm.rep);
      if (it == moved.end()) moved.emplace(cm.rep, Tm);
      else it->second += Tm;
    }
    for (auto& [rep, sum] : moved)
      if (!sum.is_zero()) return std::nullopt;
  }
  if (scale_var(h, Q) - h != f) fail(ErrorCode::Internal, "telescoping witness failed verification");
  return h;
}

bool delta_transport_check(const RatFun& a, int r, const Poly& cls) {
  if (a.is_zero()) fail(ErrorCode::ZeroInput, "delta_transport_check of zero");
  if (r < 0) fail(ErrorCode::PreconditionViolated, "r must be >= 0");
  Poly rep = orbit_representative(cls);
  RatFun L = dlog(a);
  RatFun D = L;
  for (int i = 0; i < r; ++i) D = delta(D);
  Poly lhs = residue_table(D).lookup(rep, r + 1);
  mpz_class fact = 1;
  for (int i = 2; i <= r; ++i) fact *= i;
  KConst coef = KConst(mpq_class(r % 2 == 0 ? fact : mpz_class(-fact)));
  Poly y = Poly::variable(rep.field(), rep.var());
  Poly rhs = (y.pow(r) * residue_table(L).lookup(rep, 1)) % rep;
  rhs *= coef;
  return lhs == rhs;
}

}  // namespace qgalois
