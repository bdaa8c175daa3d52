#include "qgalois/riccati.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qgalois/errors.hpp"
#include "qgalois/linalg.hpp"
#include "qgalois/residues.hpp"

namespace qgalois {

const char* solution_count_name(SolutionCount c) {
  switch (c) {
    case SolutionCount::NoSolution: return "NoSolution";
    case SolutionCount::One: return "One";
    case SolutionCount::Two: return "Two";
    case SolutionCount::InfinitelyMany: return "InfinitelyMany";
  }
  return "?";
}

const char* field_tag_name(FieldTag t) { return t == FieldTag::K1 ? "k1" : "k2"; }

namespace {

// K(Z) with Z^2 + g1 Z + g0 = 0 irreducible over K.
struct ExtModulus {
  KConst g1, g0;
};

struct Ext {
  KConst a, b;  // a + b Z
  const ExtModulus* m = nullptr;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  friend Ext operator+(const Ext& x, const Ext& y) { return {x.a + y.a, x.b + y.b, x.m ? x.m : y.m}; }
  friend Ext operator-(const Ext& x, const Ext& y) { return {x.a - y.a, x.b - y.b, x.m ? x.m : y.m}; }
  Ext operator-() const { return {-a, -b, m}; }
  friend Ext operator*(const Ext& x, const Ext& y) {
    const ExtModulus* m = x.m ? x.m : y.m;
    KConst bd = x.b * y.b;
    return {x.a * y.a - bd * m->g0, x.a * y.b + x.b * y.a - bd * m->g1, m};
  }
  Ext inverse() const {
    KConst n = a * a - m->g1 * a * b + m->g0 * b * b;
    KConst ni = n.inverse();
    return {(a - b * m->g1) * ni, -b * ni, m};
  }
};

RatFun shift(const RatFun& f, const KConst& Q) { return scale_var(f, Q); }

// Determinant by cofactor expansion; matrices here are at most 4x4.
Poly det(const std::vector<std::vector<Poly>>& m, const Poly& zero, const Poly& one) {
  const size_t n = m.size();
  if (n == 0) return one;
  if (n == 1) return m[0][0];
  Poly acc = zero;
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Poly t = m[0][c] * det(minor, zero, one);
    acc = c % 2 == 0 ? acc + t : acc - t;
  }
  return acc;
}

// Res_z(f(z), l(Y z)) as a polynomial in Y.
Poly scaled_resultant(const Poly& f, const Poly& l) {
  const FieldPtr& fld = f.field();
  const int m = f.degree(), n = l.degree();
  Poly zero(fld, Var::X, {}), one = Poly::constant(fld, Var::X, 1);
  std::vector<std::vector<Poly>> s(m + n, std::vector<Poly>(m + n, zero));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = Poly::constant(fld, Var::X, f[m - i]);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = Poly::monomial(fld, Var::X, l[n - i], n - i);
  return det(s, zero, one);
}

struct PairLess {
  bool operator()(const std::pair<int, KConst>& x, const std::pair<int, KConst>& y) const {
    if (x.first != y.first) return x.first < y.first;
    return compare(x.second, y.second) < 0;
  }
};

// Monic divisor given by exponents over a factor list; value at 0 tracked.
struct Divisor {
  std::vector<int> exps;
  int degree = 0;
  KConst at_zero = 1;
};

std::vector<Divisor> divisors(const std::vector<std::pair<Poly, int>>& fs) {
  std::vector<Divisor> out(1);
  out[0].exps.assign(fs.size(), 0);
  for (size_t i = 0; i < fs.size(); ++i) {
    const auto& [f, e] = fs[i];
    std::vector<Divisor> next;
    for (auto& d : out) {
      Divisor acc = d;
      for (int k = 0; k <= e; ++k) {
        next.push_back(acc);
        acc.exps[i] += 1;
        acc.degree += f.degree();
        acc.at_zero *= f[0];
      }
    }
    out = std::move(next);
  }
  return out;
}

Poly expand(const std::vector<std::pair<Poly, int>>& fs, const std::vector<int>& exps, const FieldPtr& f, Var v) {
  Poly r = Poly::constant(f, v, 1);
  for (size_t i = 0; i < fs.size(); ++i)
    if (exps[i] > 0) r = r * fs[i].first.pow(exps[i]);
  return r;
}

// Monic irreducible factors of p (free of v) by trial division over a basis
// of known irreducibles; anything left over is factored directly.
std::vector<std::pair<Poly, int>> factor_with_basis(Poly p, const std::vector<Poly>& basis) {
  std::vector<std::pair<Poly, int>> out;
  for (auto& P : basis) {
    if (p.degree() < P.degree()) continue;
    int e = 0;
    for (;;) {
      Poly qq, rr;
      divmod(p, P, qq, rr);
      if (!rr.is_zero()) break;
      p = std::move(qq);
      ++e;
    }
    if (e > 0) out.emplace_back(P, e);
  }
  if (p.degree() > 0)
    for (auto& fe : factor(p).factors) out.push_back(fe);
  return out;
}

// Term x^exp * body with body(0) != 0.
struct Term {
  Poly body;
  long exp = 0;
  bool present() const { return !body.is_zero(); }
};

// Candidates u = Z x^m (A/B) sigma(C)/C with A | p0, sigma(B) | p2 and C a
// polynomial. The trailing coefficient t = Z A(0)/B(0) and the leading
// coefficient l = Z Q^deg(C) of u are roots of boundary polynomials that depend
// only on m and deg A - deg B, so pairs (A, B) are matched by hashing
// A(0)/B(0) modulo powers of Q.
struct Engine {
  RatFun a, b;
  int step;
  FieldPtr fld;
  Var var;
  KConst Q;
  long nuQ = 0;
  std::vector<Poly> basis;
  std::vector<RatFun> found;
  bool family = false;

  Engine(RatFun a_, RatFun b_, int step_, const std::vector<Poly>& pieces) : a(std::move(a_)), b(std::move(b_)), step(step_) {
    fld = b.field();
    var = b.var();
    a = RatFun(a.num().with_var(var), a.den().with_var(var));
    Q = shift_constant(fld, var, step);
    nuQ = fld->valuation(Q);
    if (nuQ == 0) fail(ErrorCode::Internal, "shift constant has zero valuation");
    for (auto& p : pieces) {
      if (p.degree() <= 0) continue;
      for (auto& [f, e] : factor(p.strip_valuation()).factors)
        if (std::none_of(basis.begin(), basis.end(), [&](const Poly& g) { return g == f; })) basis.push_back(f);
    }
  }

  void add(const RatFun& u) {
    if (!is_riccati_solution(u, a, b, step)) fail(ErrorCode::Internal, "Riccati candidate failed verification");
    for (auto& v : found)
      if (v == u) return;
    found.push_back(u);
  }

  // (c, r) with X = c * Q^r and 0 <= nu(c) < nu(Q) in the sense of floor division.
  std::pair<KConst, long> split_q(const KConst& X) const {
    mpz_class r;
    mpz_class v = fld->valuation(X);
    mpz_fdiv_q(r.get_mpz_t(), v.get_mpz_t(), mpz_class(nuQ).get_mpz_t());
    long ri = r.get_si();
    return {X / Q.pow(ri), ri};
  }

  template <class E, class Embed>
  Matrix<E> c_kernel(const Term (&t)[3], long e, int d, const E& z, const E& zero, const E& one, Embed embed) {
    int maxdeg = 0;
    for (auto& ti : t)
      if (ti.present()) maxdeg = std::max<int>(maxdeg, ti.exp - e + ti.body.degree());
    const size_t rows = static_cast<size_t>(maxdeg + d + 1);
    Matrix<E> m(rows, std::vector<E>(d + 1, zero));
    E zk[3] = {one, z, z * z};
    for (int k = 0; k <= d; ++k) {
      KConst qk = Q.pow(k);
      KConst qi = 1;
      for (int i = 0; i < 3; ++i, qi *= qk) {
        if (!t[i].present()) continue;
        E w = zk[i] * embed(qi);
        const long off = t[i].exp - e + k;
        for (int r = 0; r <= t[i].body.degree(); ++r) {
          const KConst& c = t[i].body[r];
          if (c.is_zero()) continue;
          m[off + r][k] = m[off + r][k] + w * embed(c);
        }
      }
    }
    return kernel(std::move(m), d + 1, zero, one);
  }

  void solve_pair(long mexp, const Poly& A, const Poly& B, int d, const KConst& rho, const Poly& troots,
                  const Poly& p0, const Poly& p1, const Poly& p2) {
    const Poly sA = A.scale_var(Q), sB = B.scale_var(Q);
    Term t[3];
    t[0] = {(p0.strip_valuation() / A) * B, p0.valuation()};
    if (!p1.is_zero()) t[1] = {p1.strip_valuation(), mexp + p1.valuation()};
    t[2] = {(p2.strip_valuation() / sB) * sA * Q.pow(mexp), 2 * mexp + p2.valuation()};
    long e = t[0].exp;
    for (auto& ti : t)
      if (ti.present()) e = std::min(e, ti.exp);
    const KConst rinv = rho.inverse();
    for (auto& [phi, mult] : factor(troots).factors) {
      if (phi.degree() == 1) {
        KConst z = -phi[0] * rinv;
        auto ker = c_kernel<KConst>(t, e, d, z, KConst(0), KConst(1), [](const KConst& c) { return c; });
        emit(z, mexp, A, B, ker);
      } else {
        ExtModulus mod{phi[1], phi[0]};
        auto embed = [&mod](const KConst& c) { return Ext{c, KConst(0), &mod}; };
        auto ker = c_kernel<Ext>(t, e, d, Ext{0, rinv, &mod}, embed(0), embed(1), embed);
        if (!ker.empty())
          throw UnsupportedConstant("a Riccati solution has leading coefficient outside the configured field",
                                    phi.to_string());
      }
    }
  }

  void emit(const KConst& z, long mexp, const Poly& A, const Poly& B, const Matrix<KConst>& ker) {
    if (ker.empty()) return;
    RatFun base = RatFun(A, B) * z;
    base = mexp >= 0 ? base * RatFun(Poly::monomial(fld, var, 1, static_cast<int>(mexp)))
                     : base / RatFun(Poly::monomial(fld, var, 1, static_cast<int>(-mexp)));
    auto make = [&](const std::vector<KConst>& v) {
      RatFun C(Poly(fld, var, v));
      return base * shift(C, Q) / C;
    };
    for (auto& v : ker) add(make(v));
    if (ker.size() >= 2) {
      family = true;
      std::vector<KConst> s(ker[0].size());
      for (size_t i = 0; i < s.size(); ++i) s[i] = ker[0][i] + ker[1][i];
      add(make(s));
    }
  }

  void run() {
    Poly D = a.den() * b.den() / gcd(a.den(), b.den());
    Poly p2 = D;
    Poly p1 = a.is_zero() ? Poly(fld, var, {}) : a.num() * (D / a.den());
    Poly p0 = b.num() * (D / b.den());
    const long v0 = p0.valuation(), v2 = p2.valuation();
    const long v1 = p1.is_zero() ? 0 : p1.valuation();
    const Poly p0s = p0.strip_valuation(), p2s = p2.strip_valuation();
    const Poly p1s = p1.is_zero() ? p1 : p1.strip_valuation();
    // x-adic valuation of u: the least of v0, v1 + m, v2 + 2m is attained twice.
    std::set<long> ms;
    if ((v0 - v2) % 2 == 0) ms.insert((v0 - v2) / 2);
    if (!p1.is_zero()) {
      ms.insert(v0 - v1);
      ms.insert(v1 - v2);
    }
    auto fa = factor_with_basis(p0s.monic(), basis);
    // sigma(B) | p2, so B ranges over monic divisors of sigma^-1(p2).
    const KConst Qinv = Q.inverse();
    std::vector<Poly> sbasis;
    for (auto& P : basis) sbasis.push_back(P.scale_var(Qinv).monic());
    auto fb = factor_with_basis(p2s.scale_var(Qinv).monic(), sbasis);
    std::vector<Divisor> As = divisors(fa), Bs = divisors(fb);

    std::map<std::pair<int, KConst>, std::vector<size_t>, PairLess> agroups;
    std::vector<long> arank(As.size());
    std::set<int> adeg, bdeg;
    for (size_t i = 0; i < As.size(); ++i) {
      auto [c, r] = split_q(As[i].at_zero);
      arank[i] = r;
      agroups[{As[i].degree, c}].push_back(i);
      adeg.insert(As[i].degree);
    }
    for (auto& B : Bs) bdeg.insert(B.degree);
    std::set<int> deltas;
    for (int x : adeg)
      for (int y : bdeg) deltas.insert(x - y);

    for (long m : ms) {
      const long e = std::min({v0, p1.is_zero() ? v0 : m + v1, 2 * m + v2});
      std::vector<KConst> tc(3);
      if (v0 == e) tc[0] = p0s[0];
      if (!p1.is_zero() && m + v1 == e) tc[1] = p1s[0];
      if (2 * m + v2 == e) tc[2] = Q.pow(m) * p2s[0];
      Poly T = Poly(fld, Var::X, tc).strip_valuation();
      if (T.degree() < 1) continue;
      for (int delta : deltas) {
        const long d0 = v0 + p0s.degree() - delta;
        const long d1 = p1.is_zero() ? d0 : m + p1.degree();
        const long d2 = 2 * m + p2.degree() + delta;
        const long top = std::max({d0, d1, d2});
        std::vector<KConst> lc(3);
        if (d0 == top) lc[0] = p0s.lead();
        if (!p1.is_zero() && d1 == top) lc[1] = p1.lead();
        if (d2 == top) lc[2] = Q.pow(m + delta) * p2s.lead();
        Poly L = Poly(fld, Var::X, lc).strip_valuation();
        if (L.degree() < 1) continue;
        // kappa = t / l = A(0) / (B(0) Q^d).
        Poly R = scaled_resultant(L, T);
        if (R.is_zero()) fail(ErrorCode::Internal, "degenerate boundary resultant");
        if (R.degree() < 1) continue;
        for (auto& [f, mult] : factor(R).factors) {
          if (f.degree() != 1 || f[0].is_zero()) continue;
          const KConst kappa = -f[0];
          Poly troots = gcd(T, L.scale_var(kappa.inverse()));
          if (troots.degree() < 1) continue;
          for (auto& B : Bs) {
            const int da = B.degree + delta;
            if (da < 0) continue;
            auto [c, r] = split_q(kappa * B.at_zero);
            auto it = agroups.find({da, c});
            if (it == agroups.end()) continue;
            Poly Bp;
            bool built = false;
            for (size_t ai : it->second) {
              const long d = arank[ai] - r;
              if (d < 0) continue;
              if (!built) {
                Bp = expand(fb, B.exps, fld, var);
                built = true;
              }
              Poly Ap = expand(fa, As[ai].exps, fld, var);
              solve_pair(m, Ap, Bp, static_cast<int>(d), As[ai].at_zero / B.at_zero, troots, p0, p1, p2);
            }
          }
        }
      }
    }
  }
};

RiccatiOutcome classify_solutions(Engine& eng, FieldTag tag) {
  RiccatiOutcome out;
  out.field = tag;
  out.solutions = eng.found;
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const RatFun& x, const RatFun& y) { return compare(x, y) < 0; });
  const size_t n = out.solutions.size();
  if (eng.family || n >= 3) {
    out.tag = SolutionCount::InfinitelyMany;
    out.solutions.resize(3);
  } else {
    out.tag = n == 0 ? SolutionCount::NoSolution : n == 1 ? SolutionCount::One : SolutionCount::Two;
  }
  return out;
}

RatFun lift(const RatFun& f, FieldTag tag) { return tag == FieldTag::K2 ? to_k2(f) : f; }

}  // namespace

bool is_riccati_solution(const RatFun& u, const RatFun& a, const RatFun& b, int step) {
  KConst Q = shift_constant(u.field() ? u.field() : b.field(), u.var(), step);
  return (u * shift(u, Q) + a * u + b).is_zero();
}

std::pair<RatFun, RatFun> riccati2_coefficients(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) fail(ErrorCode::ZeroA, "second Riccati equation needs a != 0");
  if (b.is_zero()) fail(ErrorCode::ZeroB, "Riccati equation needs b != 0");
  RatFun c = sigma(b / a, 2) - sigma(a) + sigma(b) / a;
  RatFun d = sigma(b) * b / (a * a);
  return {c, d};
}

RiccatiOutcome riccati_solve(const RatFun& a, const RatFun& b, FieldTag field) {
  if (b.is_zero()) fail(ErrorCode::ZeroB, "Riccati equation needs b != 0");
  RatFun al = lift(a, field), bl = lift(b, field);
  Engine eng(al, bl, 1, {al.num(), al.den(), bl.num(), bl.den()});
  eng.run();
  return classify_solutions(eng, field);
}

RiccatiOutcome riccati2_solve(const RatFun& a, const RatFun& b, FieldTag field) {
  if (a.is_zero()) fail(ErrorCode::ZeroA, "second Riccati equation needs a != 0");
  if (b.is_zero()) fail(ErrorCode::ZeroB, "Riccati equation needs b != 0");
  RatFun al = lift(a, field), bl = lift(b, field);
  // The coefficients are computed before lifting, where degrees are halved.
  auto [c, d] = riccati2_coefficients(a, b);
  if (field == FieldTag::K2) {
    c = to_k2(c);
    d = to_k2(d);
  }
  std::vector<Poly> pieces;
  for (const Poly& p : {al.num(), al.den(), bl.num(), bl.den()})
    for (int k = 0; k <= 2; ++k) pieces.push_back(p.scale_var(sigma_base(p.field(), p.var()).pow(k)));
  Engine eng(c, d, 2, pieces);
  eng.run();
  return classify_solutions(eng, field);
}

ReducedForm reduced_form(const RatFun& u, int step) {
  if (u.is_zero()) fail(ErrorCode::ZeroInput, "reduced_form of zero");
  const FieldPtr& fld = u.field();
  const Var v = u.var();
  const KConst Q = shift_constant(fld, v, step);
  ReducedForm rf;
  rf.h = u.num().lead();
  rf.n = u.num().valuation() - u.den().valuation();
  rf.g = RatFun::constant(fld, v, 1);
  auto num = factor(u.num().strip_valuation()).factors;
  auto den = factor(u.den().strip_valuation()).factors;
  // Cancel shift-equivalent pairs: P2 = c * P1(Q^l v) gives P1/P2 = c^-1 sigma(g)/g.
  for (auto& [P1, e1] : num) {
    for (auto& [P2, e2] : den) {
      if (e1 == 0) break;
      if (e2 == 0) continue;
      auto sc = shift_class(P1, P2, Q);
      if (!sc) continue;
      const auto [l, c] = *sc;
      const int k = std::min(e1, e2);
      Poly chain = Poly::constant(fld, v, 1);
      RatFun gp;
      if (l > 0) {
        for (long i = 0; i < l; ++i) chain = chain * P1.scale_var(Q.pow(i));
        gp = RatFun(chain).inverse();
      } else {
        for (long i = l; i < 0; ++i) chain = chain * P1.scale_var(Q.pow(i));
        gp = RatFun(chain);
      }
      rf.h *= c.inverse().pow(k);
      rf.g *= gp.pow(k);
      e1 -= k;
      e2 -= k;
    }
  }
  rf.p1 = rf.p2 = Poly::constant(fld, v, 1);
  for (auto& [P, e] : num) rf.p1 = rf.p1 * P.pow(e);
  for (auto& [P, e] : den) rf.p2 = rf.p2 * P.pow(e);
  // Move Q^t out of h so that 0 <= nu(h)/nu(Q) < 1.
  mpq_class j(fld->valuation(rf.h), fld->valuation(Q));
  j.canonicalize();
  mpz_class t;
  mpz_fdiv_q(t.get_mpz_t(), j.get_num_mpz_t(), j.get_den_mpz_t());
  if (t != 0) {
    const long ti = t.get_si();
    rf.h /= Q.pow(ti);
    rf.g *= RatFun::variable(fld, v).pow(ti);
  }
  rf.g = rf.g * rf.g.num().lead().inverse();
  RatFun model = RatFun(rf.p1, rf.p2) * rf.h * RatFun::variable(fld, v).pow(rf.n) * shift(rf.g, Q) / rf.g;
  if (model != u) fail(ErrorCode::Internal, "reduced form failed verification");
  return rf;
}

std::optional<long> torsion_order(const RatFun& u, int step) {
  ReducedForm rf = reduced_form(u, step);
  if (rf.n != 0 || rf.p1.degree() > 0 || rf.p2.degree() > 0) return std::nullopt;
  auto pt = power_torsion(rf.h, shift_constant(u.field(), u.var(), step), u.field());
  if (!pt) return std::nullopt;
  return pt->first;
}

RatFun standard_imprimitive_r(const RatFun& a, const RatFun& b, const RatFun& e) {
  if (a.is_zero()) return b;
  auto [c, d] = riccati2_coefficients(a, b);
  if (!is_riccati_solution(e, c, d, 2)) fail(ErrorCode::NotARiccati2Solution, "e does not solve the second Riccati equation");
  return -a * sigma(a) + sigma(b) + a * sigma(b / a, 2) + a * sigma(e, 2);
}

bool gauge_check(const RatFun& a, const RatFun& b, const RatFun& u1, const RatFun& u2) {
  if (u1 == u2) fail(ErrorCode::EqualSolutions, "gauge transformation needs distinct solutions");
  const FieldPtr& f = b.field();
  const Var v = b.var();
  RatFun one = RatFun::constant(f, v, 1), zero = RatFun::constant(f, v, 0);
  RatFun s = (u1 - u2).inverse();
  RatFun T[2][2] = {{u2 * s, -s}, {u1 * s, -s}};
  RatFun A[2][2] = {{zero, one}, {-b, -a}};
  RatFun lhs[2][2], rhs[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      lhs[i][j] = sigma(T[i][0]) * A[0][j] + sigma(T[i][1]) * A[1][j];
      rhs[i][j] = (i == 0 ? u1 : u2) * T[i][j];
    }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (lhs[i][j] != rhs[i][j]) return false;
  return true;
}

}  // namespace qgalois
