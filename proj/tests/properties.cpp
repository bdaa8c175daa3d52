#include "properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "qgalois/errors.hpp"
#include "qgalois/residues.hpp"
#include "qgalois/riccati.hpp"

namespace qgalois::test {

long Gen::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

KConst Gen::rational() {
  long n = 0;
  while (n == 0) n = integer(-6, 6);
  mpq_class v(n, integer(1, 3));
  v.canonicalize();
  return KConst(v);
}

KConst Gen::constant() {
  KConst c = rational();
  const long k = integer(-1, 1);
  return k == 0 ? c : c * field_->q().pow(k);
}

Poly Gen::poly(int max_degree, Var v) {
  const int d = static_cast<int>(integer(0, max_degree));
  std::vector<KConst> cs;
  for (int i = 0; i <= d; ++i) cs.push_back(i < d && integer(0, 3) == 0 ? KConst(0) : constant());
  return Poly(field_, v, cs);
}

Poly Gen::monic_linear() {
  return Poly(field_, Var::X, {-constant(), KConst(1)});
}

RatFun Gen::ratfun(int max_degree, Var v) {
  Poly d = Poly::constant(field_, v, 1);
  for (long k = integer(0, max_degree); k > 0; --k) d = d * Poly(field_, v, {-constant(), KConst(1)});
  return RatFun(poly(max_degree, v), d);
}

RatFun Gen::nonzero_ratfun(int max_degree, Var v) {
  for (;;) {
    RatFun f = ratfun(max_degree, v);
    if (!f.is_zero()) return f;
  }
}

RatFun Gen::hypergeometric_term(int factors) {
  RatFun acc = RatFun::constant(field_, Var::X, constant());
  std::vector<KConst> roots;
  for (int i = 0; i < factors; ++i) {
    KConst beta = !roots.empty() && integer(0, 2) == 0
                      ? roots[static_cast<std::size_t>(integer(0, static_cast<long>(roots.size()) - 1))] *
                            field_->q().pow(integer(-2, 2))
                      : constant();
    roots.push_back(beta);
    RatFun lin(Poly(field_, Var::X, {-beta, KConst(1)}));
    acc *= lin.pow(integer(0, 1) ? integer(1, 2) : -integer(1, 2));
  }
  return acc;
}

namespace {

struct Runner {
  PropertyOutcome out;
  explicit Runner(std::string name) { out.name = std::move(name); }
  void run(int n, const std::function<bool(int, std::string&)>& body) {
    for (int i = 0; i < n; ++i) {
      std::string detail;
      bool ok = false;
      try {
        ok = body(i, detail);
      } catch (const std::exception& e) {
        detail += std::string(" threw ") + e.what();
      }
      ++out.instances;
      if (!ok) {
        ++out.failures;
        if (out.first_failure.empty()) out.first_failure = "#" + std::to_string(i) + ": " + detail;
      }
    }
  }
};

using Key = std::pair<Poly, int>;
struct KeyLess {
  bool operator()(const Key& a, const Key& b) const {
    int c = compare(a.first, b.first);
    return c != 0 ? c < 0 : a.second < b.second;
  }
};
using KeySet = std::set<Key, KeyLess>;

void add_keys(KeySet& k, const ResidueTable& t) {
  for (const auto& e : t.entries) k.insert({e.rep, e.j});
}

RatFun constant_fn(const FieldPtr& f, const KConst& c, Var v = Var::X) { return RatFun::constant(f, v, c); }

// a, b with Riccati solutions u1 != u2.
std::pair<RatFun, RatFun> from_solutions(const RatFun& u1, const RatFun& u2) {
  RatFun a = -(u1 * sigma(u1) - u2 * sigma(u2)) / (u1 - u2);
  RatFun b = -(u1 * sigma(u1)) - a * u1;
  return {a, b};
}

std::vector<Relation> sorted_relations(std::vector<Relation> rs) {
  std::sort(rs.begin(), rs.end(), [](const Relation& a, const Relation& b) {
    return std::tie(a.m1, a.m2, a.order, a.c) < std::tie(b.m1, b.m2, b.order, b.c);
  });
  // Sources record how a relation was found, not the group.
  for (auto& r : rs) r.source = Relation::Source::Residues;
  return rs;
}

PropertyOutcome sigma_delta(std::uint64_t seed, int n) {
  Runner r("sigma-delta commutation");
  Gen g(Field::create({FieldMode::Formal, 0, 1}), seed);
  r.run(n, [&](int i, std::string& d) {
    RatFun f = g.ratfun(4, i % 2 ? Var::X2 : Var::X);
    d = f.to_string();
    return sigma(delta(f)) == delta(sigma(f)) && sigma(delta(f), 2) == delta(sigma(f, 2));
  });
  return r.out;
}

PropertyOutcome residue_linearity(std::uint64_t seed, int n) {
  Runner r("residue linearity");
  Gen g(Field::create({FieldMode::Formal, 0, 0}), seed);
  r.run(n, [&](int i, std::string& d) {
    RatFun f = g.hypergeometric_term(3) + g.ratfun(2), h = g.hypergeometric_term(3) + g.ratfun(2);
    KConst c1 = g.constant(), c2 = g.constant();
    const int step = i % 3 == 0 ? 2 : 1;
    d = f.to_string() + " ; " + h.to_string();
    ResidueTable tf = residue_table(f, step), th = residue_table(h, step);
    ResidueTable ts = residue_table(f * c1 + h * c2, step);
    KeySet keys;
    add_keys(keys, tf);
    add_keys(keys, th);
    add_keys(keys, ts);
    bool ok = ts.at_infinity == tf.at_infinity * c1 + th.at_infinity * c2;
    for (const auto& [rep, j] : keys)
      ok = ok && ts.lookup(rep, j) == tf.lookup(rep, j) * c1 + th.lookup(rep, j) * c2;
    return ok;
  });
  return r.out;
}

PropertyOutcome summability(std::uint64_t seed, int n) {
  Runner r("sigma(h) - h summable with witness");
  Gen g(Field::create({FieldMode::Formal, 0, 0}), seed);
  r.run(n, [&](int i, std::string& d) {
    const int step = i % 4 == 0 ? 2 : 1;
    RatFun h = g.ratfun(2) + g.hypergeometric_term(1);
    RatFun F = sigma(h, step) - h;
    d = h.to_string();
    if (!is_summable(F, step)) return false;
    auto w = telescope_witness(F, step);
    if (!w || sigma(*w, step) - *w != F) return false;
    // Adding a nonzero constant breaks summability.
    return !is_summable(F + constant_fn(g.field(), g.rational()), step);
  });
  return r.out;
}

PropertyOutcome transport(std::uint64_t seed, int n) {
  Runner r("delta transport r <= 3");
  Gen g(Field::create({FieldMode::Formal, 0, 0}), seed);
  r.run(n, [&](int i, std::string& d) {
    RatFun a = g.hypergeometric_term(2);
    std::vector<Poly> classes;
    for (const Poly& P : {a.num(), a.den()})
      if (P.degree() > 0)
        for (const auto& [f, k] : factor(P).factors) classes.push_back(f);
    if (classes.empty()) return true;
    const Poly& cls = classes[static_cast<std::size_t>(i) % classes.size()];
    d = a.to_string() + " at " + cls.to_string() + ", r = " + std::to_string(i % 4);
    return delta_transport_check(a, i % 4, cls);
  });
  return r.out;
}

PropertyOutcome dlog_consistency(std::uint64_t seed, int n) {
  Runner r("dlog residues and degree");
  Gen g(Field::create({FieldMode::Formal, 0, 0}), seed);
  r.run(n, [&](int i, std::string& d) {
    RatFun u = g.hypergeometric_term(4) * RatFun::variable(g.field(), Var::X).pow(g.integer(-2, 2));
    if (Poly p = g.poly(2); i % 3 == 0 && !p.is_zero()) u *= RatFun(p);
    d = u.to_string();
    DlogResidueData D = dlog_residue_data(u);
    ResidueTable T = residue_table(dlog(u));
    if (!(T.at_infinity == KConst(D.degree_at_infinity))) return false;
    std::size_t j1 = 0;
    for (const auto& e : T.entries) {
      if (e.j != 1) return false;
      ++j1;
      Poly y = Poly::variable(g.field(), e.rep.var());
      if (e.value != (y * KConst(D.lookup(e.rep))) % e.rep) return false;
    }
    return j1 == D.orbit_integers.size();
  });
  return r.out;
}

PropertyOutcome reduced_forms(std::uint64_t seed, int n) {
  Runner r("reduced form invariants");
  Gen g(Field::create({FieldMode::Formal, 0, 0}), seed);
  r.run(n, [&](int i, std::string& d) {
    const int step = i % 4 == 0 ? 2 : 1;
    RatFun u = g.hypergeometric_term(4) * RatFun::variable(g.field(), Var::X).pow(g.integer(-2, 2));
    d = u.to_string();
    ReducedForm rf = reduced_form(u, step);
    const KConst Q = shift_constant(g.field(), Var::X, step);
    RatFun v = RatFun::variable(g.field(), Var::X);
    RatFun rebuilt = RatFun::constant(g.field(), Var::X, rf.h) * v.pow(rf.n) * RatFun(rf.p1, rf.p2) *
                     sigma(rf.g, step) / rf.g;
    if (rebuilt != u) return false;
    for (const Poly* p : {&rf.p1, &rf.p2})
      if (!p->lead().is_one() || (*p)[0].is_zero()) return false;
    for (const auto& [f1, k1] : factor(rf.p1).factors)
      for (const auto& [f2, k2] : factor(rf.p2).factors)
        if (shift_class(f1, f2, Q)) return false;
    // h is normalised modulo Q^Z.
    const long nu = g.field()->valuation(rf.h), nq = g.field()->valuation(Q);
    return nu >= 0 && nu < nq;
  });
  return r.out;
}

PropertyOutcome riccati_k1(std::uint64_t seed, int n) {
  Runner r("Riccati solutions substitute to zero");
  Gen g(Field::create({FieldMode::Formal, 0, 0}), seed);
  r.run(n, [&](int i, std::string& d) {
    RatFun u1 = g.nonzero_ratfun(1), u2 = g.nonzero_ratfun(1);
    if (u1 == u2) u2 = u2 * constant_fn(g.field(), 2);
    RatFun a, b;
    if (i % 4 == 3) {
      a = g.ratfun(2);
      b = g.nonzero_ratfun(2);
    } else {
      std::tie(a, b) = from_solutions(u1, u2);
    }
    d = a.to_string() + " ; " + b.to_string();
    if (b.is_zero()) return true;
    RiccatiOutcome out;
    try {
      out = riccati_solve(a, b, FieldTag::K1);
    } catch (const Error& e) {
      // Random coefficients may need constants outside K; that is reported, not solved.
      return i % 4 == 3 && e.code() == ErrorCode::UnsupportedConstant;
    }
    for (const auto& u : out.solutions)
      if (!is_riccati_solution(u, a, b)) return false;
    if (i % 4 == 3 || out.tag == SolutionCount::InfinitelyMany) return true;
    auto has = [&](const RatFun& u) { return std::find(out.solutions.begin(), out.solutions.end(), u) != out.solutions.end(); };
    return out.tag == SolutionCount::Two && has(u1) && has(u2);
  });
  return r.out;
}

PropertyOutcome riccati_k2(std::uint64_t seed, int n) {
  Runner r("Riccati conjugate closure over k2");
  Gen g(Field::create({FieldMode::Formal, 0, 1}), seed);
  r.run(n, [&](int i, std::string& d) {
    RatFun x2 = RatFun::variable(g.field(), Var::X2);
    RatFun u = to_k2(g.ratfun(1)) + x2 * RatFun::constant(g.field(), Var::X2, g.constant());
    if (i % 2) u *= to_k2(g.hypergeometric_term(1));
    RatFun ubar = conjugate(u);
    auto [a2, b2] = from_solutions(u, ubar);
    auto a = from_k2(a2), b = from_k2(b2);
    d = u.to_string();
    if (!a || !b || b->is_zero()) return false;
    RiccatiOutcome out = riccati_solve(*a, *b, FieldTag::K2);
    for (const auto& s : out.solutions)
      if (!is_riccati_solution(s, a2, b2)) return false;
    if (out.tag == SolutionCount::InfinitelyMany) return true;
    for (const auto& s : out.solutions)
      if (std::find(out.solutions.begin(), out.solutions.end(), conjugate(s)) == out.solutions.end()) return false;
    return std::find(out.solutions.begin(), out.solutions.end(), u) != out.solutions.end();
  });
  return r.out;
}

PropertyOutcome gauge(std::uint64_t seed, int n) {
  Runner r("gauge invariance");
  Gen formal(Field::create({FieldMode::Formal, 0, 0}), seed);
  Gen concrete(Field::create({FieldMode::Concrete, mpq_class(3), 0}), seed);
  r.run(n, [&](int i, std::string& d) {
    Gen& g = i % 2 ? concrete : formal;
    const FieldPtr& K = g.field();
    i /= 2;
    RatFun a, b;
    RatFun u = g.hypergeometric_term(1);
    switch (i % 3) {
      case 0: {
        RatFun u2 = g.hypergeometric_term(1);
        if (u2 == u) u2 = u2 * KConst(2);
        std::tie(a, b) = from_solutions(u, u2);
        break;
      }
      case 1: {
        // Reducible: b/(u sigma(u)) = sigma(w)/w.
        RatFun w = g.hypergeometric_term(1);
        b = u * sigma(u) * sigma(w) / w;
        a = -(u * sigma(u) + b) / u;
        break;
      }
      default: {
        RatFun w = g.nonzero_ratfun(1);
        b = u * sigma(u) * sigma(w) / w * constant_fn(K, g.rational());
        a = -(u * sigma(u) + b) / u;
      }
    }
    RatFun f = g.hypergeometric_term(1);
    RatFun a2 = a * sigma(f) / sigma(f, 2), b2 = b * f / sigma(f, 2);
    d = a.to_string() + " ; " + b.to_string() + " ; f = " + f.to_string();
    GaloisResult r1 = compute_galois_groups(a, b), r2 = compute_galois_groups(a2, b2);
    return r1.tag == r2.tag && same_group(r1.G, r2.G) && same_group(r1.H, r2.H);
  });
  return r.out;
}

PropertyOutcome lattice(std::uint64_t seed, int n) {
  Runner r("Z^2/M torsion-free");
  Gen g(Field::create({FieldMode::Formal, 0, 0}), seed);
  r.run(n, [&](int i, std::string& d) {
    RatFun u1 = g.hypergeometric_term(3);
    RatFun u2 = i % 2 ? u1.pow(g.integer(-2, 2)) * g.hypergeometric_term(1) : g.hypergeometric_term(3);
    if (u2.is_zero()) u2 = g.hypergeometric_term(2);
    d = u1.to_string() + " ; " + u2.to_string();
    DlogResidueData D1 = dlog_residue_data(u1), D2 = dlog_residue_data(u2);
    std::set<Poly, PolyLess> reps;
    for (auto& [p, e] : D1.orbit_integers) reps.insert(p);
    for (auto& [p, e] : D2.orbit_integers) reps.insert(p);
    auto sat = [&](long m1, long m2) {
      for (const Poly& p : reps)
        if (m1 * D1.lookup(p) + m2 * D2.lookup(p) != 0) return false;
      return true;
    };
    for (long m1 = -4; m1 <= 4; ++m1)
      for (long m2 = -4; m2 <= 4; ++m2)
        for (long k : {2, 3})
          if (sat(k * m1, k * m2) && !sat(m1, m2)) return false;
    auto rel = std::get<DiagonalTorus>(group_diagonalizable(u1, u2)).relations;
    for (const auto& x : rel) {
      if (!sat(x.m1, x.m2)) return false;
      if (x.kind != Relation::Kind::Torsion && std::gcd(x.m1, x.m2) != 1) return false;
    }
    return true;
  });
  return r.out;
}

PropertyOutcome trichotomy(std::uint64_t seed, int n) {
  Runner r("unipotent trichotomy");
  Gen g(Field::create({FieldMode::Formal, 0, 0}), seed);
  const FieldPtr& K = g.field();
  r.run(n, [&](int i, std::string& d) {
    RatFun u = g.hypergeometric_term(1);
    RatFun du = dlog(u);
    RatFun h = g.ratfun(1);
    RatFun w;
    switch (i % 4) {
      case 0: w = du * g.rational() + delta(du) * g.rational() + sigma(h) - h + constant_fn(K, g.rational()); break;
      case 1: w = du * g.rational() + sigma(h) - h; break;
      case 2: w = g.hypergeometric_term(1); break;
      default: w = g.nonzero_ratfun(1);
    }
    if (w.is_zero()) w = constant_fn(K, 1);
    RatFun b = u * sigma(u) * sigma(w) / w, a = -(u * sigma(u) + b) / u;
    d = u.to_string() + " ; w = " + w.to_string();
    Certificates cert;
    auto t = std::get<ReducibleTriangular>(group_reducible(a, b, u, &cert));
    switch (t.unipotent) {
      case Unipotent::FullGa: return !t.link.has_value();
      case Unipotent::GaDeltaConstant:
      case Unipotent::Trivial: {
        if (!t.link || !cert.w || !cert.link_c) return false;
        if (t.link->c_zero != (t.unipotent == Unipotent::Trivial)) return false;
        return is_summable(t.link->L.apply(du) - *cert.w - constant_fn(K, *cert.link_c));
      }
    }
    return false;
  });
  return r.out;
}

// Taylor coefficients of p at beta up to order k.
std::vector<KConst> taylor(const Poly& p, const KConst& beta, int k) {
  std::vector<KConst> out;
  Poly d = p;
  mpz_class fact = 1;
  for (int i = 0; i < k; ++i) {
    if (i > 0) {
      d = d.derivative();
      fact *= i;
    }
    out.push_back(d.eval(beta) * KConst(mpq_class(mpq_class(1) / mpq_class(fact))));
  }
  return out;
}

}  // namespace

bool same_group(const GroupDesc& g1, const GroupDesc& g2) {
  if (g1.index() != g2.index()) return false;
  if (auto* d1 = std::get_if<DiagonalTorus>(&g1)) {
    auto r1 = sorted_relations(d1->relations);
    return r1 == sorted_relations(std::get<DiagonalTorus>(g2).relations) ||
           r1 == sorted_relations(std::get<DiagonalTorus>(swap_characters(g2)).relations);
  }
  if (auto* t1 = std::get_if<ReducibleTriangular>(&g1)) {
    auto t2 = std::get<ReducibleTriangular>(g2);
    return sorted_relations(t1->alpha_part) == sorted_relations(t2.alpha_part) && t1->unipotent == t2.unipotent &&
           t1->link == t2.link;
  }
  return g1 == g2;
}

std::vector<Property> properties() {
  return {sigma_delta, residue_linearity, summability, transport, dlog_consistency, reduced_forms,
          riccati_k1,  riccati_k2,        gauge,       lattice,   trichotomy};
}

std::vector<PropertyOutcome> run_properties(std::uint64_t seed, int n) {
  std::vector<PropertyOutcome> out;
  std::uint64_t k = 0;
  for (const auto& p : properties()) out.push_back(p(seed + ++k, n));
  return out;
}

PropertyOutcome residue_oracle(std::uint64_t seed, int n) {
  Runner r("residue table vs partial fractions");
  r.run(n, [&](int i, std::string& d) {
    FieldPtr K = i % 2 ? Field::create({FieldMode::Concrete, mpq_class(i % 4 == 1 ? 2 : -3), 0})
                       : Field::create({FieldMode::Formal, 0, 0});
    Gen g(K, seed + static_cast<std::uint64_t>(i));
    const KConst q = K->q();
    // Distinct nonzero roots, some on a common orbit, with multiplicities.
    std::vector<std::pair<KConst, int>> roots;
    const int count = static_cast<int>(g.integer(1, 4));
    while (static_cast<int>(roots.size()) < count) {
      KConst beta = !roots.empty() && g.integer(0, 1) ? roots.front().first * q.pow(g.integer(1, 2)) : g.rational();
      bool fresh = true;
      for (auto& [b, m] : roots) fresh = fresh && !(b == beta);
      if (fresh) roots.push_back({beta, static_cast<int>(g.integer(1, 3))});
    }
    Poly den = Poly::constant(K, Var::X, 1);
    for (auto& [b, m] : roots) den = den * Poly(K, Var::X, {-b, KConst(1)}).pow(static_cast<unsigned>(m));
    Poly num = g.poly(den.degree() + 1);
    if (num.is_zero()) num = Poly::constant(K, Var::X, 1);
    RatFun f(num, den);
    d = f.to_string();

    // Per root: alpha_j = [t^(m-j)] of num/(den/(x-beta)^m) expanded at beta.
    std::map<Poly, std::map<int, KConst>, PolyLess> expect;
    for (auto& [b, m] : roots) {
      Poly rest = Poly::constant(K, Var::X, 1);
      for (auto& [b2, m2] : roots)
        if (!(b2 == b)) rest = rest * Poly(K, Var::X, {-b2, KConst(1)}).pow(static_cast<unsigned>(m2));
      std::vector<KConst> N = taylor(num, b, m), D = taylor(rest, b, m), S(static_cast<std::size_t>(m), KConst(0));
      for (int k = 0; k < m; ++k) {
        KConst acc = N[static_cast<std::size_t>(k)];
        for (int l = 0; l < k; ++l) acc = acc - S[static_cast<std::size_t>(l)] * D[static_cast<std::size_t>(k - l)];
        S[static_cast<std::size_t>(k)] = acc * D[0].inverse();
      }
      Poly rep = orbit_representative(Poly(K, Var::X, {-b, KConst(1)}));
      const KConst b0 = -rep[0];
      long l = 0;
      for (long c = -12; c <= 12; ++c)
        if (b0 * q.pow(c) == b) l = c;
      if (!(b0 * q.pow(l) == b)) return false;
      for (int j = 1; j <= m; ++j) {
        KConst v = S[static_cast<std::size_t>(m - j)] * q.pow(-l * j);
        auto& slot = expect[rep][j];
        slot = slot + v;
      }
    }
    // Polynomial part constant term.
    Poly quo, rem;
    divmod(num, den, quo, rem);
    ResidueTable t = residue_table(f);
    if (!(t.at_infinity == quo[0])) return false;
    std::size_t nonzero = 0;
    for (auto& [rep, js] : expect)
      for (auto& [j, v] : js) {
        if (v.is_zero()) continue;
        ++nonzero;
        Poly got = t.lookup(rep, j);
        if (got.degree() != 0 || !(got[0] == v)) return false;
      }
    return nonzero == t.entries.size();
  });
  return r.out;
}

}  // namespace qgalois::test
