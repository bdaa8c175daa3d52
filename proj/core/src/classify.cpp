#include "qgalois/classify.hpp"

#include <map>
#include <numeric>
#include <set>

#include "qgalois/errors.hpp"
#include "qgalois/linalg.hpp"

namespace qgalois {

const char* case_tag_name(CaseTag t) {
  switch (t) {
    case CaseTag::Scalar: return "Scalar";
    case CaseTag::Diagonalizable: return "Diagonalizable";
    case CaseTag::ReducibleNonDiag: return "ReducibleNonDiag";
    case CaseTag::ImprimitiveQuadraticDiag: return "ImprimitiveQuadraticDiag";
    case CaseTag::ImprimitiveRational: return "ImprimitiveRational";
    case CaseTag::ImprimitiveQuadraticStd: return "ImprimitiveQuadraticStd";
    case CaseTag::Large: return "Large";
  }
  return "?";
}

const char* gm_kind_name(GmSubgroup::Kind k) {
  switch (k) {
    case GmSubgroup::Kind::Torsion: return "Torsion";
    case GmSubgroup::Kind::DeltaConstant: return "DeltaConstant";
    case GmSubgroup::Kind::DeltaLogConstant: return "DeltaLogConstant";
    case GmSubgroup::Kind::Full: return "Full";
  }
  return "?";
}

const char* relation_kind_name(Relation::Kind k) {
  switch (k) {
    case Relation::Kind::Torsion: return "Torsion";
    case Relation::Kind::DeltaConstantProduct: return "DeltaConstantProduct";
    case Relation::Kind::DeltaLogConstantProduct: return "DeltaLogConstantProduct";
  }
  return "?";
}

const char* relation_source_name(Relation::Source s) {
  switch (s) {
    case Relation::Source::Residues: return "residues";
    case Relation::Source::ReducedForm: return "reduced_form";
    case Relation::Source::MultLattice: return "mult_lattice";
  }
  return "?";
}

const char* unipotent_name(Unipotent u) {
  switch (u) {
    case Unipotent::FullGa: return "FullGa";
    case Unipotent::GaDeltaConstant: return "GaDeltaConstant";
    case Unipotent::Trivial: return "Trivial";
  }
  return "?";
}

const char* imprimitive_family_name(ImprimitiveFamily f) {
  switch (f) {
    case ImprimitiveFamily::DmMinus: return "DmMinus";
    case ImprimitiveFamily::DmPlus: return "DmPlus";
    case ImprimitiveFamily::Klein: return "Klein";
    case ImprimitiveFamily::FullPair: return "FullPair";
  }
  return "?";
}

const char* imprimitive_extra_name(ImprimitiveExtra e) {
  switch (e) {
    case ImprimitiveExtra::None: return "None";
    case ImprimitiveExtra::LogDerivDeltaConstant: return "LogDerivDeltaConstant";
    case ImprimitiveExtra::DeltaConstantDet: return "DeltaConstantDet";
  }
  return "?";
}

RatFun LinearDeltaOp::apply(const RatFun& f) const {
  RatFun acc = RatFun::constant(f.field(), f.var(), 0);
  RatFun d = f;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) d = delta(d);
    if (!coeffs[i].is_zero()) acc += d * coeffs[i];
  }
  return acc;
}

namespace {

GmSubgroup erase_gm(const GmSubgroup& g) {
  if (g.kind == GmSubgroup::Kind::Torsion) return g;
  return {GmSubgroup::Kind::Full, 0};
}

std::vector<Relation> torsion_only(const std::vector<Relation>& rs) {
  std::vector<Relation> out;
  for (const auto& r : rs)
    if (r.kind == Relation::Kind::Torsion) out.push_back(r);
  return out;
}

std::vector<Relation> swapped(std::vector<Relation> rs) {
  for (auto& r : rs) {
    std::swap(r.m1, r.m2);
    if (r.m1 < 0 || (r.m1 == 0 && r.m2 < 0)) {
      r.m1 = -r.m1;
      r.m2 = -r.m2;
      r.c = -r.c;
    }
  }
  return rs;
}

KConst shift_q(const RatFun& u, int step) { return shift_constant(u.field(), u.var(), step); }

RatFun sigma_step(const RatFun& f, int step) { return scale_var(f, shift_q(f, step)); }

RatFun monomial_power(const RatFun& u1, long m1, const RatFun& u2, long m2) { return u1.pow(m1) * u2.pow(m2); }

void record_ratio(Certificates* cert, std::string label, const RatFun& u, const TorsionWitness& tw, int step) {
  if (cert) cert->sigma_ratios.push_back({std::move(label), u, tw.order, tw.f, step});
}

// c with F - c summable, and the telescoper; nothing when some orbit residue survives.
std::optional<KConst> summable_constant(const RatFun& F, int step, Certificates* cert, const std::string& label) {
  auto c = summable_plus_constant(F, step);
  if (!c) return std::nullopt;
  RatFun rest = F - RatFun::constant(F.field(), F.var(), *c);
  auto f = telescope_witness(rest, step);
  if (!f) fail(ErrorCode::Internal, "summable function without telescoper: " + label);
  if (cert) cert->telescopers.push_back({label, F, *c, *f, step});
  return c;
}

std::string power_label(const std::string& a, long ma, const std::string& b, long mb) {
  auto part = [](const std::string& s, long m) { return m == 1 ? s : s + "^" + std::to_string(m); };
  if (ma == 0) return part(b, mb);
  if (mb == 0) return part(a, ma);
  return part(a, ma) + "*" + part(b, mb);
}

// Delta-relation on alpha1^m1 alpha2^m2 given c = m1 c1 + m2 c2.
Relation delta_relation(long m1, long m2, long c) {
  Relation r;
  r.m1 = m1;
  r.m2 = m2;
  r.c = c;
  r.kind = c == 0 ? Relation::Kind::DeltaConstantProduct : Relation::Kind::DeltaLogConstantProduct;
  r.source = Relation::Source::Residues;
  return r;
}

Relation torsion_relation(long m1, long m2, long order, Relation::Source src) {
  Relation r;
  r.m1 = m1;
  r.m2 = m2;
  r.kind = Relation::Kind::Torsion;
  r.order = order;
  r.source = src;
  return r;
}

// D_m^+ / D_m^- from the diagonal torsion m and det(H).
ImprimitiveFamily dihedral_family(long m, const std::optional<TorsionWitness>& det) {
  const long d = det ? det->order : 0;
  if (m % 2 == 0) {
    if (d == m) return ImprimitiveFamily::DmPlus;
    if (d == 2 * m) return ImprimitiveFamily::DmMinus;
  } else {
    if (d == m) return ImprimitiveFamily::DmMinus;
    if (d == 2 * m) return ImprimitiveFamily::DmPlus;
  }
  throw Error(ErrorCode::InconsistentCase, "det(H) is not mu_m or mu_2m for m = " + std::to_string(m));
}

ImprimitiveExtra pair_extra(ImprimitiveFamily fam, const RatFun& b, Certificates* cert) {
  if (fam == ImprimitiveFamily::DmMinus || fam == ImprimitiveFamily::DmPlus) return ImprimitiveExtra::None;
  auto c = summable_constant(dlog(b), 1, cert, "dlog(b)");
  if (cert) cert->dlog_b_constant = c;
  if (!c) return ImprimitiveExtra::None;
  if (!c->is_zero()) return ImprimitiveExtra::LogDerivDeltaConstant;
  return fam == ImprimitiveFamily::FullPair ? ImprimitiveExtra::DeltaConstantDet : ImprimitiveExtra::None;
}

struct Routing {
  CaseTag tag = CaseTag::Large;
  std::vector<RatFun> solutions;  // ric1 solutions for cases 1-4
  std::optional<RatFun> e;        // k1 solution of ric2
};

void record_riccati(Certificates* cert, int eq, const RiccatiOutcome& out) {
  if (cert) cert->riccati.push_back({eq, out.field, out.tag, out.solutions});
}

Routing route(const RatFun& a, const RatFun& b, Certificates* cert) {
  if (b.is_zero()) fail(ErrorCode::ZeroB, "the equation needs b != 0");
  Routing r;
  RiccatiOutcome k1 = riccati_solve(a, b, FieldTag::K1);
  record_riccati(cert, 1, k1);
  switch (k1.tag) {
    case SolutionCount::InfinitelyMany: r.tag = CaseTag::Scalar; break;
    case SolutionCount::Two: r.tag = CaseTag::Diagonalizable; break;
    case SolutionCount::One: r.tag = CaseTag::ReducibleNonDiag; break;
    case SolutionCount::NoSolution: break;
  }
  if (k1.tag != SolutionCount::NoSolution) {
    r.solutions = k1.solutions;
    return r;
  }
  RiccatiOutcome k2 = riccati_solve(a, b, FieldTag::K2);
  record_riccati(cert, 1, k2);
  if (k2.tag == SolutionCount::Two) {
    r.tag = CaseTag::ImprimitiveQuadraticDiag;
    r.solutions = k2.solutions;
    return r;
  }
  if (k2.tag != SolutionCount::NoSolution)
    fail(ErrorCode::InconsistentCase, "k2 Riccati solutions without a conjugate pair");
  if (a.is_zero()) {
    r.tag = CaseTag::ImprimitiveRational;
    return r;
  }
  RiccatiOutcome e1 = riccati2_solve(a, b, FieldTag::K1);
  record_riccati(cert, 2, e1);
  if (e1.tag != SolutionCount::NoSolution) {
    r.tag = CaseTag::ImprimitiveRational;
    r.e = e1.solutions.front();
    return r;
  }
  RiccatiOutcome e2 = riccati2_solve(a, b, FieldTag::K2);
  record_riccati(cert, 2, e2);
  r.tag = e2.tag == SolutionCount::NoSolution ? CaseTag::Large : CaseTag::ImprimitiveQuadraticStd;
  return r;
}

}  // namespace

GroupDesc erase_differential(const GroupDesc& g) {
  return std::visit(
      [](const auto& d) -> GroupDesc {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ScalarGroup>) {
          return ScalarGroup{erase_gm(d.sub)};
        } else if constexpr (std::is_same_v<T, DiagonalTorus>) {
          return DiagonalTorus{torsion_only(d.relations)};
        } else if constexpr (std::is_same_v<T, ReducibleTriangular>) {
          return ReducibleTriangular{torsion_only(d.alpha_part), Unipotent::FullGa, std::nullopt};
        } else if constexpr (std::is_same_v<T, Imprimitive>) {
          return Imprimitive{d.family, d.m, ImprimitiveExtra::None};
        } else {
          return LargeGroup{erase_gm(d.det)};
        }
      },
      g);
}

GroupDesc swap_characters(const GroupDesc& g) {
  if (auto* d = std::get_if<DiagonalTorus>(&g)) return DiagonalTorus{swapped(d->relations)};
  return g;
}

std::optional<TorsionWitness> torsion_witness(const RatFun& u, int step) {
  ReducedForm rf = reduced_form(u, step);
  if (rf.n != 0 || rf.p1.degree() > 0 || rf.p2.degree() > 0) return std::nullopt;
  const KConst Q = shift_q(u, step);
  auto pt = power_torsion(rf.h, Q, u.field());
  if (!pt) return std::nullopt;
  const auto [m, t] = *pt;
  // h^m = Q^t and Q^t = sigma^step(v^t) / v^t.
  RatFun f = RatFun::variable(u.field(), u.var()).pow(t) * rf.g.pow(m);
  if (u.pow(m) * f != sigma_step(f, step)) fail(ErrorCode::Internal, "torsion witness failed verification");
  return TorsionWitness{m, f};
}

GmSubgroup gm_subgroup(const RatFun& u, int step, Certificates* cert) {
  if (u.is_zero()) fail(ErrorCode::ZeroInput, "gm_subgroup of zero");
  if (auto tw = torsion_witness(u, step)) {
    record_ratio(cert, "det", u, *tw, step);
    return {GmSubgroup::Kind::Torsion, tw->order};
  }
  auto c = summable_constant(dlog(u), step, cert, "dlog(det)");
  if (!c) return {GmSubgroup::Kind::Full, 0};
  return {c->is_zero() ? GmSubgroup::Kind::DeltaConstant : GmSubgroup::Kind::DeltaLogConstant, 0};
}

CaseTag dispatch(const RatFun& a, const RatFun& b) { return route(a, b, nullptr).tag; }

GroupDesc group_scalar(const RatFun& u, Certificates* cert) {
  if (u.is_zero()) fail(ErrorCode::ZeroInput, "group_scalar of zero");
  return ScalarGroup{gm_subgroup(u, 1, cert)};
}

GroupDesc group_diagonalizable(const RatFun& u1, const RatFun& u2, int step, Certificates* cert) {
  if (u1.is_zero() || u2.is_zero()) fail(ErrorCode::ZeroInput, "group_diagonalizable of zero");
  DlogResidueData d1 = dlog_residue_data(u1, step);
  DlogResidueData d2 = dlog_residue_data(u2, step);
  std::set<Poly, PolyLess> reps;
  for (auto& [p, e] : d1.orbit_integers) reps.insert(p);
  for (auto& [p, e] : d2.orbit_integers) reps.insert(p);
  IntMat system;
  for (const Poly& p : reps) system.push_back({mpz_class(d1.lookup(p)), mpz_class(d2.lookup(p))});
  IntMat M = system.empty() ? IntMat{{1, 0}, {0, 1}} : integer_kernel(system, 2);
  const long c1 = d1.degree_at_infinity, c2 = d2.degree_at_infinity;

  DiagonalTorus out;
  auto& rel = out.relations;
  auto label = [](long m1, long m2) { return power_label("u1", m1, "u2", m2); };
  // Delta-relation with telescoper, or torsion when the character has c = 0.
  auto delta_with_cert = [&](long m1, long m2) {
    const long c = m1 * c1 + m2 * c2;
    RatFun F = dlog(u1) * KConst(m1) + dlog(u2) * KConst(m2);
    if (!summable_constant(F, step, cert, "dlog(" + label(m1, m2) + ")"))
      fail(ErrorCode::Internal, "residue system solution is not summable");
    rel.push_back(delta_relation(m1, m2, c));
  };
  auto torsion_or_delta = [&](long m1, long m2) {
    RatFun U = monomial_power(u1, m1, u2, m2);
    if (auto tw = torsion_witness(U, step)) {
      record_ratio(cert, label(m1, m2), U, *tw, step);
      rel.push_back(torsion_relation(m1, m2, tw->order, Relation::Source::ReducedForm));
    } else {
      delta_with_cert(m1, m2);
    }
  };

  if (M.size() == 1) {
    const long m1 = M[0][0].get_si(), m2 = M[0][1].get_si();
    if (m1 * c1 + m2 * c2 != 0) delta_with_cert(m1, m2);
    else torsion_or_delta(m1, m2);
  } else if (M.size() == 2) {
    if (c1 == 0 && c2 == 0) {
      delta_with_cert(1, 0);
      delta_with_cert(0, 1);
      // Both reduced forms are constants h_i; their relations modulo Q^Z.
      ReducedForm r1 = reduced_form(u1, step), r2 = reduced_form(u2, step);
      for (const ReducedForm* r : {&r1, &r2})
        if (r->n != 0 || r->p1.degree() > 0 || r->p2.degree() > 0)
          fail(ErrorCode::Internal, "summable log-derivative with non-constant reduced form");
      IntMat rels = multiplicative_relations({r1.h, r2.h, shift_q(u1, step)}, u1.field());
      for (const IntVec& v : project_lattice(rels, 2)) {
        long m1 = v[0].get_si(), m2 = v[1].get_si();
        const long g = std::gcd(m1, m2);
        m1 /= g;
        m2 /= g;
        RatFun U = monomial_power(u1, m1, u2, m2);
        auto tw = torsion_witness(U, step);
        if (!tw) fail(ErrorCode::Internal, "lattice relation without torsion witness");
        record_ratio(cert, label(m1, m2), U, *tw, step);
        rel.push_back(torsion_relation(m1, m2, tw->order, Relation::Source::MultLattice));
      }
    } else if (c1 == 0 || c2 == 0) {
      if (c1 == 0) {
        torsion_or_delta(1, 0);
        delta_with_cert(0, 1);
      } else {
        delta_with_cert(1, 0);
        torsion_or_delta(0, 1);
      }
    } else {
      delta_with_cert(1, 0);
      delta_with_cert(0, 1);
      const long l = std::lcm(std::labs(c1), std::labs(c2));
      const long e = c1 * c2 < 0 ? 1 : -1;
      torsion_or_delta(l / std::labs(c1), e * (l / std::labs(c2)));
    }
  }
  return out;
}

GroupDesc group_reducible(const RatFun& a, const RatFun& b, const RatFun& u, Certificates* cert) {
  if (!is_riccati_solution(u, a, b)) fail(ErrorCode::PreconditionViolated, "u does not solve the Riccati equation");
  ReducibleTriangular out;
  RatFun v = b / u;
  out.alpha_part = std::get<DiagonalTorus>(group_diagonalizable(u, v, 1, cert)).relations;

  RatFun ratio = b / (u * sigma(u));
  ReducedForm rf = reduced_form(ratio);
  if (rf.n != 0 || rf.p1.degree() > 0 || rf.p2.degree() > 0 || !rf.h.is_one()) {
    out.unipotent = Unipotent::FullGa;
    return out;
  }
  RatFun w = rf.g;
  if (sigma(w) != ratio * w) fail(ErrorCode::Internal, "w failed verification");
  ResidueTable wt = residue_table(w);
  if (cert) {
    cert->w = w;
    cert->w_residues = wt;
    cert->sigma_ratios.push_back({"b/(u*sigma(u))", ratio, 1, w, 1});
  }
  RatFun du = dlog(u);
  int r = 0;
  for (const auto& e : wt.entries) r = std::max(r, e.j);

  LinearDeltaOp L;
  if (r == 0) {
    // Only the residue at infinity: an order-0 operator absorbs it when
    // dlog(u) is summable plus a nonzero constant.
    auto cu = summable_plus_constant(du);
    if (cu && !cu->is_zero() && !wt.at_infinity.is_zero()) L.coeffs = {wt.at_infinity / *cu};
  } else {
    std::vector<ResidueTable> T;
    RatFun d = du;
    for (int i = 0; i < r; ++i) {
      if (i > 0) d = delta(d);
      T.push_back(residue_table(d));
    }
    std::set<Poly, PolyLess> reps;
    for (const auto& e : wt.entries) reps.insert(e.rep);
    for (const auto& t : T)
      for (const auto& e : t.entries) reps.insert(e.rep);
    Matrix<KConst> sys;
    std::vector<KConst> rhs;
    for (const Poly& rep : reps)
      for (int j = 1; j <= r; ++j) {
        std::vector<Poly> tv;
        for (const auto& t : T) tv.push_back(t.lookup(rep, j));
        Poly wv = wt.lookup(rep, j);
        for (int k = 0; k < rep.degree(); ++k) {
          std::vector<KConst> row;
          for (const Poly& p : tv) row.push_back(p[k]);
          sys.push_back(std::move(row));
          rhs.push_back(wv[k]);
        }
      }
    auto sol = solve(sys, rhs, static_cast<std::size_t>(r), KConst(0));
    if (!sol) {
      out.unipotent = Unipotent::FullGa;
      return out;
    }
    L.coeffs = *sol;
  }
  while (!L.coeffs.empty() && L.coeffs.back().is_zero()) L.coeffs.pop_back();

  RatFun F = L.apply(du) - w;
  auto c = summable_constant(F, 1, cert, "L(dlog(u)) - w");
  if (!c) fail(ErrorCode::Internal, "L(dlog(u)) - w keeps an orbit residue");
  if (cert) cert->link_c = *c;
  out.unipotent = c->is_zero() ? Unipotent::Trivial : Unipotent::GaDeltaConstant;
  out.link = ReducibleLink{L, c->is_zero()};
  return out;
}

GroupDesc group_imprimitive_case1(const RatFun& a, const RatFun& b, const RatFun& u, const RatFun& ubar,
                                  Certificates* cert) {
  if (u.var() != Var::X2 || ubar.var() != Var::X2 || u == ubar || conjugate(u) != ubar)
    fail(ErrorCode::NotConjugatePair, "u and ubar must be distinct conjugates in k2");
  if (!is_riccati_solution(u, to_k2(a), to_k2(b)) || !is_riccati_solution(ubar, to_k2(a), to_k2(b)))
    fail(ErrorCode::NotConjugatePair, "u and ubar must solve the Riccati equation");
  Imprimitive out;
  RatFun prod = u * ubar;
  if (auto tw = torsion_witness(prod, 1)) {
    record_ratio(cert, "u*ubar", prod, *tw, 1);
    auto det = torsion_witness(b, 1);
    if (det) record_ratio(cert, "det", b, *det, 1);
    out.family = dihedral_family(tw->order, det);
    out.m = tw->order;
    return out;
  }
  RatFun klein = (u / ubar).pow(2);
  auto tk = torsion_witness(klein, 1);
  if (tk && tk->order == 1) {
    record_ratio(cert, "(u/ubar)^2", klein, *tk, 1);
    out.family = ImprimitiveFamily::Klein;
  } else {
    out.family = ImprimitiveFamily::FullPair;
  }
  out.extra = pair_extra(out.family, b, cert);
  return out;
}

GroupDesc group_imprimitive_case2(const RatFun& a, const RatFun& b, const std::optional<RatFun>& e,
                                  Certificates* cert) {
  if (b.is_zero()) fail(ErrorCode::ZeroB, "the equation needs b != 0");
  RatFun r;
  if (a.is_zero()) {
    r = b;
  } else {
    std::optional<RatFun> ee = e;
    if (!ee) {
      RiccatiOutcome o = riccati2_solve(a, b, FieldTag::K1);
      if (o.tag == SolutionCount::NoSolution)
        fail(ErrorCode::PreconditionViolated, "second Riccati equation has no k1 solution");
      ee = o.solutions.front();
    }
    r = standard_imprimitive_r(a, b, *ee);
  }
  if (cert) cert->r = r;
  Imprimitive out;
  RatFun prod = r * sigma(r);
  if (auto tw = torsion_witness(prod, 2)) {
    record_ratio(cert, "r*sigma(r)", prod, *tw, 2);
    auto det = torsion_witness(b, 1);
    if (det) record_ratio(cert, "det", b, *det, 1);
    out.family = dihedral_family(tw->order, det);
    out.m = tw->order;
    return out;
  }
  // alpha1^2 = alpha2^2 on the sigma^2 system diag(-r, -sigma(r)).
  RatFun klein = (sigma(r) / r).pow(2);
  auto tk = torsion_witness(klein, 2);
  if (tk && tk->order == 1) {
    record_ratio(cert, "(sigma(r)/r)^2", klein, *tk, 2);
    out.family = ImprimitiveFamily::Klein;
  } else {
    out.family = ImprimitiveFamily::FullPair;
  }
  out.extra = pair_extra(out.family, b, cert);
  return out;
}

GroupDesc group_imprimitive_case3(const RatFun& /*a*/, const RatFun& b, Certificates* cert) {
  auto tw = torsion_witness(b, 1);
  if (!tw) fail(ErrorCode::InconsistentCase, "det(H) is not finite in the quadratic standard-form case");
  record_ratio(cert, "det", b, *tw, 1);
  const long m = tw->order % 2 == 0 ? tw->order : 2 * tw->order;
  return Imprimitive{ImprimitiveFamily::DmPlus, m, ImprimitiveExtra::None};
}

GroupDesc group_large(const RatFun& /*a*/, const RatFun& b, Certificates* cert) {
  LargeGroup out{gm_subgroup(b, 1, cert)};
  if (cert && out.det.kind != GmSubgroup::Kind::Torsion && out.det.kind != GmSubgroup::Kind::Full)
    cert->dlog_b_constant = cert->telescopers.back().c;
  return out;
}

GaloisResult compute_galois_groups(const RatFun& a, const RatFun& b) {
  GaloisResult res;
  Certificates* cert = &res.certificates;
  Routing r = route(a, b, cert);
  res.tag = r.tag;
  switch (r.tag) {
    case CaseTag::Scalar: res.G = group_scalar(r.solutions.front(), cert); break;
    case CaseTag::Diagonalizable: res.G = group_diagonalizable(r.solutions[0], r.solutions[1], 1, cert); break;
    case CaseTag::ReducibleNonDiag: res.G = group_reducible(a, b, r.solutions.front(), cert); break;
    case CaseTag::ImprimitiveQuadraticDiag:
      res.G = group_imprimitive_case1(a, b, r.solutions[0], r.solutions[1], cert);
      break;
    case CaseTag::ImprimitiveRational: res.G = group_imprimitive_case2(a, b, r.e, cert); break;
    case CaseTag::ImprimitiveQuadraticStd: res.G = group_imprimitive_case3(a, b, cert); break;
    case CaseTag::Large: res.G = group_large(a, b, cert); break;
  }
  res.H = erase_differential(res.G);
  return res;
}

}  // namespace qgalois
