#include "qgalois/tools/report.hpp"

#include <chrono>
#include <sstream>

#include "qgalois/errors.hpp"
#include "qgalois/residues.hpp"
#include "qgalois/riccati.hpp"
#include "qgalois/tools/parse.hpp"
#include "qgalois/tools/render.hpp"
#include "toml.hpp"

namespace qgalois::tools {

namespace {

const char* var_name(Var v) { return v == Var::X ? "x" : "x2"; }

Var var_from(const Json& j) { return j.value("var", "x") == "x2" ? Var::X2 : Var::X; }

Json ratfun_json(const RatFun& f) { return f.to_string(); }

RatFun ratfun_from(const Json& j, const FieldPtr& field, Var v = Var::X) {
  return parse_expression(j.get<std::string>(), field, v);
}

Json gm_json(const GmSubgroup& g) {
  Json j;
  j["kind"] = gm_kind_name(g.kind);
  j["order"] = g.order;
  return j;
}

template <class E>
E enum_from(const std::string& s, const char* (*name)(E), int count) {
  for (int i = 0; i < count; ++i)
    if (s == name(static_cast<E>(i))) return static_cast<E>(i);
  fail(ErrorCode::SyntaxError, "unknown tag '" + s + "'");
}

GmSubgroup gm_from(const Json& j) {
  return {enum_from<GmSubgroup::Kind>(j.at("kind").get<std::string>(), gm_kind_name, 4), j.at("order").get<long>()};
}

Json relations_json(const std::vector<Relation>& rs) {
  Json arr = Json::array();
  for (const auto& r : rs) {
    Json j;
    j["m1"] = r.m1;
    j["m2"] = r.m2;
    j["kind"] = relation_kind_name(r.kind);
    j["order"] = r.order;
    j["c"] = r.c;
    j["source"] = relation_source_name(r.source);
    arr.push_back(j);
  }
  return arr;
}

std::vector<Relation> relations_from(const Json& arr) {
  std::vector<Relation> out;
  for (const auto& j : arr) {
    Relation r;
    r.m1 = j.at("m1").get<long>();
    r.m2 = j.at("m2").get<long>();
    r.kind = enum_from<Relation::Kind>(j.at("kind").get<std::string>(), relation_kind_name, 3);
    r.order = j.at("order").get<long>();
    r.c = j.at("c").get<long>();
    r.source = enum_from<Relation::Source>(j.at("source").get<std::string>(), relation_source_name, 3);
    out.push_back(r);
  }
  return out;
}

Json residues_json(const ResidueTable& t) {
  Json j;
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    Json x;
    x["rep"] = e.rep.to_string();
    x["j"] = e.j;
    x["value"] = e.value.to_string();
    entries.push_back(x);
  }
  j["entries"] = entries;
  j["at_infinity"] = t.at_infinity.to_string();
  return j;
}

Json certificates_json(const Certificates& c) {
  Json j;
  Json ric = Json::array();
  for (const auto& r : c.riccati) {
    Json x;
    x["equation"] = r.equation;
    x["field"] = field_tag_name(r.field);
    x["count"] = solution_count_name(r.count);
    Json sols = Json::array();
    for (const auto& u : r.solutions) sols.push_back(ratfun_json(u));
    x["solutions"] = sols;
    ric.push_back(x);
  }
  j["riccati"] = ric;
  if (c.r) j["r"] = ratfun_json(*c.r);
  if (c.w) j["w"] = ratfun_json(*c.w);
  if (c.w_residues) j["w_residues"] = residues_json(*c.w_residues);
  if (c.link_c) j["link_c"] = c.link_c->to_string();
  if (c.dlog_b_constant) j["dlog_b_constant"] = c.dlog_b_constant->to_string();
  Json ratios = Json::array();
  for (const auto& s : c.sigma_ratios) {
    Json x;
    x["label"] = s.label;
    x["var"] = var_name(s.u.var());
    x["u"] = ratfun_json(s.u);
    x["power"] = s.power;
    x["f"] = ratfun_json(s.f);
    x["step"] = s.step;
    ratios.push_back(x);
  }
  j["sigma_ratios"] = ratios;
  Json tels = Json::array();
  for (const auto& t : c.telescopers) {
    Json x;
    x["label"] = t.label;
    x["var"] = var_name(t.F.var());
    x["F"] = ratfun_json(t.F);
    x["c"] = t.c.to_string();
    x["f"] = ratfun_json(t.f);
    x["step"] = t.step;
    tels.push_back(x);
  }
  j["telescopers"] = tels;
  return j;
}

std::string q_text(const FieldSpec& s) { return s.mode == FieldMode::Formal ? "formal" : s.q_value.get_str(); }

RatFun lift(const RatFun& f, FieldTag t) { return t == FieldTag::K2 ? to_k2(f) : f; }

// Tag implied by the recorded Riccati outcomes, mirroring the dispatch order.
std::optional<CaseTag> tag_from_riccati(const Json& ric, bool a_zero) {
  auto count = [&](int eq, const char* field) -> std::optional<std::string> {
    for (const auto& r : ric)
      if (r.at("equation").get<int>() == eq && r.at("field").get<std::string>() == field)
        return r.at("count").get<std::string>();
    return std::nullopt;
  };
  const char* K1 = field_tag_name(FieldTag::K1);
  const char* K2 = field_tag_name(FieldTag::K2);
  auto k1 = count(1, K1);
  if (!k1) return std::nullopt;
  if (*k1 == "InfinitelyMany") return CaseTag::Scalar;
  if (*k1 == "Two") return CaseTag::Diagonalizable;
  if (*k1 == "One") return CaseTag::ReducibleNonDiag;
  auto k2 = count(1, K2);
  if (!k2) return std::nullopt;
  if (*k2 == "Two") return CaseTag::ImprimitiveQuadraticDiag;
  if (a_zero) return CaseTag::ImprimitiveRational;
  auto e1 = count(2, K1);
  if (!e1) return std::nullopt;
  if (*e1 != "NoSolution") return CaseTag::ImprimitiveRational;
  auto e2 = count(2, K2);
  if (!e2) return std::nullopt;
  return *e2 == "NoSolution" ? CaseTag::Large : CaseTag::ImprimitiveQuadraticStd;
}

class Verifier {
 public:
  explicit Verifier(const Json& rep) : rep_(rep) {}

  std::vector<Check> run() {
    if (rep_.value("schema", "") != kSchema) {
      add("schema = " + std::string(kSchema), false, "found '" + rep_.value("schema", "") + "'");
      return checks_;
    }
    const Json& in = rep_.at("input");
    field_ = Field::create(field_spec(in.at("q").get<std::string>(), in.at("root_depth").get<int>()));
    a_ = ratfun_from(in.at("a"), field_);
    b_ = ratfun_from(in.at("b"), field_);
    add("input normal form", a_ == ratfun_from(in.at("a_normal"), field_) && b_ == ratfun_from(in.at("b_normal"), field_),
        "");
    tag_ = enum_from<CaseTag>(rep_.at("case").get<std::string>(), case_tag_name, 7);
    G_ = group_from_json(rep_.at("G"), field_);
    H_ = group_from_json(rep_.at("H"), field_);
    add("H = Zariski closure of G", erase_differential(G_) == H_, "");
    if (!rep_.contains("certificates")) {
      recompute();
      return checks_;
    }
    const Json& c = rep_.at("certificates");
    riccati(c.at("riccati"));
    for (const auto& s : c.at("sigma_ratios")) sigma_ratio(s);
    for (const auto& t : c.at("telescopers")) telescoper(t);
    relations(c);
    reducible(c);
    imprimitive(c);
    return checks_;
  }

 private:
  void add(std::string identity, bool ok, std::string detail) {
    checks_.push_back({std::move(identity), ok, std::move(detail)});
  }

  void recompute() {
    GaloisResult res = compute_galois_groups(a_, b_);
    add("recomputed case", res.tag == tag_, case_tag_name(res.tag));
    add("recomputed G", res.G == G_, "");
    add("recomputed H", res.H == H_, "");
  }

  void riccati(const Json& ric) {
    for (const auto& r : ric) {
      const int eq = r.at("equation").get<int>();
      const FieldTag ft = r.at("field").get<std::string>() == field_tag_name(FieldTag::K2) ? FieldTag::K2 : FieldTag::K1;
      const Var v = ft == FieldTag::K2 ? Var::X2 : Var::X;
      RatFun A = a_, B = b_;
      if (eq == 2) std::tie(A, B) = riccati2_coefficients(a_, b_);
      A = lift(A, ft);
      B = lift(B, ft);
      std::vector<RatFun> sols;
      for (const auto& s : r.at("solutions")) sols.push_back(ratfun_from(s, field_, v));
      const std::string where = std::string(eq == 1 ? "ric1" : "ric2") + " over " + field_tag_name(ft);
      const std::string identity =
          eq == 1 ? "u*sigma(u) + a*u + b = 0 (" + where + ")" : "e*sigma^2(e) + c*e + d = 0 (" + where + ")";
      for (const auto& u : sols) add(identity, is_riccati_solution(u, A, B, eq), u.to_string());
      const std::string count = r.at("count").get<std::string>();
      std::size_t expected = count == "NoSolution" ? 0 : count == "One" ? 1 : count == "Two" ? 2 : 3;
      add("solution count (" + where + ")", sols.size() == expected, count);
      if (ft == FieldTag::K2 && eq == 1 && sols.size() == 2)
        add("conjugate closure (" + where + ")", conjugate(sols[0]) == sols[1], "");
      if (eq == 1 && ft == FieldTag::K1) k1_ = sols;
      if (eq == 1 && ft == FieldTag::K2) k2_ = sols;
      if (eq == 2 && ft == FieldTag::K1) e1_ = sols;
    }
    auto implied = tag_from_riccati(ric, a_.is_zero());
    add("case dispatch", implied && *implied == tag_, implied ? case_tag_name(*implied) : "incomplete Riccati record");
  }

  void sigma_ratio(const Json& s) {
    const Var v = var_from(s);
    RatFun u = ratfun_from(s.at("u"), field_, v), f = ratfun_from(s.at("f"), field_, v);
    const long power = s.at("power").get<long>();
    const int step = s.at("step").get<int>();
    ratios_.push_back({s.at("label").get<std::string>(), u, power, f, step});
    add("u^power * f = sigma^step(f) [" + ratios_.back().label + "]", !f.is_zero() && u.pow(power) * f == sigma(f, step),
        "");
  }

  void telescoper(const Json& t) {
    const Var v = var_from(t);
    RatFun F = ratfun_from(t.at("F"), field_, v), f = ratfun_from(t.at("f"), field_, v);
    KConst c = parse_constant(t.at("c").get<std::string>(), field_);
    const int step = t.at("step").get<int>();
    tels_.push_back({t.at("label").get<std::string>(), F, c, f, step});
    add("F - c = sigma^step(f) - f [" + tels_.back().label + "]",
        F - RatFun::constant(field_, F.var(), c) == sigma(f, step) - f, "");
  }

  const SigmaRatioCert* find_ratio(const RatFun& u, long power) const {
    for (const auto& r : ratios_)
      if (r.u == u && r.power == power) return &r;
    return nullptr;
  }

  const TelescopeCert* find_tel(const std::string& label) const {
    for (const auto& t : tels_)
      if (t.label == label) return &t;
    return nullptr;
  }

  void torsion_relations(const std::vector<Relation>& rs, const RatFun& u1, const RatFun& u2) {
    for (const auto& r : rs) {
      if (r.kind != Relation::Kind::Torsion) continue;
      RatFun chi = u1.pow(r.m1) * u2.pow(r.m2);
      add("torsion relation certified", find_ratio(chi, r.order) != nullptr,
          std::to_string(r.m1) + "," + std::to_string(r.m2));
    }
  }

  void relations(const Json&) {
    if (auto* d = std::get_if<DiagonalTorus>(&G_)) {
      if (k1_.size() >= 2) torsion_relations(d->relations, k1_[0], k1_[1]);
    } else if (auto* t = std::get_if<ReducibleTriangular>(&G_)) {
      if (k1_.size() == 1) torsion_relations(t->alpha_part, k1_[0], b_ / k1_[0]);
    }
  }

  void reducible(const Json& c) {
    auto* t = std::get_if<ReducibleTriangular>(&G_);
    if (!t || k1_.size() != 1) return;
    const RatFun& u = k1_[0];
    if (!c.contains("w")) {
      add("unipotent FullGa without w", t->unipotent == Unipotent::FullGa && !t->link, "");
      return;
    }
    RatFun w = ratfun_from(c.at("w"), field_);
    add("sigma(w) = b/(u*sigma(u))*w", sigma(w) == b_ / (u * sigma(u)) * w, "");
    if (c.contains("w_residues"))
      add("residues of w", residues_json(residue_table(w)) == c.at("w_residues"), "");
    if (!t->link) return;
    const TelescopeCert* tel = find_tel("L(dlog(u)) - w");
    add("L(dlog u) - w = sigma(f) - f + c", tel && tel->F == t->link->L.apply(dlog(u)) - w, "");
    if (c.contains("link_c")) {
      KConst lc = parse_constant(c.at("link_c").get<std::string>(), field_);
      add("link constant", tel && tel->c == lc && t->link->c_zero == lc.is_zero() &&
                               (t->unipotent == Unipotent::Trivial) == lc.is_zero(),
          lc.to_string());
    }
  }

  void imprimitive(const Json& c) {
    if (tag_ == CaseTag::ImprimitiveRational && c.contains("r")) {
      RatFun r = ratfun_from(c.at("r"), field_);
      bool ok = a_.is_zero() ? r == b_ : !e1_.empty() && r == standard_imprimitive_r(a_, b_, e1_[0]);
      add("r = standard imprimitive form", ok, r.to_string());
    }
    if (c.contains("dlog_b_constant")) {
      KConst k = parse_constant(c.at("dlog_b_constant").get<std::string>(), field_);
      const TelescopeCert* tel = find_tel("dlog(b)");
      if (!tel) tel = find_tel("dlog(det)");
      add("dlog(b) - c summable", tel && tel->F == dlog(b_) && tel->c == k, k.to_string());
    }
  }

  const Json& rep_;
  FieldPtr field_;
  RatFun a_, b_;
  CaseTag tag_ = CaseTag::Large;
  GroupDesc G_, H_;
  std::vector<RatFun> k1_, k2_, e1_;
  std::vector<SigmaRatioCert> ratios_;
  std::vector<TelescopeCert> tels_;
  std::vector<Check> checks_;
};

}  // namespace

FieldSpec field_spec(const std::string& q, int root_depth) {
  if (q == "formal") return {FieldMode::Formal, 0, root_depth};
  mpq_class v;
  if (v.set_str(q, 10) != 0) fail(ErrorCode::InvalidField, "q must be 'formal' or a rational, got '" + q + "'");
  v.canonicalize();
  return {FieldMode::Concrete, v, root_depth};
}

JobSpec load_job(const std::filesystem::path& path) {
  toml::table t;
  try {
    t = toml::parse_file(path.string());
  } catch (const toml::parse_error& e) {
    fail(ErrorCode::SyntaxError, path.string() + ": " + std::string(e.description()));
  }
  JobSpec job;
  auto a = t["a"].value<std::string>();
  auto b = t["b"].value<std::string>();
  if (!a || !b) fail(ErrorCode::SyntaxError, path.string() + ": a and b must be strings");
  job.a_expr = *a;
  job.b_expr = *b;
  job.field = field_spec(t["q"].value_or(std::string("formal")), static_cast<int>(t["root_depth"].value_or(0)));
  job.emit_certificates = t["certificates"].value_or(false);
  return job;
}

Report run(const JobSpec& job) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.job = job;
  r.field = Field::create(job.field);
  r.a = parse_expression(job.a_expr, r.field);
  r.b = parse_expression(job.b_expr, r.field);
  if (r.a.var() != Var::X || r.b.var() != Var::X) fail(ErrorCode::SyntaxError, "coefficients must lie in K(x)");
  if (r.b.is_zero()) fail(ErrorCode::ZeroB, "b must be nonzero");
  r.result = compute_galois_groups(r.a, r.b);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Json group_to_json(const GroupDesc& g) {
  Json j;
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ScalarGroup>) {
          j["kind"] = "Scalar";
          j["sub"] = gm_json(d.sub);
        } else if constexpr (std::is_same_v<T, DiagonalTorus>) {
          j["kind"] = "DiagonalTorus";
          j["relations"] = relations_json(d.relations);
        } else if constexpr (std::is_same_v<T, ReducibleTriangular>) {
          j["kind"] = "ReducibleTriangular";
          j["alpha_part"] = relations_json(d.alpha_part);
          j["unipotent"] = unipotent_name(d.unipotent);
          if (d.link) {
            Json L = Json::array();
            for (const auto& c : d.link->L.coeffs) L.push_back(c.to_string());
            j["link"] = {{"L", L}, {"c_zero", d.link->c_zero}};
          }
        } else if constexpr (std::is_same_v<T, Imprimitive>) {
          j["kind"] = "Imprimitive";
          j["family"] = imprimitive_family_name(d.family);
          j["m"] = d.m;
          j["extra"] = imprimitive_extra_name(d.extra);
        } else {
          j["kind"] = "Large";
          j["det"] = gm_json(d.det);
        }
      },
      g);
  return j;
}

GroupDesc group_from_json(const Json& j, const FieldPtr& field) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "Scalar") return ScalarGroup{gm_from(j.at("sub"))};
  if (kind == "DiagonalTorus") return DiagonalTorus{relations_from(j.at("relations"))};
  if (kind == "ReducibleTriangular") {
    ReducibleTriangular t;
    t.alpha_part = relations_from(j.at("alpha_part"));
    t.unipotent = enum_from<Unipotent>(j.at("unipotent").get<std::string>(), unipotent_name, 3);
    if (j.contains("link")) {
      ReducibleLink link;
      for (const auto& c : j.at("link").at("L")) link.L.coeffs.push_back(parse_constant(c.get<std::string>(), field));
      link.c_zero = j.at("link").at("c_zero").get<bool>();
      t.link = link;
    }
    return t;
  }
  if (kind == "Imprimitive") {
    Imprimitive im;
    im.family = enum_from<ImprimitiveFamily>(j.at("family").get<std::string>(), imprimitive_family_name, 4);
    im.m = j.at("m").get<long>();
    im.extra = enum_from<ImprimitiveExtra>(j.at("extra").get<std::string>(), imprimitive_extra_name, 3);
    return im;
  }
  if (kind == "Large") return LargeGroup{gm_from(j.at("det"))};
  fail(ErrorCode::SyntaxError, "unknown group kind '" + kind + "'");
}

Json to_json(const Report& r) {
  Json j;
  j["schema"] = kSchema;
  Json in;
  in["q"] = q_text(r.job.field);
  in["root_depth"] = r.job.field.root_depth;
  in["a"] = r.job.a_expr;
  in["b"] = r.job.b_expr;
  in["a_normal"] = r.a.to_string();
  in["b_normal"] = r.b.to_string();
  j["input"] = in;
  j["case"] = case_tag_name(r.result.tag);
  j["H"] = group_to_json(r.result.H);
  j["G"] = group_to_json(r.result.G);
  j["H_text"] = render_group(r.result.H);
  j["G_text"] = render_group(r.result.G);
  if (r.job.emit_certificates) j["certificates"] = certificates_json(r.result.certificates);
  if (r.job.timings) j["timings"] = {{"seconds", r.seconds}};
  return j;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "a = " << r.a.to_string() << "\n";
  os << "b = " << r.b.to_string() << "\n";
  os << "case: " << case_tag_name(r.result.tag) << "\n";
  os << "H:\n";
  for (const auto& line : render_group(r.result.H)) os << "  " << line << "\n";
  os << "G:\n";
  for (const auto& line : render_group(r.result.G)) os << "  " << line << "\n";
  if (r.job.emit_certificates) {
    const Certificates& c = r.result.certificates;
    os << "certificates:\n";
    for (const auto& ric : c.riccati) {
      os << "  ric" << ric.equation << " over " << field_tag_name(ric.field) << ": " << solution_count_name(ric.count);
      for (const auto& u : ric.solutions) os << "; " << u.to_string();
      os << "\n";
    }
    if (c.r) os << "  r = " << c.r->to_string() << "\n";
    if (c.w) os << "  w = " << c.w->to_string() << "\n";
    if (c.w_residues) {
      for (const auto& e : c.w_residues->entries)
        os << "  q-dres(w, [" << e.rep.to_string() << "], " << e.j << ") = " << e.value.to_string() << "\n";
      os << "  q-dres(w, inf) = " << c.w_residues->at_infinity.to_string() << "\n";
    }
    if (c.link_c) os << "  c = " << c.link_c->to_string() << "\n";
    if (c.dlog_b_constant) os << "  dlog(b) = sigma(g) - g + " << c.dlog_b_constant->to_string() << "\n";
    for (const auto& s : c.sigma_ratios)
      os << "  " << s.label << ": (" << s.u.to_string() << ")^" << s.power << " = sigma^" << s.step << "(f)/f, f = "
         << s.f.to_string() << "\n";
    for (const auto& t : c.telescopers)
      os << "  " << t.label << " = sigma^" << t.step << "(f) - f + " << t.c.to_string() << ", f = " << t.f.to_string()
         << "\n";
  }
  if (r.job.timings) os << "time: " << r.seconds << " s\n";
  return os.str();
}

std::vector<Check> verify(const Json& report) {
  try {
    return Verifier(report).run();
  } catch (const Json::exception& e) {
    return {{"report structure", false, e.what()}};
  }
}

}  // namespace qgalois::tools
