#include "doctest.h"
#include "qgalois/errors.hpp"
#include "qgalois/tools/parse.hpp"
#include "qgalois/tools/render.hpp"
#include "qgalois/tools/report.hpp"
#include "worked_examples.hpp"

using namespace qgalois;
using namespace qgalois::test;
using namespace qgalois::tools;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("parse expressions") {
  auto K = formal(1);
  KConst q = K->q(), s = K->q_root(1);
  RatFun x = X(K), one = C(K, 1);
  CHECK(parse_expression("q^3*x^2 - 1", K) == x * x * C(K, q.pow(3)) - one);
  CHECK(parse_expression("-(q + sqrt(q))*x", K) == conjugate_pair_example().a);
  CHECK(parse_expression("-x^2", K) == -x * x);
  CHECK(parse_expression("x^-2 * 3/4", K) == one / (x * x) * C(K, mpq_class(3, 4)));
  CHECK(parse_expression(" ( x - 1 ) / ( x + 1 ) ", K) == (x - one) / (x + one));
  CHECK(parse_expression("x2^2", K) == to_k2(x));
  CHECK(parse_expression("x + x2", K) == to_k2(x) + X(K, Var::X2));
  CHECK(parse_expression("x", K, Var::X2) == to_k2(x));
  CHECK(parse_constant("root(q,2)^2", K) == q);
  CHECK(parse_constant("sqrt(q)", K) == s);

  CHECK(code_of([&] { parse_expression("x^(2)", K); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_expression("x +", K); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_expression("(x", K); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_expression("x y", K); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_expression("1/(x - x)", K); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_expression("root(q,3)", K); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_expression("root(q,4)", K); }) == ErrorCode::DepthError);
  CHECK(code_of([&] { parse_expression("sqrt(q)", formal(0)); }) == ErrorCode::DepthError);
  CHECK(code_of([&] { parse_expression("x2", formal(0)); }) == ErrorCode::DepthError);
  try {
    parse_expression("x + * 2", K);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
}

TEST_CASE("render round trip") {
  for (FieldPtr K : {formal(2), concrete(mpq_class(2), 2), concrete(mpq_class(-3, 5), 2)}) {
    KConst q = K->q(), s = K->q_root(1);
    RatFun x = X(K), one = C(K, 1);
    std::vector<RatFun> fs = {
        x * C(K, q.pow(-5)) - C(K, s * 6),
        (x * x * C(K, q + s) - one) / (x * C(K, q * q) + C(K, mpq_class(-1, 7))),
        C(K, (s + 1) / (q + 3)) * x.pow(3) - x / (x - C(K, s)),
        C(K, K->q_root(2).pow(3)),
        to_k2(x) * C(K, -s) + X(K, Var::X2),
    };
    for (const auto& f : fs) {
      INFO(f.to_string());
      CHECK(parse_expression(f.to_string(), K, f.var()) == f);
    }
  }
}

TEST_CASE("link rendering") {
  ReducibleLink link{{{KConst(mpq_class(3, 2)), KConst(mpq_class(-5, 2))}}, false};
  CHECK(render_link(link) == "delta(xi/alpha) = -5/2*delta^2(dlog alpha) + 3/2*delta(dlog alpha)");
  link.c_zero = true;
  CHECK(render_link(link) == "xi/alpha = -5/2*delta(dlog alpha) + 3/2*dlog alpha");
  CHECK(render_link(ReducibleLink{}) == "delta(xi/alpha) = 0");
  CharacterNames names;
  CHECK(render_relation(Relation{2, -1, Relation::Kind::Torsion, 3, 0, Relation::Source::ReducedForm}, names) ==
        "(alpha1^2*alpha2^-1)^3 = 1");
  CHECK(render_relation(Relation{1, 0, Relation::Kind::DeltaLogConstantProduct, 0, 1, Relation::Source::Residues},
                        names) == "delta(dlog alpha1) = 0");
}

TEST_CASE("group json round trip") {
  auto K = formal(1);
  std::vector<GroupDesc> gs = {
      ScalarGroup{{GmSubgroup::Kind::Torsion, 4}},
      DiagonalTorus{{Relation{1, -1, Relation::Kind::Torsion, 2, 0, Relation::Source::MultLattice},
                     Relation{0, 1, Relation::Kind::DeltaLogConstantProduct, 0, -3, Relation::Source::Residues}}},
      ReducibleTriangular{{}, Unipotent::GaDeltaConstant, ReducibleLink{{{KConst(mpq_class(-5, 2)), K->q_root(1)}}, false}},
      ReducibleTriangular{{}, Unipotent::FullGa, std::nullopt},
      Imprimitive{ImprimitiveFamily::DmMinus, 6, ImprimitiveExtra::None},
      Imprimitive{ImprimitiveFamily::FullPair, 0, ImprimitiveExtra::DeltaConstantDet},
      LargeGroup{{GmSubgroup::Kind::DeltaConstant, 0}},
  };
  for (const auto& g : gs) CHECK(group_from_json(Json::parse(group_to_json(g).dump()), K) == g);
}

TEST_CASE("reports verify and detect tampering") {
  JobSpec job = load_job(QGALOIS_JOBS_DIR "/reducible.toml");
  CHECK(job.emit_certificates);
  Json j = to_json(run(job));
  CHECK(j["schema"] == "qgalois/1");
  CHECK(to_json(run(job)).dump() == j.dump());
  auto all_ok = [](const std::vector<Check>& cs) {
    for (const auto& c : cs)
      if (!c.ok) return false;
    return !cs.empty();
  };
  CHECK(all_ok(verify(j)));

  Json bad = j;
  bad["certificates"]["riccati"][0]["solutions"][0] = "x^5 - 2*x^4 + 2*x^3";
  bool named = false;
  for (const auto& c : verify(bad))
    if (!c.ok && c.identity.find("u*sigma(u) + a*u + b = 0") != std::string::npos) named = true;
  CHECK(named);

  Json bad_w = j;
  bad_w["certificates"]["w"] = "(x^2 + 6*x + 7)/(x - 1)^2";
  CHECK_FALSE(all_ok(verify(bad_w)));

  Json bad_g = j;
  bad_g["G"]["link"]["L"][0] = "3/2";
  CHECK_FALSE(all_ok(verify(bad_g)));

  // Without certificates the report is recomputed.
  job.emit_certificates = false;
  Json plain = to_json(run(job));
  CHECK_FALSE(plain.contains("certificates"));
  CHECK(all_ok(verify(plain)));
  plain["case"] = "Large";
  CHECK_FALSE(all_ok(verify(plain)));
}

TEST_CASE("job files") {
  CHECK(field_spec("formal", 2).mode == FieldMode::Formal);
  CHECK(field_spec("-3/6", 0).q_value == mpq_class(-1, 2));
  CHECK(code_of([] { field_spec("pi", 0); }) == ErrorCode::InvalidField);
  JobSpec k = load_job(QGALOIS_JOBS_DIR "/klein.toml");
  CHECK(k.field.root_depth == 1);
  Report r = run(k);
  CHECK(r.result.tag == CaseTag::ImprimitiveQuadraticDiag);
  CHECK(std::get<Imprimitive>(r.result.G).family == ImprimitiveFamily::Klein);
  CHECK(std::get<Imprimitive>(r.result.G).extra == ImprimitiveExtra::LogDerivDeltaConstant);
}
