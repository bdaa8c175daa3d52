// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "properties.hpp"
#include "qgalois/residues.hpp"
#include "qgalois/riccati.hpp"
#include "qgalois/tools/parse.hpp"
#include "qgalois/tools/render.hpp"
#include "worked_examples.hpp"

using namespace qgalois;
using namespace qgalois::test;
namespace fs = std::filesystem;

namespace {

// Exact arithmetic throughout: every comparison below is equality in K or K(x).
constexpr int kPropertyInstances = 200;
constexpr int kOracleInstances = 200;
constexpr int kMinOracleInstances = 50;
constexpr std::uint64_t kSeed = 20261016;
constexpr int kCorpusRuns = 2;

class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) failed_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failed_.empty(); }
  void print(int id, const std::string& title) const {
    std::cout << (ok() ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << "\n";
    for (const auto& f : failed_) std::cout << "        mismatch: " << f << "\n";
    for (const auto& n : notes_) std::cout << "        " << n << "\n";
  }

 private:
  std::vector<std::string> failed_;
  std::vector<std::string> notes_;
};

// Runs body, turning an escaped exception into a failed check.
Criterion guarded(const std::function<void(Criterion&)>& body) {
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.check(false, std::string("exception: ") + e.what());
  }
  return c;
}

RatFun parse(const std::string& s, const FieldPtr& K, Var v = Var::X) { return tools::parse_expression(s, K, v); }

Criterion reducible_pipeline() {
  return guarded([](Criterion& c) {
    Equation ex = reducible_example();
    const FieldPtr& K = ex.K;
    GaloisResult res = compute_galois_groups(ex.a, ex.b);
    c.check(res.tag == CaseTag::ReducibleNonDiag, std::string("case ") + case_tag_name(res.tag));

    const auto& ric = res.certificates.riccati;
    const bool unique_u = !ric.empty() && ric[0].count == SolutionCount::One && ric[0].solutions.size() == 1 &&
                          ric[0].solutions[0] == parse("x^3*(x - 1)^2", K);
    c.check(unique_u, "unique Riccati solution u = x^3*(x - 1)^2");

    const RatFun w = parse("(x^2 + 6*x + 6)/(x - 1)^2", K);
    c.check(res.certificates.w && *res.certificates.w == w, "w = (x^2 + 6*x + 6)/(x - 1)^2");

    const Poly rep = parse("x - 1", K).num();
    if (res.certificates.w_residues) {
      const ResidueTable& t = *res.certificates.w_residues;
      auto expect = [&](int j, long v) {
        const Poly got = t.lookup(rep, j);
        c.check(got == Poly::constant(K, Var::X, KConst(v)),
                "residue at ([x - 1], " + std::to_string(j) + ") = " + std::to_string(v) + ", computed " +
                    got.to_string());
      };
      expect(2, 5);
      expect(1, 8);
      c.check(t.at_infinity == KConst(1), "residue at infinity = 1, computed " + t.at_infinity.to_string());
    } else {
      c.check(false, "residue table of w missing");
    }

    const auto* g = std::get_if<ReducibleTriangular>(&res.G);
    const bool linked = g && g->link;
    c.check(linked, "G is reducible with a unipotent link");
    if (linked) {
      const auto& L = g->link->L.coeffs;  // (c0, c1)
      const bool l_ok = L.size() == 2 && L[1] == KConst(mpq_class(-5, 2)) && L[0] == KConst(mpq_class(3, 2));
      std::ostringstream got;
      for (size_t i = L.size(); i-- > 0;) got << (i + 1 < L.size() ? ", " : "") << "c" << i << " = " << L[i].to_string();
      c.check(l_ok, "L with (c1, c0) = (-5/2, 3/2), computed " + got.str());
      const std::string expect_g = "delta(xi/alpha) = -5/2*delta^2(dlog alpha) + 3/2*delta(dlog alpha)";
      const std::string rendered = tools::render_link(*g->link);
      c.check(rendered == expect_g, "G rendered as " + expect_g + ", computed " + rendered);
    }
    const auto& lc = res.certificates.link_c;
    c.check(lc && *lc == KConst(mpq_class(13, 2)), "c = 13/2, computed " + (lc ? lc->to_string() : "none"));
    if (!c.ok())
      c.note("documented conflict: w = 13/(x - 1)^2 + 8/(x - 1) + 1 gives L = -13/2*delta - 5/2 and c = -27/2");
  });
}

Criterion conjugate_pair_pipeline() {
  return guarded([](Criterion& c) {
    Equation ex = conjugate_pair_example();
    const FieldPtr& K = ex.K;
    GaloisResult res = compute_galois_groups(ex.a, ex.b);
    c.check(res.tag == CaseTag::ImprimitiveQuadraticDiag, std::string("case ") + case_tag_name(res.tag));

    std::vector<RatFun> expect = {parse("x + x2", K, Var::X2), parse("x - x2", K, Var::X2)};
    bool pair = false;
    for (const auto& r : res.certificates.riccati) {
      if (r.equation != 1 || r.field != FieldTag::K2 || r.solutions.size() != 2) continue;
      pair = std::is_permutation(r.solutions.begin(), r.solutions.end(), expect.begin(),
                                 [](const RatFun& a, const RatFun& b) { return a == b; });
    }
    c.check(pair, "conjugate pair x +- x2 over k2");
    const GroupDesc full = Imprimitive{ImprimitiveFamily::FullPair, 0, ImprimitiveExtra::None};
    c.check(res.G == full, "G = FullPair");
    c.check(res.H == full, "H = FullPair");
    c.check(!res.certificates.dlog_b_constant, "dlog b is not summable plus a constant");
  });
}

Criterion klein_pipeline() {
  return guarded([](Criterion& c) {
    Equation ex = klein_example();
    GaloisResult res = compute_galois_groups(ex.a, ex.b);
    const GroupDesc g = Imprimitive{ImprimitiveFamily::Klein, 0, ImprimitiveExtra::LogDerivDeltaConstant};
    const GroupDesc h = Imprimitive{ImprimitiveFamily::Klein, 0, ImprimitiveExtra::None};
    c.check(res.G == g, "G = Klein with delta(dlog alpha) = 0 = delta(dlog lambda)");
    c.check(res.H == h, "H = Klein");

    Certificates cert;
    const GroupDesc g2 = group_imprimitive_case2(ex.a, ex.b, std::nullopt, &cert);
    c.check(cert.r && *cert.r == ex.b, "standard-form route uses r = b");
    c.check(g2 == res.G, "standard-form route gives the same G");
    c.check(erase_differential(g2) == res.H, "standard-form route gives the same H");
  });
}

Criterion colored_jones_pipeline() {
  return guarded([](Criterion& c) {
    Equation ex = colored_jones_example();
    const FieldPtr& K = ex.K;
    c.check(riccati_solve(ex.a, ex.b, FieldTag::K2).tag == SolutionCount::NoSolution, "ric1 unsolvable over k2");
    c.check(riccati2_solve(ex.a, ex.b, FieldTag::K2).tag == SolutionCount::NoSolution, "ric2 unsolvable over k2");

    auto tw = torsion_witness(ex.b);
    const RatFun f = parse("q*x^2 - 1", K);
    c.check(tw && tw->order == 1, "torsion_order(b) = 1");
    c.check(tw && (tw->f / f).is_constant() && sigma(tw->f) == ex.b * tw->f, "witness f = q*x^2 - 1 up to a constant");

    GaloisResult res = compute_galois_groups(ex.a, ex.b);
    const GroupDesc sl2 = LargeGroup{{GmSubgroup::Kind::Torsion, 1}};
    c.check(res.tag == CaseTag::Large, std::string("case ") + case_tag_name(res.tag));
    c.check(res.G == sl2, "G = SL2");
    c.check(res.H == sl2, "H = SL2");
  });
}

Criterion property_suite() {
  return guarded([](Criterion& c) {
    for (const auto& p : run_properties(kSeed, kPropertyInstances)) {
      c.check(p.ok(kPropertyInstances), p.name + ": " + std::to_string(p.failures) + " failures, first " + p.first_failure);
      c.note(p.name + ": " + std::to_string(p.instances) + " instances");
    }
  });
}

Criterion oracle_equivalence() {
  return guarded([](Criterion& c) {
    PropertyOutcome p = residue_oracle(kSeed, kOracleInstances);
    c.check(p.ok(kMinOracleInstances), std::to_string(p.failures) + " failures, first " + p.first_failure);
    c.note(std::to_string(p.instances) + " split-denominator instances");
  });
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int shell(const std::string& cmd) { return std::system(cmd.c_str()); }

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

Criterion determinism(const fs::path& cli, const fs::path& jobs, const fs::path& work) {
  return guarded([&](Criterion& c) {
    std::vector<fs::path> corpus;
    for (const auto& e : fs::directory_iterator(jobs))
      if (e.path().extension() == ".toml") corpus.push_back(e.path());
    std::sort(corpus.begin(), corpus.end());
    c.check(!corpus.empty(), "empty corpus");

    fs::remove_all(work);
    int verified = 0;
    for (const auto& job : corpus) {
      std::vector<std::string> outputs;
      for (int run = 0; run < kCorpusRuns; ++run) {
        const fs::path dir = work / ("run" + std::to_string(run));
        fs::create_directories(dir);
        const fs::path out = dir / (job.stem().string() + ".json");
        const int rc = shell(quoted(cli) + " compute --json --certificates --job " + quoted(job) + " -o " + quoted(out));
        c.check(rc == 0, job.filename().string() + ": compute exit status " + std::to_string(rc));
        outputs.push_back(slurp(out));
      }
      c.check(std::all_of(outputs.begin(), outputs.end(), [&](const std::string& s) { return s == outputs[0]; }),
              job.filename().string() + ": reports differ between runs");
      const fs::path report = work / "run0" / (job.stem().string() + ".json");
      const bool ok = shell(quoted(cli) + " verify " + quoted(report) + " > /dev/null") == 0;
      c.check(ok, job.filename().string() + ": verify failed");
      verified += ok;
    }
    c.note(std::to_string(verified) + "/" + std::to_string(corpus.size()) + " reports verified, " +
           std::to_string(kCorpusRuns) + " runs byte-compared");
  });
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path cli = argc > 1 ? fs::path(argv[1]) : fs::path(QGALOIS_CLI);
  const fs::path jobs = argc > 2 ? fs::path(argv[2]) : fs::path(QGALOIS_JOBS_DIR);
  const fs::path work = fs::temp_directory_path() / "qgalois_acceptance";

  std::vector<std::pair<std::string, std::function<Criterion()>>> criteria = {
      {"reducible pipeline", reducible_pipeline},
      {"conjugate pair pipeline", conjugate_pair_pipeline},
      {"Klein pipeline and standard-form route", klein_pipeline},
      {"colored Jones pipeline", colored_jones_pipeline},
      {"randomized property suite", property_suite},
      {"residue tables against the partial fraction oracle", oracle_equivalence},
      {"deterministic, verifiable corpus reports", [&] { return determinism(cli, jobs, work); }},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Criterion c = criteria[i].second();
    c.print(static_cast<int>(i) + 1, criteria[i].first);
    std::cout.flush();
    failed += !c.ok();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
