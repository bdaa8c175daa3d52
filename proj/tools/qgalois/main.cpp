#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qgalois/errors.hpp"
#include "qgalois/tools/report.hpp"

using namespace qgalois;
using namespace qgalois::tools;

namespace {

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::UnsupportedConstant: return 2;
    case ErrorCode::InconsistentCase: return 3;
    default: return 1;
  }
}

int compute(const JobSpec& job, bool json, const std::string& out_path) {
  Report r = run(job);
  std::string text = json ? to_json(r).dump(2) + "\n" : render_text(r);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) fail(ErrorCode::InvalidField, "cannot write " + out_path);
    out << text;
  }
  return 0;
}

int verify_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::SyntaxError, "cannot read " + path);
  Json report;
  try {
    report = Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::SyntaxError, path + ": " + e.what());
  }
  bool ok = true;
  for (const auto& c : verify(report)) {
    std::cout << (c.ok ? "ok   " : "FAIL ") << c.identity;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << "\n";
    ok = ok && c.ok;
  }
  std::cout << (ok ? "verified" : "verification failed") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Difference and differential Galois groups of y(q^2 x) + a y(qx) + b y = 0"};
  app.require_subcommand(1);

  JobSpec job;
  std::string q = "formal", job_path, out_path;
  int depth = 0;
  bool json = false;
  auto* comp = app.add_subcommand("compute", "Classify one equation");
  comp->add_option("--a", job.a_expr, "Coefficient a(x)");
  comp->add_option("--b", job.b_expr, "Coefficient b(x)");
  comp->add_option("--q", q, "'formal' or a rational value of q");
  comp->add_option("--root-depth", depth, "Adjoin q^(1/2^N)")->check(CLI::Range(0, 6));
  comp->add_option("--job", job_path, "TOML job file (replaces --a/--b/--q/--root-depth)");
  comp->add_option("-o,--output", out_path, "Write the report to a file");
  comp->add_flag("--json", json, "JSON report");
  comp->add_flag("--certificates", job.emit_certificates, "Include certificates");
  comp->add_flag("--timings", job.timings, "Include wall-clock time");

  std::string report_path;
  auto* ver = app.add_subcommand("verify", "Re-check the certificates of a JSON report");
  ver->add_option("report", report_path, "Report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*ver) return verify_file(report_path);
    if (!job_path.empty()) {
      const bool certs = job.emit_certificates, timings = job.timings;
      job = load_job(job_path);
      job.emit_certificates = job.emit_certificates || certs;
      job.timings = timings;
    } else {
      if (job.a_expr.empty() || job.b_expr.empty()) fail(ErrorCode::SyntaxError, "--a and --b are required");
      job.field = field_spec(q, depth);
    }
    return compute(job, json, out_path);
  } catch (const UnsupportedConstant& e) {
    std::cerr << "error: " << e.what() << " (minimal polynomial " << e.minimal_polynomial() << ")\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  }
}
