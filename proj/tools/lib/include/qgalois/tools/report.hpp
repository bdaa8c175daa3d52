#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "qgalois/classify.hpp"
#include "qgalois/field.hpp"

namespace qgalois::tools {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "qgalois/1";

struct JobSpec {
  FieldSpec field{FieldMode::Formal, 0, 0};
  std::string a_expr;
  std::string b_expr;
  bool emit_certificates = false;
  bool timings = false;
};

// TOML job: a, b, q ("formal" or a rational), root_depth, certificates.
JobSpec load_job(const std::filesystem::path& path);
// "formal" or a rational such as "2" or "-3/5".
FieldSpec field_spec(const std::string& q, int root_depth);

struct Report {
  JobSpec job;
  FieldPtr field;
  RatFun a;
  RatFun b;
  GaloisResult result;
  double seconds = 0;
};

Report run(const JobSpec& job);

Json to_json(const Report& r);
std::string render_text(const Report& r);

Json group_to_json(const GroupDesc& g);
GroupDesc group_from_json(const Json& j, const FieldPtr& field);

struct Check {
  std::string identity;
  bool ok = false;
  std::string detail;
};

// Re-checks every certificate of a report by substitution. Reports without
// certificates are recomputed and compared.
std::vector<Check> verify(const Json& report);

}  // namespace qgalois::tools
