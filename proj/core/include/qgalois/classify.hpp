#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qgalois/residues.hpp"
#include "qgalois/riccati.hpp"

namespace qgalois {

enum class CaseTag {
  Scalar,
  Diagonalizable,
  ReducibleNonDiag,
  ImprimitiveQuadraticDiag,
  ImprimitiveRational,
  ImprimitiveQuadraticStd,
  Large,
};
const char* case_tag_name(CaseTag t);

// L = sum c_i delta^i; coeffs[i] = c_i, trailing zeros trimmed.
struct LinearDeltaOp {
  std::vector<KConst> coeffs;
  bool is_zero() const { return coeffs.empty(); }
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  RatFun apply(const RatFun& f) const;
  friend bool operator==(const LinearDeltaOp&, const LinearDeltaOp&) = default;
};

// Differential algebraic subgroups of G_m.
struct GmSubgroup {
  enum class Kind { Torsion, DeltaConstant, DeltaLogConstant, Full };
  Kind kind = Kind::Full;
  long order = 0;  // Torsion: mu_order
  friend bool operator==(const GmSubgroup&, const GmSubgroup&) = default;
};
const char* gm_kind_name(GmSubgroup::Kind k);

// A defining equation on the character alpha1^m1 alpha2^m2 =: chi.
//   Torsion: chi^order = 1; DeltaConstantProduct: delta(chi) = 0;
//   DeltaLogConstantProduct: delta(delta(chi)/chi) = 0.
struct Relation {
  enum class Kind { Torsion, DeltaConstantProduct, DeltaLogConstantProduct };
  enum class Source { Residues, ReducedForm, MultLattice };
  long m1 = 0;
  long m2 = 0;
  Kind kind = Kind::Torsion;
  long order = 0;  // Torsion only
  long c = 0;      // residue at infinity of the combined log-derivative
  Source source = Source::Residues;
  friend bool operator==(const Relation&, const Relation&) = default;
};
const char* relation_kind_name(Relation::Kind k);
const char* relation_source_name(Relation::Source s);

struct ScalarGroup {
  GmSubgroup sub;
  friend bool operator==(const ScalarGroup&, const ScalarGroup&) = default;
};

struct DiagonalTorus {
  std::vector<Relation> relations;
  friend bool operator==(const DiagonalTorus&, const DiagonalTorus&) = default;
};

enum class Unipotent { FullGa, GaDeltaConstant, Trivial };
const char* unipotent_name(Unipotent u);

// c_zero = false: delta(xi/alpha) = L(delta(delta(alpha)/alpha)).
// c_zero = true:  xi = alpha * L(delta(alpha)/alpha).
struct ReducibleLink {
  LinearDeltaOp L;
  bool c_zero = false;
  friend bool operator==(const ReducibleLink&, const ReducibleLink&) = default;
};

struct ReducibleTriangular {
  std::vector<Relation> alpha_part;  // on (alpha, lambda)
  Unipotent unipotent = Unipotent::FullGa;
  std::optional<ReducibleLink> link;
  friend bool operator==(const ReducibleTriangular&, const ReducibleTriangular&) = default;
};

enum class ImprimitiveFamily { DmMinus, DmPlus, Klein, FullPair };
enum class ImprimitiveExtra { None, LogDerivDeltaConstant, DeltaConstantDet };
const char* imprimitive_family_name(ImprimitiveFamily f);
const char* imprimitive_extra_name(ImprimitiveExtra e);

struct Imprimitive {
  ImprimitiveFamily family = ImprimitiveFamily::FullPair;
  long m = 0;  // DmMinus / DmPlus only
  ImprimitiveExtra extra = ImprimitiveExtra::None;
  friend bool operator==(const Imprimitive&, const Imprimitive&) = default;
};

// SL2 is contained in G; det(G) is given.
struct LargeGroup {
  GmSubgroup det;
  friend bool operator==(const LargeGroup&, const LargeGroup&) = default;
};

using GroupDesc = std::variant<ScalarGroup, DiagonalTorus, ReducibleTriangular, Imprimitive, LargeGroup>;

// Zariski closure: drops every differential relation.
GroupDesc erase_differential(const GroupDesc& g);
// Exchanges the two characters of a diagonal description.
GroupDesc swap_characters(const GroupDesc& g);

// u^power = sigma^step(f) / f.
struct SigmaRatioCert {
  std::string label;
  RatFun u;
  long power = 1;
  RatFun f;
  int step = 1;
};

// F - c = sigma^step(f) - f.
struct TelescopeCert {
  std::string label;
  RatFun F;
  KConst c;
  RatFun f;
  int step = 1;
};

struct RiccatiCert {
  int equation = 1;  // 1: ric1, 2: ric2
  FieldTag field = FieldTag::K1;
  SolutionCount count = SolutionCount::NoSolution;
  std::vector<RatFun> solutions;
};

struct Certificates {
  std::vector<RiccatiCert> riccati;
  std::optional<RatFun> r;                 // standard imprimitive form
  std::optional<RatFun> w;                 // reducible case: sigma(w) = b/(u sigma(u)) w
  std::optional<ResidueTable> w_residues;
  std::optional<KConst> link_c;            // c of L(delta(u)/u) - w = sigma(f) - f + c
  std::optional<KConst> dlog_b_constant;   // c with dlog(b) - c summable
  std::vector<SigmaRatioCert> sigma_ratios;
  std::vector<TelescopeCert> telescopers;
};

struct GaloisResult {
  CaseTag tag = CaseTag::Large;
  GroupDesc H;
  GroupDesc G;
  Certificates certificates;
};

// Least m >= 1 with u^m = sigma^step(f)/f, with the witness f.
struct TorsionWitness {
  long order = 0;
  RatFun f;
};
std::optional<TorsionWitness> torsion_witness(const RatFun& u, int step = 1);

// Differential Galois group of sigma^step(y) = u y.
GmSubgroup gm_subgroup(const RatFun& u, int step = 1, Certificates* cert = nullptr);

CaseTag dispatch(const RatFun& a, const RatFun& b);

GroupDesc group_scalar(const RatFun& u, Certificates* cert = nullptr);
GroupDesc group_diagonalizable(const RatFun& u1, const RatFun& u2, int step = 1, Certificates* cert = nullptr);
GroupDesc group_reducible(const RatFun& a, const RatFun& b, const RatFun& u, Certificates* cert = nullptr);
GroupDesc group_imprimitive_case1(const RatFun& a, const RatFun& b, const RatFun& u, const RatFun& ubar,
                                  Certificates* cert = nullptr);
// e: a k1 solution of the second Riccati equation when a != 0; found when absent.
GroupDesc group_imprimitive_case2(const RatFun& a, const RatFun& b, const std::optional<RatFun>& e = std::nullopt,
                                  Certificates* cert = nullptr);
GroupDesc group_imprimitive_case3(const RatFun& a, const RatFun& b, Certificates* cert = nullptr);
GroupDesc group_large(const RatFun& a, const RatFun& b, Certificates* cert = nullptr);

GaloisResult compute_galois_groups(const RatFun& a, const RatFun& b);

}  // namespace qgalois
