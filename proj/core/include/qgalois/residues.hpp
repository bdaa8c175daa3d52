#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qgalois/ratfun.hpp"

namespace qgalois {

// Residues are elements of K[y]/(rep) where rep is the canonical member of a
// Q^Z-shift class of irreducible factors (Q = sigma_base^step). All functions
// take the shift step (1 for sigma, 2 for sigma^2).

struct ResidueEntry {
  Poly rep;
  int j = 0;
  Poly value;  // reduced modulo rep, nonzero
};

struct ResidueTable {
  std::vector<ResidueEntry> entries;  // sorted by (rep, j)
  KConst at_infinity;
  // Zero polynomial when absent.
  Poly lookup(const Poly& rep, int j) const;
  bool all_orbit_residues_zero() const { return entries.empty(); }
};

// Shift constant Q for the given variable and step.
KConst shift_constant(const FieldPtr& f, Var v, int step);

// Canonical representative of the class containing the monic irreducible p.
Poly orbit_representative(const Poly& p, int step = 1);

ResidueTable residue_table(const RatFun& f, int step = 1);
Poly qdres(const RatFun& f, const Poly& cls, int j, int step = 1);
KConst qdres_infinity(const RatFun& f);

struct DlogResidueData {
  std::vector<std::pair<Poly, long>> orbit_integers;  // sorted by representative, nonzero only
  long degree_at_infinity = 0;
  long lookup(const Poly& rep) const;
};
DlogResidueData dlog_residue_data(const RatFun& u, int step = 1);

bool is_summable(const RatFun& f, int step = 1);
// h with sigma^step(h) - h = f, when f is summable.
std::optional<RatFun> telescope_witness(const RatFun& f, int step = 1);
// c with f - c summable, when every orbit residue of f vanishes.
std::optional<KConst> summable_plus_constant(const RatFun& f, int step = 1);
// qdres(delta^r(dlog a), cls, r+1) = (-1)^r r! y^r qdres(dlog a, cls, 1).
bool delta_transport_check(const RatFun& a, int r, const Poly& cls);

}  // namespace qgalois
