#pragma once

#include <gmpxx.h>

#include <vector>

namespace qgalois {

using IntVec = std::vector<mpz_class>;
using IntMat = std::vector<IntVec>;  // row-major

// Row-style Hermite normal form of the lattice spanned by the rows.
// Zero rows are dropped; pivots positive, entries above a pivot in [0, pivot).
IntMat hermite_normal_form(IntMat rows);

// Z-basis (in HNF) of {v in Z^ncols : A v = 0}.
IntMat integer_kernel(const IntMat& a, std::size_t ncols);

// Lattice spanned by rows projected onto the first k coordinates, in HNF.
IntMat project_lattice(const IntMat& basis, std::size_t k);

// Pairwise coprime base (elements > 1) such that each |input| is a product of
// base elements. Sorted ascending.
std::vector<mpz_class> coprime_base(const std::vector<mpz_class>& xs);

// Exponents of |x| over a coprime base; x must factor over it.
IntVec base_exponents(mpz_class x, const std::vector<mpz_class>& base);

// A prime divisor of |n| > 1 (the smallest one below 10^6 if any, otherwise
// found by Pollard rho). Deterministic.
mpz_class prime_divisor(const mpz_class& n);

}  // namespace qgalois
