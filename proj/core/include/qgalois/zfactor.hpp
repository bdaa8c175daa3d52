#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qgalois/qpoly.hpp"

namespace qgalois {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'c0de'2024ULL;

struct QFactorization {
  mpq_class unit;
  std::vector<std::pair<QPoly, int>> factors;  // monic irreducible, multiplicity
};

// Complete factorization over Q (squarefree decomposition, then Zassenhaus:
// Cantor-Zassenhaus mod p, linear Hensel lifting, subset recombination).
QFactorization factor_rational(const QPoly& f, std::uint64_t seed = kDefaultSeed);

// Monic irreducible factors of a squarefree polynomial.
std::vector<QPoly> factor_squarefree_rational(const QPoly& f, std::uint64_t seed = kDefaultSeed);

}  // namespace qgalois
