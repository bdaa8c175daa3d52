#pragma once

#include <optional>
#include <vector>

#include "qgalois/ratfun.hpp"

namespace qgalois {

enum class SolutionCount { NoSolution, One, Two, InfinitelyMany };
enum class FieldTag { K1, K2 };

const char* solution_count_name(SolutionCount c);
const char* field_tag_name(FieldTag t);

struct RiccatiOutcome {
  SolutionCount tag = SolutionCount::NoSolution;
  FieldTag field = FieldTag::K1;
  std::vector<RatFun> solutions;  // sorted, pairwise distinct; three witnesses when InfinitelyMany
};

// u * sigma^step(u) + a * u + b == 0.
bool is_riccati_solution(const RatFun& u, const RatFun& a, const RatFun& b, int step = 1);

// Coefficients of the second Riccati equation in e.
std::pair<RatFun, RatFun> riccati2_coefficients(const RatFun& a, const RatFun& b);

// Rational solutions of u sigma(u) + a u + b = 0 over k1 = K(x) or k2 = K(x2).
RiccatiOutcome riccati_solve(const RatFun& a, const RatFun& b, FieldTag field);
// Rational solutions of the second Riccati equation (shift sigma^2).
RiccatiOutcome riccati2_solve(const RatFun& a, const RatFun& b, FieldTag field);

// u = h * v^n * p1 / p2 * sigma^step(g) / g.
struct ReducedForm {
  KConst h;
  long n = 0;
  Poly p1;
  Poly p2;
  RatFun g;
};
ReducedForm reduced_form(const RatFun& u, int step = 1);

// Least m >= 1 with u^m = sigma^step(f) / f for some rational f.
std::optional<long> torsion_order(const RatFun& u, int step = 1);

// r of the standard imprimitive form; b itself when a = 0.
RatFun standard_imprimitive_r(const RatFun& a, const RatFun& b, const RatFun& e);

// sigma(T) A T^-1 == diag(u1, u2) for T = 1/(u1 - u2) (u2 -1; u1 -1).
bool gauge_check(const RatFun& a, const RatFun& b, const RatFun& u1, const RatFun& u2);

}  // namespace qgalois
