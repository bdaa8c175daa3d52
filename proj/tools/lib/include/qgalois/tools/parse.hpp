#pragma once

#include <string_view>

#include "qgalois/ratfun.hpp"

namespace qgalois::tools {

// Expr   := Term (('+'|'-') Term)*
// Term   := Factor (('*'|'/') Factor)*
// Factor := Base ('^' Integer)?
// Base   := x | x2 | q | sqrt(q) | root(q,N) | Rational | '(' Expr ')' | '-' Factor
// x2 is x^(1/2); an expression mentioning x2 is returned over k2. With
// var = X2 the result is always lifted to k2.
RatFun parse_expression(std::string_view src, const FieldPtr& field, Var var = Var::X);

// A constant expression.
KConst parse_constant(std::string_view src, const FieldPtr& field);

}  // namespace qgalois::tools
