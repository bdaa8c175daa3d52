#include "qgalois/tools/parse.hpp"

#include <cctype>
#include <string>

#include "qgalois/errors.hpp"

namespace qgalois::tools {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const FieldPtr& field) : src_(src), field_(field) {}

  RatFun parse() {
    RatFun r = expr();
    skip_ws();
    if (pos_ != src_.size()) error("unexpected '" + std::string(1, src_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::SyntaxError, "at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (src_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    if (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    return std::string(src_.substr(start, pos_ - start));
  }

  // Combines operands living in k1 and k2.
  static void unify(RatFun& a, RatFun& b) {
    if (a.var() == b.var()) return;
    if (a.var() == Var::X) a = to_k2(a);
    else b = to_k2(b);
  }

  RatFun constant(const KConst& c) const { return RatFun::constant(field_, Var::X, c); }

  RatFun expr() {
    RatFun acc = term();
    for (;;) {
      if (accept('+')) {
        RatFun t = term();
        unify(acc, t);
        acc += t;
      } else if (accept('-')) {
        RatFun t = term();
        unify(acc, t);
        acc -= t;
      } else {
        return acc;
      }
    }
  }

  RatFun term() {
    RatFun acc = factor();
    for (;;) {
      if (accept('*')) {
        RatFun f = factor();
        unify(acc, f);
        acc *= f;
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RatFun f = factor();
        if (f.is_zero()) {
          pos_ = at;
          error("division by zero");
        }
        unify(acc, f);
        acc /= f;
      } else {
        return acc;
      }
    }
  }

  RatFun factor() {
    RatFun base = primary();
    if (!accept('^')) return base;
    const bool neg = accept('-');
    const std::string d = digits();
    if (d.size() > 9) error("exponent too large");
    const long k = std::stol(d);
    if (base.is_zero() && (neg || k == 0)) error("zero raised to a non-positive power");
    return base.pow(neg ? -k : k);
  }

  RatFun primary() {
    skip_ws();
    if (pos_ >= src_.size()) error("unexpected end of input");
    if (accept('-')) return -factor();
    if (accept('(')) {
      RatFun e = expr();
      expect(')');
      return e;
    }
    if (accept_word("x2")) {
      if (field_->depth() < 1) fail(ErrorCode::DepthError, "x2 needs root_depth >= 1");
      return RatFun::variable(field_, Var::X2);
    }
    if (accept_word("x")) return RatFun::variable(field_, Var::X);
    if (accept_word("q")) return constant(field_->q());
    if (accept_word("sqrt")) {
      expect('(');
      if (!accept_word("q")) error("expected 'q'");
      expect(')');
      return constant(field_->q_root(1));
    }
    if (accept_word("root")) {
      expect('(');
      if (!accept_word("q")) error("expected 'q'");
      expect(',');
      const std::string d = digits();
      expect(')');
      if (d.size() > 9) error("root index too large");
      const long n = std::stol(d);
      int level = 0;
      while ((1L << level) < n) ++level;
      if ((1L << level) != n) error("root index must be a power of two");
      return constant(field_->q_root(level));
    }
    if (std::isdigit(static_cast<unsigned char>(src_[pos_]))) return constant(KConst(mpq_class(mpz_class(digits()))));
    error("unexpected '" + std::string(1, src_[pos_]) + "'");
  }

  std::string_view src_;
  FieldPtr field_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFun parse_expression(std::string_view src, const FieldPtr& field, Var var) {
  RatFun r = Parser(src, field).parse();
  if (var == Var::X2 && r.var() == Var::X) r = to_k2(r);
  return r;
}

KConst parse_constant(std::string_view src, const FieldPtr& field) {
  RatFun r = parse_expression(src, field);
  if (!r.is_constant()) fail(ErrorCode::SyntaxError, "expected a constant: " + std::string(src));
  return r.constant_value();
}

}  // namespace qgalois::tools
