#include "qgalois/ratfun.hpp"

#include "qgalois/errors.hpp"

namespace qgalois {

RatFun::RatFun(Poly num) : num_(std::move(num)) {
  den_ = Poly::constant(num_.field(), num_.var(), 1);
  num_ = num_.with_var(den_.var());
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::ZeroInput, "rational function with zero denominator");
  normalize();
}

RatFun RatFun::constant(FieldPtr f, Var v, const KConst& c) { return RatFun(Poly::constant(std::move(f), v, c)); }

RatFun RatFun::variable(FieldPtr f, Var v) { return RatFun(Poly::variable(std::move(f), v)); }

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(field(), den_.var(), 1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  if (!den_.lead().is_one()) {
    KConst inv = den_.lead().inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

KConst RatFun::constant_value() const {
  if (!is_constant()) fail(ErrorCode::Internal, "rational function is not constant");
  return num_[0];
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  Poly a = o.den_ / g, b = den_ / g;
  num_ = num_ * a + o.num_ * b;
  den_ = den_ * a;
  // Common factors of the new numerator and denominator divide g.
  if (num_.is_zero()) {
    normalize();
    return *this;
  }
  while (g.degree() > 0) {
    Poly h = gcd(num_, gcd(den_, g));
    if (h.degree() <= 0) break;
    num_ = num_ / h;
    den_ = den_ / h;
  }
  if (!den_.lead().is_one()) {
    KConst inv = den_.lead().inverse();
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = o;
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  num_ = (num_ / g1) * (o.num_ / g2);
  den_ = (den_ / g2) * (o.den_ / g1);
  if (!den_.lead().is_one()) {
    KConst inv = den_.lead().inverse();
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun operator*(RatFun a, const KConst& c) {
  if (c.is_zero()) return RatFun::constant(a.field(), a.var(), 0);
  a.num_ *= c;
  return a;
}

RatFun RatFun::inverse() const {
  if (is_zero()) fail(ErrorCode::ZeroInput, "inverse of zero rational function");
  return RatFun(den_, num_);
}

RatFun RatFun::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  return RatFun(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
}

std::string RatFun::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  auto wrap = [](const Poly& p) {
    std::string s = p.to_string();
    bool simple = p.degree() <= 1 && (p.is_constant() || p.valuation() == p.degree()) &&
                  s.find(' ') == std::string::npos && s[0] != '-';
    return simple ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

int compare(const RatFun& a, const RatFun& b) {
  int c = compare(a.den(), b.den());
  if (c != 0) return c;
  return compare(a.num(), b.num());
}

KConst sigma_base(const FieldPtr& f, Var v) { return v == Var::X ? f->q() : f->q_root(1); }

RatFun scale_var(const RatFun& f, const KConst& c) { return RatFun(f.num().scale_var(c), f.den().scale_var(c)); }

RatFun sigma(const RatFun& f, long n) {
  if (n == 0 || f.is_constant()) return f;
  return scale_var(f, sigma_base(f.field(), f.var()).pow(n));
}

RatFun delta(const RatFun& f) {
  if (f.is_constant()) return RatFun::constant(f.field(), f.var(), 0);
  RatFun d(f.num().euler() * f.den() - f.num() * f.den().euler(), f.den() * f.den());
  if (f.var() == Var::X2) d = d * KConst(mpq_class(1, 2));
  return d;
}

RatFun dlog(const RatFun& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroInput, "dlog of zero");
  if (f.is_constant()) return RatFun::constant(f.field(), f.var(), 0);
  RatFun d(f.num().euler() * f.den() - f.num() * f.den().euler(), f.num() * f.den());
  if (f.var() == Var::X2) d = d * KConst(mpq_class(1, 2));
  return d;
}

namespace {

Poly spread(const Poly& p) {
  std::vector<KConst> c(p.is_zero() ? 0 : 2 * p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) c[2 * i] = p[i];
  return Poly(p.field(), Var::X2, std::move(c));
}

std::optional<Poly> squeeze(const Poly& p) {
  std::vector<KConst> c;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i % 2 == 1) {
      if (!p[i].is_zero()) return std::nullopt;
    } else {
      c.push_back(p[i]);
    }
  }
  return Poly(p.field(), Var::X, std::move(c));
}

}  // namespace

RatFun to_k2(const RatFun& f) {
  if (f.var() == Var::X2) return f;
  return RatFun(spread(f.num()), spread(f.den()));
}

std::optional<RatFun> from_k2(const RatFun& f) {
  if (f.var() == Var::X) return f;
  auto n = squeeze(f.num()), d = squeeze(f.den());
  if (!n || !d) return std::nullopt;
  return RatFun(*n, *d);
}

RatFun conjugate(const RatFun& f) {
  if (f.var() == Var::X) return f;
  return scale_var(f, KConst(-1));
}

}  // namespace qgalois
