#include "doctest.h"
#include "qgalois/errors.hpp"
#include "qgalois/ratfun.hpp"
#include "test_support.hpp"

using namespace qgalois;
using namespace qgalois::test;

TEST_CASE("sigma and delta basics") {
  auto K = formal(1);
  KConst q = K->q();
  RatFun x = X(K);
  CHECK(sigma(x) == x * C(K, q));
  RatFun f = C(K, 1) / (x - C(K, 1));
  CHECK(sigma(f) == C(K, 1) / (x * C(K, q) - C(K, 1)));
  RatFun g = x * x + x * C(K, 6) + C(K, 6);
  CHECK(sigma(g) == x * x * C(K, q * q) + x * C(K, q * 6) + C(K, 6));
  CHECK(delta(x) == x);
  CHECK(delta(C(K, q)).is_zero());
  RatFun u = x.pow(3) * (x - C(K, 1)).pow(2);
  CHECK(dlog(u) == C(K, 5) + C(K, 2) / (x - C(K, 1)));
  RatFun b = (x * x - x) * C(K, K->q_root(1));
  CHECK(dlog(b) == C(K, 2) + C(K, 1) / (x - C(K, 1)));
  CHECK_THROWS_AS(dlog(C(K, 0)), Error);
}

TEST_CASE("addition cancels repeated common factors") {
  auto K = formal(0);
  KConst q = K->q();
  RatFun x = X(K);
  auto lin = [&](long k) { return x + C(K, q.pow(-k)); };
  RatFun A = (x + C(K, 1)) * lin(1) / (lin(2) * lin(3));
  RatFun B = C(K, 1) / (lin(1) * lin(3)).pow(2);
  CHECK((A + B) - B == A);
  CHECK((B + A) - A == B);
}

TEST_CASE("factor over K") {
  auto K = formal(0);
  KConst q = K->q();
  auto f = factor(P(K, {0, -1, 1}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == P(K, {0, 1}));
  CHECK(f.factors[1].first == P(K, {-1, 1}));
  auto g = factor(P(K, {-1, 0, q}));
  REQUIRE(g.factors.size() == 1);
  CHECK(g.unit == q);
  CHECK(g.factors[0].first == P(K, {-q.inverse(), 0, 1}));
  // (x - q)(x + q^2 + 1)(x^2 - q) over Q(q)
  Poly a = P(K, {-q, 1}) * P(K, {q * q + 1, 1}) * P(K, {-q, 0, 1});
  auto h = factor(a);
  CHECK(h.factors.size() == 3);
  Poly back = Poly::constant(K, Var::X, h.unit);
  for (auto& [p, m] : h.factors) back = back * p.pow(m);
  CHECK(back == a);
  // x^2 - q splits once q^(1/2) is available.
  auto K1 = formal(1);
  CHECK(factor(P(K1, {-K1->q(), 0, 1})).factors.size() == 2);
  // Concrete tower Q(sqrt 2): x^2 - 2 splits, x^2 - 3 does not.
  auto L = concrete(2, 1);
  CHECK(factor(P(L, {-2, 0, 1})).factors.size() == 2);
  CHECK(factor(P(L, {-3, 0, 1})).factors.size() == 1);
  CHECK(factor(P(L, {-3, 0, 1}) * P(L, {-2, 0, 0, 1})).factors.size() == 2);
}

TEST_CASE("shift_class") {
  auto K = formal(0);
  KConst q = K->q();
  auto s = shift_class(P(K, {-1, 1}), P(K, {-q, 1}), q);
  REQUIRE(s);
  CHECK(s->first == -1);
  CHECK(s->second == q);
  auto t = shift_class(P(K, {-1, 1}), P(K, {-1, 1}), q);
  REQUIRE(t);
  CHECK(t->first == 0);
  CHECK(!shift_class(P(K, {-1, 1}), P(K, {-2, 1}), q));
}

TEST_CASE("k2 conversions") {
  auto K = formal(1);
  RatFun x2 = X(K, Var::X2);
  CHECK(to_k2(X(K) - C(K, 1)) == x2 * x2 - C(K, 1, Var::X2));
  CHECK(!from_k2(x2 * x2 + x2));
  RatFun xx = x2 * x2;
  CHECK(conjugate(xx + x2) == xx - x2);
  RatFun f = (X(K) * X(K) + C(K, K->q())) / (X(K) - C(K, 3));
  CHECK(*from_k2(to_k2(f)) == f);
}
