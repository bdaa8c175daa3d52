#include "qgalois/zfactor.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace qgalois {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // low to high, trimmed

struct Zp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 from(const mpz_class& z) const {
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
  }
};

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly mp_sub(const Zp& F, ModPoly a, const ModPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

ModPoly mp_mul(const Zp& F, const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

void mp_divmod(const Zp& F, const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) {
  r = a;
  q.clear();
  if (deg(a) < deg(b)) return;
  const int db = deg(b);
  q.assign(deg(a) - db + 1, 0);
  u64 inv = F.inv(b.back());
  for (int i = deg(a); i >= db; --i) {
    if (!r[i]) continue;
    u64 f = F.mul(r[i], inv);
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(f, b[j]));
  }
  r.resize(db);
  trim(r);
  trim(q);
}

ModPoly mp_rem(const Zp& F, const ModPoly& a, const ModPoly& b) {
  ModPoly q, r;
  mp_divmod(F, a, b, q, r);
  return r;
}

ModPoly mp_quo(const Zp& F, const ModPoly& a, const ModPoly& b) {
  ModPoly q, r;
  mp_divmod(F, a, b, q, r);
  return q;
}

ModPoly mp_monic(const Zp& F, ModPoly a) {
  if (a.empty()) return a;
  u64 inv = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, inv);
  return a;
}

ModPoly mp_gcd(const Zp& F, ModPoly a, ModPoly b) {
  while (!b.empty()) {
    ModPoly r = mp_rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(F, a);
}

// Inverse of a modulo m (gcd must be 1).
ModPoly mp_invmod(const Zp& F, const ModPoly& a, const ModPoly& m) {
  ModPoly r0 = m, r1 = mp_rem(F, a, m), t0, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    mp_divmod(F, r0, r1, q, r);
    ModPoly t2 = mp_sub(F, t0, mp_mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  assert(r0.size() == 1);
  u64 inv = F.inv(r0[0]);
  for (auto& c : t0) c = F.mul(c, inv);
  return mp_rem(F, t0, m);
}

ModPoly mp_powmod(const Zp& F, ModPoly base, const mpz_class& e, const ModPoly& m) {
  ModPoly r{1};
  base = mp_rem(F, base, m);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = mp_rem(F, mp_mul(F, r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mp_rem(F, mp_mul(F, r, base), m);
  }
  return r;
}

ModPoly mp_deriv(const Zp& F, const ModPoly& a) {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
  trim(r);
  return r;
}

// Equal-degree splitting (Cantor-Zassenhaus) for odd p.
void edf(const Zp& F, const ModPoly& g, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, F.p - 1);
  for (;;) {
    ModPoly a(deg(g));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly b = mp_powmod(F, a, e, g);
    if (b.empty()) continue;
    b[0] = F.sub(b[0], 1);
    trim(b);
    ModPoly h = mp_gcd(F, b, g);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      edf(F, h, d, rng, out);
      edf(F, mp_quo(F, g, h), d, rng, out);
      return;
    }
  }
}

// f monic squarefree mod p.
std::vector<ModPoly> factor_mod_p(const Zp& F, ModPoly f, std::mt19937_64& rng) {
  std::vector<ModPoly> out;
  ModPoly h{0, 1};
  const ModPoly x{0, 1};
  int i = 0;
  while (deg(f) >= 2 * (i + 1)) {
    ++i;
    h = mp_powmod(F, h, mpz_class(static_cast<unsigned long>(F.p)), f);
    ModPoly g = mp_gcd(F, mp_sub(F, h, x), f);
    if (deg(g) > 0) {
      edf(F, g, i, rng, out);
      f = mp_quo(F, f, g);
      h = mp_rem(F, h, f);
    }
  }
  if (deg(f) > 0) out.push_back(f);
  return out;
}

bool is_prime_small(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using ZPoly = std::vector<mpz_class>;

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& c : r) {
    c %= m;
    if (c < 0) c += m;
  }
  return r;
}

// Factor a primitive squarefree integer polynomial of degree >= 2 with
// nonzero constant term. Returns primitive integer factors.
std::vector<ZPoly> zassenhaus(const ZPoly& f, std::mt19937_64& rng) {
  const int n = static_cast<int>(f.size()) - 1;
  const mpz_class& lc = f.back();
  QPoly fq = QPoly::from_integer(f);

  // Choose a prime with few modular factors among a handful of candidates.
  std::vector<ModPoly> best;
  u64 best_p = 0;
  int tried = 0;
  for (u64 p = 32771; tried < 4; p += 2) {
    if (!is_prime_small(p)) continue;
    Zp F{p};
    if (F.from(lc) == 0) continue;
    ModPoly fm(f.size());
    for (size_t i = 0; i < f.size(); ++i) fm[i] = F.from(f[i]);
    trim(fm);
    if (deg(fm) != n) continue;
    if (deg(mp_gcd(F, fm, mp_deriv(F, fm))) > 0) continue;
    ++tried;
    auto facs = factor_mod_p(F, mp_monic(F, fm), rng);
    if (best_p == 0 || facs.size() < best.size()) {
      best = std::move(facs);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  if (best.size() <= 1) return {f};

  const Zp F{best_p};
  const mpz_class p(static_cast<unsigned long>(best_p));

  // Coefficient bound for lc * (any factor).
  mpz_class norm2 = 0;
  for (auto& c : f) norm2 += c * c;
  mpz_class bound = sqrt(norm2) + 1;
  bound *= abs(lc);
  bound <<= n;
  bound *= 2;
  int k = 1;
  mpz_class pk = p;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }

  // Monic target f / lc mod p^k.
  mpz_class lcinv;
  mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
  ZPoly target(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    target[i] = (f[i] * lcinv) % pk;
    if (target[i] < 0) target[i] += pk;
  }

  const size_t r = best.size();
  std::vector<ModPoly> bezout(r);
  for (size_t i = 0; i < r; ++i) {
    ModPoly prod{1};
    for (size_t j = 0; j < r; ++j)
      if (j != i) prod = mp_mul(F, prod, best[j]);
    bezout[i] = mp_invmod(F, prod, best[i]);
  }
  std::vector<ZPoly> g(r);
  for (size_t i = 0; i < r; ++i)
    for (u64 c : best[i]) g[i].push_back(mpz_class(static_cast<unsigned long>(c)));

  mpz_class pj = p;
  for (int j = 1; j < k; ++j) {
    mpz_class pj1 = pj * p;
    ZPoly prod{mpz_class(1)};
    for (auto& gi : g) prod = zmul_mod(prod, gi, pj1);
    ModPoly e(f.size(), 0);
    for (size_t i = 0; i < f.size(); ++i) {
      mpz_class t = (i < target.size() ? target[i] : 0) - (i < prod.size() ? prod[i] : 0);
      t %= pj1;
      if (t < 0) t += pj1;
      assert(t % pj == 0);
      e[i] = F.from(t / pj);
    }
    trim(e);
    if (!e.empty()) {
      for (size_t i = 0; i < r; ++i) {
        ModPoly d = mp_rem(F, mp_mul(F, e, bezout[i]), best[i]);
        for (size_t c = 0; c < d.size(); ++c) g[i][c] += pj * static_cast<unsigned long>(d[c]);
      }
    }
    pj = pj1;
  }

  // Subset recombination with trial division.
  std::vector<ZPoly> result;
  std::vector<ZPoly> rem = g;
  QPoly cur = fq;
  mpz_class half = pk / 2;
  size_t s = 1;
  while (2 * s <= rem.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      mpz_class clc = cur.lead().get_num();
      ZPoly cand{clc % pk};
      for (size_t i : idx) cand = zmul_mod(cand, rem[i], pk);
      for (auto& c : cand)
        if (c > half) c -= pk;
      QPoly cq = QPoly::from_integer(QPoly::from_integer(cand).primitive_integer());
      QPoly qq, rr;
      divmod(cur, cq, qq, rr);
      if (rr.is_zero()) {
        result.push_back(cq.primitive_integer());
        cur = QPoly::from_integer(qq.primitive_integer());
        std::vector<ZPoly> next;
        for (size_t i = 0; i < rem.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(rem[i]);
        rem = std::move(next);
        found = true;
        break;
      }
      // next combination
      int pos = static_cast<int>(s) - 1;
      while (pos >= 0 && idx[pos] == rem.size() - s + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (size_t i = pos + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++s;
  }
  if (cur.degree() > 0) result.push_back(cur.primitive_integer());
  return result;
}

}  // namespace

std::vector<QPoly> factor_squarefree_rational(const QPoly& f, std::uint64_t seed) {
  std::vector<QPoly> out;
  if (f.degree() <= 0) return out;
  QPoly g = f;
  if (g.valuation() > 0) {
    out.push_back(QPoly::var());
    g = g.strip_valuation();
  }
  if (g.degree() == 1) {
    out.push_back(g.monic());
  } else if (g.degree() >= 2) {
    std::mt19937_64 rng(seed);
    for (auto& z : zassenhaus(g.primitive_integer(), rng)) out.push_back(QPoly::from_integer(z).monic());
  }
  std::sort(out.begin(), out.end(), [](const QPoly& a, const QPoly& b) { return compare(a, b) < 0; });
  return out;
}

QFactorization factor_rational(const QPoly& f, std::uint64_t seed) {
  QFactorization r;
  r.unit = f.lead();
  for (auto& [mult, part] : squarefree(f))
    for (auto& p : factor_squarefree_rational(part, seed)) r.factors.emplace_back(p, mult);
  std::sort(r.factors.begin(), r.factors.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
  return r;
}

}  // namespace qgalois
