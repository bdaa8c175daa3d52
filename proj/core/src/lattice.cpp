#include "qgalois/lattice.hpp"

#include <algorithm>

namespace qgalois {

namespace {

// Integer row echelon form on the first `ncols` columns. Returns the rank;
// rows at index >= rank are zero in those columns. Pivot columns recorded.
std::size_t echelon(IntMat& a, std::size_t ncols, std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < a.size(); ++col) {
    for (;;) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        if (best == a.size() || abs(a[i][col]) < abs(a[best][col])) best = i;
      }
      if (best == a.size()) break;
      std::swap(a[r], a[best]);
      bool clean = true;
      for (std::size_t k = r + 1; k < a.size(); ++k) {
        if (a[k][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[k][col].get_mpz_t(), a[r][col].get_mpz_t());
        for (std::size_t j = 0; j < a[k].size(); ++j) a[k][j] -= q * a[r][j];
        if (a[k][col] != 0) clean = false;
      }
      if (clean) {
        if (pivots) pivots->push_back(col);
        ++r;
        break;
      }
    }
  }
  return r;
}

}  // namespace

IntMat hermite_normal_form(IntMat rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  std::vector<std::size_t> piv;
  std::size_t r = echelon(rows, n, &piv);
  rows.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t c = piv[i];
    if (rows[i][c] < 0)
      for (auto& x : rows[i]) x = -x;
    for (std::size_t k = 0; k < i; ++k) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[k][c].get_mpz_t(), rows[i][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = 0; j < n; ++j) rows[k][j] -= q * rows[i][j];
    }
  }
  return rows;
}

IntMat integer_kernel(const IntMat& a, std::size_t ncols) {
  const std::size_t m = a.size();
  IntMat aug(ncols, IntVec(m + ncols, mpz_class(0)));
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < m; ++i) aug[j][i] = a[i][j];
    aug[j][m + j] = 1;
  }
  std::size_t r = echelon(aug, m, nullptr);
  IntMat ker;
  for (std::size_t i = r; i < aug.size(); ++i) ker.emplace_back(aug[i].begin() + m, aug[i].end());
  return hermite_normal_form(std::move(ker));
}

IntMat project_lattice(const IntMat& basis, std::size_t k) {
  IntMat p;
  for (auto& v : basis) p.emplace_back(v.begin(), v.begin() + k);
  return hermite_normal_form(std::move(p));
}

std::vector<mpz_class> coprime_base(const std::vector<mpz_class>& xs) {
  std::vector<mpz_class> base;
  for (auto x : xs) {
    x = abs(x);
    if (x > 1) base.push_back(x);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (std::size_t i = 0; i < base.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        mpz_class g = gcd(base[i], base[j]);
        if (g == 1) continue;
        mpz_class a = base[i] / g, b = base[j] / g;
        base.erase(base.begin() + j);
        base.erase(base.begin() + i);
        for (auto& y : {a, g, b})
          if (y > 1) base.push_back(y);
        changed = true;
      }
  }
  return base;
}

IntVec base_exponents(mpz_class x, const std::vector<mpz_class>& base) {
  x = abs(x);
  IntVec e(base.size(), mpz_class(0));
  for (std::size_t i = 0; i < base.size(); ++i)
    while (x % base[i] == 0) {
      x /= base[i];
      ++e[i];
    }
  return e;
}

mpz_class prime_divisor(const mpz_class& n0) {
  mpz_class n = abs(n0);
  for (unsigned long d = 2; d < 1000000 && d * d <= n; ++d)
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) return mpz_class(d);
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) return n;
  // Pollard rho (Floyd), fixed parameters for determinism.
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(abs(x - y), n);
    }
    if (d != n) return prime_divisor(d);
  }
}

}  // namespace qgalois
