#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace qgalois {

// Dense Gaussian elimination over an exact field. E needs +, -, *, ==,
// inverse() and is_zero().
template <class E>
using Matrix = std::vector<std::vector<E>>;

namespace detail {

// Reduced row echelon form in place over columns [0, ncols); returns pivot columns.
template <class E>
std::vector<std::size_t> rref(Matrix<E>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    E inv = m[row][col].inverse();
    for (auto& e : m[row]) e = e * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      E f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c)
        if (!m[row][c].is_zero()) m[r][c] = m[r][c] - f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

// Basis of {v : M v = 0}.
template <class E>
Matrix<E> kernel(Matrix<E> m, std::size_t ncols, const E& zero, const E& one) {
  auto piv = detail::rref(m, ncols);
  std::vector<bool> is_piv(ncols, false);
  for (auto p : piv) is_piv[p] = true;
  Matrix<E> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_piv[free]) continue;
    std::vector<E> v(ncols, zero);
    v[free] = one;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of M v = rhs, or nothing when inconsistent.
template <class E>
std::optional<std::vector<E>> solve(Matrix<E> m, const std::vector<E>& rhs, std::size_t ncols, const E& zero) {
  for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(rhs[r]);
  auto piv = detail::rref(m, ncols);
  for (std::size_t r = piv.size(); r < m.size(); ++r)
    if (!m[r][ncols].is_zero()) return std::nullopt;
  std::vector<E> v(ncols, zero);
  for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = m[r][ncols];
  return v;
}

}  // namespace qgalois
