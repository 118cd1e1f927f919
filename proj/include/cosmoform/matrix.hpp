#pragma once

// Exact dense linear algebra at desk scale: fraction-free determinants and
// rank. Matrices are row-major vectors of QVec.

#include <cstddef>
#include <utility>
#include <vector>

#include "cosmoform/rational.hpp"

namespace cosmoform {

using QMat = std::vector<QVec>;

// Bareiss fraction-free elimination over the integers. Denominators are
// cleared row by row first, so intermediate entries stay single-division
// exact and growth is polynomially bounded.
inline Rational det(QMat m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw contract_error("det: matrix not square");
  if (n == 0) return Rational(1);

  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer den(1);
  for (std::size_t i = 0; i < n; ++i) {
    Integer l(1);
    for (std::size_t j = 0; j < n; ++j) {
      Rational c(m[i][j]);
      c.canonicalize();
      Integer d = c.get_den();
      Integer g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    for (std::size_t j = 0; j < n; ++j) {
      Rational c = m[i][j] * l;
      c.canonicalize();
      a[i][j] = c.get_num();
    }
    den *= l;
  }

  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Integer num = a[n - 1][n - 1];
  if (sign < 0) num = -num;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::size_t rank(QMat m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  for (const auto& r : m)
    if (r.size() != cols) throw contract_error("rank: ragged matrix");
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rk]);
    for (std::size_t i = rk + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[rk][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rk][j];
    }
    ++rk;
  }
  return rk;
}

// Dimension of the affine hull of a point set; the empty set has dimension -1.
inline int affine_dim(const std::vector<QVec>& pts) {
  if (pts.empty()) return -1;
  QMat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(vsub(pts[i], pts[0]));
  if (diffs.empty()) return 0;
  return static_cast<int>(rank(std::move(diffs)));
}

}  // namespace cosmoform
