#pragma once

// Exact rational linear programming, just enough for supporting-hyperplane
// queries: decide whether some w satisfies <w,a> = 0 on a list of equality
// rows and <w,b> > 0 on a list of strict rows. Decided by maximizing a slack
// eps with a box bound on w, using a dense two-phase simplex with Bland's
// rule (guaranteed termination, no floating point).

#include <cstddef>
#include <vector>

#include "cosmoform/rational.hpp"

namespace cosmoform {

namespace detail {

class SimplexTableau {
 public:
  SimplexTableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows, QVec(cols + 1, Rational(0))), basis_(rows, 0) {}

  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  Rational& rhs(std::size_t r) { return a_[r][cols_]; }
  void set_basis(std::size_t r, std::size_t col) { basis_[r] = col; }

  // Minimizes cost over the region, starting from the current basic feasible
  // solution. Columns with banned[c] set are never entered. Returns the
  // minimum objective value.
  Rational solve(const QVec& cost, const std::vector<bool>& banned) {
    // z-row: reduced costs in [0, cols), minus the objective value at [cols]
    QVec z(cols_ + 1, Rational(0));
    for (std::size_t c = 0; c < cols_; ++c) z[c] = cost[c];
    for (std::size_t r = 0; r < rows_; ++r) {
      Rational f = z[basis_[r]];
      if (f == 0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) z[c] -= f * a_[r][c];
      z[basis_[r]] = 0;
    }
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!banned[c] && z[c] < 0) {
          enter = c;  // Bland: lowest eligible index
          break;
        }
      }
      if (enter == cols_) return -z[cols_];
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (a_[r][enter] <= 0) continue;
        Rational ratio = rhs(r) / a_[r][enter];
        if (leave == rows_ || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows_)
        throw contract_error("lp: unbounded objective in bounded formulation");
      pivot(leave, enter);
      basis_[leave] = enter;
      Rational f = z[enter];
      if (f != 0) {
        for (std::size_t c = 0; c <= cols_; ++c) z[c] -= f * a_[leave][c];
        z[enter] = 0;
      }
    }
  }

  // Pivots degenerate basic artificials out where possible; a row that stays
  // artificial-basic is identically zero on real columns and harmless.
  void expel_artificials(std::size_t first_artificial) {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < first_artificial) continue;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (a_[r][c] != 0) {
          pivot(r, c);
          basis_[r] = c;
          break;
        }
      }
    }
  }

 private:
  void pivot(std::size_t pr, std::size_t pc) {
    Rational p = a_[pr][pc];
    for (std::size_t c = 0; c <= cols_; ++c) a_[pr][c] /= p;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      Rational f = a_[r][pc];
      if (f == 0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) a_[r][c] -= f * a_[pr][c];
      a_[r][pc] = 0;
    }
  }

  std::size_t rows_, cols_;
  std::vector<QVec> a_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

// True iff some w has <w,a> = 0 for every a in equalities and <w,b> > 0 for
// every b in strict_positives. Substituting u = w + 1 in the box |w|_inf <= 1
// gives a standard-form LP maximizing the uniform strict slack.
inline bool lp_strict_feasible(const std::vector<QVec>& equalities,
                               const std::vector<QVec>& strict_positives) {
  if (strict_positives.empty()) return true;
  std::size_t d = strict_positives.front().size();
  for (const auto& v : equalities)
    if (v.size() != d) throw contract_error("lp_strict_feasible: row length mismatch");
  for (const auto& v : strict_positives)
    if (v.size() != d) throw contract_error("lp_strict_feasible: row length mismatch");
  if (d == 0) return false;

  const std::size_t ne = equalities.size(), ns = strict_positives.size();
  const std::size_t rows = ne + ns + d;
  // columns: u_0..u_{d-1}, eps, s_0..s_{ns-1}, t_0..t_{d-1}, artificials
  const std::size_t col_eps = d;
  const std::size_t col_s = d + 1;
  const std::size_t col_t = col_s + ns;
  const std::size_t col_art = col_t + d;
  const std::size_t cols = col_art + ne + ns;

  detail::SimplexTableau tab(rows, cols);
  std::size_t r = 0, art = 0;
  auto finish_row = [&]() {
    if (tab.rhs(r) < 0)
      for (std::size_t c = 0; c <= cols; ++c) tab.at(r, c) = -tab.at(r, c);
    tab.at(r, col_art + art) = Rational(1);
    tab.set_basis(r, col_art + art);
    ++art;
    ++r;
  };
  for (const auto& a : equalities) {
    for (std::size_t j = 0; j < d; ++j) tab.at(r, j) = a[j];
    tab.rhs(r) = coord_sum(a);
    finish_row();
  }
  for (const auto& b : strict_positives) {
    for (std::size_t j = 0; j < d; ++j) tab.at(r, j) = b[j];
    tab.at(r, col_eps) = Rational(-1);
    tab.at(r, col_s + (r - ne)) = Rational(-1);
    tab.rhs(r) = coord_sum(b);
    finish_row();
  }
  for (std::size_t j = 0; j < d; ++j) {
    tab.at(r, j) = Rational(1);
    tab.at(r, col_t + j) = Rational(1);
    tab.rhs(r) = Rational(2);
    tab.set_basis(r, col_t + j);
    ++r;
  }

  std::vector<bool> none(cols, false);
  QVec phase1(cols, Rational(0));
  for (std::size_t c = col_art; c < cols; ++c) phase1[c] = Rational(1);
  Rational infeas = tab.solve(phase1, none);
  if (infeas != 0) return false;  // cannot happen: w = 0, eps = 0 is feasible
  tab.expel_artificials(col_art);

  std::vector<bool> ban_art(cols, false);
  for (std::size_t c = col_art; c < cols; ++c) ban_art[c] = true;
  QVec phase2(cols, Rational(0));
  phase2[col_eps] = Rational(-1);  // maximize eps
  Rational min_val = tab.solve(phase2, ban_art);
  return min_val < 0;
}

}  // namespace cosmoform
