#pragma once

// Exact volume of the dual body after shifting the polytope by an interior
// point, computed without tubings: a pulling triangulation driven purely by
// facet incidence. Volumes live in a fixed rational chart on the sum-zero
// subspace, so cross-pipeline comparisons are exact and constant-free.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cosmoform/matrix.hpp"
#include "cosmoform/polytope.hpp"
#include "cosmoform/rational.hpp"
#include "cosmoform/tubing.hpp"

namespace cosmoform {

// Fixed linear chart on the sum-zero subspace: drop the last coordinate.
inline QVec project_to_chart(const QVec& v) {
  if (coord_sum(v) != 0)
    throw contract_error("project_to_chart: coordinate sum " +
                         to_string(Rational(coord_sum(v))) + " is not zero");
  return QVec(v.begin(), v.end() - 1);
}

struct ShiftedDual {
  int n = 0;
  QVec shift;
  QVec scalars;                         // per tube: n <h_t, x> / |h_t|_1
  std::vector<QVec> chart_vertices;     // per tube, in chart coordinates
  std::vector<std::vector<char>> incidence;  // [tube][tag], shift-independent
};

inline ShiftedDual shifted_dual(const TubeSet& ts, const QVec& x) {
  const int n = ts.graph.n();
  if (static_cast<int>(x.size()) != n)
    throw contract_error("shifted_dual: point has wrong dimension");
  if (coord_sum(x) != 1)
    throw contract_error("shifted_dual: point is off the unit-sum hyperplane");
  ShiftedDual sd;
  sd.n = n;
  sd.shift = x;
  sd.incidence = facet_incidence(ts);
  for (int t = 0; t < ts.size(); ++t) {
    const QVec h = facet_normal(ts, t);
    const Rational pairing = dot(h, x);
    if (pairing <= 0)
      throw contract_error("shifted_dual: point is not interior, tube " + ts.label(t) +
                           " pairs to " + to_string(pairing));
    const Rational ell = Rational(Rational(n) * pairing / coord_sum(h));
    sd.scalars.push_back(ell);
    QVec u(n);
    for (int k = 0; k < n; ++k)
      u[k] = Rational(Rational(n) * h[k] / coord_sum(h) - 1);
    sd.chart_vertices.push_back(project_to_chart(vscale(Rational(Rational(1) / ell), u)));
  }
  return sd;
}

// Pulling triangulation over the incidence structure: cone the least vertex
// of each face over the facets of that face avoiding it. Faces recur across
// branches, so decompositions are memoized by vertex set.
inline Rational oracle_volume(const ShiftedDual& sd) {
  const int d = sd.n - 1;
  const int m = static_cast<int>(sd.chart_vertices.size());
  const int ntags = sd.incidence.empty() ? 0 : static_cast<int>(sd.incidence[0].size());

  std::vector<std::vector<int>> facets(ntags);
  for (int tag = 0; tag < ntags; ++tag)
    for (int i = 0; i < m; ++i)
      if (sd.incidence[i][tag]) facets[tag].push_back(i);

  const auto dim_of = [&](const std::vector<int>& S) {
    std::vector<QVec> pts;
    for (int i : S) pts.push_back(sd.chart_vertices[i]);
    return affine_dim(pts);
  };

  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;
  if (dim_of(all) != d)
    throw contract_error("oracle_volume: dual body has affine dimension " +
                         std::to_string(dim_of(all)) + ", expected " + std::to_string(d));

  std::map<std::vector<int>, std::vector<std::vector<int>>> memo;
  auto tri = [&](auto&& self, const std::vector<int>& S, int dS)
      -> const std::vector<std::vector<int>>& {
    auto it = memo.find(S);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> out;
    if (static_cast<int>(S.size()) == dS + 1) {
      out.push_back(S);
      return memo.emplace(S, std::move(out)).first->second;
    }
    const int v0 = S.front();
    std::set<std::vector<int>> seen;
    for (int tag = 0; tag < ntags; ++tag) {
      std::vector<int> child;
      std::set_intersection(S.begin(), S.end(), facets[tag].begin(), facets[tag].end(),
                            std::back_inserter(child));
      if (child.empty() || child.front() == v0) continue;
      if (static_cast<int>(child.size()) < dS) continue;
      if (!seen.insert(child).second) continue;
      if (dim_of(child) != dS - 1) continue;
      for (const auto& simplex : self(self, child, dS - 1)) {
        std::vector<int> coned = {v0};
        coned.insert(coned.end(), simplex.begin(), simplex.end());
        out.push_back(std::move(coned));
      }
    }
    if (out.empty())
      throw contract_error("oracle_volume: face with " + std::to_string(S.size()) +
                           " vertices has no facets avoiding its pull vertex");
    return memo.emplace(S, std::move(out)).first->second;
  };

  const auto& simplices = tri(tri, all, d);
  Rational vol(0);
  Integer dfact;
  mpz_fac_ui(dfact.get_mpz_t(), static_cast<unsigned long>(d));
  for (const auto& s : simplices) {
    QMat edges(d, QVec(d));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k)
        edges[i][k] = Rational(sd.chart_vertices[s[i + 1]][k] - sd.chart_vertices[s[0]][k]);
    vol += abs(det(edges));
  }
  return Rational(vol / Rational(dfact));
}

}  // namespace cosmoform
