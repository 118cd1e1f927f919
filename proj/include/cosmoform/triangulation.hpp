#pragma once

// The two triangulations of the dual body: one simplex per maximal tubing,
// and one simplex per uniquely completable almost-maximal tubing coned over
// the barycentric apex. Validation walks every ridge and checks the
// dichotomy: shared by exactly two cells, or supported by a facet.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cosmoform/matrix.hpp"
#include "cosmoform/polytope.hpp"
#include "cosmoform/rational.hpp"
#include "cosmoform/tubing.hpp"

namespace cosmoform {

enum class TriKind { MaxTubing, BoundaryCone };
enum class DetNormalization { RawNormals, NormalizedVertices };

struct SimplexCell {
  Tubing tubes;
  bool has_apex = false;  // apex = the all-coordinates-equal point on the hyperplane
};

struct Triangulation {
  TriKind kind = TriKind::MaxTubing;
  std::vector<SimplexCell> cells;
};

inline std::string cell_label(const TubeSet& ts, const SimplexCell& cell) {
  std::string s = cell.has_apex ? "[apex" : "[";
  for (size_t i = 0; i < cell.tubes.size(); ++i)
    s += (i || cell.has_apex ? " " : "") + ts.label(cell.tubes[i]);
  return s + "]";
}

// Absolute determinant of the cell's vertex matrix. RawNormals uses the
// unscaled facet normals (apex row all ones); NormalizedVertices uses the
// sum-one vertices (apex row with entries 1/n). Both are computed and must
// differ by the product of normal sums, times n for the apex.
inline Rational cell_detvol(const TubeSet& ts, const SimplexCell& cell,
                            DetNormalization normalization) {
  const int n = ts.graph.n();
  const int expect = n - (cell.has_apex ? 1 : 0);
  if (static_cast<int>(cell.tubes.size()) != expect)
    throw contract_error("cell " + cell_label(ts, cell) + " has " +
                         std::to_string(cell.tubes.size()) + " tubes, expected " +
                         std::to_string(expect));
  QMat raw, scaled;
  Rational factor(1);
  if (cell.has_apex) {
    raw.push_back(QVec(n, Rational(1)));
    scaled.push_back(QVec(n, Rational(Rational(1) / n)));
    factor *= n;
  }
  for (int t : cell.tubes) {
    QVec h = facet_normal(ts, t);
    const Rational norm = coord_sum(h);
    factor *= norm;
    scaled.push_back(vscale(Rational(Rational(1) / norm), h));
    raw.push_back(std::move(h));
  }
  const Rational draw = abs(det(raw));
  const Rational dscaled = abs(det(scaled));
  if (draw != dscaled * factor)
    throw contract_error("cell " + cell_label(ts, cell) +
                         ": determinant normalizations disagree");
  if (draw == 0)
    throw contract_error("cell " + cell_label(ts, cell) + " is not a simplex");
  return normalization == DetNormalization::RawNormals ? draw : dscaled;
}

inline Triangulation build_max_tubing_triangulation(const TubeSet& ts,
                                                    std::uint64_t budget = kDefaultBudget) {
  ts.graph.require_no_isolated("triangulation");
  Triangulation tri;
  tri.kind = TriKind::MaxTubing;
  for (const Tubing& t : enumerate_maximal_tubings(ts, budget)) {
    SimplexCell cell{t, false};
    if (static_cast<int>(t.size()) != ts.graph.n())
      throw contract_error("maximal tubing " + cell_label(ts, cell) + " has size " +
                           std::to_string(t.size()) + ", expected " +
                           std::to_string(ts.graph.n()));
    cell_detvol(ts, cell, DetNormalization::RawNormals);  // nonsingularity check
    tri.cells.push_back(std::move(cell));
  }
  return tri;
}

inline Triangulation build_boundary_triangulation(const TubeSet& ts,
                                                  std::uint64_t budget = kDefaultBudget) {
  ts.graph.require_no_isolated("triangulation");
  for (int t = 0; t < ts.size(); ++t)
    if (coord_sum(facet_normal(ts, t)) <= 0)
      throw contract_error("apex is not interior: tube " + ts.label(t));
  Triangulation tri;
  tri.kind = TriKind::BoundaryCone;
  const auto maximal = enumerate_maximal_tubings(ts, budget);
  for (const UcTubing& u : enumerate_uc_almost_maximal(ts, maximal)) {
    SimplexCell cell{u.tubes, true};
    cell_detvol(ts, cell, DetNormalization::RawNormals);
    tri.cells.push_back(std::move(cell));
  }
  return tri;
}

struct RidgeRecord {
  std::vector<int> tubes;
  bool has_apex = false;
  std::vector<int> cells;  // indices of cells the ridge bounds
  std::string kind;        // "shared" or "boundary"
  int facet_tag = -1;      // supporting polytope vertex when on the boundary
};

struct ValidationReport {
  bool ok = true;
  std::vector<RidgeRecord> ridges;
  std::vector<std::string> violations;
};

// Every ridge of every cell must either be shared by exactly two cells or
// have all its vertices on one facet of the dual body; the apex lies on no
// facet, so ridges through the apex must be shared. Failures are reported,
// not thrown.
inline ValidationReport validate_ridges(const TubeSet& ts, const Triangulation& tri) {
  const auto inc = facet_incidence(ts);
  const int ntags = tag_count(ts.graph);
  std::map<std::pair<std::vector<int>, bool>, std::vector<int>> ridge_cells;
  for (int c = 0; c < static_cast<int>(tri.cells.size()); ++c) {
    const SimplexCell& cell = tri.cells[c];
    for (size_t drop = 0; drop < cell.tubes.size(); ++drop) {
      std::vector<int> r;
      for (size_t i = 0; i < cell.tubes.size(); ++i)
        if (i != drop) r.push_back(cell.tubes[i]);
      ridge_cells[{r, cell.has_apex}].push_back(c);
    }
    if (cell.has_apex) ridge_cells[{cell.tubes, false}].push_back(c);
  }

  ValidationReport report;
  for (const auto& [key, cells] : ridge_cells) {
    RidgeRecord rec;
    rec.tubes = key.first;
    rec.has_apex = key.second;
    rec.cells = cells;
    std::string name = rec.has_apex ? "[apex" : "[";
    for (size_t i = 0; i < rec.tubes.size(); ++i)
      name += (i || rec.has_apex ? " " : "") + ts.label(rec.tubes[i]);
    name += "]";
    if (cells.size() == 2) {
      rec.kind = "shared";
    } else if (cells.size() > 2) {
      rec.kind = "violation";
      report.ok = false;
      report.violations.push_back("ridge " + name + " lies in " +
                                  std::to_string(cells.size()) + " cells");
    } else if (rec.has_apex) {
      rec.kind = "violation";
      report.ok = false;
      report.violations.push_back("apex ridge " + name + " is not shared by two cells");
    } else {
      for (int tag = 0; tag < ntags && rec.facet_tag < 0; ++tag) {
        bool all_on = true;
        for (int t : rec.tubes)
          if (!inc[t][tag]) {
            all_on = false;
            break;
          }
        if (all_on) rec.facet_tag = tag;
      }
      if (rec.facet_tag >= 0) {
        rec.kind = "boundary";
      } else {
        rec.kind = "violation";
        report.ok = false;
        report.violations.push_back("ridge " + name +
                                    " is neither shared nor on a facet");
      }
    }
    report.ridges.push_back(std::move(rec));
  }
  return report;
}

namespace detail {

inline void require_maximal_tubing(const TubeSet& ts, const Tubing& t, const std::string& name) {
  if (static_cast<int>(t.size()) != ts.graph.n())
    throw contract_error(name + " is not maximal: size " + std::to_string(t.size()));
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0 || t[i] >= ts.size())
      throw contract_error(name + " contains unknown tube id " + std::to_string(t[i]));
    if (i && t[i] <= t[i - 1])
      throw contract_error(name + " is not a sorted set of tube ids");
    for (size_t j = 0; j < i; ++j)
      if (!are_compatible(ts.tubes[t[i]], ts.tubes[t[j]]))
        throw contract_error(name + ": tubes " + ts.label(t[j]) + " and " +
                             ts.label(t[i]) + " are incompatible");
  }
  for (int j = 0; j < ts.size(); ++j) {
    if (std::binary_search(t.begin(), t.end(), j)) continue;
    bool fits = true;
    for (int i : t)
      if (!are_compatible(ts.tubes[i], ts.tubes[j])) {
        fits = false;
        break;
      }
    if (fits)
      throw contract_error(name + " is not maximal: tube " + ts.label(j) + " extends it");
  }
}

}  // namespace detail

// Linear functional separating two maximal tubings' cells: a sum of pair
// vertex differences over the vertex-intersecting incompatible tube pairs
// across the tubings, with witness edges chosen lexicographically least
// among those meeting the pair's common vertices. Sign contract asserted:
// positive on the first tubing's own vertices, negative on the second's,
// zero exactly on the shared ones.
inline QVec separating_functional(const TubeSet& ts, const Tubing& ti, const Tubing& tj) {
  detail::require_maximal_tubing(ts, ti, "first tubing");
  detail::require_maximal_tubing(ts, tj, "second tubing");
  if (ti == tj) throw contract_error("separating functional needs distinct tubings");
  const Graph& g = ts.graph;
  const auto verts = polytope_vertices(g);

  QVec a(g.n(), Rational(0));
  for (int s : ti) {
    if (std::binary_search(tj.begin(), tj.end(), s)) continue;
    for (int r : tj) {
      if (std::binary_search(ti.begin(), ti.end(), r)) continue;
      const Tube& ts_s = ts.tubes[s];
      const Tube& ts_r = ts.tubes[r];
      if (are_compatible(ts_s, ts_r)) continue;
      const std::uint64_t shared = ts_s.vmask & ts_r.vmask;
      int we = -1, wf = -1;
      for (int e : ts_s.edges)
        if (!((ts_r.emask >> e) & 1) &&
            (((shared >> g.edges[e].u) & 1) || ((shared >> g.edges[e].v) & 1))) {
          we = e;
          break;
        }
      for (int f : ts_r.edges)
        if (!((ts_s.emask >> f) & 1) &&
            (((shared >> g.edges[f].u) & 1) || ((shared >> g.edges[f].v) & 1))) {
          wf = f;
          break;
        }
      if (we < 0 || wf < 0)
        throw contract_error("no witness edges for tubes " + ts.label(s) + " and " +
                             ts.label(r));
      a = vadd(a, vsub(verts[edge_tag(we)].coords, verts[edge_tag(wf)].coords));
    }
  }

  const auto duals = dual_vertices(ts);
  for (int t : ti) {
    const Rational v = dot(a, duals[t].z);
    const bool in_tj = std::binary_search(tj.begin(), tj.end(), t);
    if (in_tj ? v != 0 : v <= 0)
      throw contract_error("separating functional sign fails on tube " + ts.label(t) +
                           ": value " + to_string(v));
  }
  for (int t : tj) {
    const Rational v = dot(a, duals[t].z);
    const bool in_ti = std::binary_search(ti.begin(), ti.end(), t);
    if (in_ti ? v != 0 : v >= 0)
      throw contract_error("separating functional sign fails on tube " + ts.label(t) +
                           ": value " + to_string(v));
  }
  return a;
}

// Cells of the maximal-tubing triangulation, joined when they share a
// ridge; any joined pair must differ in exactly one tube each way.
inline Graph ridge_adjacency_graph(const TubeSet& ts, const Triangulation& tri) {
  if (tri.kind != TriKind::MaxTubing)
    throw contract_error("ridge adjacency is defined for the maximal-tubing triangulation");
  Graph out;
  for (size_t c = 0; c < tri.cells.size(); ++c)
    out.vertices.push_back("c" + std::to_string(c));
  int k = 0;
  for (size_t i = 0; i < tri.cells.size(); ++i)
    for (size_t j = i + 1; j < tri.cells.size(); ++j) {
      std::vector<int> diff;
      std::set_symmetric_difference(tri.cells[i].tubes.begin(), tri.cells[i].tubes.end(),
                                    tri.cells[j].tubes.begin(), tri.cells[j].tubes.end(),
                                    std::back_inserter(diff));
      std::vector<int> common;
      std::set_intersection(tri.cells[i].tubes.begin(), tri.cells[i].tubes.end(),
                            tri.cells[j].tubes.begin(), tri.cells[j].tubes.end(),
                            std::back_inserter(common));
      const bool share_ridge =
          static_cast<int>(common.size()) == ts.graph.n() - 1;
      if (!share_ridge) continue;
      if (diff.size() != 2)
        throw contract_error("cells " + std::to_string(i) + " and " + std::to_string(j) +
                             " share a ridge but differ by " + std::to_string(diff.size()) +
                             " tubes");
      out.edges.push_back({"r" + std::to_string(++k), static_cast<int>(i),
                           static_cast<int>(j)});
    }
  out.validate();
  return out;
}

}  // namespace cosmoform
