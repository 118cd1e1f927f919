#pragma once

// The canonical form of the polytope in its two closed representations: a
// sum over maximal tubings, and a sum over uniquely completable
// almost-maximal tubings with the apex absorbed into the numerator. Both
// use the unscaled facet pairings <h_t, x> as denominator factors, with
// raw-normal cell determinants as numerators; this is the normalization
// under which the two representations agree identically on the unit-sum
// hyperplane.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cosmoform/polynomial.hpp"
#include "cosmoform/polytope.hpp"
#include "cosmoform/rational.hpp"
#include "cosmoform/triangulation.hpp"
#include "cosmoform/tubing.hpp"

namespace cosmoform {

enum class RepKind { A, B };

struct CFTerm {
  Rational num;
  Tubing tubes;  // denominator factors <h_t, x> over these tubes
};

struct CanonicalForm {
  RepKind kind = RepKind::A;
  std::vector<CFTerm> terms;
};

inline CanonicalForm rep_a(const TubeSet& ts, std::uint64_t budget = kDefaultBudget) {
  CanonicalForm f;
  f.kind = RepKind::A;
  const Triangulation tri = build_max_tubing_triangulation(ts, budget);
  for (const SimplexCell& cell : tri.cells) {
    const Rational d = cell_detvol(ts, cell, DetNormalization::RawNormals);
    if (d <= 0)
      throw contract_error("cell " + cell_label(ts, cell) + " has nonpositive numerator");
    f.terms.push_back({d, cell.tubes});
  }
  return f;
}

inline CanonicalForm rep_b(const TubeSet& ts, std::uint64_t budget = kDefaultBudget) {
  CanonicalForm f;
  f.kind = RepKind::B;
  const Triangulation tri = build_boundary_triangulation(ts, budget);
  for (const SimplexCell& cell : tri.cells) {
    const Rational d = cell_detvol(ts, cell, DetNormalization::RawNormals);
    if (d <= 0)
      throw contract_error("cell " + cell_label(ts, cell) + " has nonpositive numerator");
    f.terms.push_back({d, cell.tubes});
  }
  return f;
}

inline Rational evaluate(const TubeSet& ts, const CanonicalForm& f, const QVec& x) {
  if (static_cast<int>(x.size()) != ts.graph.n())
    throw contract_error("evaluate: point has wrong dimension");
  if (coord_sum(x) != 1)
    throw contract_error("evaluate: point is off the unit-sum hyperplane");
  QVec pairing(ts.size());
  std::vector<bool> needed(ts.size(), false);
  for (const CFTerm& term : f.terms)
    for (int t : term.tubes) needed[t] = true;
  for (int t = 0; t < ts.size(); ++t) {
    if (!needed[t]) continue;
    pairing[t] = dot(facet_normal(ts, t), x);
    if (pairing[t] == 0)
      throw contract_error("evaluate: pole at tube " + ts.label(t));
  }
  Rational sum(0);
  for (const CFTerm& term : f.terms) {
    Rational denom(1);
    for (int t : term.tubes) denom *= pairing[t];
    sum += term.num / denom;
  }
  return sum;
}

// Numerator over the common denominator of all tube pairings: each term's
// determinant times the pairings of the tubes missing from it. Degree is
// the tube count minus the term length, checked.
inline Polynomial adjoint_numerator(const TubeSet& ts, RepKind kind,
                                    std::uint64_t budget = kDefaultBudget) {
  const CanonicalForm f = kind == RepKind::A ? rep_a(ts, budget) : rep_b(ts, budget);
  const int n = ts.graph.n();
  const int nv = n;  // polynomial variables: one per coordinate
  Polynomial sum(nv);
  for (const CFTerm& term : f.terms) {
    Polynomial p = Polynomial::constant(nv, term.num);
    for (int t = 0; t < ts.size(); ++t) {
      if (std::binary_search(term.tubes.begin(), term.tubes.end(), t)) continue;
      p = p.times_linear(facet_normal(ts, t), Rational(0));
    }
    sum = sum + p;
  }
  const int expect = ts.size() - n + (kind == RepKind::B ? 1 : 0);
  if (sum.total_degree() != expect)
    throw contract_error("adjoint numerator has degree " +
                         std::to_string(sum.total_degree()) + ", expected " +
                         std::to_string(expect));
  return sum;
}

// The two representations agree as rational functions on the unit-sum
// hyperplane. Both numerators over the common denominator are built from
// denominator factors already reduced by eliminating the last coordinate
// (substitution is a ring map, so reducing factors first is equivalent to
// reducing the expanded product), then compared term by term. Off the
// hyperplane the identity genuinely fails, so the reduction is essential.
inline bool check_equality(const TubeSet& ts, std::uint64_t budget = kDefaultBudget) {
  const int n = ts.graph.n();
  std::vector<Polynomial> reduced;
  for (int t = 0; t < ts.size(); ++t)
    reduced.push_back(
        Polynomial::linear(facet_normal(ts, t), Rational(0)).reduce_mod_hyperplane(n - 1));

  const auto numerator = [&](const CanonicalForm& f) {
    Polynomial sum(n);
    for (const CFTerm& term : f.terms) {
      Polynomial p = Polynomial::constant(n, term.num);
      for (int t = 0; t < ts.size(); ++t) {
        if (std::binary_search(term.tubes.begin(), term.tubes.end(), t)) continue;
        p = p * reduced[t];
      }
      sum = sum + p;
    }
    return sum;
  };
  return numerator(rep_a(ts, budget)) == numerator(rep_b(ts, budget));
}

// Barycenter of the polytope vertices; on the hyperplane and strictly
// interior by construction, both asserted.
inline QVec interior_point(const Graph& g) {
  const auto verts = polytope_vertices(g);
  QVec x(g.n(), Rational(0));
  for (const auto& p : verts) x = vadd(x, p.coords);
  x = vscale(Rational(Rational(1) / static_cast<int>(verts.size())), x);
  if (coord_sum(x) != 1)
    throw contract_error("interior point is off the unit-sum hyperplane");
  const TubeSet ts = enumerate_tubes(g);
  for (int t = 0; t < ts.size(); ++t)
    if (dot(facet_normal(ts, t), x) <= 0)
      throw contract_error("barycenter is not interior: tube " + ts.label(t));
  return x;
}

}  // namespace cosmoform
