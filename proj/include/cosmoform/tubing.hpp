#pragma once

// Tubes of a graph and collections of pairwise compatible tubes.
//
// A tube is either a single vertex with no edges, or the connected subgraph
// spanned by a nonempty edge subset. Non-singleton tubes are identified by
// their edge set. Two tubes are compatible when their vertex sets are
// disjoint, or one tube contains the other in both vertices and edges.
//
// Tube ids index into TubeSet::tubes, which lists singletons by vertex index
// followed by non-singletons ordered lexicographically by edge index vector.
// Every downstream ordering (cells, output files) derives from this order.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cosmoform/graph.hpp"
#include "cosmoform/rational.hpp"

namespace cosmoform {

struct Tube {
  std::vector<int> verts;  // sorted vertex indices
  std::vector<int> edges;  // sorted edge indices, empty for singletons
  std::uint64_t vmask = 0, emask = 0;

  bool singleton() const { return edges.empty(); }
};

inline bool are_compatible(const Tube& a, const Tube& b) {
  if ((a.vmask & b.vmask) == 0) return true;
  const bool a_in_b = (a.vmask & ~b.vmask) == 0 && (a.emask & ~b.emask) == 0;
  const bool b_in_a = (b.vmask & ~a.vmask) == 0 && (b.emask & ~a.emask) == 0;
  return a_in_b || b_in_a;
}

inline bool tube_subset(const Tube& a, const Tube& b) {
  return (a.vmask & ~b.vmask) == 0 && (a.emask & ~b.emask) == 0;
}

inline bool tube_strict_subset(const Tube& a, const Tube& b) {
  return tube_subset(a, b) && (a.vmask != b.vmask || a.emask != b.emask);
}

struct TubeSet {
  Graph graph;
  std::vector<Tube> tubes;

  int size() const { return static_cast<int>(tubes.size()); }

  // Id of the tube covering the whole graph, -1 when the graph is
  // disconnected and no such tube exists.
  int full_tube() const {
    for (int i = 0; i < size(); ++i)
      if (tubes[i].verts.size() == graph.vertices.size() &&
          tubes[i].edges.size() == graph.edges.size())
        return i;
    return -1;
  }

  std::string label(int id) const {
    const Tube& t = tubes[id];
    std::string s = "{";
    for (size_t i = 0; i < t.verts.size(); ++i)
      s += (i ? "," : "") + graph.vertices[t.verts[i]];
    if (!t.edges.empty()) {
      s += ";";
      for (size_t i = 0; i < t.edges.size(); ++i)
        s += (i ? "," : "") + graph.edges[t.edges[i]].id;
    }
    return s + "}";
  }
};

inline TubeSet enumerate_tubes(const Graph& g, std::uint64_t budget = kDefaultBudget) {
  g.validate();
  if (g.nv() > 62 || g.ne() > 62)
    throw budget_error("tube enumeration: graph exceeds 62 vertices or edges");
  const std::uint64_t subsets = std::uint64_t{1} << g.ne();
  if (subsets > budget)
    throw budget_error("tube enumeration: 2^|E| = " + std::to_string(subsets) +
                       " exceeds budget " + std::to_string(budget));

  TubeSet ts;
  ts.graph = g;
  for (int v = 0; v < g.nv(); ++v) {
    Tube t;
    t.verts = {v};
    t.vmask = std::uint64_t{1} << v;
    ts.tubes.push_back(std::move(t));
  }

  std::vector<Tube> nonsingleton;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    Tube t;
    t.emask = mask;
    for (int e = 0; e < g.ne(); ++e)
      if (mask >> e & 1) {
        t.edges.push_back(e);
        t.vmask |= std::uint64_t{1} << g.edges[e].u;
        t.vmask |= std::uint64_t{1} << g.edges[e].v;
      }
    // Connectivity of the spanned subgraph, walking only selected edges.
    std::vector<int> stack = {g.edges[t.edges[0]].u};
    std::uint64_t seen = std::uint64_t{1} << stack[0];
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e : t.edges) {
        int w = g.edges[e].u == u ? g.edges[e].v : g.edges[e].v == u ? g.edges[e].u : -1;
        if (w >= 0 && !(seen >> w & 1)) {
          seen |= std::uint64_t{1} << w;
          stack.push_back(w);
        }
      }
    }
    if (seen != t.vmask) continue;
    for (int v = 0; v < g.nv(); ++v)
      if (t.vmask >> v & 1) t.verts.push_back(v);
    nonsingleton.push_back(std::move(t));
  }
  std::sort(nonsingleton.begin(), nonsingleton.end(),
            [](const Tube& a, const Tube& b) { return a.edges < b.edges; });
  for (auto& t : nonsingleton) ts.tubes.push_back(std::move(t));
  return ts;
}

// A tubing is a sorted list of ids of pairwise compatible tubes.
using Tubing = std::vector<int>;

namespace detail {

inline std::vector<std::vector<char>> compat_matrix(const std::vector<Tube>& tubes) {
  const int m = static_cast<int>(tubes.size());
  std::vector<std::vector<char>> ok(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ok[i][j] = are_compatible(tubes[i], tubes[j]);
  return ok;
}

// Visits every clique of the compatibility relation exactly once, in
// lexicographic order of the sorted id vector (the empty clique first).
template <class Emit>
void visit_cliques(const std::vector<std::vector<char>>& ok, std::vector<int>& cur,
                   int start, std::uint64_t budget, std::uint64_t& nodes, Emit&& emit) {
  if (++nodes > budget)
    throw budget_error("tubing enumeration exceeded budget " + std::to_string(budget));
  emit(static_cast<const std::vector<int>&>(cur));
  for (int j = start; j < static_cast<int>(ok.size()); ++j) {
    bool fits = true;
    for (int i : cur)
      if (!ok[i][j]) {
        fits = false;
        break;
      }
    if (!fits) continue;
    cur.push_back(j);
    visit_cliques(ok, cur, j + 1, budget, nodes, emit);
    cur.pop_back();
  }
}

}  // namespace detail

inline std::vector<Tubing> enumerate_maximal_tubings(const TubeSet& ts,
                                                     std::uint64_t budget = kDefaultBudget) {
  const auto ok = detail::compat_matrix(ts.tubes);
  const int m = ts.size();
  std::vector<Tubing> out;
  std::vector<int> cur;
  std::uint64_t nodes = 0;
  detail::visit_cliques(ok, cur, 0, budget, nodes, [&](const std::vector<int>& c) {
    for (int j = 0; j < m; ++j) {
      if (std::binary_search(c.begin(), c.end(), j)) continue;
      bool fits = true;
      for (int i : c)
        if (!ok[i][j]) {
          fits = false;
          break;
        }
      if (fits) return;  // extendable, not maximal
    }
    out.push_back(c);
  });

  const int full = ts.full_tube();
  for (const Tubing& t : out) {
    for (int v = 0; v < ts.graph.nv(); ++v)
      if (!std::binary_search(t.begin(), t.end(), v))
        throw contract_error("maximal tubing misses singleton " + ts.label(v));
    if (full >= 0 && !std::binary_search(t.begin(), t.end(), full))
      throw contract_error("maximal tubing misses the full tube " + ts.label(full));
  }
  return out;
}

// An almost-maximal tubing kept only when exactly one maximal tubing
// completes it. These arise precisely by deleting a singleton or the full
// tube from a maximal tubing, which is cross-checked below.
struct UcTubing {
  Tubing tubes;
  int parent = -1;   // index into the maximal tubing list
  int removed = -1;  // tube id deleted from the parent
};

inline std::vector<UcTubing> enumerate_uc_almost_maximal(const TubeSet& ts,
                                                         const std::vector<Tubing>& maximal) {
  const int full = ts.full_tube();
  std::vector<UcTubing> out;
  for (int m = 0; m < static_cast<int>(maximal.size()); ++m) {
    for (int t : maximal[m]) {
      Tubing cand;
      for (int s : maximal[m])
        if (s != t) cand.push_back(s);
      int parents = 0, parent = -1;
      for (int k = 0; k < static_cast<int>(maximal.size()); ++k)
        if (std::includes(maximal[k].begin(), maximal[k].end(), cand.begin(), cand.end())) {
          ++parents;
          parent = k;
        }
      // The dichotomy below characterizes unique completion only when the
      // graph is connected; otherwise fall back to the parent count alone.
      const bool removable = ts.tubes[t].singleton() || t == full;
      if (full >= 0 && (parents == 1) != removable)
        throw contract_error("unique completion dichotomy fails at tube " + ts.label(t));
      if (parents == 1) out.push_back({cand, parent, t});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const UcTubing& a, const UcTubing& b) { return a.tubes < b.tubes; });
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i].tubes == out[i - 1].tubes)
      throw contract_error("almost-maximal tubing has two parents");
  return out;
}

namespace detail {

inline void require_member(const TubeSet& ts, const Tubing& tubing, int tube_id) {
  if (tube_id < 0 || tube_id >= ts.size())
    throw contract_error("unknown tube id " + std::to_string(tube_id));
  if (!std::binary_search(tubing.begin(), tubing.end(), tube_id))
    throw contract_error("tube " + ts.label(tube_id) + " is not in the tubing");
}

}  // namespace detail

// Smallest tube of the tubing strictly containing the given one. Tubes of a
// tubing containing a common tube are totally ordered, which is checked.
inline int tubing_successor(const TubeSet& ts, const Tubing& tubing, int tube_id) {
  detail::require_member(ts, tubing, tube_id);
  std::vector<int> above;
  for (int s : tubing)
    if (tube_strict_subset(ts.tubes[tube_id], ts.tubes[s])) above.push_back(s);
  if (above.empty())
    throw contract_error("tube " + ts.label(tube_id) + " has no successor in the tubing");
  int best = above[0];
  for (int s : above)
    if (tube_strict_subset(ts.tubes[s], ts.tubes[best])) best = s;
  for (int s : above)
    if (!tube_subset(ts.tubes[best], ts.tubes[s]))
      throw contract_error("tubes above " + ts.label(tube_id) + " are not nested");
  return best;
}

struct Predecessors {
  std::vector<int> tubes;   // maximal tubes of the tubing strictly below
  int introduced_edge = -1; // unique edge in the tube but in no larger context below it
};

// Maximal tubes of the tubing strictly inside the given non-singleton tube,
// together with the unique edge whose presence in a member tube is
// equivalent to containing the whole tube. The tube is recovered as the
// union of the predecessors plus that edge, which is checked.
inline Predecessors tubing_predecessors(const TubeSet& ts, const Tubing& tubing, int tube_id) {
  detail::require_member(ts, tubing, tube_id);
  const Tube& t = ts.tubes[tube_id];
  if (t.singleton())
    throw contract_error("singleton " + ts.label(tube_id) + " has no predecessors");

  std::vector<int> below;
  for (int s : tubing)
    if (tube_strict_subset(ts.tubes[s], t)) below.push_back(s);
  Predecessors pred;
  for (int s : below) {
    bool maximal = true;
    for (int r : below)
      if (r != s && tube_strict_subset(ts.tubes[s], ts.tubes[r])) {
        maximal = false;
        break;
      }
    if (maximal) pred.tubes.push_back(s);
  }
  if (pred.tubes.empty() || pred.tubes.size() > 2)
    throw contract_error("tube " + ts.label(tube_id) + " has " +
                         std::to_string(pred.tubes.size()) +
                         " predecessors, expected one or two");

  for (int e : t.edges) {
    bool equivalent = true;
    for (int s : tubing) {
      const bool has_edge = (ts.tubes[s].emask >> e) & 1;
      const bool contains = tube_subset(t, ts.tubes[s]);
      if (has_edge != contains) {
        equivalent = false;
        break;
      }
    }
    if (equivalent) {
      if (pred.introduced_edge >= 0)
        throw contract_error("tube " + ts.label(tube_id) + " has two introduced edges");
      pred.introduced_edge = e;
    }
  }
  if (pred.introduced_edge < 0)
    throw contract_error("tube " + ts.label(tube_id) + " has no introduced edge");

  std::uint64_t vmask = 0, emask = std::uint64_t{1} << pred.introduced_edge;
  vmask |= std::uint64_t{1} << ts.graph.edges[pred.introduced_edge].u;
  vmask |= std::uint64_t{1} << ts.graph.edges[pred.introduced_edge].v;
  for (int s : pred.tubes) {
    vmask |= ts.tubes[s].vmask;
    emask |= ts.tubes[s].emask;
  }
  if (vmask != t.vmask || emask != t.emask)
    throw contract_error("predecessors plus introduced edge do not rebuild " +
                         ts.label(tube_id));
  return pred;
}

struct GaCheck {
  std::uint64_t tubings_with_all_singletons = 0;
  std::uint64_t line_graph_tubings = 0;
  bool injective = false;
  bool image_contained = false;
  bool bijection = false;
};

// Compares tubings of the graph that contain every singleton against
// tubings of its line graph in the graph-associahedron sense, where a tube
// is a connected induced vertex subset and compatibility means nested, or
// disjoint and non-adjacent. The map sends a tubing to the edge sets of its
// non-singleton members.
inline GaCheck ga_tubing_bijection_check(const Graph& g, std::uint64_t budget = kDefaultBudget) {
  const TubeSet ts = enumerate_tubes(g, budget);
  std::vector<Tube> nonsingleton;
  for (const Tube& t : ts.tubes)
    if (!t.singleton()) nonsingleton.push_back(t);

  // Singletons are compatible with everything, so tubings containing all of
  // them correspond to cliques of non-singleton tubes.
  std::set<std::vector<std::vector<int>>> image;
  std::uint64_t count_g = 0, nodes = 0;
  {
    const auto ok = detail::compat_matrix(nonsingleton);
    std::vector<int> cur;
    detail::visit_cliques(ok, cur, 0, budget, nodes, [&](const std::vector<int>& c) {
      ++count_g;
      std::vector<std::vector<int>> key;
      for (int i : c) key.push_back(nonsingleton[i].edges);
      std::sort(key.begin(), key.end());
      image.insert(std::move(key));
    });
  }

  const Graph lg = g.line_graph();
  std::vector<std::vector<int>> ga_tubes;  // sorted vertex lists, connected induced
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << lg.nv()); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < lg.nv(); ++v)
      if (mask >> v & 1) vs.push_back(v);
    std::vector<int> stack = {vs[0]};
    std::uint64_t seen = std::uint64_t{1} << vs[0];
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& e : lg.edges) {
        int w = e.u == u ? e.v : e.v == u ? e.u : -1;
        if (w >= 0 && (mask >> w & 1) && !(seen >> w & 1)) {
          seen |= std::uint64_t{1} << w;
          stack.push_back(w);
        }
      }
    }
    if (seen == mask) ga_tubes.push_back(vs);
  }
  std::sort(ga_tubes.begin(), ga_tubes.end());

  std::vector<std::uint64_t> ga_masks;
  for (const auto& vs : ga_tubes) {
    std::uint64_t m = 0;
    for (int v : vs) m |= std::uint64_t{1} << v;
    ga_masks.push_back(m);
  }
  const int k = static_cast<int>(ga_tubes.size());
  std::vector<std::vector<char>> ok(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const std::uint64_t a = ga_masks[i], b = ga_masks[j];
      bool compatible;
      if ((a & ~b) == 0 || (b & ~a) == 0) {
        compatible = true;  // nested (or equal)
      } else if ((a & b) != 0) {
        compatible = false;
      } else {
        bool adjacent = false;
        for (const auto& e : lg.edges)
          if (((a >> e.u & 1) && (b >> e.v & 1)) || ((a >> e.v & 1) && (b >> e.u & 1))) {
            adjacent = true;
            break;
          }
        compatible = !adjacent;
      }
      ok[i][j] = compatible;
    }

  std::set<std::vector<std::vector<int>>> ga_set;
  std::uint64_t count_ga = 0;
  {
    std::vector<int> cur;
    detail::visit_cliques(ok, cur, 0, budget, nodes, [&](const std::vector<int>& c) {
      ++count_ga;
      std::vector<std::vector<int>> key;
      for (int i : c) key.push_back(ga_tubes[i]);
      std::sort(key.begin(), key.end());
      ga_set.insert(std::move(key));
    });
  }

  GaCheck res;
  res.tubings_with_all_singletons = count_g;
  res.line_graph_tubings = count_ga;
  res.injective = image.size() == count_g;
  res.image_contained =
      std::includes(ga_set.begin(), ga_set.end(), image.begin(), image.end());
  res.bijection = res.injective && image == ga_set;
  return res;
}

}  // namespace cosmoform
