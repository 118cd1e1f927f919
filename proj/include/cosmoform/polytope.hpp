#pragma once

// The polytope attached to a graph: three vertices per edge on the
// hyperplane of coordinate sum one, one facet normal per tube, and the face
// machinery used to compare combinatorial and geometric descriptions.
//
// Coordinates live in R^{|V|+|E|}: first the vertex coordinates in graph
// order, then one coordinate per edge. Vertex tags are indexed 3e, 3e+1,
// 3e+2 for the pair vertex of edge e and its two endpoint vertices (in
// endpoint order).

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cosmoform/graph.hpp"
#include "cosmoform/linprog.hpp"
#include "cosmoform/matrix.hpp"
#include "cosmoform/rational.hpp"
#include "cosmoform/tubing.hpp"

namespace cosmoform {

inline int tag_count(const Graph& g) { return 3 * g.ne(); }
inline int edge_tag(int e) { return 3 * e; }
inline int end_tag(int e, int slot) { return 3 * e + 1 + slot; }  // slot 0 or 1
inline int tag_edge(int tag) { return tag / 3; }
inline bool tag_is_pair(int tag) { return tag % 3 == 0; }
inline int tag_slot(int tag) { return tag % 3 - 1; }  // endpoint tags only

inline std::string tag_label(const Graph& g, int tag) {
  const Edge& e = g.edges[tag_edge(tag)];
  if (tag_is_pair(tag)) return "p(" + e.id + ")";
  return "p(" + e.id + "," + g.vertices[tag_slot(tag) == 0 ? e.u : e.v] + ")";
}

struct CosmoVertex {
  int tag = -1;
  QVec coords;
  std::string label;
};

inline std::vector<CosmoVertex> polytope_vertices(const Graph& g) {
  g.validate();
  g.require_no_isolated("polytope vertices");
  if (g.ne() == 0) throw contract_error("polytope vertices: graph has no edges");
  std::vector<CosmoVertex> out;
  for (int e = 0; e < g.ne(); ++e) {
    const int u = g.edges[e].u, v = g.edges[e].v, ye = g.nv() + e;
    for (int slot = -1; slot <= 1; ++slot) {
      CosmoVertex p;
      p.tag = slot < 0 ? edge_tag(e) : end_tag(e, slot);
      p.coords.assign(g.n(), Rational(0));
      if (slot < 0) {
        p.coords[u] = 1;
        p.coords[v] = 1;
        p.coords[ye] = -1;
      } else {
        p.coords[u] = slot == 0 ? 1 : -1;
        p.coords[v] = slot == 0 ? -1 : 1;
        p.coords[ye] = 1;
      }
      p.label = tag_label(g, p.tag);
      if (coord_sum(p.coords) != 1)
        throw contract_error("polytope vertex " + p.label + " has coordinate sum != 1");
      out.push_back(std::move(p));
    }
  }
  return out;
}

// Normal of the facet cut out by a tube: one on the tube's vertices, and on
// each edge coordinate the number of endpoints the tube contains unless the
// edge belongs to the tube, where it is zero.
inline QVec facet_normal(const TubeSet& ts, int tube_id) {
  const Graph& g = ts.graph;
  const Tube& t = ts.tubes[tube_id];
  QVec h(g.n(), Rational(0));
  for (int v : t.verts) h[v] = 1;
  for (int e = 0; e < g.ne(); ++e) {
    if ((t.emask >> e) & 1) continue;
    int ends_in = ((t.vmask >> g.edges[e].u) & 1) + ((t.vmask >> g.edges[e].v) & 1);
    h[g.nv() + e] = ends_in;
  }
  return h;
}

struct DualVertex {
  int tube = -1;
  QVec z;         // facet normal scaled to coordinate sum one
  Rational norm;  // the coordinate sum of the unscaled normal
};

inline std::vector<DualVertex> dual_vertices(const TubeSet& ts) {
  std::vector<DualVertex> out;
  for (int t = 0; t < ts.size(); ++t) {
    DualVertex d;
    d.tube = t;
    QVec h = facet_normal(ts, t);
    d.norm = coord_sum(h);
    if (d.norm <= 0)
      throw contract_error("facet normal of tube " + ts.label(t) + " has nonpositive sum");
    d.z = vscale(Rational(Rational(1) / d.norm), h);
    out.push_back(std::move(d));
  }
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      if (veq(out[i].z, out[j].z))
        throw contract_error("tubes " + ts.label(out[i].tube) + " and " +
                             ts.label(out[j].tube) + " give the same dual vertex");
  return out;
}

// inc[tube][tag] is true when the polytope vertex lies on the tube's facet.
// The inner products are computed and checked against the closed-form rule:
// the pair vertex of e avoids exactly the facets of tubes containing e, and
// an endpoint vertex avoids the facets of tubes containing the endpoint but
// not the edge. Every pairing must come out 0 or 2.
inline std::vector<std::vector<char>> facet_incidence(const TubeSet& ts) {
  const Graph& g = ts.graph;
  const auto verts = polytope_vertices(g);
  std::vector<std::vector<char>> inc(ts.size(), std::vector<char>(tag_count(g), 0));
  for (int t = 0; t < ts.size(); ++t) {
    const QVec h = facet_normal(ts, t);
    const Tube& tube = ts.tubes[t];
    for (const auto& p : verts) {
      const Rational val = dot(h, p.coords);
      const int e = tag_edge(p.tag);
      const bool has_edge = (tube.emask >> e) & 1;
      bool expect_zero;
      if (tag_is_pair(p.tag)) {
        expect_zero = !has_edge;
      } else {
        const int a = tag_slot(p.tag) == 0 ? g.edges[e].u : g.edges[e].v;
        const bool has_vertex = (tube.vmask >> a) & 1;
        expect_zero = has_edge || !has_vertex;
      }
      if (val != (expect_zero ? 0 : 2))
        throw contract_error("facet pairing of tube " + ts.label(t) + " with " +
                             p.label + " is " + to_string(val) +
                             ", breaking the incidence rule");
      inc[t][p.tag] = expect_zero;
    }
  }
  return inc;
}

// One step of a cycle walk: edge index, tail vertex, head vertex.
using CycleStep = std::array<int, 3>;
using Cycle = std::vector<CycleStep>;

// All simple cycles (length two needs distinct parallel edges), one
// traversal per underlying edge set.
inline std::vector<Cycle> simple_cycles(const Graph& g) {
  std::vector<Cycle> out;
  std::set<std::uint64_t> seen_edge_sets;
  std::vector<CycleStep> path;
  std::vector<bool> used_v(g.nv(), false);
  std::vector<bool> used_e(g.ne(), false);
  int start = 0;

  auto dfs = [&](auto&& self, int cur) -> void {
    for (int e = 0; e < g.ne(); ++e) {
      if (used_e[e]) continue;
      const int nxt = g.edges[e].u == cur ? g.edges[e].v
                    : g.edges[e].v == cur ? g.edges[e].u
                                          : -1;
      if (nxt < 0) continue;
      if (nxt == start && !path.empty()) {
        std::uint64_t key = std::uint64_t{1} << e;
        for (const auto& st : path) key |= std::uint64_t{1} << st[0];
        if (seen_edge_sets.insert(key).second) {
          Cycle c = path;
          c.push_back({e, cur, nxt});
          out.push_back(std::move(c));
        }
      } else if (nxt != start && !used_v[nxt]) {
        used_v[nxt] = true;
        used_e[e] = true;
        path.push_back({e, cur, nxt});
        self(self, nxt);
        path.pop_back();
        used_e[e] = false;
        used_v[nxt] = false;
      }
    }
  };
  for (start = 0; start < g.nv(); ++start) {
    used_v[start] = true;
    dfs(dfs, start);
    used_v[start] = false;
  }
  return out;
}

// Tag subsets as bitmasks over the 3|E| vertex tags.
inline bool is_face_combinatorial(const Graph& g, std::uint64_t tag_mask,
                                  const std::vector<Cycle>& cycles) {
  const auto has = [&](int tag) { return (tag_mask >> tag) & 1; };
  for (int e = 0; e < g.ne(); ++e) {
    for (int slot = 0; slot < 2; ++slot) {
      if (!has(edge_tag(e)) || !has(end_tag(e, slot))) continue;
      const int vtx = slot == 0 ? g.edges[e].u : g.edges[e].v;
      for (int f = 0; f < g.ne(); ++f) {
        if (f == e) continue;
        for (int s2 = 0; s2 < 2; ++s2) {
          const int w = s2 == 0 ? g.edges[f].u : g.edges[f].v;
          if (w == vtx && (!has(edge_tag(f)) || !has(end_tag(f, s2)))) return false;
        }
      }
    }
  }
  for (const auto& cyc : cycles) {
    for (int orient = 0; orient < 2; ++orient) {
      bool fwd_all = true, rev_all = true;
      for (const auto& st : cyc) {
        const int e = st[0];
        const int tail = orient == 0 ? st[1] : st[2];
        const int head = orient == 0 ? st[2] : st[1];
        const int tail_slot = g.edges[e].u == tail ? 0 : 1;
        const int head_slot = g.edges[e].u == head ? 0 : 1;
        fwd_all = fwd_all && has(end_tag(e, tail_slot));
        rev_all = rev_all && has(end_tag(e, head_slot));
      }
      if (fwd_all && !rev_all) return false;
    }
  }
  return true;
}

inline bool is_face_combinatorial(const Graph& g, const std::vector<int>& tags) {
  std::uint64_t mask = 0;
  for (int t : tags) {
    if (t < 0 || t >= tag_count(g))
      throw contract_error("is_face_combinatorial: bad tag " + std::to_string(t));
    mask |= std::uint64_t{1} << t;
  }
  return is_face_combinatorial(g, mask, simple_cycles(g));
}

// Geometric oracle: X is a face iff a supporting functional vanishes on X
// and stays strictly positive on the remaining polytope vertices.
inline bool is_face_lp(const Graph& g, std::uint64_t tag_mask) {
  const auto verts = polytope_vertices(g);
  std::vector<QVec> zero, positive;
  for (const auto& p : verts)
    ((tag_mask >> p.tag) & 1 ? zero : positive).push_back(p.coords);
  return lp_strict_feasible(zero, positive);
}

inline bool is_face_lp(const Graph& g, const std::vector<int>& tags) {
  std::uint64_t mask = 0;
  for (int t : tags) {
    if (t < 0 || t >= tag_count(g))
      throw contract_error("is_face_lp: bad tag " + std::to_string(t));
    mask |= std::uint64_t{1} << t;
  }
  return is_face_lp(g, mask);
}

struct Face {
  std::uint64_t tags = 0;  // bitmask over vertex tags
  int dim = -1;            // affine dimension of the spanned set, empty face -1
};

inline std::vector<Face> face_lattice(const Graph& g, std::uint64_t budget = kDefaultBudget) {
  const auto verts = polytope_vertices(g);
  const int m = tag_count(g);
  if (m > 62) throw budget_error("face lattice: more than 62 vertex tags");
  const std::uint64_t subsets = std::uint64_t{1} << m;
  if (subsets > budget)
    throw budget_error("face lattice: 2^" + std::to_string(m) + " subsets exceed budget " +
                       std::to_string(budget));
  const auto cycles = simple_cycles(g);
  std::vector<Face> out;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    if (!is_face_combinatorial(g, mask, cycles)) continue;
    std::vector<QVec> pts;
    for (const auto& p : verts)
      if ((mask >> p.tag) & 1) pts.push_back(p.coords);
    out.push_back({mask, affine_dim(pts)});
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.tags < b.tags;
  });
  return out;
}

// Compares the face lattice of the graph with the interval above the pair
// vertex of one added edge. Endpoint labels absent from the graph become new
// vertices. A face maps to its image under the edge-index-preserving
// inclusion, plus the new pair tag, plus the new endpoint tags forced at old
// endpoints already saturated in the face; the remaining new endpoint tags
// may be toggled freely, so the interval is a product of the lattice with a
// Boolean cube on the genuinely new endpoints. Checks that this map is an
// inclusion-order isomorphism onto the interval.
inline bool vertex_figure_iso_check(const Graph& g, const std::string& end_a,
                                    const std::string& end_b,
                                    std::uint64_t budget = kDefaultBudget) {
  g.validate();
  Graph gp = g;
  for (const auto& lbl : {end_a, end_b})
    if (gp.vertex_index(lbl) < 0) gp.vertices.push_back(lbl);
  std::string new_id = "new";
  while (std::any_of(gp.edges.begin(), gp.edges.end(),
                     [&](const Edge& e) { return e.id == new_id; }))
    new_id += "'";
  const int new_edge = gp.ne();
  gp.edges.push_back({new_id, gp.vertex_index(end_a), gp.vertex_index(end_b)});
  gp.validate();

  const auto faces_g = face_lattice(g, budget);
  const auto faces_gp = face_lattice(gp, budget);
  std::set<std::uint64_t> face_set_gp;
  std::set<std::uint64_t> interval;
  for (const auto& f : faces_gp) {
    face_set_gp.insert(f.tags);
    if ((f.tags >> edge_tag(new_edge)) & 1) interval.insert(f.tags);
  }

  std::vector<int> new_slots, old_slots;
  for (int slot = 0; slot < 2; ++slot) {
    const int v = slot == 0 ? gp.edges[new_edge].u : gp.edges[new_edge].v;
    (v >= g.nv() ? new_slots : old_slots).push_back(slot);
  }

  struct Entry {
    std::uint64_t src_face, src_slots, image;
  };
  std::vector<Entry> entries;
  std::set<std::uint64_t> images;
  for (const auto& f : faces_g) {
    std::uint64_t base = f.tags;  // tag indices agree between g and gp
    base |= std::uint64_t{1} << edge_tag(new_edge);
    for (int slot : old_slots) {
      const int vtx = slot == 0 ? gp.edges[new_edge].u : gp.edges[new_edge].v;
      bool saturated = false;
      for (int e = 0; e < g.ne() && !saturated; ++e)
        for (int s = 0; s < 2; ++s) {
          const int w = s == 0 ? g.edges[e].u : g.edges[e].v;
          if (w == vtx && ((f.tags >> edge_tag(e)) & 1) &&
              ((f.tags >> end_tag(e, s)) & 1)) {
            saturated = true;
            break;
          }
        }
      if (saturated) base |= std::uint64_t{1} << end_tag(new_edge, slot);
    }
    const int k = static_cast<int>(new_slots.size());
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k); ++sub) {
      std::uint64_t img = base;
      for (int i = 0; i < k; ++i)
        if ((sub >> i) & 1) img |= std::uint64_t{1} << end_tag(new_edge, new_slots[i]);
      entries.push_back({f.tags, sub, img});
      if (!face_set_gp.count(img)) return false;  // image must be a face
      images.insert(img);
    }
  }

  if (images.size() != entries.size()) return false;  // injective
  if (images != interval) return false;               // onto the interval
  for (const auto& a : entries)
    for (const auto& b : entries) {
      const bool below = (a.src_face & ~b.src_face) == 0 && (a.src_slots & ~b.src_slots) == 0;
      const bool img_below = (a.image & ~b.image) == 0;
      if (below != img_below) return false;
    }
  return true;
}

}  // namespace cosmoform
