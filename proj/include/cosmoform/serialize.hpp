#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cosmoform/canonical.hpp"
#include "cosmoform/graph.hpp"
#include "cosmoform/polytope.hpp"
#include "cosmoform/triangulation.hpp"
#include "cosmoform/tubing.hpp"
#include "cosmoform/volume.hpp"

namespace cosmoform {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson rational_vec_json(const QVec& v) {
    OrderedJson arr = OrderedJson::array();
    for (const Rational& c : v) arr.push_back(to_string(c));
    return arr;
}

inline OrderedJson graph_json(const Graph& g) {
    OrderedJson j;
    j["vertices"] = g.vertices;
    OrderedJson edges = OrderedJson::array();
    for (const Edge& e : g.edges) {
        OrderedJson je;
        je["id"] = e.id;
        je["ends"] = {g.vertices[e.u], g.vertices[e.v]};
        edges.push_back(je);
    }
    j["edges"] = edges;
    j["multigraph"] = g.multigraph;
    return j;
}

inline OrderedJson tube_json(const TubeSet& ts, int id) {
    const Tube& t = ts.tubes[id];
    OrderedJson j;
    j["id"] = id;
    OrderedJson vs = OrderedJson::array();
    for (int v : t.verts) vs.push_back(ts.graph.vertices[v]);
    j["vertices"] = vs;
    OrderedJson es = OrderedJson::array();
    for (int e : t.edges) es.push_back(ts.graph.edges[e].id);
    j["edges"] = es;
    return j;
}

inline OrderedJson tubes_json(const TubeSet& ts) {
    OrderedJson j;
    j["graph"] = graph_json(ts.graph);
    j["count"] = ts.size();
    OrderedJson arr = OrderedJson::array();
    for (int i = 0; i < ts.size(); ++i) arr.push_back(tube_json(ts, i));
    j["tubes"] = arr;
    return j;
}

inline std::string tubes_text(const TubeSet& ts) {
    std::string out;
    for (int i = 0; i < ts.size(); ++i) {
        out += std::to_string(i);
        out += ' ';
        out += ts.label(i);
        out += '\n';
    }
    return out;
}

inline OrderedJson tubings_json(const TubeSet& ts,
                                const std::vector<Tubing>& maximal,
                                const std::vector<UcTubing>& almost) {
    OrderedJson j;
    j["graph"] = graph_json(ts.graph);
    j["tube_count"] = ts.size();
    OrderedJson tubes = OrderedJson::array();
    for (int i = 0; i < ts.size(); ++i) tubes.push_back(tube_json(ts, i));
    j["tubes"] = tubes;
    j["maximal_count"] = maximal.size();
    OrderedJson jm = OrderedJson::array();
    for (std::size_t i = 0; i < maximal.size(); ++i) {
        OrderedJson row;
        row["id"] = i;
        row["tubes"] = maximal[i];
        jm.push_back(row);
    }
    j["maximal"] = jm;
    j["almost_maximal_count"] = almost.size();
    OrderedJson ja = OrderedJson::array();
    for (const UcTubing& u : almost) {
        OrderedJson row;
        row["tubes"] = u.tubes;
        row["parent"] = u.parent;
        row["removed"] = u.removed;
        ja.push_back(row);
    }
    j["almost_maximal"] = ja;
    return j;
}

inline std::string tubing_text(const TubeSet& ts, const Tubing& tubing) {
    std::string out = "{";
    for (std::size_t i = 0; i < tubing.size(); ++i) {
        if (i) out += ", ";
        out += ts.label(tubing[i]);
    }
    out += "}";
    return out;
}

inline std::string tubings_text(const TubeSet& ts,
                                const std::vector<Tubing>& maximal,
                                const std::vector<UcTubing>& almost) {
    std::string out = "maximal " + std::to_string(maximal.size()) + "\n";
    for (std::size_t i = 0; i < maximal.size(); ++i)
        out += std::to_string(i) + " " + tubing_text(ts, maximal[i]) + "\n";
    out += "almost-maximal " + std::to_string(almost.size()) + "\n";
    for (const UcTubing& u : almost)
        out += tubing_text(ts, u.tubes) + " parent " + std::to_string(u.parent) +
               " removed " + ts.label(u.removed) + "\n";
    return out;
}

inline OrderedJson dual_json(const TubeSet& ts) {
    std::vector<CosmoVertex> pv = polytope_vertices(ts.graph);
    std::vector<DualVertex> dv = dual_vertices(ts);
    OrderedJson j;
    j["graph"] = graph_json(ts.graph);
    OrderedJson coords = OrderedJson::array();
    for (const std::string& v : ts.graph.vertices) coords.push_back("x[" + v + "]");
    for (const Edge& e : ts.graph.edges) coords.push_back("y[" + e.id + "]");
    j["coordinates"] = coords;
    OrderedJson jv = OrderedJson::array();
    for (const CosmoVertex& p : pv) {
        OrderedJson row;
        row["label"] = p.label;
        row["coords"] = rational_vec_json(p.coords);
        jv.push_back(row);
    }
    j["polytope_vertices"] = jv;
    OrderedJson jf = OrderedJson::array();
    for (const DualVertex& d : dv) {
        OrderedJson row;
        row["tube"] = d.tube;
        row["label"] = ts.label(d.tube);
        row["normal"] = rational_vec_json(facet_normal(ts, d.tube));
        row["dual_vertex"] = rational_vec_json(d.z);
        row["norm"] = to_string(d.norm);
        jf.push_back(row);
    }
    j["facets"] = jf;
    return j;
}

inline std::string dual_text(const TubeSet& ts) {
    std::vector<DualVertex> dv = dual_vertices(ts);
    std::string out;
    for (const DualVertex& d : dv)
        out += "z" + ts.label(d.tube) + " = " + vec_to_string(d.z) + "\n";
    return out;
}

inline OrderedJson cell_json(const TubeSet& ts, const SimplexCell& cell) {
    OrderedJson row;
    row["tubes"] = cell.tubes;
    row["has_apex"] = cell.has_apex;
    row["det_raw"] =
        to_string(cell_detvol(ts, cell, DetNormalization::RawNormals));
    row["det_normalized"] =
        to_string(cell_detvol(ts, cell, DetNormalization::NormalizedVertices));
    return row;
}

inline OrderedJson ridge_json(const TubeSet& ts, const RidgeRecord& r) {
    OrderedJson row;
    row["tubes"] = r.tubes;
    row["has_apex"] = r.has_apex;
    row["cells"] = r.cells;
    row["kind"] = r.kind;
    if (r.facet_tag >= 0)
        row["facet"] = tag_label(ts.graph, r.facet_tag);
    else
        row["facet"] = nullptr;
    return row;
}

inline OrderedJson triangulation_json(const TubeSet& ts, const Triangulation& tri,
                                      const ValidationReport& report) {
    OrderedJson j;
    j["graph"] = graph_json(ts.graph);
    j["kind"] = tri.kind == TriKind::MaxTubing ? "max_tubing" : "boundary_cone";
    j["cell_count"] = tri.cells.size();
    OrderedJson cells = OrderedJson::array();
    for (const SimplexCell& c : tri.cells) cells.push_back(cell_json(ts, c));
    j["cells"] = cells;
    OrderedJson val;
    val["ok"] = report.ok;
    OrderedJson ridges = OrderedJson::array();
    for (const RidgeRecord& r : report.ridges) ridges.push_back(ridge_json(ts, r));
    val["ridges"] = ridges;
    val["violations"] = report.violations;
    j["validation"] = val;
    return j;
}

inline std::string triangulation_text(const TubeSet& ts, const Triangulation& tri,
                                      const ValidationReport& report) {
    std::string out = std::string(tri.kind == TriKind::MaxTubing
                                      ? "max-tubing triangulation, "
                                      : "boundary-cone triangulation, ") +
                      std::to_string(tri.cells.size()) + " cells\n";
    for (const SimplexCell& c : tri.cells)
        out += cell_label(ts, c) + " det " +
               to_string(cell_detvol(ts, c, DetNormalization::RawNormals)) + "\n";
    out += std::string("ridge check ") + (report.ok ? "ok" : "FAILED") + "\n";
    for (const std::string& v : report.violations) out += "  " + v + "\n";
    return out;
}

// Linear form <h_t, (x, y)> rendered over the named graph coordinates.
inline std::string facet_factor_string(const TubeSet& ts, int tube, bool latex) {
    QVec h = facet_normal(ts, tube);
    const Graph& g = ts.graph;
    std::string out;
    for (int i = 0; i < g.n(); ++i) {
        if (h[i] == 0) continue;
        std::string var;
        if (i < g.nv())
            var = latex ? "x_{" + g.vertices[i] + "}" : "x[" + g.vertices[i] + "]";
        else
            var = latex ? "y_{" + g.edges[i - g.nv()].id + "}"
                        : "y[" + g.edges[i - g.nv()].id + "]";
        if (!out.empty()) out += latex ? " + " : "+";
        if (h[i] != 1) out += to_string(h[i]);
        out += var;
    }
    return out;
}

inline OrderedJson canonical_json(const TubeSet& ts, const CanonicalForm& form) {
    OrderedJson j;
    j["rep"] = form.kind == RepKind::A ? "A" : "B";
    OrderedJson terms = OrderedJson::array();
    for (const CFTerm& t : form.terms) {
        OrderedJson row;
        row["num"] = to_string(t.num);
        row["tubes"] = t.tubes;
        terms.push_back(row);
    }
    j["terms"] = terms;
    OrderedJson labels = OrderedJson::array();
    for (int i = 0; i < ts.size(); ++i) labels.push_back(ts.label(i));
    j["tube_labels"] = labels;
    OrderedJson factors = OrderedJson::array();
    for (int i = 0; i < ts.size(); ++i)
        factors.push_back(facet_factor_string(ts, i, false));
    j["tube_factors"] = factors;
    return j;
}

inline std::string canonical_text(const TubeSet& ts, const CanonicalForm& form) {
    std::string out = std::string("rep ") + (form.kind == RepKind::A ? "A" : "B") +
                      ", " + std::to_string(form.terms.size()) + " terms\n";
    for (const CFTerm& t : form.terms) {
        out += "  " + to_string(t.num) + " / (";
        for (std::size_t i = 0; i < t.tubes.size(); ++i) {
            if (i) out += ")(";
            out += facet_factor_string(ts, t.tubes[i], false);
        }
        out += ")\n";
    }
    return out;
}

inline std::string canonical_latex(const TubeSet& ts, const CanonicalForm& form) {
    std::string out;
    for (std::size_t k = 0; k < form.terms.size(); ++k) {
        const CFTerm& t = form.terms[k];
        if (k) out += "\n  + ";
        out += "\\frac{" + to_string(t.num) + "}{";
        for (int id : t.tubes) out += "(" + facet_factor_string(ts, id, true) + ")";
        out += "}";
    }
    out += "\n";
    return out;
}

inline OrderedJson evaluate_json(const TubeSet& ts, const CanonicalForm& form,
                                 const QVec& x) {
    OrderedJson j;
    j["rep"] = form.kind == RepKind::A ? "A" : "B";
    j["at"] = rational_vec_json(x);
    j["value"] = to_string(evaluate(ts, form, x));
    return j;
}

inline std::string dump_json(const OrderedJson& j) { return j.dump(2) + "\n"; }

}  // namespace cosmoform
