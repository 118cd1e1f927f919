#pragma once

// Labeled graphs with ordered vertex and edge lists. The orderings are part
// of the contract: they fix coordinate order, tube order, and every output.

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cosmoform/rational.hpp"

namespace cosmoform {

struct Edge {
  std::string id;
  int u = -1, v = -1;  // indices into Graph::vertices
};

class Graph {
 public:
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  bool multigraph = false;

  int nv() const { return static_cast<int>(vertices.size()); }
  int ne() const { return static_cast<int>(edges.size()); }
  int n() const { return nv() + ne(); }

  int vertex_index(const std::string& label) const {
    for (int i = 0; i < nv(); ++i)
      if (vertices[i] == label) return i;
    return -1;
  }

  int degree(int v) const {
    int d = 0;
    for (const auto& e : edges) d += (e.u == v) + (e.v == v);
    return d;
  }

  bool has_isolated_vertex() const {
    for (int v = 0; v < nv(); ++v)
      if (degree(v) == 0) return true;
    return false;
  }

  bool connected() const {
    if (nv() == 0) return true;
    std::vector<bool> seen(nv(), false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& e : edges) {
        int w = e.u == u ? e.v : e.v == u ? e.u : -1;
        if (w >= 0 && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  void validate() const {
    std::set<std::string> vl, el;
    for (const auto& l : vertices) {
      if (l.empty()) throw contract_error("graph: empty vertex label");
      if (!vl.insert(l).second)
        throw contract_error("graph: duplicate vertex label \"" + l + "\"");
    }
    std::map<std::pair<int, int>, std::string> seen_ends;
    for (const auto& e : edges) {
      if (e.id.empty()) throw contract_error("graph: empty edge label");
      if (!el.insert(e.id).second)
        throw contract_error("graph: duplicate edge label \"" + e.id + "\"");
      if (e.u < 0 || e.v < 0 || e.u >= nv() || e.v >= nv())
        throw contract_error("graph: edge \"" + e.id + "\" references unknown vertex");
      if (e.u == e.v)
        throw contract_error("graph: self-loop at edge \"" + e.id + "\" is not allowed");
      auto key = std::minmax(e.u, e.v);
      auto [it, fresh] = seen_ends.emplace(key, e.id);
      if (!fresh && !multigraph)
        throw contract_error("graph: parallel edges \"" + it->second + "\" and \"" +
                             e.id + "\" require multigraph mode");
    }
  }

  void require_no_isolated(const std::string& op) const {
    for (int v = 0; v < nv(); ++v)
      if (degree(v) == 0)
        throw contract_error(op + ": isolated vertex \"" + vertices[v] + "\"");
  }

  // One vertex per edge; one edge per incident pair (a single edge even when
  // two parallel edges share both endpoints).
  Graph line_graph() const {
    Graph lg;
    for (const auto& e : edges) lg.vertices.push_back(e.id);
    int k = 0;
    for (int i = 0; i < ne(); ++i)
      for (int j = i + 1; j < ne(); ++j) {
        const auto& a = edges[i];
        const auto& b = edges[j];
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
          lg.edges.push_back({"f" + std::to_string(++k), i, j});
      }
    return lg;
  }

  static Graph from_json_text(const std::string& text, bool multigraph_flag) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw io_error(std::string("graph file: invalid JSON: ") + e.what());
    }
    const auto as_label = [](const nlohmann::json& v) -> std::string {
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    Graph g;
    g.multigraph = multigraph_flag || j.value("multigraph", false);
    if (!j.contains("vertices") || !j["vertices"].is_array() ||
        !j.contains("edges") || !j["edges"].is_array())
      throw io_error("graph file: expected \"vertices\" and \"edges\" arrays");
    for (const auto& v : j["vertices"]) g.vertices.push_back(as_label(v));
    for (const auto& e : j["edges"]) {
      if (!e.contains("id") || !e.contains("ends") || !e["ends"].is_array() ||
          e["ends"].size() != 2)
        throw io_error("graph file: each edge needs \"id\" and a 2-element \"ends\"");
      Edge edge;
      edge.id = as_label(e["id"]);
      edge.u = g.vertex_index(as_label(e["ends"][0]));
      edge.v = g.vertex_index(as_label(e["ends"][1]));
      if (edge.u < 0 || edge.v < 0)
        throw io_error("graph file: edge \"" + edge.id + "\" references unknown vertex");
      g.edges.push_back(std::move(edge));
    }
    g.validate();
    return g;
  }

  // Plain text edge list: one "u v" pair per line, vertices in order of first
  // appearance, edges labeled e1, e2, ... in file order.
  static Graph from_edge_list_text(const std::string& text, bool multigraph_flag) {
    Graph g;
    g.multigraph = multigraph_flag;
    std::istringstream in(text);
    std::string line;
    int k = 0;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string a, b, extra;
      if (!(ls >> a)) continue;  // blank line
      if (a[0] == '#') continue;
      if (!(ls >> b) || (ls >> extra))
        throw io_error("graph file: expected \"u v\" on line: " + line);
      for (const auto& l : {a, b})
        if (g.vertex_index(l) < 0) g.vertices.push_back(l);
      g.edges.push_back({"e" + std::to_string(++k), g.vertex_index(a), g.vertex_index(b)});
    }
    g.validate();
    return g;
  }

  static Graph parse(const std::string& content, bool multigraph_flag) {
    for (char c : content) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
      return c == '{' ? from_json_text(content, multigraph_flag)
                      : from_edge_list_text(content, multigraph_flag);
    }
    throw io_error("graph file: empty input");
  }
};

}  // namespace cosmoform
