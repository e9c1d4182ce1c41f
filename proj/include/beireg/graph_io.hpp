#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "beireg/graph.hpp"
#include "json.hpp"

namespace beireg {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

enum class GraphFormat { automatic, edgelist, json };

inline GraphFormat parse_graph_format(const std::string& name) {
  if (name == "auto") return GraphFormat::automatic;
  if (name == "edgelist" || name == "text") return GraphFormat::edgelist;
  if (name == "json") return GraphFormat::json;
  throw std::invalid_argument("unknown graph format '" + name + "'");
}

/// Edge-list text: a header line `n <count>`, then one `u v` pair per line
/// with 0 <= u < v < count. Blank lines and `#` comments are skipped.
inline Graph parse_edgelist(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::optional<Graph> g;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (!g) {
      long long count = 0;
      if (first != "n" || !(fields >> count)) throw ParseError(line_no, "expected header 'n <count>'");
      if (count < 0 || count > Graph::kMaxVertices)
        throw ParseError(line_no, "vertex count " + std::to_string(count) + " outside [0, 64]");
      g.emplace(static_cast<int>(count));
    } else {
      long long u = 0;
      long long v = 0;
      std::istringstream pair(line);
      if (!(pair >> u >> v)) throw ParseError(line_no, "expected an edge 'u v'");
      std::string extra;
      if (pair >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
      if (u < 0 || v < 0 || u >= g->order() || v >= g->order())
        throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(g->order()) + ")");
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      if (u > v) throw ParseError(line_no, "edge endpoints must satisfy u < v");
      if (!seen.emplace(static_cast<int>(u), static_cast<int>(v)).second)
        throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  if (!g) throw ParseError(line_no, "missing header 'n <count>'");
  return std::move(*g);
}

inline Graph parse_edgelist(const std::string& text) {
  std::istringstream in(text);
  return parse_edgelist(in);
}

inline std::string to_edgelist(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline nlohmann::json edge_array(const std::vector<Edge>& edges) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = edge_array(g.edges());
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

/// `{"n": int, "edges": [[u,v],...], "labels": [...]?}`.
inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError(0, "graph JSON needs an integer field 'n'");
  const long long n = j["n"].get<long long>();
  if (n < 0 || n > Graph::kMaxVertices) throw ParseError(0, "vertex count outside [0, 64]");
  Graph g(static_cast<int>(n));
  if (j.contains("edges")) {
    const auto& edges = j["edges"];
    if (!edges.is_array()) throw ParseError(0, "'edges' must be an array");
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto& e = edges[k];
      const std::string where = "edge #" + std::to_string(k) + ": ";
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw ParseError(0, where + "expected [u, v]");
      const long long u = e[0].get<long long>();
      const long long v = e[1].get<long long>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(0, where + "vertex id out of range");
      if (u == v) throw ParseError(0, where + "self-loop at vertex " + std::to_string(u));
      if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
        throw ParseError(0, where + "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw ParseError(0, "'labels' must be an array");
    std::vector<std::string> labels;
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError(0, "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (static_cast<long long>(labels.size()) != n) throw ParseError(0, "label count does not match n");
    g.set_labels(std::move(labels));
  }
  return g;
}

inline Graph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Report the line of the offending byte.
    int line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(line, e.what());
  }
  return graph_from_json(j);
}

inline Graph parse_graph(const std::string& text, GraphFormat format = GraphFormat::automatic) {
  if (format == GraphFormat::automatic) {
    auto pos = text.find_first_not_of(" \t\r\n");
    format = pos != std::string::npos && text[pos] == '{' ? GraphFormat::json : GraphFormat::edgelist;
  }
  return format == GraphFormat::json ? parse_graph_json(text) : parse_edgelist(text);
}

inline Graph read_graph_file(const std::string& path, GraphFormat format = GraphFormat::automatic) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), format);
}

}  // namespace beireg
