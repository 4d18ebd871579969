#include "symdepth/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace symdepth {

namespace {

Graph build_checked(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > 64) throw std::invalid_argument("graph: n must be in [0, 64]");
  Graph g(n);
  std::set<std::pair<int, int>> seen;
  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    auto [u, v] = edges[idx];
    std::string where = "edge " + std::to_string(idx);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: " + where + ": vertex out of range");
    if (u == v) throw std::invalid_argument("graph: " + where + ": self-loop");
    std::pair<int, int> key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw std::invalid_argument("graph: " + where + ": duplicate edge");
    g.add_edge(u, v);
  }
  return g;
}

Graph parse_json_graph(const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph: malformed JSON: ") + e.what());
  }
  if (!parsed.is_object() || !parsed.contains("n") || !parsed.contains("edges"))
    throw std::invalid_argument("graph: expected fields \"n\" and \"edges\"");
  if (!parsed.at("n").is_number_integer())
    throw std::invalid_argument("graph: field \"n\" must be an integer");
  if (!parsed.at("edges").is_array())
    throw std::invalid_argument("graph: field \"edges\" must be an array of pairs");
  int n = parsed.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : parsed.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw std::invalid_argument("graph: each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return build_checked(n, edges);
}

Graph parse_text_graph(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  std::size_t m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("graph: first line must be \"n m\"");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v))
      throw std::invalid_argument("graph: line " + std::to_string(i + 2) +
                                  ": expected \"u v\"");
    edges.emplace_back(u, v);
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("graph: trailing input after last edge");
  return build_checked(n, edges);
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("graph: empty input");
  if (text[first] == '{') return parse_json_graph(text);
  return parse_text_graph(text);
}

std::string serialize_graph(const Graph& g) {
  nlohmann::ordered_json out;
  out["n"] = g.vertex_count();
  out["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) out["edges"].push_back({u, v});
  return out.dump();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_graph(buffer.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace symdepth
