#include "sumgraph/core.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace sumgraph {

bool labeled_graph::has_label(label_t v) const {
  return std::binary_search(labels.begin(), labels.end(), v);
}

std::size_t labeled_graph::index_of(label_t v) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), v);
  if (it == labels.end() || *it != v)
    throw validation_error("label " + std::to_string(v) + " is not a vertex");
  return static_cast<std::size_t>(it - labels.begin());
}

bool labeled_graph::has_edge(label_t a, label_t b) const {
  if (a == b) return false;
  return std::binary_search(edges.begin(), edges.end(), make_edge(a, b));
}

edge_t make_edge(label_t a, label_t b) {
  if (a == b) throw validation_error("self-loop at label " + std::to_string(a));
  return a < b ? edge_t{a, b} : edge_t{b, a};
}

void validate_label_set(const std::vector<label_t>& labels) {
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] == labels[i - 1])
      throw validation_error("duplicate label " + std::to_string(labels[i]));
    if (labels[i] < labels[i - 1])
      throw validation_error("labels not in ascending order at position " + std::to_string(i));
  }
}

void validate_graph(const labeled_graph& g) {
  validate_label_set(g.labels);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const edge_t& e = g.edges[i];
    if (e.first >= e.second)
      throw validation_error("edge not in (min,max) form: (" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + ")");
    if (!g.has_label(e.first) || !g.has_label(e.second))
      throw validation_error("edge endpoint not a vertex: (" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + ")");
    if (i > 0 && !(g.edges[i - 1] < e))
      throw validation_error("edges not in sorted order at position " + std::to_string(i));
  }
}

labeled_graph build_sum_graph(const std::vector<label_t>& labels) {
  validate_label_set(labels);
  labeled_graph g;
  g.labels = labels;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (std::binary_search(labels.begin(), labels.end(), labels[i] + labels[j]))
        g.edges.push_back({labels[i], labels[j]});
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

labeled_graph complement(const labeled_graph& g) {
  validate_graph(g);
  labeled_graph c;
  c.labels = g.labels;
  for (std::size_t i = 0; i < g.labels.size(); ++i)
    for (std::size_t j = i + 1; j < g.labels.size(); ++j)
      if (!g.has_edge(g.labels[i], g.labels[j])) c.edges.push_back({g.labels[i], g.labels[j]});
  std::sort(c.edges.begin(), c.edges.end());
  return c;
}

labeled_graph interval_sum_graph(label_t lo, label_t hi) {
  if (lo > hi) throw validation_error("empty interval bounds");
  std::vector<label_t> labels;
  for (label_t v = lo; v <= hi; ++v) labels.push_back(v);
  return build_sum_graph(labels);
}

labeled_graph generate(const family_spec& spec) {
  if (spec.n < 1) throw validation_error("family parameter n must be >= 1");
  switch (spec.kind) {
    case family_kind::gn:
      return interval_sum_graph(1, spec.n);
    case family_kind::g0n:
      return interval_sum_graph(0, spec.n);
    case family_kind::gmn:
      if (spec.m < 1) throw validation_error("family parameter m must be >= 1");
      return interval_sum_graph(-spec.m, spec.n);
    case family_kind::gn_complement:
      return complement(interval_sum_graph(1, spec.n));
    case family_kind::g0n_complement:
      return complement(interval_sum_graph(0, spec.n));
    case family_kind::gmn_complement:
      if (spec.m < 1) throw validation_error("family parameter m must be >= 1");
      return complement(interval_sum_graph(-spec.m, spec.n));
  }
  throw validation_error("unknown family kind");
}

labeled_graph graph_join(const labeled_graph& a, const labeled_graph& b) {
  validate_graph(a);
  validate_graph(b);
  for (label_t v : a.labels)
    if (b.has_label(v))
      throw validation_error("join requires disjoint labels; " + std::to_string(v) +
                             " appears in both");
  labeled_graph g;
  g.labels = a.labels;
  g.labels.insert(g.labels.end(), b.labels.begin(), b.labels.end());
  std::sort(g.labels.begin(), g.labels.end());
  g.edges = a.edges;
  g.edges.insert(g.edges.end(), b.edges.begin(), b.edges.end());
  for (label_t u : a.labels)
    for (label_t v : b.labels) g.edges.push_back(make_edge(u, v));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

labeled_graph graph_union(const labeled_graph& a, const labeled_graph& b) {
  validate_graph(a);
  validate_graph(b);
  std::set<label_t> labels(a.labels.begin(), a.labels.end());
  labels.insert(b.labels.begin(), b.labels.end());
  std::set<edge_t> edges(a.edges.begin(), a.edges.end());
  edges.insert(b.edges.begin(), b.edges.end());
  labeled_graph g;
  g.labels.assign(labels.begin(), labels.end());
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

std::string to_json(const labeled_graph& g) {
  validate_graph(g);
  nlohmann::ordered_json j;
  j["labels"] = g.labels;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const edge_t& e : g.edges) edges.push_back({e.first, e.second});
  j["edges"] = edges;
  return j.dump();
}

labeled_graph from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("labels") || !j.contains("edges"))
    throw parse_error("expected object with \"labels\" and \"edges\"", 0);
  if (!j["labels"].is_array() || !j["edges"].is_array())
    throw parse_error("\"labels\" and \"edges\" must be arrays", 0);
  labeled_graph g;
  for (const auto& v : j["labels"]) {
    if (!v.is_number_integer()) throw parse_error("labels must be integers", 0);
    g.labels.push_back(v.get<label_t>());
  }
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw parse_error("each edge must be a pair of integers", 0);
    g.edges.push_back(make_edge(e[0].get<label_t>(), e[1].get<label_t>()));
  }
  std::sort(g.edges.begin(), g.edges.end());
  auto dup = std::adjacent_find(g.edges.begin(), g.edges.end());
  if (dup != g.edges.end())
    throw validation_error("duplicate edge (" + std::to_string(dup->first) + "," +
                           std::to_string(dup->second) + ")");
  validate_graph(g);
  return g;
}

namespace {

std::string dot_name(label_t v) {
  // Negative numerals are not bare DOT ids.
  std::string s = std::to_string(v);
  return v < 0 ? "\"" + s + "\"" : s;
}

}  // namespace

std::string to_dot(const labeled_graph& g) {
  validate_graph(g);
  std::ostringstream out;
  out << "graph {\n";
  for (label_t v : g.labels) out << "  " << dot_name(v) << ";\n";
  for (const edge_t& e : g.edges)
    out << "  " << dot_name(e.first) << " -- " << dot_name(e.second) << ";\n";
  out << "}\n";
  return out.str();
}

std::string family_name(const family_spec& spec) {
  std::string n = std::to_string(spec.n);
  switch (spec.kind) {
    case family_kind::gn: return "G" + n;
    case family_kind::g0n: return "G(0," + n + ")";
    case family_kind::gmn: return "G(-" + std::to_string(spec.m) + "," + n + ")";
    case family_kind::gn_complement: return "G" + n + "c";
    case family_kind::g0n_complement: return "G(0," + n + ")c";
    case family_kind::gmn_complement: return "G(-" + std::to_string(spec.m) + "," + n + ")c";
  }
  return "?";
}

}  // namespace sumgraph
