#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sumgraph {

// Vertices are identified by their integer label; there is no separate id.
using label_t = long long;
using edge_t = std::pair<label_t, label_t>;  // always (min, max)

struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
  std::size_t position;  // byte offset into the input text
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what), position(pos) {}
};

// labels: strictly increasing, may be empty.
// edges: (min,max) pairs in lexicographic order, endpoints drawn from labels.
struct labeled_graph {
  std::vector<label_t> labels;
  std::vector<edge_t> edges;

  std::size_t order() const { return labels.size(); }
  std::size_t size() const { return edges.size(); }
  bool has_label(label_t v) const;
  std::size_t index_of(label_t v) const;  // validation_error if absent
  bool has_edge(label_t a, label_t b) const;
};

enum class family_kind {
  gn,              // G+([1,n])
  g0n,             // G+([0,n])
  gmn,             // G+([-m,n])
  gn_complement,
  g0n_complement,
  gmn_complement,
};

struct family_spec {
  family_kind kind = family_kind::gn;
  long long n = 0;
  long long m = 0;  // magnitude of the negative bound; gmn kinds only
};

edge_t make_edge(label_t a, label_t b);
void validate_label_set(const std::vector<label_t>& labels);
void validate_graph(const labeled_graph& g);

// G+(S): edge {a,b} iff a != b and a+b is a label.
labeled_graph build_sum_graph(const std::vector<label_t>& labels);

// Complement on the same label set.
labeled_graph complement(const labeled_graph& g);

labeled_graph generate(const family_spec& spec);

// All labels of one interval; helper for family construction and tests.
labeled_graph interval_sum_graph(label_t lo, label_t hi);

// Disjoint-label join: A, B plus all cross edges.
labeled_graph graph_join(const labeled_graph& a, const labeled_graph& b);

// Union of labels and edges; overlapping labels are merged, duplicate edges
// collapse. Used for identities like G_n with its complement giving K_n.
labeled_graph graph_union(const labeled_graph& a, const labeled_graph& b);

std::string to_json(const labeled_graph& g);
labeled_graph from_json(const std::string& text);
std::string to_dot(const labeled_graph& g);

// Short display name, e.g. "G7", "G(0,6)", "G(-2,3)", "G7c".
std::string family_name(const family_spec& spec);

}  // namespace sumgraph
