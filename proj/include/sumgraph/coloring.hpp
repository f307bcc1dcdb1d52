#pragma once

#include <map>
#include <string>
#include <vector>

#include "sumgraph/core.hpp"

namespace sumgraph {

struct coloring_assignment {
  enum class target_kind { vertex, edge };
  target_kind target = target_kind::vertex;
  std::map<label_t, int> vertex_colors;  // populated when target == vertex
  std::map<edge_t, int> edge_colors;     // populated when target == edge
  std::string scheme;                    // human-readable rule tag
  int colors_used() const;
};

struct edge_sum_partition_result {
  // One key per label; the class holds the edges whose endpoint sum is the key.
  std::map<label_t, std::vector<edge_t>> classes;
  int chi_double_prime = 0;  // number of nonempty classes
};

// Proper vertex coloring with exactly omega colors; primal families only.
coloring_assignment vertex_color(const family_spec& fam);

// Proper edge coloring with exactly max-degree colors (three colors for the
// [-1,1] triangle); primal families only.
coloring_assignment edge_color(const family_spec& fam);

// Group edges by endpoint sum; input must be a sum graph over its labels.
edge_sum_partition_result edge_sum_partition(const labeled_graph& g);

// True when the number of nonempty sum classes equals the exact chromatic
// index; uses the exponential edge coloring oracle, so order is capped.
bool is_edge_sum_perfect(const labeled_graph& g);

}  // namespace sumgraph
