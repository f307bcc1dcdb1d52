#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sumgraph/core.hpp"

namespace sumgraph {

// Thrown when a labeling recipe produces a label set whose induced sum graph
// is not the intended shape, or when the target shape admits no labeling.
struct construction_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct tree_shape {
  enum class kind { union_stars_apex, banana };
  std::vector<long long> star_sizes;  // ascending, all >= 1
  kind variant = kind::union_stars_apex;
};

// Every labeler returns build_sum_graph over its label set and throws
// construction_error if an accidental sum adds or removes an edge.

// Path on n vertices joined to an apex; n >= 5.
labeled_graph label_fan(long long n);

// m triangles sharing one vertex.
labeled_graph label_windmill(long long m);

// Disjoint stars K_{1,n_i} joined to one extra apex vertex.
labeled_graph label_union_stars_apex(const tree_shape& shape);

// Stars K_{1,n_i} plus a root adjacent to one leaf of each star; 0 < x < y
// seed the label recurrence.
labeled_graph label_banana_tree(const tree_shape& shape, label_t x, label_t y);

// n triangles sharing an edge, plus a pendant vertex on the shared edge's
// endpoint of larger degree; m scales the labels.
labeled_graph label_triangular_book_bookmark(long long n, long long m);

// Path on n vertices joined to an apex, plus a pendant vertex on the apex;
// labels are consecutive Fibonacci numbers starting at index m >= 2.
labeled_graph label_fan_handle(long long n, long long m);

// Identify the dominating 0-vertices of the parts, rescaling each part so no
// accidental cross sums appear.
labeled_graph amalgamate(const std::vector<labeled_graph>& parts);

struct apex_join_result {
  labeled_graph graph;                  // sum graph over the labels plus 0
  std::vector<std::string> violations;  // failed sufficient conditions, if any
};

// Add a 0-labeled vertex joined to everything.  The sufficient conditions
// (input edges match its labels, no full-degree vertex, no pair x,-x, 0
// absent) are checked and reported rather than thrown: the joined graph can
// be a valid sum graph even when a condition fails.
apex_join_result apex_join(const labeled_graph& g);

}  // namespace sumgraph
