#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sumgraph/core.hpp"

namespace sumgraph {

// Brute-force ground truth. Every routine here is independent of the closed
// forms and constructions it is used to check.

// Default order caps; SUMGRAPH_MAX_ORDER in the environment overrides them
// (unsafe for CI, meant for one-off experiments).
std::size_t effective_order_cap(std::size_t default_cap);

struct iso_certificate {
  bool valid = false;
  std::vector<std::pair<label_t, label_t>> mapping;  // g-label -> h-label
};

bool verify_sum_labeling(const labeled_graph& g, bool positive_only = false);
bool verify_anti_sum_labeling(const labeled_graph& g);

long long count_triangles_bf(const labeled_graph& g);
long long count_c4_bf(const labeled_graph& g);
long long count_open_p3_bf(const labeled_graph& g);

iso_certificate is_isomorphic(const labeled_graph& g, const labeled_graph& h);

std::optional<std::vector<label_t>> hamiltonian_cycle_bf(const labeled_graph& g);

struct exact_invariants {
  int omega = 0;
  int chi = 0;
  int chi_prime = 0;
  int alpha0 = 0;              // minimum vertex cover
  int beta0 = 0;               // maximum independent set
  std::optional<int> alpha1;   // minimum edge cover; absent if an isolated vertex exists
  int beta1 = 0;               // maximum matching
};

exact_invariants exact_invariants_bf(const labeled_graph& g);
bool is_perfect_bf(const labeled_graph& g);

struct coloring_check {
  bool proper = false;
  int colors_used = 0;
};

coloring_check is_proper_vertex_coloring(const labeled_graph& g,
                                         const std::map<label_t, int>& assignment);
coloring_check is_proper_edge_coloring(const labeled_graph& g,
                                       const std::map<edge_t, int>& assignment);

}  // namespace sumgraph
