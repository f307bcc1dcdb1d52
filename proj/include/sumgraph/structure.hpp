#pragma once

#include <utility>
#include <vector>

#include "sumgraph/core.hpp"
#include "sumgraph/report.hpp"

namespace sumgraph {

struct extension_delta {
  long long base_m = 0;            // extended interval is [-base_m, base_m]
  std::vector<label_t> added;      // one or two labels outside the interval
  long long edge_count = 0;        // size of the extended sum graph
};

// Induced subgraph of the [1,n] family after deleting the supplementary
// pair {j, n+1-j}; isomorphic to the [1,n-2] family.
labeled_graph remove_supplementary(long long n, long long j);

// Shift every label up by one, attach a new least label 1 to all shifted
// labels except the greatest, append an isolated greatest label. Input must
// be exactly generate([1,n]); output equals generate([1,n+2]).
labeled_graph grow_gn(const labeled_graph& g);

// Explicit Hamiltonian cycle of the order-n family on [-1, n-2]:
// -1, n-2, 0, n-3, 1, ... (validated by an adjacency walk before return).
std::vector<label_t> hamiltonian_gdelta(long long n);

// Hamiltonian cycle of the [-m,n] family found by deterministic search.
std::vector<label_t> hamiltonian_gmn(long long m, long long n);

// (a) [1,n] family vs its complement minus the supplementary diagonal,
// (b) [0,n] family vs the complement of [1,n+1], (c) the family and its
// complement partition the complete graph's edges.
verification_report check_complement_identities(long long n);

// Size of G+([-m,m] + added); closed-form deltas are asserted when the
// added labels fall in a known case.
extension_delta extension_edge_count(long long m, std::vector<label_t> added);

// All label pairs {x,y} outside [-m,m] within the window [-3m-2, 3m+2]
// whose two-element extension has maximum size; pairs and list are sorted.
std::vector<std::pair<label_t, label_t>> extension_argmax(long long m);

// Interval families of maximum size for the given order, per the case
// table on order mod 4; brute-verified against all interval families and
// the extension maximizer for order <= 9.
std::vector<family_spec> maximal_isg(long long order);

// Delete vertices -X and Y from the [-m,n] family together with the edge
// classes whose endpoint sum lies in -X or Y; always a sum graph again.
labeled_graph h_graph(long long m, long long n, std::vector<long long> X,
                      std::vector<long long> Y);

}  // namespace sumgraph
