#pragma once

#include <optional>

#include "sumgraph/core.hpp"

namespace sumgraph {

// Closed-form counting results for the interval families.  Every function is
// exact integer arithmetic; internal divisions are checked for zero remainder
// and throw std::logic_error on failure, since a nonzero remainder can only
// mean a transcription bug, not bad input.

enum class graph_side { primal, complement };

struct invariant_record {
  long long omega = 0;
  long long chi = 0;
  long long chi_prime = 0;
  long long alpha0 = 0;               // minimum vertex cover
  long long beta0 = 0;                // maximum independent set
  std::optional<long long> alpha1;    // minimum edge cover; absent for G_n (isolated vertex)
  long long beta1 = 0;                // maximum matching
};

// Degree of the vertex labeled i.  Defined for all six family kinds; the
// complement kinds return order-1 minus the primal degree.
long long degree(const family_spec& fam, long long i);

// Number of edges, all six family kinds.
long long edge_count(const family_spec& fam);

// Triangle count of G_{-m,n} (primal) or its complement.
long long c3_count(long long m, long long n, graph_side which);

// Triangle count for any family kind.
long long triangle_count(const family_spec& fam);

// Four-cycle count.  Supported: gn, gn_complement, g0n, gmn, gmn_complement.
long long c4_count(const family_spec& fam);

// Number of open three-vertex paths (paths u-v-w with u,w nonadjacent) in G_n.
long long open_p3_count(long long n);

// Largest possible edge count of an integral sum graph of the given order.
long long max_isg_size(long long order);

// omega, chi, chi', and the cover/independence numbers for gn, g0n, gmn.
invariant_record family_invariants(const family_spec& fam);

enum class quantity_kind {
  degree,
  edge_count,
  c3,
  c4,
  open_p3,
  max_size,
  omega,
  chi,
  chi_prime,
  alpha0,
  beta0,
  alpha1,
  beta1,
};

struct count_query {
  family_spec family;
  quantity_kind quantity = quantity_kind::edge_count;
  long long degree_label = 0;  // consulted only when quantity == degree
};

// Single entry point over the closed forms above.  Empty only for alpha1 of a
// family with an isolated vertex; unsupported combinations throw
// validation_error rather than silently answering for the wrong graph.
std::optional<long long> count_value(const count_query& q);

}  // namespace sumgraph
