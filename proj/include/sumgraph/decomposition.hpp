#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sumgraph/core.hpp"
#include "sumgraph/report.hpp"

namespace sumgraph {

struct decomposition_scheme {
  long long a = 0;         // size of the first part when arithmetic
  long long d = 0;         // common difference when arithmetic
  std::string shape;       // "triangular book", "star", "fan with handle", ...
  bool arithmetic = true;  // parts have sizes a, a+d, a+2d, ...
};

// Parts are edge-disjoint, cover the host exactly, contain no isolated
// vertex, and are listed in ascending size.
struct decomposition {
  labeled_graph host;
  std::vector<labeled_graph> parts;
  decomposition_scheme scheme;
};

enum class decomposition_target { complete, zero_family };  // K_n, [0,n] family
enum class part_shape { books, stars, fans };

struct feasibility_result {
  bool feasible = false;
  std::string reason;
};

// K_n into triangular books: difference-4 sizes starting at 1 (even n) or
// 3 (odd n).
decomposition cmsd_kn_books(long long n);

// K_n into stars of sizes 1..n-1.
decomposition cmsd_kn_stars(long long n);

// [0,n] family into triangular books with bookmark. Even n admits two
// schemes, returned as [(2,2)-scheme, difference-8 scheme]; odd n has one
// (n = 1 mod 4 carries a bare spine and is not arithmetic).
std::vector<decomposition> cmsd_g0n_books(long long n);

// [0,n] family into fans with handle by repeatedly peeling the least
// vertex's star plus the two top endpoint-sum diagonals.
decomposition cmsd_g0n_fans(long long n);

// Parity obstructions for the requested target/shape pair.
feasibility_result feasibility(decomposition_target target, part_shape shape,
                               long long n);

// Deterministic backtracking search for an edge-disjoint cover of K_n by
// fans with handle of sizes a, a+d, ...; smallest placements tried first,
// fan paths canonicalized by their lesser end.
std::optional<decomposition> search_fan_cmsd(long long n, long long a,
                                             long long d);

// Checks edge-disjointness, exact cover, absence of isolated part
// vertices, connectivity, the declared size progression, and structural
// nesting. Failures become failing entries, not errors.
verification_report validate(const decomposition& dec);

}  // namespace sumgraph
