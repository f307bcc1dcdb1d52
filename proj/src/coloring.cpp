#include "sumgraph/coloring.hpp"

#include <cassert>
#include <set>
#include <stdexcept>

#include "sumgraph/oracle.hpp"

namespace sumgraph {
namespace {

long long ceil_half(long long x) { return (x + 1) / 2; }

// Magnitudes of the negative span and positive span of a primal family.
void family_spans(const family_spec& fam, long long& r, long long& n) {
  switch (fam.kind) {
    case family_kind::gn:
      throw std::logic_error("family_spans: gn has no zero vertex");
    case family_kind::g0n:
      r = 0;
      n = fam.n;
      return;
    case family_kind::gmn:
      r = fam.m;
      n = fam.n;
      return;
    default:
      throw std::logic_error("family_spans: primal families only");
  }
}

void require_primal(const family_spec& fam, const char* what) {
  if (fam.kind != family_kind::gn && fam.kind != family_kind::g0n &&
      fam.kind != family_kind::gmn) {
    throw validation_error(std::string(what) +
                           ": colorings are defined for the primal families");
  }
}

// Color index for the edge {a, b} of the [-r, n] interval family, a < b.
// Pure case analysis on the sign pattern of the endpoints; indices stay in
// [1, r+n] and every incident pair at a common vertex lands apart.
long long gmn_edge_color_index(long long r, long long n, label_t a, label_t b) {
  // The case analysis below double-books one color at the vertex -r when
  // n == 1 and r is odd. Negation is an isomorphism between the [-r, 1]
  // and [-1, r] families, and the [-1, r] side avoids the bad branch, so
  // the n == 1 column is colored through it.
  if (n == 1 && r >= 2) return gmn_edge_color_index(n, r, -b, -a);
  const long long half_r = r / 2;
  if (a == 0 || b == 0) {
    const label_t other = (a == 0) ? b : a;
    if (other > 0) return other;      // 0--j
    return -other + n;                // 0--(-i)
  }
  if (a < 0 && b > 0) {
    const long long i = -a;
    const long long j = b;
    if (j <= n - 1) return i + j;     // (-i)--j away from the top vertex
    // j == n from here on.
    if (i <= half_r) return 2 * i + n;
    if (n > ceil_half(r)) return i - half_r;
    if (i <= half_r + n - 1) return i - half_r;
    return 2 * (i - half_r) - n + 1;
  }
  if (a > 0) return a + b + r;        // i--j, both positive
  return -a + -b + n;                 // (-i)--(-j), both negative
}

void assert_proper_at_vertices(const labeled_graph& g,
                               const std::map<edge_t, int>& colors) {
#ifndef NDEBUG
  for (label_t v : g.labels) {
    std::set<int> seen;
    for (const edge_t& e : g.edges) {
      if (e.first != v && e.second != v) continue;
      const bool fresh = seen.insert(colors.at(e)).second;
      assert(fresh && "edge coloring repeats a color at a vertex");
      (void)fresh;
    }
  }
#else
  (void)g;
  (void)colors;
#endif
}

}  // namespace

int coloring_assignment::colors_used() const {
  std::set<int> seen;
  if (target == target_kind::vertex) {
    for (const auto& [v, c] : vertex_colors) seen.insert(c);
  } else {
    for (const auto& [e, c] : edge_colors) seen.insert(c);
  }
  return static_cast<int>(seen.size());
}

coloring_assignment vertex_color(const family_spec& fam) {
  require_primal(fam, "vertex_color");
  coloring_assignment out;
  out.target = coloring_assignment::target_kind::vertex;
  out.scheme = "supplementary label pairs share a color; 0 gets its own";
  if (fam.kind == family_kind::gn) {
    const long long n = fam.n;
    if (n < 1) throw validation_error("vertex_color: n must be at least 1");
    const long long cn = ceil_half(n);
    for (long long j = 1; j <= n; ++j) {
      out.vertex_colors[j] = static_cast<int>(j <= cn ? j : n + 1 - j);
    }
    return out;
  }
  long long r = 0, n = 0;
  family_spans(fam, r, n);
  const long long cn = ceil_half(n);
  const long long cr = ceil_half(r);
  for (long long j = 1; j <= n; ++j) {
    out.vertex_colors[j] = static_cast<int>(j <= cn ? j : n + 1 - j);
  }
  for (long long i = 1; i <= r; ++i) {
    out.vertex_colors[-i] =
        static_cast<int>(cn + (i <= cr ? i : r + 1 - i));
  }
  out.vertex_colors[0] = static_cast<int>(cn + cr + 1);
  return out;
}

coloring_assignment edge_color(const family_spec& fam) {
  require_primal(fam, "edge_color");
  coloring_assignment out;
  out.target = coloring_assignment::target_kind::edge;
  const labeled_graph g = generate(fam);
  if (fam.kind == family_kind::gn) {
    out.scheme = "edges colored by endpoint sum minus 2";
    for (const edge_t& e : g.edges) {
      out.edge_colors[e] = static_cast<int>(e.first + e.second - 2);
    }
  } else if (fam.kind == family_kind::g0n) {
    out.scheme = "edges colored by endpoint sum";
    for (const edge_t& e : g.edges) {
      out.edge_colors[e] = static_cast<int>(e.first + e.second);
    }
  } else if (fam.m == 1 && fam.n == 1) {
    // The [-1,1] family is a triangle: three colors, one per edge.
    out.scheme = "triangle: one color per edge";
    int c = 1;
    for (const edge_t& e : g.edges) out.edge_colors[e] = c++;
  } else {
    out.scheme = "sign-pattern rule over the [-m,n] interval";
    for (const edge_t& e : g.edges) {
      out.edge_colors[e] = static_cast<int>(
          gmn_edge_color_index(fam.m, fam.n, e.first, e.second));
    }
  }
  assert_proper_at_vertices(g, out.edge_colors);
  return out;
}

edge_sum_partition_result edge_sum_partition(const labeled_graph& g) {
  validate_graph(g);
  if (!verify_sum_labeling(g)) {
    throw validation_error(
        "edge_sum_partition: edges do not match the sums of the label set");
  }
  edge_sum_partition_result out;
  for (label_t v : g.labels) out.classes[v];
  for (const edge_t& e : g.edges) {
    out.classes[e.first + e.second].push_back(e);
  }
  for (const auto& [sum, members] : out.classes) {
    if (!members.empty()) ++out.chi_double_prime;
  }
  return out;
}

bool is_edge_sum_perfect(const labeled_graph& g) {
  const edge_sum_partition_result part = edge_sum_partition(g);
  const exact_invariants inv = exact_invariants_bf(g);
  return part.chi_double_prime == inv.chi_prime;
}

}  // namespace sumgraph
