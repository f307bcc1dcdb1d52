#include "sumgraph/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>

namespace sumgraph {

std::size_t effective_order_cap(std::size_t default_cap) {
  const char* env = std::getenv("SUMGRAPH_MAX_ORDER");
  if (env == nullptr || *env == '\0') return default_cap;
  return static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
}

namespace {

// Index-space adjacency; one 64-bit row per vertex. Rows never contain the
// diagonal bit.
struct adjacency {
  int n = 0;
  std::vector<std::uint64_t> rows;
  std::vector<label_t> labels;
};

adjacency make_adjacency(const labeled_graph& g, std::size_t default_cap, const char* op) {
  validate_graph(g);
  std::size_t cap = effective_order_cap(default_cap);
  if (cap > 64) cap = 64;  // single-word rows
  if (g.order() > cap)
    throw capacity_error(std::string(op) + ": order " + std::to_string(g.order()) +
                         " exceeds cap " + std::to_string(cap));
  adjacency a;
  a.n = static_cast<int>(g.order());
  a.labels = g.labels;
  a.rows.assign(g.order(), 0);
  for (const edge_t& e : g.edges) {
    std::size_t i = g.index_of(e.first), j = g.index_of(e.second);
    a.rows[i] |= std::uint64_t(1) << j;
    a.rows[j] |= std::uint64_t(1) << i;
  }
  return a;
}

int degree(const adjacency& a, int v) { return std::popcount(a.rows[v]); }

// Max clique over the vertex subset `allowed`, classic branch and bound.
int max_clique(const adjacency& a, std::uint64_t allowed) {
  int best = 0;
  auto rec = [&](auto&& self, std::uint64_t cand, int depth) -> void {
    if (depth + std::popcount(cand) <= best) return;
    if (cand == 0) {
      best = std::max(best, depth);
      return;
    }
    while (cand) {
      if (depth + std::popcount(cand) <= best) return;
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      self(self, cand & a.rows[v] & allowed, depth + 1);
    }
    best = std::max(best, depth);
  };
  rec(rec, allowed, 0);
  return best;
}

bool colorable(const adjacency& a, std::uint64_t allowed, int k,
               std::vector<int>& verts, std::vector<int>& color) {
  // verts: allowed vertices in degree-descending order; color[i] in 1..k.
  auto rec = [&](auto&& self, std::size_t idx, int used) -> bool {
    if (idx == verts.size()) return true;
    int v = verts[idx];
    int limit = std::min(k, used + 1);
    for (int c = 1; c <= limit; ++c) {
      bool ok = true;
      for (std::size_t p = 0; p < idx; ++p)
        if (color[verts[p]] == c && (a.rows[v] >> verts[p] & 1)) { ok = false; break; }
      if (!ok) continue;
      color[v] = c;
      if (self(self, idx + 1, std::max(used, c))) return true;
      color[v] = 0;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

int chromatic_number(const adjacency& a, std::uint64_t allowed) {
  std::vector<int> verts;
  for (int v = 0; v < a.n; ++v)
    if (allowed >> v & 1) verts.push_back(v);
  if (verts.empty()) return 0;
  std::stable_sort(verts.begin(), verts.end(), [&](int x, int y) {
    return std::popcount(a.rows[x] & allowed) > std::popcount(a.rows[y] & allowed);
  });
  std::vector<int> color(a.n, 0);
  for (int k = max_clique(a, allowed);; ++k) {
    std::fill(color.begin(), color.end(), 0);
    if (colorable(a, allowed, k, verts, color)) return k;
  }
}

long long choose2(long long c) { return c * (c - 1) / 2; }

int max_matching(const adjacency& a) {
  // Exact maximum matching by recursion on the lowest free vertex, memoized
  // on the free-vertex mask.
  if (a.n == 0) return 0;
  if (a.n > 26) throw capacity_error("max_matching: order too large for subset memo");
  std::vector<signed char> memo(std::size_t(1) << a.n, -1);
  std::uint64_t full = (a.n == 64) ? ~std::uint64_t(0) : (std::uint64_t(1) << a.n) - 1;
  auto rec = [&](auto&& self, std::uint64_t free) -> int {
    if (free == 0) return 0;
    signed char& slot = memo[free];
    if (slot >= 0) return slot;
    int v = std::countr_zero(free);
    std::uint64_t rest = free & (free - 1);
    int best = self(self, rest);  // leave v unmatched
    std::uint64_t nb = a.rows[v] & rest;
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      best = std::max(best, 1 + self(self, rest & ~(std::uint64_t(1) << u)));
    }
    slot = static_cast<signed char>(best);
    return best;
  };
  return rec(rec, full);
}

struct edge_adjacency {
  std::vector<std::vector<int>> touching;  // per edge, indices of adjacent edges
  int delta = 0;
};

edge_adjacency make_edge_adjacency(const labeled_graph& g, const adjacency& a) {
  edge_adjacency ea;
  ea.touching.resize(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
      const edge_t& e = g.edges[i];
      const edge_t& f = g.edges[j];
      if (e.first == f.first || e.first == f.second || e.second == f.first ||
          e.second == f.second) {
        ea.touching[i].push_back(static_cast<int>(j));
        ea.touching[j].push_back(static_cast<int>(i));
      }
    }
  for (int v = 0; v < a.n; ++v) ea.delta = std::max(ea.delta, degree(a, v));
  return ea;
}

bool edge_colorable(const edge_adjacency& ea, int k, std::vector<int>& color) {
  std::vector<int> order(ea.touching.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return ea.touching[x].size() > ea.touching[y].size();
  });
  auto rec = [&](auto&& self, std::size_t idx, int used) -> bool {
    if (idx == order.size()) return true;
    int e = order[idx];
    int limit = std::min(k, used + 1);
    for (int c = 1; c <= limit; ++c) {
      bool ok = true;
      for (int f : ea.touching[e])
        if (color[f] == c) { ok = false; break; }
      if (!ok) continue;
      color[e] = c;
      if (self(self, idx + 1, std::max(used, c))) return true;
      color[e] = 0;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace

bool verify_sum_labeling(const labeled_graph& g, bool positive_only) {
  validate_graph(g);
  if (positive_only)
    for (label_t v : g.labels)
      if (v < 1) return false;
  labeled_graph built = build_sum_graph(g.labels);
  return built.edges == g.edges;
}

bool verify_anti_sum_labeling(const labeled_graph& g) {
  return verify_sum_labeling(complement(g));
}

long long count_triangles_bf(const labeled_graph& g) {
  adjacency a = make_adjacency(g, 64, "count_triangles_bf");
  long long total = 0;
  for (int i = 0; i < a.n; ++i)
    for (int j = i + 1; j < a.n; ++j) {
      if (!(a.rows[i] >> j & 1)) continue;
      std::uint64_t above = j >= 63 ? 0 : ~std::uint64_t(0) << (j + 1);
      total += std::popcount(a.rows[i] & a.rows[j] & above);
    }
  return total;
}

long long count_c4_bf(const labeled_graph& g) {
  // Each C4 is counted once: sum over vertex pairs of C(codegree, 2) counts
  // every 4-cycle twice (once per diagonal pair).
  adjacency a = make_adjacency(g, 64, "count_c4_bf");
  long long twice = 0;
  for (int i = 0; i < a.n; ++i)
    for (int j = i + 1; j < a.n; ++j) {
      std::uint64_t common = a.rows[i] & a.rows[j];
      common &= ~(std::uint64_t(1) << i);
      common &= ~(std::uint64_t(1) << j);
      twice += choose2(std::popcount(common));
    }
  return twice / 2;
}

long long count_open_p3_bf(const labeled_graph& g) {
  adjacency a = make_adjacency(g, 64, "count_open_p3_bf");
  long long paths = 0;
  for (int v = 0; v < a.n; ++v) paths += choose2(degree(a, v));
  return paths - 3 * count_triangles_bf(g);
}

iso_certificate is_isomorphic(const labeled_graph& g, const labeled_graph& h) {
  std::size_t cap = effective_order_cap(12);
  if (g.order() > cap || h.order() > cap)
    throw capacity_error("is_isomorphic: order exceeds cap " + std::to_string(cap));
  iso_certificate cert;
  if (g.order() != h.order() || g.size() != h.size()) return cert;
  adjacency ga = make_adjacency(g, cap, "is_isomorphic");
  adjacency ha = make_adjacency(h, cap, "is_isomorphic");

  std::vector<int> gdeg(ga.n), hdeg(ha.n);
  for (int v = 0; v < ga.n; ++v) gdeg[v] = degree(ga, v);
  for (int v = 0; v < ha.n; ++v) hdeg[v] = degree(ha, v);
  {
    std::vector<int> gs = gdeg, hs = hdeg;
    std::sort(gs.begin(), gs.end());
    std::sort(hs.begin(), hs.end());
    if (gs != hs) return cert;
  }

  std::vector<int> map_gh(ga.n, -1);
  std::vector<bool> used(ha.n, false);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == ga.n) return true;
    for (int w = 0; w < ha.n; ++w) {
      if (used[w] || gdeg[v] != hdeg[w]) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u) {
        bool ge = ga.rows[v] >> u & 1;
        bool he = ha.rows[w] >> map_gh[u] & 1;
        if (ge != he) { ok = false; break; }
      }
      if (!ok) continue;
      map_gh[v] = w;
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
      map_gh[v] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return cert;
  cert.valid = true;
  for (int v = 0; v < ga.n; ++v) cert.mapping.push_back({ga.labels[v], ha.labels[map_gh[v]]});
  return cert;
}

std::optional<std::vector<label_t>> hamiltonian_cycle_bf(const labeled_graph& g) {
  adjacency a = make_adjacency(g, effective_order_cap(14), "hamiltonian_cycle_bf");
  if (a.n < 3) return std::nullopt;
  // Any cycle can start at vertex 0 (least label); visiting neighbors in
  // ascending index order makes the first completed cycle the
  // lexicographically least sequence.
  std::vector<int> path{0};
  std::vector<bool> visited(a.n, false);
  visited[0] = true;
  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(path.size()) == a.n)
      return (a.rows[path.back()] >> 0) & 1;
    for (int v = 1; v < a.n; ++v) {
      if (visited[v] || !(a.rows[path.back()] >> v & 1)) continue;
      visited[v] = true;
      path.push_back(v);
      if (self(self)) return true;
      path.pop_back();
      visited[v] = false;
    }
    return false;
  };
  if (!rec(rec)) return std::nullopt;
  std::vector<label_t> cycle;
  for (int v : path) cycle.push_back(a.labels[v]);
  return cycle;
}

exact_invariants exact_invariants_bf(const labeled_graph& g) {
  adjacency a = make_adjacency(g, effective_order_cap(16), "exact_invariants_bf");
  std::uint64_t all = (a.n == 64) ? ~std::uint64_t(0) : (std::uint64_t(1) << a.n) - 1;
  exact_invariants inv;
  inv.omega = a.n == 0 ? 0 : max_clique(a, all);
  inv.chi = chromatic_number(a, all);
  {
    edge_adjacency ea = make_edge_adjacency(g, a);
    if (g.size() == 0) {
      inv.chi_prime = 0;
    } else {
      std::vector<int> color(g.size(), 0);
      inv.chi_prime = edge_colorable(ea, ea.delta, color) ? ea.delta : ea.delta + 1;
    }
  }
  {
    // beta0 = clique number of the complement; alpha0 by the cover identity.
    adjacency comp = a;
    for (int v = 0; v < a.n; ++v)
      comp.rows[v] = all & ~a.rows[v] & ~(std::uint64_t(1) << v);
    inv.beta0 = a.n == 0 ? 0 : max_clique(comp, all);
    inv.alpha0 = a.n - inv.beta0;
  }
  inv.beta1 = max_matching(a);
  bool isolated = false;
  for (int v = 0; v < a.n; ++v)
    if (degree(a, v) == 0) isolated = true;
  if (!isolated && a.n > 0) inv.alpha1 = a.n - inv.beta1;
  return inv;
}

bool is_perfect_bf(const labeled_graph& g) {
  adjacency a = make_adjacency(g, effective_order_cap(10), "is_perfect_bf");
  std::uint64_t all = (a.n == 64) ? ~std::uint64_t(0) : (std::uint64_t(1) << a.n) - 1;
  for (std::uint64_t sub = 1; sub <= all; ++sub)
    if (max_clique(a, sub) != chromatic_number(a, sub)) return false;
  return true;
}

coloring_check is_proper_vertex_coloring(const labeled_graph& g,
                                         const std::map<label_t, int>& assignment) {
  validate_graph(g);
  for (label_t v : g.labels)
    if (!assignment.count(v))
      throw validation_error("no color assigned to vertex " + std::to_string(v));
  for (const auto& [v, c] : assignment) {
    (void)c;
    if (!g.has_label(v))
      throw validation_error("color assigned to non-vertex " + std::to_string(v));
  }
  coloring_check r;
  r.proper = true;
  for (const edge_t& e : g.edges)
    if (assignment.at(e.first) == assignment.at(e.second)) r.proper = false;
  std::vector<int> used;
  for (const auto& [v, c] : assignment) { (void)v; used.push_back(c); }
  std::sort(used.begin(), used.end());
  r.colors_used = static_cast<int>(std::unique(used.begin(), used.end()) - used.begin());
  return r;
}

coloring_check is_proper_edge_coloring(const labeled_graph& g,
                                       const std::map<edge_t, int>& assignment) {
  validate_graph(g);
  for (const edge_t& e : g.edges)
    if (!assignment.count(e))
      throw validation_error("no color assigned to edge (" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + ")");
  for (const auto& [e, c] : assignment) {
    (void)c;
    if (!g.has_edge(e.first, e.second))
      throw validation_error("color assigned to non-edge (" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + ")");
  }
  coloring_check r;
  r.proper = true;
  for (std::size_t i = 0; i < g.edges.size() && r.proper; ++i)
    for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
      const edge_t& e = g.edges[i];
      const edge_t& f = g.edges[j];
      bool touch = e.first == f.first || e.first == f.second || e.second == f.first ||
                   e.second == f.second;
      if (touch && assignment.at(e) == assignment.at(f)) { r.proper = false; break; }
    }
  std::vector<int> used;
  for (const auto& [e, c] : assignment) { (void)e; used.push_back(c); }
  std::sort(used.begin(), used.end());
  r.colors_used = static_cast<int>(std::unique(used.begin(), used.end()) - used.begin());
  return r;
}

}  // namespace sumgraph
