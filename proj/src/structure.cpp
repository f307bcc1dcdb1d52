#include "sumgraph/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "sumgraph/oracle.hpp"

namespace sumgraph {
namespace {

std::string ll_str(long long v) { return std::to_string(v); }

bool walk_is_cycle(const labeled_graph& g, const std::vector<label_t>& cyc) {
  if (cyc.size() != g.order() || cyc.size() < 3) return false;
  std::set<label_t> seen(cyc.begin(), cyc.end());
  if (seen.size() != cyc.size()) return false;
  for (label_t v : cyc) {
    if (!g.has_label(v)) return false;
  }
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
  }
  return true;
}

long long interval_edge_count(label_t lo, label_t hi) {
  return static_cast<long long>(interval_sum_graph(lo, hi).size());
}

// Closed-form size increase for a single label x > m added to [-m,m].
long long single_extension_delta(long long m, long long x) {
  if (x <= 2 * m - 1) {
    const long long k = x - m;  // 1 <= k <= m-1
    return 1 + (3 * (m - k + 1)) / 2;
  }
  if (x == 2 * m) return 2;
  return 1;  // only the edge through 0 appears
}

// Closed-form size increase for the symmetric pair {x, -x}, x > m.
long long symmetric_pair_delta(long long m, long long x) {
  if (x <= 2 * m - 1) {
    const long long k = x - m;
    return 3 + 2 * ((3 * (m - k + 1)) / 2);
  }
  if (x == 2 * m) return 5;
  return 3;
}

void brute_verify_maximal(long long order, const std::vector<family_spec>& out) {
  long long best = 0;
  for (long long r = 0; r + 1 < order; ++r) {
    best = std::max(best, interval_edge_count(-r, order - 1 - r));
  }
  best = std::max(best, interval_edge_count(1, order));  // no-zero interval
  for (const family_spec& spec : out) {
    const long long got = interval_edge_count(-spec.m, spec.n);
    if (got < best) {
      throw std::logic_error("maximal_isg: case table lost to an interval of order " +
                             ll_str(order));
    }
  }
  if (order % 2 == 1 && order >= 5) {
    // The order-N diagonal arises from [-m,m], m = (N-3)/2, by adding the
    // pair {m+1, -(m+1)}; that pair must attain the extension maximum.
    const long long m = (order - 3) / 2;
    const auto arg = extension_argmax(m);
    const std::pair<label_t, label_t> expect{-(m + 1), m + 1};
    if (std::find(arg.begin(), arg.end(), expect) == arg.end()) {
      throw std::logic_error(
          "maximal_isg: the symmetric extension pair is not a maximizer at order " +
          ll_str(order));
    }
  }
}

}  // namespace

labeled_graph remove_supplementary(long long n, long long j) {
  if (n < 2) throw validation_error("remove_supplementary: n must be at least 2");
  if (j < 1 || j > n / 2) {
    throw validation_error("remove_supplementary: j must lie in [1, n/2]");
  }
  const labeled_graph g = generate({family_kind::gn, n, 0});
  const label_t a = j;
  const label_t b = n + 1 - j;
  labeled_graph out;
  for (label_t v : g.labels) {
    if (v != a && v != b) out.labels.push_back(v);
  }
  for (const edge_t& e : g.edges) {
    if (e.first == a || e.first == b || e.second == a || e.second == b) continue;
    out.edges.push_back(e);
  }
  validate_graph(out);
  return out;
}

labeled_graph grow_gn(const labeled_graph& g) {
  validate_graph(g);
  const long long n = static_cast<long long>(g.order());
  if (n < 1) throw validation_error("grow_gn: the input graph is empty");
  const labeled_graph expect = generate({family_kind::gn, n, 0});
  if (g.labels != expect.labels || g.edges != expect.edges) {
    throw validation_error("grow_gn: input must be exactly the [1,n] family");
  }
  labeled_graph out;
  for (long long v = 1; v <= n + 2; ++v) out.labels.push_back(v);
  for (long long v = 2; v <= n + 1; ++v) out.edges.push_back(make_edge(1, v));
  for (const edge_t& e : g.edges) {
    out.edges.push_back(make_edge(e.first + 1, e.second + 1));
  }
  std::sort(out.edges.begin(), out.edges.end());
  validate_graph(out);
  return out;
}

std::vector<label_t> hamiltonian_gdelta(long long n) {
  if (n < 3) throw validation_error("hamiltonian_gdelta: n must be at least 3");
  std::vector<label_t> cyc{-1};
  label_t lo = 0;
  label_t hi = n - 2;
  bool take_hi = true;
  while (lo <= hi) {
    cyc.push_back(take_hi ? hi-- : lo++);
    take_hi = !take_hi;
  }
  const labeled_graph g = generate({family_kind::gmn, n - 2, 1});
  if (!walk_is_cycle(g, cyc)) {
    throw std::logic_error("hamiltonian_gdelta: zigzag failed the adjacency walk");
  }
  return cyc;
}

std::vector<label_t> hamiltonian_gmn(long long m, long long n) {
  if (m < 1 || n < 1) {
    throw validation_error("hamiltonian_gmn: m and n must be at least 1");
  }
  const labeled_graph g = generate({family_kind::gmn, n, m});
  const auto cyc = hamiltonian_cycle_bf(g);
  if (!cyc || !walk_is_cycle(g, *cyc)) {
    throw std::logic_error("hamiltonian_gmn: no cycle found in a family known to have one");
  }
  return *cyc;
}

verification_report check_complement_identities(long long n) {
  if (n < 1) throw validation_error("check_complement_identities: n must be positive");
  if (n > 12) {
    throw capacity_error("check_complement_identities: n capped at 12");
  }
  verification_report rep;
  const labeled_graph gn = generate({family_kind::gn, n, 0});
  const labeled_graph gnc = complement(gn);

  // (a) Reflect i -> n+1-i; the image of the family's edges must be the
  // complement minus the supplementary diagonal.
  std::set<edge_t> mapped;
  for (const edge_t& e : gn.edges) {
    mapped.insert(make_edge(n + 1 - e.first, n + 1 - e.second));
  }
  std::set<edge_t> comp_minus_diag;
  for (const edge_t& e : gnc.edges) {
    if (e.first + e.second != n + 1) comp_minus_diag.insert(e);
  }
  rep.add_claim("complement-reflection-n" + ll_str(n),
                "reflected edges equal complement minus diagonal",
                mapped == comp_minus_diag
                    ? "reflected edges equal complement minus diagonal"
                    : "edge sets differ",
                mapped == comp_minus_diag);

  // (b) The [0,n] family is isomorphic to the complement of [1,n+1].
  const labeled_graph g0n = generate({family_kind::g0n, n, 0});
  const labeled_graph next_comp = complement(generate({family_kind::gn, n + 1, 0}));
  bool iso_ok = false;
  if (g0n.order() <= effective_order_cap(12)) {
    iso_ok = is_isomorphic(g0n, next_comp).valid;
  } else {
    // Above the search cap the reflection j -> n+1-j is checked directly.
    std::set<edge_t> image;
    for (const edge_t& e : next_comp.edges) {
      image.insert(make_edge(n + 1 - e.first, n + 1 - e.second));
    }
    iso_ok = image == std::set<edge_t>(g0n.edges.begin(), g0n.edges.end());
  }
  rep.add_claim("zero-family-vs-complement-n" + ll_str(n), "isomorphic",
                iso_ok ? "isomorphic" : "not isomorphic", iso_ok);

  // (c) The family and its complement partition the complete graph's edges.
  std::set<edge_t> a(gn.edges.begin(), gn.edges.end());
  std::set<edge_t> b(gnc.edges.begin(), gnc.edges.end());
  bool disjoint = true;
  for (const edge_t& e : a) {
    if (b.count(e)) disjoint = false;
  }
  const long long total = static_cast<long long>(a.size() + b.size());
  const bool partition = disjoint && total == n * (n - 1) / 2;
  rep.add_claim("complete-partition-n" + ll_str(n),
                "family plus complement is the complete graph",
                partition ? "family plus complement is the complete graph"
                          : "edges missing or duplicated",
                partition);
  return rep;
}

extension_delta extension_edge_count(long long m, std::vector<label_t> added) {
  if (m < 2) throw validation_error("extension_edge_count: m must be at least 2");
  if (added.empty() || added.size() > 2) {
    throw validation_error("extension_edge_count: one or two added labels required");
  }
  std::sort(added.begin(), added.end());
  if (added.size() == 2 && added[0] == added[1]) {
    throw validation_error("extension_edge_count: added labels must be distinct");
  }
  for (label_t x : added) {
    if (-m <= x && x <= m) {
      throw validation_error("extension_edge_count: label " + ll_str(x) +
                             " already lies in the base interval");
    }
  }
  std::vector<label_t> labels;
  for (label_t v = -m; v <= m; ++v) labels.push_back(v);
  labels.insert(labels.end(), added.begin(), added.end());
  std::sort(labels.begin(), labels.end());
  extension_delta out;
  out.base_m = m;
  out.added = added;
  out.edge_count = static_cast<long long>(build_sum_graph(labels).size());

  const long long base = interval_edge_count(-m, m);
  if (added.size() == 1) {
    const long long x = std::abs(added[0]);  // one-sided case is mirror symmetric
    if (out.edge_count != base + single_extension_delta(m, x)) {
      throw std::logic_error("extension_edge_count: single-label closed form disagrees");
    }
  } else if (added[0] == -added[1]) {
    const long long x = added[1];
    if (out.edge_count != base + symmetric_pair_delta(m, x)) {
      throw std::logic_error("extension_edge_count: symmetric-pair closed form disagrees");
    }
  }
  return out;
}

std::vector<std::pair<label_t, label_t>> extension_argmax(long long m) {
  if (m < 1) throw validation_error("extension_argmax: m must be at least 1");
  std::vector<label_t> outside;
  for (label_t v = -(3 * m + 2); v <= 3 * m + 2; ++v) {
    if (v < -m || v > m) outside.push_back(v);
  }
  std::vector<label_t> base;
  for (label_t v = -m; v <= m; ++v) base.push_back(v);

  long long best = -1;
  std::vector<std::pair<label_t, label_t>> arg;
  for (std::size_t i = 0; i < outside.size(); ++i) {
    for (std::size_t j = i + 1; j < outside.size(); ++j) {
      std::vector<label_t> labels = base;
      labels.push_back(outside[i]);
      labels.push_back(outside[j]);
      std::sort(labels.begin(), labels.end());
      const long long count = static_cast<long long>(build_sum_graph(labels).size());
      if (count > best) {
        best = count;
        arg.clear();
      }
      if (count == best) arg.emplace_back(outside[i], outside[j]);
    }
  }
  std::sort(arg.begin(), arg.end());
  return arg;
}

std::vector<family_spec> maximal_isg(long long order) {
  if (order < 3) throw validation_error("maximal_isg: order must be at least 3");
  std::vector<family_spec> out;
  if (order % 2 == 0) {
    const long long m = order / 2;
    out.push_back({family_kind::gmn, m, m - 1});
  } else if (order % 4 == 1) {
    const long long t = (order - 1) / 4;
    out.push_back({family_kind::gmn, 2 * t, 2 * t});
    out.push_back({family_kind::gmn, 2 * t + 1, 2 * t - 1});
  } else {
    const long long t = (order - 3) / 4;
    out.push_back({family_kind::gmn, 2 * t + 1, 2 * t + 1});
  }
  if (order <= 9) brute_verify_maximal(order, out);
  return out;
}

labeled_graph h_graph(long long m, long long n, std::vector<long long> X,
                      std::vector<long long> Y) {
  if (m < 1 || n < 1) throw validation_error("h_graph: m and n must be at least 1");
  for (long long x : X) {
    if (x < 1 || x > m) {
      throw validation_error("h_graph: X entries must lie in [1,m]");
    }
  }
  for (long long y : Y) {
    if (y < 1 || y > n) {
      throw validation_error("h_graph: Y entries must lie in [1,n]");
    }
  }
  // Removing label s deletes its vertex and exactly the edges summing to s,
  // so the result is the sum graph of the surviving labels.
  std::set<label_t> removed;
  for (long long x : X) removed.insert(-x);
  for (long long y : Y) removed.insert(y);
  std::vector<label_t> labels;
  for (label_t v = -m; v <= n; ++v) {
    if (!removed.count(v)) labels.push_back(v);
  }
  return build_sum_graph(labels);
}

}  // namespace sumgraph
