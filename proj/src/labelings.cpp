#include "sumgraph/labelings.hpp"

#include <algorithm>
#include <cstdlib>

#include "sumgraph/oracle.hpp"

namespace sumgraph {
namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw validation_error(msg);
}

label_t checked_label(long long v) {
  if (v > (1LL << 60) || v < -(1LL << 60))
    throw capacity_error("label magnitude exceeds the supported range");
  return v;
}

label_t checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw capacity_error("label magnitude exceeds the supported range");
  return checked_label(r);
}

// Build the sum graph over the labels and demand that it is exactly the
// intended edge set; an accidental sum is a construction failure, not a
// silently different graph.
labeled_graph finish(std::vector<label_t> labels, std::vector<edge_t> intended,
                     const char* what) {
  std::sort(labels.begin(), labels.end());
  try {
    validate_label_set(labels);
  } catch (const validation_error&) {
    throw construction_error(std::string(what) + ": label collision");
  }
  for (edge_t& e : intended) e = make_edge(e.first, e.second);
  std::sort(intended.begin(), intended.end());
  labeled_graph g = build_sum_graph(labels);
  if (g.edges != intended)
    throw construction_error(std::string(what) +
                             ": labels induce a different edge set than intended");
  return g;
}

void validate_shape(const tree_shape& shape, tree_shape::kind expect) {
  require(shape.variant == expect, "shape variant does not match this labeler");
  require(!shape.star_sizes.empty(), "shape needs at least one star");
  long long prev = 1;
  for (long long s : shape.star_sizes) {
    require(s >= 1, "star sizes must be positive");
    require(s >= prev, "star sizes must be ascending");
    prev = s;
  }
}

// Matching of symmetric pairs (4^k, -4^k) plus the 0 apex: pair sums hit 0
// and no cross sum lands on a power of four.
labeled_graph symmetric_pair_blades(long long t, const char* what) {
  std::vector<label_t> labels{0};
  std::vector<edge_t> intended;
  label_t c = 1;
  for (long long k = 0; k < t; ++k) {
    labels.push_back(c);
    labels.push_back(-c);
    intended.push_back(make_edge(0, c));
    intended.push_back(make_edge(0, -c));
    intended.push_back(make_edge(c, -c));
    c = checked_mul(c, 4);
  }
  return finish(labels, intended, what);
}

}  // namespace

labeled_graph label_fan(long long n) {
  require(n >= 5, "fan labeling is defined for paths on 5 or more vertices");
  std::vector<label_t> path{1, -1};
  for (long long i = 2; i < n; ++i)
    path.push_back(checked_label(path[i - 2] - path[i - 1]));
  std::vector<label_t> labels = path;
  labels.push_back(0);
  std::vector<edge_t> intended;
  for (label_t v : path) intended.push_back(make_edge(0, v));
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    intended.push_back(make_edge(path[i], path[i + 1]));
  return finish(labels, intended, "fan");
}

labeled_graph label_windmill(long long m) {
  require(m >= 1, "windmill needs at least one blade");
  if (m > 55) throw capacity_error("windmill labels double per blade; m too large");
  std::vector<std::pair<label_t, label_t>> pairs;
  if (m == 1) {
    pairs = {{1, -1}};
  } else if (m == 2) {
    pairs = {{1, -1}, {4, -4}};
  } else {
    pairs = {{1, 3}, {4, 8}, {-11, 12}};
    for (long long i = 3; i < m; ++i) {
      const label_t v = checked_mul(pairs.back().second, 2);
      const label_t u = checked_label(pairs.back().first - v);
      pairs.push_back({u, v});
    }
  }
  std::vector<label_t> labels{0};
  std::vector<edge_t> intended;
  for (const auto& [u, v] : pairs) {
    labels.push_back(u);
    labels.push_back(v);
    intended.push_back(make_edge(0, u));
    intended.push_back(make_edge(0, v));
    intended.push_back(make_edge(u, v));
  }
  return finish(labels, intended, "windmill");
}

labeled_graph label_union_stars_apex(const tree_shape& shape) {
  validate_shape(shape, tree_shape::kind::union_stars_apex);
  const std::vector<long long>& sz = shape.star_sizes;
  const long long t = static_cast<long long>(sz.size());
  if (t == 1) {
    require(sz[0] >= 2, "a single star needs at least two leaves here");
    if (sz[0] == 2) {
      // K_{1,2} plus apex: center 1, leaves -1 and -2, apex 0.
      std::vector<edge_t> intended{make_edge(0, 1), make_edge(0, -1),
                                   make_edge(0, -2), make_edge(1, -1),
                                   make_edge(1, -2)};
      return finish({0, 1, -1, -2}, intended, "star plus apex");
    }
    // Two full-degree vertices force the K_2 * G shape, whose non-dominating
    // part is edgeless of order <= 2; a star with 3+ leaves cannot be it.
    throw construction_error(
        "a star with 3 or more leaves joined to an apex is not an integral sum graph");
  }
  if (std::all_of(sz.begin(), sz.end(), [](long long s) { return s == 1; }))
    return symmetric_pair_blades(t, "stars plus apex");

  std::vector<long long> sizes(sz.begin(), sz.end());
  // The recurrence breaks only for two stars with a one-leaf star first (the
  // final center lands on the negation of the first); largest-first fixes it.
  if (t == 2 && sizes[0] == 1) std::swap(sizes[0], sizes[1]);

  std::vector<label_t> centers;
  std::vector<std::vector<label_t>> leaves(sizes.size());
  label_t base = 1;  // label of the current star's first leaf
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const long long ni = sizes[i];
    if (i + 1 < sizes.size()) {
      centers.push_back(checked_mul(2, base));
      for (long long j = 1; j <= ni; ++j)
        leaves[i].push_back(checked_mul(2 * j - 1, base));
      base = checked_mul(2 * ni + 1, base);
    } else {
      const label_t vt = checked_label(1 - base);
      centers.push_back(vt);
      for (long long j = 0; j < ni; ++j)
        leaves[i].push_back(checked_label(base - checked_mul(j, vt)));
    }
  }
  std::vector<label_t> labels{0};
  std::vector<edge_t> intended;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    labels.push_back(centers[i]);
    intended.push_back(make_edge(0, centers[i]));
    for (label_t u : leaves[i]) {
      labels.push_back(u);
      intended.push_back(make_edge(0, u));
      intended.push_back(make_edge(centers[i], u));
    }
  }
  return finish(labels, intended, "stars plus apex");
}

labeled_graph label_banana_tree(const tree_shape& shape, label_t x, label_t y) {
  validate_shape(shape, tree_shape::kind::banana);
  require(x > 0 && y > x, "banana labeling needs 0 < x < y");
  const std::vector<long long>& sz = shape.star_sizes;
  const long long t = static_cast<long long>(sz.size());

  if (t == 1) {
    // Root, one leaf attached to it, center, remaining leaves.
    const label_t x2 = checked_mul(2, x), x3 = checked_mul(3, x),
                  x4 = checked_mul(4, x), x5 = checked_mul(5, x);
    switch (sz[0]) {
      case 1:  // path w-u-v
        return finish({x, 0, y}, {make_edge(x, 0), make_edge(0, y)}, "banana");
      case 2:  // path w-u-v-u'
        return finish({x, -x, -x2, -x3},
                      {make_edge(x, -x3), make_edge(x, -x2), make_edge(-x2, -x)},
                      "banana");
      case 3:  // center x, legs -3x (to -2x), -4x, -5x; root is -2x
        return finish({x, -x2, -x3, -x4, -x5},
                      {make_edge(x, -x3), make_edge(x, -x4), make_edge(x, -x5),
                       make_edge(-x3, -x2)},
                      "banana");
      default:
        throw construction_error(
            "no labeling recipe for a single star with 4 or more leaves and a root");
    }
  }

  if (std::all_of(sz.begin(), sz.end(), [](long long s) { return s == 1; })) {
    // Spider with t legs of length two: root x, leg pairs (c, x-c) and
    // (-c, x+c) with c growing geometrically; an odd count appends
    // (-c-x, 2c+2x), whose sums -c and x+c are labels of the final pair.
    std::vector<std::pair<label_t, label_t>> legs;  // (next to root, pendant)
    label_t c = checked_label(x + y);
    label_t last_c = c;
    long long placed = 0;
    while (placed + 2 <= t) {
      legs.push_back({c, checked_label(x - c)});
      legs.push_back({-c, checked_label(x + c)});
      last_c = c;
      c = checked_mul(c, 4);
      placed += 2;
    }
    if (placed < t)
      legs.push_back({checked_label(-last_c - x),
                      checked_mul(2, checked_label(last_c + x))});
    std::vector<label_t> labels{x};
    std::vector<edge_t> intended;
    for (const auto& [u, v] : legs) {
      labels.push_back(u);
      labels.push_back(v);
      intended.push_back(make_edge(x, u));
      intended.push_back(make_edge(u, v));
    }
    return finish(labels, intended, "banana");
  }

  // Main recurrence; ascending sizes that are not all one put a star with at
  // least two leaves last, which the final-star rules need.
  std::vector<label_t> centers(sz.size());
  std::vector<std::vector<label_t>> leaves(sz.size());
  leaves[0].push_back(y);
  centers[0] = checked_label(x + y);
  for (long long j = 1; j < sz[0]; ++j)
    leaves[0].push_back(checked_label(y + checked_mul(j, centers[0])));
  for (std::size_t i = 1; i + 1 < sz.size(); ++i) {
    const label_t u1 = checked_label(centers[i - 1] + leaves[i - 1].back());
    centers[i] = checked_label(x + u1);
    leaves[i].push_back(u1);
    for (long long j = 1; j < sz[i]; ++j)
      leaves[i].push_back(checked_label(u1 + checked_mul(j, centers[i])));
  }
  {
    const std::size_t i = sz.size() - 1;
    const label_t u1 = checked_label(centers[i - 1] + leaves[i - 1].back());
    centers[i] = checked_label(y - u1);
    leaves[i].push_back(u1);
    leaves[i].push_back(checked_label(x + u1));
    for (long long j = 2; j < sz[i]; ++j)
      leaves[i].push_back(checked_label(leaves[i].back() - centers[i]));
  }
  std::vector<label_t> labels{x};
  std::vector<edge_t> intended;
  for (std::size_t i = 0; i < sz.size(); ++i) {
    labels.push_back(centers[i]);
    intended.push_back(make_edge(x, leaves[i][0]));
    for (label_t u : leaves[i]) {
      labels.push_back(u);
      intended.push_back(make_edge(centers[i], u));
    }
  }
  return finish(labels, intended, "banana");
}

labeled_graph label_triangular_book_bookmark(long long n, long long m) {
  require(n >= 1, "book needs at least one page");
  require(m >= 1, "scale parameter must be positive");
  const label_t spine = checked_mul(2, m);
  const label_t mark = checked_label(checked_mul(spine, n + 1) + 1);
  std::vector<label_t> labels{0, spine, mark};
  std::vector<edge_t> intended{make_edge(0, spine), make_edge(0, mark)};
  for (long long i = 1; i <= n; ++i) {
    const label_t page = checked_label(checked_mul(spine, i) + 1);
    labels.push_back(page);
    intended.push_back(make_edge(0, page));
    intended.push_back(make_edge(spine, page));
  }
  return finish(labels, intended, "triangular book with bookmark");
}

labeled_graph label_fan_handle(long long n, long long m) {
  require(n >= 3, "fan with handle needs a path on at least 3 vertices");
  require(m >= 2, "offset below 2 repeats the label 1");
  // Fibonacci with p1 = p2 = 1.
  std::vector<label_t> fib{0, 1, 1};
  for (long long i = 3; i <= m + n; ++i)
    fib.push_back(checked_label(fib[i - 1] + fib[i - 2]));
  std::vector<label_t> labels{0};
  std::vector<edge_t> intended;
  for (long long i = m; i <= m + n; ++i) {
    labels.push_back(fib[i]);
    intended.push_back(make_edge(0, fib[i]));
  }
  for (long long i = m; i + 1 <= m + n - 1; ++i)
    intended.push_back(make_edge(fib[i], fib[i + 1]));
  return finish(labels, intended, "fan with handle");
}

labeled_graph amalgamate(const std::vector<labeled_graph>& parts) {
  require(!parts.empty(), "amalgamation needs at least one part");
  for (const labeled_graph& part : parts) {
    validate_graph(part);
    if (!verify_sum_labeling(part))
      throw validation_error("part edges do not match the edges its labels induce");
    require(part.has_label(0), "every part needs a vertex labeled 0");
    std::size_t deg0 = 0;
    for (const edge_t& e : part.edges)
      if (e.first == 0 || e.second == 0) ++deg0;
    require(deg0 + 1 == part.order(), "the 0 vertex of every part must be dominating");
  }
  std::vector<label_t> labels{0};
  std::vector<edge_t> intended;
  label_t scale = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    label_t widest = 0;
    for (label_t v : parts[i].labels) {
      const label_t h = checked_mul(v, scale);
      widest = std::max(widest, h < 0 ? -h : h);
      if (v != 0) labels.push_back(h);
    }
    for (const edge_t& e : parts[i].edges)
      intended.push_back(make_edge(checked_mul(e.first, scale),
                                   checked_mul(e.second, scale)));
    // Next part is rescaled past twice the widest label placed so far.
    scale = checked_label(2 * widest + 1);
  }
  return finish(labels, intended, "amalgamation");
}

apex_join_result apex_join(const labeled_graph& g) {
  validate_graph(g);
  apex_join_result r;
  if (!verify_sum_labeling(g))
    r.violations.push_back("input edges differ from the edges its labels induce");
  if (g.order() >= 1) {
    std::vector<std::size_t> deg(g.order(), 0);
    for (const edge_t& e : g.edges) {
      ++deg[g.index_of(e.first)];
      ++deg[g.index_of(e.second)];
    }
    if (*std::max_element(deg.begin(), deg.end()) + 1 >= g.order())
      r.violations.push_back("a vertex of full degree already exists");
  }
  for (label_t v : g.labels)
    if (v > 0 && g.has_label(-v)) {
      r.violations.push_back("labels x and -x are both present");
      break;
    }
  std::vector<label_t> labels = g.labels;
  if (g.has_label(0))
    r.violations.push_back("0 is already a label");
  else
    labels.push_back(0);
  std::sort(labels.begin(), labels.end());
  r.graph = build_sum_graph(labels);
  return r;
}

}  // namespace sumgraph
