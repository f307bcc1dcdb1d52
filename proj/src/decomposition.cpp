#include "sumgraph/decomposition.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "sumgraph/formulas.hpp"
#include "sumgraph/oracle.hpp"

namespace sumgraph {
namespace {

labeled_graph complete_host(long long n) {
  labeled_graph g;
  for (long long v = 0; v < n; ++v) g.labels.push_back(v);
  for (long long i = 0; i < n; ++i) {
    for (long long j = i + 1; j < n; ++j) g.edges.push_back(make_edge(i, j));
  }
  return g;
}

labeled_graph part_from_edges(std::vector<edge_t> edges) {
  std::set<label_t> ls;
  for (const edge_t& e : edges) {
    ls.insert(e.first);
    ls.insert(e.second);
  }
  labeled_graph g;
  g.labels.assign(ls.begin(), ls.end());
  std::sort(edges.begin(), edges.end());
  g.edges = std::move(edges);
  validate_graph(g);
  return g;
}

// Spine, the pages in [page_lo, page_hi], and an optional bookmark pendant
// at the lesser spine vertex.
std::vector<edge_t> book_edges(label_t sa, label_t sb, label_t page_lo,
                               label_t page_hi,
                               std::optional<label_t> bookmark) {
  std::vector<edge_t> out;
  out.push_back(make_edge(sa, sb));
  for (label_t p = page_lo; p <= page_hi; ++p) {
    out.push_back(make_edge(sa, p));
    out.push_back(make_edge(sb, p));
  }
  if (bookmark) out.push_back(make_edge(sa, *bookmark));
  return out;
}

bool part_connected(const labeled_graph& g) {
  if (g.order() == 0) return false;
  std::set<label_t> seen;
  std::queue<label_t> q;
  q.push(g.labels.front());
  seen.insert(g.labels.front());
  while (!q.empty()) {
    const label_t v = q.front();
    q.pop();
    for (const edge_t& e : g.edges) {
      label_t other;
      if (e.first == v) {
        other = e.second;
      } else if (e.second == v) {
        other = e.first;
      } else {
        continue;
      }
      if (seen.insert(other).second) q.push(other);
    }
  }
  return seen.size() == g.order();
}

}  // namespace

decomposition cmsd_kn_books(long long n) {
  if (n < 3) throw validation_error("cmsd_kn_books: n must be at least 3");
  decomposition dec;
  dec.host = complete_host(n);
  if (n % 2 == 0) {
    dec.scheme = {1, 4, "triangular book", true};
    for (long long j = 1; j <= n / 2; ++j) {
      dec.parts.push_back(part_from_edges(
          book_edges(2 * j - 2, 2 * j - 1, 0, 2 * j - 3, std::nullopt)));
    }
  } else {
    dec.scheme = {3, 4, "triangular book", true};
    for (long long j = 1; j <= (n - 1) / 2; ++j) {
      dec.parts.push_back(part_from_edges(
          book_edges(2 * j - 1, 2 * j, 0, 2 * j - 2, std::nullopt)));
    }
  }
  return dec;
}

decomposition cmsd_kn_stars(long long n) {
  if (n < 3) throw validation_error("cmsd_kn_stars: n must be at least 3");
  decomposition dec;
  dec.host = complete_host(n);
  dec.scheme = {1, 1, "star", true};
  for (long long j = 1; j < n; ++j) {
    std::vector<edge_t> edges;
    for (long long i = 0; i < j; ++i) edges.push_back(make_edge(i, j));
    dec.parts.push_back(part_from_edges(std::move(edges)));
  }
  return dec;
}

std::vector<decomposition> cmsd_g0n_books(long long n) {
  if (n < 4) throw validation_error("cmsd_g0n_books: n must be at least 4");
  const labeled_graph host = generate({family_kind::g0n, n, 0});
  std::vector<decomposition> out;
  if (n % 2 == 0) {
    const long long m = n / 2;
    decomposition d22{host, {}, {2, 2, "triangular book with bookmark", true}};
    for (long long j = 0; j <= m - 1; ++j) {
      d22.parts.push_back(
          part_from_edges(book_edges(j, 2 * m - j - 1, 0, j - 1, 2 * m - j)));
    }
    out.push_back(std::move(d22));
  }
  if (n % 4 == 0) {
    const long long t = n / 4;
    decomposition d8{host, {}, {6, 8, "triangular book with bookmark", true}};
    for (long long j = t - 1; j >= 0; --j) {
      d8.parts.push_back(part_from_edges(book_edges(
          2 * j, 2 * j + 1, 2 * j + 2, 4 * t - 2 * j - 1, 4 * t - 2 * j)));
    }
    out.push_back(std::move(d8));
  } else if (n % 4 == 2) {
    const long long t = (n - 2) / 4;
    decomposition d8{host, {}, {2, 8, "triangular book with bookmark", true}};
    d8.parts.push_back(
        part_from_edges(book_edges(2 * t, 2 * t + 1, 1, 0, 2 * t + 2)));
    for (long long j = t - 1; j >= 0; --j) {
      d8.parts.push_back(part_from_edges(book_edges(
          2 * j, 2 * j + 1, 2 * j + 2, 4 * t - 2 * j + 1, 4 * t - 2 * j + 2)));
    }
    out.push_back(std::move(d8));
  } else if (n % 4 == 3) {
    const long long t = (n - 3) / 4;
    decomposition d8{host, {}, {4, 8, "triangular book with bookmark", true}};
    for (long long j = t; j >= 0; --j) {
      d8.parts.push_back(part_from_edges(book_edges(
          2 * j, 2 * j + 1, 2 * j + 2, 4 * t - 2 * j + 2, 4 * t - 2 * j + 3)));
    }
    out.push_back(std::move(d8));
  } else {
    // n = 4t+1: sizes 1, 8, 16, ..., 8t; the bare spine breaks the
    // progression, so the scheme is tagged non-arithmetic.
    const long long t = (n - 1) / 4;
    decomposition dna{host, {}, {0, 0, "triangular book with bookmark", false}};
    dna.parts.push_back(part_from_edges({make_edge(2 * t, 2 * t + 1)}));
    for (long long k = t - 1; k >= 0; --k) {
      dna.parts.push_back(part_from_edges(book_edges(
          2 * k, 2 * k + 1, 2 * k + 2, 4 * t - 2 * k, 4 * t - 2 * k + 1)));
    }
    out.push_back(std::move(dna));
  }
  return out;
}

decomposition cmsd_g0n_fans(long long n) {
  if (n < 4) throw validation_error("cmsd_g0n_fans: n must be at least 4");
  decomposition dec;
  dec.host = generate({family_kind::g0n, n, 0});
  switch (n % 4) {
    case 0:
      dec.scheme = {6, 8, "fan with handle", true};
      break;
    case 1:
      dec.scheme = {0, 0, "fan with handle", false};
      break;
    case 2:
      dec.scheme = {2, 8, "fan with handle", true};
      break;
    default:
      dec.scheme = {4, 8, "fan with handle", true};
      break;
  }
  std::vector<labeled_graph> stages;
  label_t a = 0;
  label_t b = n;
  while (b - a > 0) {
    const label_t span = b - a;
    std::vector<edge_t> edges;
    if (span == 1) {
      edges.push_back(make_edge(a, b));
    } else if (span == 2) {
      edges.push_back(make_edge(a, a + 1));
      edges.push_back(make_edge(a, a + 2));
    } else {
      for (label_t i = a + 1; i <= b - 1; ++i) edges.push_back(make_edge(a, i));
      edges.push_back(make_edge(a, b));  // handle
      // Path through the blades: top, bottom, next top, ...; consecutive
      // sums alternate between a+b and a+b-1, both still present.
      std::vector<label_t> seq;
      label_t lo = a + 1;
      label_t hi = b - 1;
      bool take_hi = true;
      while (lo <= hi) {
        seq.push_back(take_hi ? hi-- : lo++);
        take_hi = !take_hi;
      }
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        edges.push_back(make_edge(seq[i], seq[i + 1]));
      }
    }
    stages.push_back(part_from_edges(std::move(edges)));
    if (span <= 2) break;
    a += 1;
    b -= 3;
  }
  dec.parts.assign(stages.rbegin(), stages.rend());
  return dec;
}

feasibility_result feasibility(decomposition_target target, part_shape shape,
                               long long n) {
  if (n < 3) throw validation_error("feasibility: n must be at least 3");
  if (target == decomposition_target::zero_family && n % 4 == 1 &&
      shape != part_shape::stars) {
    const long long total = edge_count({family_kind::g0n, n, 0});
    return {false, "edge total " + std::to_string(total) +
                       " is odd; every book-with-bookmark or fan part has even "
                       "size"};
  }
  if (target == decomposition_target::complete && shape == part_shape::fans) {
    const long long total = n * (n - 1) / 2;
    if (total % 2 == 1) {
      return {false, "edge total " + std::to_string(total) +
                         " is odd; every fan part has even size"};
    }
    return {true, "edge total " + std::to_string(total) +
                      " is even; no parity obstruction"};
  }
  return {true, "no parity obstruction"};
}

namespace {

struct fan_search {
  long long n = 0;
  std::vector<long long> sizes;  // ascending part sizes, all even
  std::vector<std::vector<bool>> free_edge;
  std::vector<std::vector<edge_t>> placed;

  bool take(const std::vector<edge_t>& edges) {
    for (const edge_t& e : edges) {
      if (!free_edge[e.first][e.second]) return false;
    }
    for (const edge_t& e : edges) free_edge[e.first][e.second] = false;
    return true;
  }

  void release(const std::vector<edge_t>& edges) {
    for (const edge_t& e : edges) free_edge[e.first][e.second] = true;
  }

  bool extend_path(std::size_t depth, long long apex, long long blades,
                   std::vector<long long>& path, std::vector<bool>& in_path) {
    if (static_cast<long long>(path.size()) == blades) {
      if (blades > 1 && path.front() > path.back()) return false;
      for (long long h = 0; h < n; ++h) {
        if (h == apex || in_path[h]) continue;
        // A one-blade fan is symmetric in its blade and handle.
        if (blades == 1 && h < path.front()) continue;
        std::vector<edge_t> edges;
        for (long long p : path) edges.push_back(make_edge(apex, p));
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
          edges.push_back(make_edge(path[i], path[i + 1]));
        }
        edges.push_back(make_edge(apex, h));
        if (!take(edges)) continue;
        placed.push_back(edges);
        if (place_part(depth + 1)) return true;
        placed.pop_back();
        release(edges);
      }
      return false;
    }
    for (long long v = 0; v < n; ++v) {
      if (v == apex || in_path[v]) continue;
      if (!path.empty() && !free_edge[std::min(path.back(), v)]
                                     [std::max(path.back(), v)]) {
        continue;
      }
      if (!free_edge[std::min(apex, v)][std::max(apex, v)]) continue;
      path.push_back(v);
      in_path[v] = true;
      if (extend_path(depth, apex, blades, path, in_path)) return true;
      in_path[v] = false;
      path.pop_back();
    }
    return false;
  }

  bool place_part(std::size_t depth) {
    if (depth == sizes.size()) return true;
    const long long blades = sizes[depth] / 2;  // a fan of size 2k has k blades
    for (long long apex = 0; apex < n; ++apex) {
      std::vector<long long> path;
      std::vector<bool> in_path(n, false);
      if (extend_path(depth, apex, blades, path, in_path)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<decomposition> search_fan_cmsd(long long n, long long a,
                                             long long d) {
  if (n < 3) throw validation_error("search_fan_cmsd: n must be at least 3");
  if (static_cast<std::size_t>(n) > effective_order_cap(9)) {
    throw capacity_error("search_fan_cmsd: host order capped at 9");
  }
  if (a < 1 || d < 0) {
    throw validation_error("search_fan_cmsd: sizes must be positive and "
                           "nondecreasing");
  }
  const long long total = n * (n - 1) / 2;
  std::vector<long long> sizes;
  long long sum = 0;
  for (long long s = a; sum < total; s += d) {
    sizes.push_back(s);
    sum += s;
  }
  if (sum != total) return std::nullopt;
  for (long long s : sizes) {
    if (s % 2 != 0) return std::nullopt;  // fans have an even number of edges
  }

  fan_search search;
  search.n = n;
  search.sizes = sizes;
  search.free_edge.assign(n, std::vector<bool>(n, false));
  for (long long i = 0; i < n; ++i) {
    for (long long j = i + 1; j < n; ++j) search.free_edge[i][j] = true;
  }
  if (!search.place_part(0)) return std::nullopt;

  decomposition dec;
  dec.host = complete_host(n);
  dec.scheme = {a, d, "fan with handle", true};
  for (const auto& edges : search.placed) {
    dec.parts.push_back(part_from_edges(edges));
  }
  return dec;
}

verification_report validate(const decomposition& dec) {
  verification_report rep;

  std::map<edge_t, long long> multiplicity;
  for (const labeled_graph& part : dec.parts) {
    for (const edge_t& e : part.edges) ++multiplicity[e];
  }
  bool disjoint = true;
  for (const auto& [e, count] : multiplicity) {
    if (count > 1) disjoint = false;
  }
  rep.add_claim("parts-edge-disjoint", "no edge appears in two parts",
                disjoint ? "no edge appears in two parts"
                         : "a shared edge exists",
                disjoint);

  const std::set<edge_t> host_edges(dec.host.edges.begin(),
                                    dec.host.edges.end());
  bool cover = multiplicity.size() == host_edges.size();
  for (const auto& [e, count] : multiplicity) {
    if (!host_edges.count(e)) cover = false;
  }
  cover = cover && disjoint;
  rep.add_claim("parts-cover-host", "part edges tile the host exactly",
                cover ? "part edges tile the host exactly"
                      : "covered edge set differs from the host",
                cover);

  bool no_isolated = true;
  for (const labeled_graph& part : dec.parts) {
    for (label_t v : part.labels) {
      bool touched = false;
      for (const edge_t& e : part.edges) {
        if (e.first == v || e.second == v) touched = true;
      }
      if (!touched) no_isolated = false;
    }
    if (part.edges.empty()) no_isolated = false;
  }
  rep.add_true("no-isolated-part-vertices", no_isolated);

  bool connected = true;
  for (const labeled_graph& part : dec.parts) {
    if (!part_connected(part)) connected = false;
  }
  rep.add_true("parts-connected", connected);

  if (dec.scheme.arithmetic) {
    bool progression = true;
    for (std::size_t i = 0; i < dec.parts.size(); ++i) {
      const long long want = dec.scheme.a + static_cast<long long>(i) * dec.scheme.d;
      if (static_cast<long long>(dec.parts[i].size()) != want) progression = false;
    }
    rep.add_true("sizes-follow-declared-progression", progression);
  }

  bool nested = true;
  for (std::size_t i = 0; i + 1 < dec.parts.size(); ++i) {
    if (dec.parts[i].size() > dec.parts[i + 1].size() ||
        dec.parts[i].order() > dec.parts[i + 1].order()) {
      nested = false;
    }
  }
  rep.add_true("parts-structurally-nested", nested);
  return rep;
}

}  // namespace sumgraph
