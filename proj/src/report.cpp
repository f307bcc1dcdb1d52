#include "sumgraph/report.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <string>

#include "sumgraph/coloring.hpp"
#include "sumgraph/core.hpp"
#include "sumgraph/decomposition.hpp"
#include "sumgraph/formulas.hpp"
#include "sumgraph/labelings.hpp"
#include "sumgraph/oracle.hpp"
#include "sumgraph/structure.hpp"

namespace sumgraph {

void verification_report::add_claim(const std::string& claim_id,
                                    const std::string& expected,
                                    const std::string& actual, bool pass) {
  entries.push_back({claim_id, expected, actual, pass});
}

void verification_report::add_equal(const std::string& claim_id,
                                    long long expected, long long actual) {
  add_claim(claim_id, std::to_string(expected), std::to_string(actual),
            expected == actual);
}

void verification_report::add_true(const std::string& claim_id, bool ok) {
  add_claim(claim_id, "true", ok ? "true" : "false", ok);
}

long long verification_report::passed() const {
  long long count = 0;
  for (const report_entry& e : entries) {
    if (e.pass) ++count;
  }
  return count;
}

long long verification_report::failed() const {
  return static_cast<long long>(entries.size()) - passed();
}

bool verification_report::all_pass() const { return failed() == 0; }

namespace {

std::string ll_str(long long v) { return std::to_string(v); }

std::string fam_tag(const family_spec& f) {
  switch (f.kind) {
    case family_kind::gn:
      return "gn-" + ll_str(f.n);
    case family_kind::g0n:
      return "g0n-" + ll_str(f.n);
    case family_kind::gmn:
      return "gmn-" + ll_str(f.m) + "-" + ll_str(f.n);
    case family_kind::gn_complement:
      return "gnc-" + ll_str(f.n);
    case family_kind::g0n_complement:
      return "g0nc-" + ll_str(f.n);
    case family_kind::gmn_complement:
      return "gmnc-" + ll_str(f.m) + "-" + ll_str(f.n);
  }
  return "unknown";
}

long long max_degree(const labeled_graph& g) {
  long long best = 0;
  for (label_t v : g.labels) {
    long long deg = 0;
    for (const edge_t& e : g.edges) {
      if (e.first == v || e.second == v) ++deg;
    }
    best = std::max(best, deg);
  }
  return best;
}

// The balanced [-m,n] pair used for one entry per order.
family_spec balanced_gmn(long long order) {
  const long long m = (order - 1) / 2;
  return {family_kind::gmn, order - 1 - m, m};
}

void check_degrees(verification_report& rep, const family_spec& fam) {
  const labeled_graph g = generate(fam);
  bool all_ok = true;
  for (label_t v : g.labels) {
    long long actual = 0;
    for (const edge_t& e : g.edges) {
      if (e.first == v || e.second == v) ++actual;
    }
    if (degree(fam, v) != actual) all_ok = false;
  }
  rep.add_true("degrees-" + fam_tag(fam), all_ok);
}

void check_counts(verification_report& rep, const family_spec& fam,
                  bool with_c4) {
  const labeled_graph g = generate(fam);
  rep.add_equal("edge-count-" + fam_tag(fam), edge_count(fam),
                static_cast<long long>(g.size()));
  rep.add_equal("c3-" + fam_tag(fam), triangle_count(fam),
                count_triangles_bf(g));
  if (with_c4) {
    rep.add_equal("c4-" + fam_tag(fam), c4_count(fam), count_c4_bf(g));
  }
}

void check_invariants(verification_report& rep, const family_spec& fam) {
  const std::string tag = fam_tag(fam);
  const labeled_graph g = generate(fam);
  const invariant_record want = family_invariants(fam);
  if (g.order() <= 10) {
    const exact_invariants got = exact_invariants_bf(g);
    rep.add_equal("omega-" + tag, want.omega, got.omega);
    rep.add_equal("chi-" + tag, want.chi, got.chi);
    rep.add_equal("chi-prime-" + tag, want.chi_prime, got.chi_prime);
    rep.add_equal("alpha0-" + tag, want.alpha0, got.alpha0);
    rep.add_equal("beta0-" + tag, want.beta0, got.beta0);
    const std::string want_a1 =
        want.alpha1 ? ll_str(*want.alpha1) : std::string("absent");
    const std::string got_a1 =
        got.alpha1 ? ll_str(*got.alpha1) : std::string("absent");
    rep.add_claim("alpha1-" + tag, want_a1, got_a1, want_a1 == got_a1);
    rep.add_equal("beta1-" + tag, want.beta1, got.beta1);
    return;
  }
  // Above the exact-oracle budget the clique and the constructed colorings
  // pin omega, chi and chi-prime between matching bounds.
  const coloring_assignment vc = vertex_color(fam);
  const coloring_check vcheck = is_proper_vertex_coloring(g, vc.vertex_colors);
  long long clique = 0;
  {
    std::vector<label_t> members;
    const long long n = fam.n;
    const long long r = fam.kind == family_kind::gmn ? fam.m : 0;
    for (long long j = 1; j <= (n + 1) / 2; ++j) members.push_back(j);
    if (fam.kind != family_kind::gn) {
      members.push_back(0);
      for (long long i = 1; i <= (r + 1) / 2; ++i) members.push_back(-i);
    }
    bool adjacent = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!g.has_edge(members[i], members[j])) adjacent = false;
      }
    }
    clique = adjacent ? static_cast<long long>(members.size()) : 0;
  }
  const bool chi_pinned =
      vcheck.proper && vcheck.colors_used == want.chi && clique == want.omega;
  rep.add_claim("omega-" + tag, ll_str(want.omega), ll_str(clique),
                clique == want.omega);
  rep.add_true("chi-" + tag, chi_pinned);
  const coloring_assignment ec = edge_color(fam);
  const coloring_check echeck = is_proper_edge_coloring(g, ec.edge_colors);
  const bool chi_prime_pinned = echeck.proper &&
                                echeck.colors_used == want.chi_prime &&
                                max_degree(g) == want.chi_prime;
  rep.add_claim("chi-prime-" + tag, ll_str(want.chi_prime),
                chi_prime_pinned ? ll_str(echeck.colors_used) : "unpinned",
                chi_prime_pinned);
}

void check_colorings(verification_report& rep, const family_spec& fam) {
  const std::string tag = fam_tag(fam);
  const labeled_graph g = generate(fam);
  const invariant_record want = family_invariants(fam);
  const coloring_assignment vc = vertex_color(fam);
  const coloring_check vcheck = is_proper_vertex_coloring(g, vc.vertex_colors);
  rep.add_true("vertex-coloring-" + tag,
               vcheck.proper && vcheck.colors_used == want.omega);
  const coloring_assignment ec = edge_color(fam);
  const coloring_check echeck = is_proper_edge_coloring(g, ec.edge_colors);
  rep.add_true("edge-coloring-" + tag,
               echeck.proper && echeck.colors_used == want.chi_prime);
}

void check_labeling(verification_report& rep, const std::string& id,
                    const std::function<labeled_graph()>& build) {
  bool ok = false;
  try {
    ok = verify_sum_labeling(build());
  } catch (const std::exception&) {
    ok = false;
  }
  rep.add_true(id, ok);
}

void check_decomposition(verification_report& rep, const std::string& id,
                         const decomposition& dec) {
  rep.add_true(id, validate(dec).all_pass());
}

}  // namespace

verification_report report(long long max_n) {
  if (max_n < 1) throw validation_error("report: max_n must be at least 1");
  if (max_n > 16) throw capacity_error("report: max_n is capped at 16");
  verification_report rep;

  // Counting formulas against direct construction and brute counts.
  for (long long n = 1; n <= max_n; ++n) {
    check_counts(rep, {family_kind::gn, n, 0}, true);
    check_counts(rep, {family_kind::gn_complement, n, 0}, true);
    check_counts(rep, {family_kind::g0n, n, 0}, true);
    check_counts(rep, {family_kind::g0n_complement, n, 0}, false);
    rep.add_equal("open-p3-gn-" + ll_str(n), open_p3_count(n),
                  count_open_p3_bf(generate({family_kind::gn, n, 0})));
  }
  for (long long order = 3; order <= max_n; ++order) {
    const family_spec fam = balanced_gmn(order);
    check_counts(rep, fam, true);
    check_counts(rep, {family_kind::gmn_complement, fam.n, fam.m}, true);
  }

  // Degree formulas.
  for (long long n = 1; n <= max_n; ++n) {
    check_degrees(rep, {family_kind::gn, n, 0});
    check_degrees(rep, {family_kind::g0n, n, 0});
  }
  for (long long order = 3; order <= max_n; ++order) {
    check_degrees(rep, balanced_gmn(order));
  }

  // Invariant formulas; exact oracle through order 10, bound sandwich above.
  for (long long n = 1; n <= max_n; ++n) {
    check_invariants(rep, {family_kind::gn, n, 0});
    check_invariants(rep, {family_kind::g0n, n, 0});
  }
  for (long long order = 3; order <= max_n; ++order) {
    check_invariants(rep, balanced_gmn(order));
  }

  // Constructed colorings are proper and use exactly the stated counts.
  for (long long n = 1; n <= max_n; ++n) {
    check_colorings(rep, {family_kind::gn, n, 0});
    check_colorings(rep, {family_kind::g0n, n, 0});
  }
  for (long long order = 3; order <= max_n; ++order) {
    check_colorings(rep, balanced_gmn(order));
  }

  // Sum-class counts and edge-sum-perfection.
  for (long long order = 3; order <= max_n; ++order) {
    const family_spec fam = balanced_gmn(order);
    const auto part = edge_sum_partition(generate(fam));
    rep.add_equal("sum-classes-" + fam_tag(fam), fam.m + fam.n + 1,
                  part.chi_double_prime);
    if (order <= 10) {
      const bool expect = fam.m + fam.n <= 2;  // only the triangle is perfect
      rep.add_claim("edge-sum-perfect-" + fam_tag(fam),
                    expect ? "true" : "false",
                    is_edge_sum_perfect(generate(fam)) ? "true" : "false",
                    is_edge_sum_perfect(generate(fam)) == expect);
    }
  }
  for (long long n = 1; n <= std::min<long long>(max_n, 10); ++n) {
    rep.add_true("edge-sum-perfect-g0n-" + ll_str(n),
                 is_edge_sum_perfect(generate({family_kind::g0n, n, 0})));
  }

  // Perfectness of small members.
  for (long long n = 2; n <= std::min<long long>(max_n, 10); ++n) {
    rep.add_true("perfect-gn-" + ll_str(n),
                 is_perfect_bf(generate({family_kind::gn, n, 0})));
  }

  // Constructive labelings round-trip through the sum rule.
  for (long long n = 5; n <= std::min<long long>(max_n, 12); ++n) {
    check_labeling(rep, "labeling-fan-" + ll_str(n),
                   [n] { return label_fan(n); });
  }
  for (long long m = 1; m <= std::min<long long>(max_n, 6); ++m) {
    check_labeling(rep, "labeling-windmill-" + ll_str(m),
                   [m] { return label_windmill(m); });
  }
  if (max_n >= 3) {
    check_labeling(rep, "labeling-stars-1-1", [] {
      return label_union_stars_apex(
          {{1, 1}, tree_shape::kind::union_stars_apex});
    });
    check_labeling(rep, "labeling-stars-2-3", [] {
      return label_union_stars_apex(
          {{2, 3}, tree_shape::kind::union_stars_apex});
    });
    check_labeling(rep, "labeling-banana-2-3", [] {
      return label_banana_tree({{2, 3}, tree_shape::kind::banana}, 1, 2);
    });
    check_labeling(rep, "labeling-spider-1-1-1", [] {
      return label_banana_tree({{1, 1, 1}, tree_shape::kind::banana}, 1, 2);
    });
  }
  if (max_n >= 6) {
    check_labeling(rep, "labeling-stars-3-5-6", [] {
      return label_union_stars_apex(
          {{3, 5, 6}, tree_shape::kind::union_stars_apex});
    });
    check_labeling(rep, "labeling-banana-3-5-6", [] {
      return label_banana_tree({{3, 5, 6}, tree_shape::kind::banana}, 1, 2);
    });
    check_labeling(rep, "labeling-book-bookmark-6-6",
                   [] { return label_triangular_book_bookmark(6, 6); });
    check_labeling(rep, "labeling-fan-handle-5-3",
                   [] { return label_fan_handle(5, 3); });
  }
  check_labeling(rep, "labeling-book-bookmark-3-2",
                 [] { return label_triangular_book_bookmark(3, 2); });
  check_labeling(rep, "labeling-fan-handle-3-2",
                 [] { return label_fan_handle(3, 2); });

  // Hamiltonicity.
  for (long long n = 3; n <= std::min<long long>(max_n, 14); ++n) {
    bool ok = false;
    try {
      ok = !hamiltonian_gdelta(n).empty();
    } catch (const std::exception&) {
      ok = false;
    }
    rep.add_true("hamiltonian-gdelta-" + ll_str(n), ok);
  }
  for (long long order = 3; order <= std::min<long long>(max_n, 10); ++order) {
    const family_spec fam = balanced_gmn(order);
    bool ok = false;
    try {
      ok = !hamiltonian_gmn(fam.m, fam.n).empty();
    } catch (const std::exception&) {
      ok = false;
    }
    rep.add_true("hamiltonian-" + fam_tag(fam), ok);
  }
  for (long long n = 2; n <= std::min<long long>(max_n, 8); ++n) {
    const auto cyc = hamiltonian_cycle_bf(generate({family_kind::g0n, n, 0}));
    rep.add_true("non-hamiltonian-g0n-" + ll_str(n), !cyc.has_value());
  }

  // Complement identities.
  for (long long n = 2; n <= std::min<long long>(max_n, 8); ++n) {
    rep.add_true("complement-identities-" + ll_str(n),
                 check_complement_identities(n).all_pass());
  }

  // Growth chain from the two smallest members.
  {
    bool ok = true;
    for (long long seed = 1; seed <= 2; ++seed) {
      labeled_graph g = generate({family_kind::gn, seed, 0});
      while (static_cast<long long>(g.order()) + 2 <= max_n) {
        g = grow_gn(g);
        const auto expect =
            generate({family_kind::gn, static_cast<long long>(g.order()), 0});
        if (g.labels != expect.labels || g.edges != expect.edges) ok = false;
      }
    }
    rep.add_true("growth-chain", ok);
  }

  // Maximal interval families.
  for (long long order = 3; order <= std::min<long long>(max_n, 9); ++order) {
    bool ok = false;
    std::string actual = "missing";
    try {
      const auto fams = maximal_isg(order);
      ok = !fams.empty();
      if (ok && order % 2 == 1) {
        const long long size = edge_count(fams.front());
        ok = size == max_isg_size(order);
        actual = ll_str(size);
      } else if (ok) {
        actual = "present";
      }
    } catch (const std::exception&) {
      ok = false;
    }
    rep.add_claim("maximal-isg-order-" + ll_str(order),
                  order % 2 == 1 ? ll_str(max_isg_size(order)) : "present",
                  actual, ok);
  }

  // Decompositions.
  for (long long n = 3; n <= max_n; ++n) {
    check_decomposition(rep, "decomp-kn-books-" + ll_str(n), cmsd_kn_books(n));
    check_decomposition(rep, "decomp-kn-stars-" + ll_str(n), cmsd_kn_stars(n));
  }
  for (long long n = 4; n <= max_n; ++n) {
    const auto books = cmsd_g0n_books(n);
    for (std::size_t i = 0; i < books.size(); ++i) {
      check_decomposition(
          rep, "decomp-g0n-books-" + ll_str(n) + "-scheme" + ll_str(i),
          books[i]);
    }
    check_decomposition(rep, "decomp-g0n-fans-" + ll_str(n), cmsd_g0n_fans(n));
  }
  for (long long n = 4; n <= max_n; ++n) {
    if (n % 4 == 1) {
      rep.add_true("infeasible-g0n-books-" + ll_str(n),
                   !feasibility(decomposition_target::zero_family,
                                part_shape::books, n)
                        .feasible);
    }
  }
  if (max_n >= 4) {
    const auto found = search_fan_cmsd(4, 2, 2);
    rep.add_true("search-fans-k4", found && validate(*found).all_pass());
  }
  if (max_n >= 5) {
    const auto found = search_fan_cmsd(5, 4, 2);
    rep.add_true("search-fans-k5", found && validate(*found).all_pass());
  }
  if (max_n >= 6) {
    rep.add_true("search-fans-k6-none", !search_fan_cmsd(6, 2, 2).has_value());
  }
  return rep;
}

}  // namespace sumgraph
