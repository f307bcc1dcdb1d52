#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sumgraph/coloring.hpp"
#include "sumgraph/core.hpp"
#include "sumgraph/formulas.hpp"
#include "sumgraph/oracle.hpp"

#include <set>
#include <vector>

using namespace sumgraph;

namespace {

std::vector<family_spec> primal_specs() {
  std::vector<family_spec> specs;
  for (long long n = 1; n <= 10; ++n) {
    specs.push_back({family_kind::gn, n, 0});
    specs.push_back({family_kind::g0n, n, 0});
  }
  for (long long m = 1; m <= 6; ++m)
    for (long long n = 1; n <= 6; ++n)
      specs.push_back({family_kind::gmn, n, m});
  return specs;
}

}  // namespace

TEST_CASE("vertex coloring is proper and uses exactly the clique number") {
  for (const family_spec& spec : primal_specs()) {
    CAPTURE(family_name(spec));
    const labeled_graph g = generate(spec);
    const coloring_assignment asg = vertex_color(spec);
    REQUIRE(asg.vertex_colors.size() == g.order());
    const coloring_check check = is_proper_vertex_coloring(g, asg.vertex_colors);
    CHECK(check.proper);
    CHECK(check.colors_used == family_invariants(spec).omega);
  }
}

TEST_CASE("vertex color count matches the exact oracle at small orders") {
  for (const family_spec& spec : primal_specs()) {
    const labeled_graph g = generate(spec);
    if (g.order() > 9) continue;
    CAPTURE(family_name(spec));
    const coloring_assignment asg = vertex_color(spec);
    const exact_invariants inv = exact_invariants_bf(g);
    CHECK(asg.colors_used() == inv.omega);
    CHECK(asg.colors_used() == inv.chi);
  }
}

TEST_CASE("edge coloring is proper and attains the lower Vizing bound") {
  for (const family_spec& spec : primal_specs()) {
    CAPTURE(family_name(spec));
    const labeled_graph g = generate(spec);
    const coloring_assignment asg = edge_color(spec);
    REQUIRE(asg.edge_colors.size() == g.size());
    const coloring_check check = is_proper_edge_coloring(g, asg.edge_colors);
    CHECK(check.proper);
    if (g.size() > 0)
      CHECK(check.colors_used == family_invariants(spec).chi_prime);
  }
}

TEST_CASE("edge coloring stays proper when the positive span is one") {
  // The [-r, 1] column is the corner where a single-sided case analysis
  // double-books a color at -r for odd r; it is colored via negation.
  for (long long r = 2; r <= 13; ++r) {
    CAPTURE(r);
    const family_spec spec{family_kind::gmn, 1, r};
    const coloring_assignment asg = edge_color(spec);
    const coloring_check check =
        is_proper_edge_coloring(generate(spec), asg.edge_colors);
    CHECK(check.proper);
    CHECK(check.colors_used == r + 1);
  }
}

TEST_CASE("edge color counts on the showcase instances") {
  const coloring_assignment g13 = edge_color({family_kind::gn, 13, 0});
  CHECK(g13.colors_used() == 11);
  CHECK(is_proper_edge_coloring(generate({family_kind::gn, 13, 0}),
                                g13.edge_colors)
            .proper);

  const coloring_assignment g57 = edge_color({family_kind::gmn, 7, 5});
  CHECK(g57.colors_used() == 12);
  CHECK(is_proper_edge_coloring(generate({family_kind::gmn, 7, 5}),
                                g57.edge_colors)
            .proper);

  const coloring_assignment g83 = edge_color({family_kind::gmn, 3, 8});
  CHECK(g83.colors_used() == 11);
  CHECK(is_proper_edge_coloring(generate({family_kind::gmn, 3, 8}),
                                g83.edge_colors)
            .proper);
}

TEST_CASE("vertex color count on the order-13 showcase") {
  const family_spec spec{family_kind::gn, 13, 0};
  const coloring_assignment asg = vertex_color(spec);
  CHECK(asg.colors_used() == 7);
  CHECK(is_proper_vertex_coloring(generate(spec), asg.vertex_colors).proper);
}

TEST_CASE("the balanced triangle gets one color per edge") {
  const coloring_assignment asg = edge_color({family_kind::gmn, 1, 1});
  CHECK(asg.colors_used() == 3);
  CHECK(
      is_proper_edge_coloring(generate({family_kind::gmn, 1, 1}), asg.edge_colors)
          .proper);
}

TEST_CASE("colorings reject complement kinds") {
  CHECK_THROWS_AS(vertex_color({family_kind::gn_complement, 5, 0}),
                  validation_error);
  CHECK_THROWS_AS(edge_color({family_kind::g0n_complement, 5, 0}),
                  validation_error);
}

TEST_CASE("edge sum classes partition the edges into matchings") {
  for (const family_spec& spec : primal_specs()) {
    CAPTURE(family_name(spec));
    const labeled_graph g = generate(spec);
    const edge_sum_partition_result part = edge_sum_partition(g);
    REQUIRE(part.classes.size() == g.order());  // one class per label
    std::size_t covered = 0;
    for (const auto& [sum, class_edges] : part.classes) {
      covered += class_edges.size();
      std::set<label_t> endpoints;
      for (const edge_t& e : class_edges) {
        CHECK(e.first + e.second == sum);
        CHECK(endpoints.insert(e.first).second);   // matching: no endpoint
        CHECK(endpoints.insert(e.second).second);  // appears twice
      }
    }
    CHECK(covered == g.size());
  }
}

TEST_CASE("the class count is the label count for the signed families") {
  for (long long m = 1; m <= 10; ++m)
    for (long long n = 1; n <= 10; ++n) {
      const auto part =
          edge_sum_partition(generate({family_kind::gmn, n, m}));
      CHECK(part.chi_double_prime == m + n + 1);
    }
  for (long long n = 1; n <= 10; ++n) {
    const auto part = edge_sum_partition(generate({family_kind::g0n, n, 0}));
    CHECK(part.chi_double_prime == n);
  }
}

TEST_CASE("zero-based families are edge sum perfect, signed ones are not") {
  for (long long n = 2; n <= 8; ++n)
    CHECK(is_edge_sum_perfect(generate({family_kind::g0n, n, 0})));
  for (long long n = 2; n <= 7; ++n)
    CHECK_FALSE(is_edge_sum_perfect(generate({family_kind::gmn, n, 1})));
  // The balanced triangle needs three edge colors anyway.
  CHECK(is_edge_sum_perfect(generate({family_kind::gmn, 1, 1})));
}

TEST_CASE("edge sum partition rejects graphs that are not sum graphs") {
  CHECK_THROWS_AS(edge_sum_partition(generate({family_kind::gn_complement, 6, 0})),
                  validation_error);
}
