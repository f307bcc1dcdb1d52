#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sumgraph/core.hpp"
#include "sumgraph/decomposition.hpp"
#include "sumgraph/formulas.hpp"

#include <algorithm>
#include <vector>

using namespace sumgraph;

namespace {

std::vector<long long> sizes_of(const decomposition& dec) {
  std::vector<long long> out;
  for (const labeled_graph& part : dec.parts)
    out.push_back(static_cast<long long>(part.size()));
  return out;
}

}  // namespace

TEST_CASE("complete hosts split into difference-four books") {
  const decomposition k8 = cmsd_kn_books(8);
  CHECK(sizes_of(k8) == std::vector<long long>{1, 5, 9, 13});
  CHECK(k8.scheme.a == 1);
  CHECK(k8.scheme.d == 4);
  CHECK(validate(k8).all_pass());

  const decomposition k7 = cmsd_kn_books(7);
  CHECK(sizes_of(k7) == std::vector<long long>{3, 7, 11});
  CHECK(k7.scheme.a == 3);
  CHECK(validate(k7).all_pass());

  for (long long n = 3; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(validate(cmsd_kn_books(n)).all_pass());
  }
}

TEST_CASE("complete hosts split into stars of every size") {
  const decomposition k6 = cmsd_kn_stars(6);
  CHECK(sizes_of(k6) == std::vector<long long>{1, 2, 3, 4, 5});
  CHECK(k6.scheme.d == 1);
  for (long long n = 3; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(validate(cmsd_kn_stars(n)).all_pass());
  }
}

TEST_CASE("zero-family books come in the printed size progressions") {
  const std::vector<decomposition> decs = cmsd_g0n_books(12);
  REQUIRE(decs.size() == 2);
  CHECK(sizes_of(decs[0]) == std::vector<long long>{2, 4, 6, 8, 10, 12});
  CHECK(sizes_of(decs[1]) == std::vector<long long>{6, 14, 22});
  for (const decomposition& dec : decs) CHECK(validate(dec).all_pass());
}

TEST_CASE("zero-family books validate across residues") {
  for (long long n = 4; n <= 13; ++n) {
    for (const decomposition& dec : cmsd_g0n_books(n)) {
      CAPTURE(n);
      const verification_report rep = validate(dec);
      for (const report_entry& e : rep.entries) {
        CAPTURE(e.claim_id);
        CHECK(e.pass);
      }
    }
  }
}

TEST_CASE("odd sizes force one bare-spine book part") {
  // Families whose edge total is odd cannot use only even-sized parts.
  const std::vector<decomposition> decs = cmsd_g0n_books(9);
  REQUIRE(decs.size() == 1);
  CHECK_FALSE(decs[0].scheme.arithmetic);
  const std::vector<long long> sz = sizes_of(decs[0]);
  CHECK(std::count(sz.begin(), sz.end(), 1) == 1);
}

TEST_CASE("zero-family fans come in the printed size progression") {
  const decomposition f10 = cmsd_g0n_fans(10);
  CHECK(sizes_of(f10) == std::vector<long long>{2, 10, 18});
  CHECK(f10.scheme.a == 2);
  CHECK(f10.scheme.d == 8);
  CHECK(validate(f10).all_pass());
  for (long long n = 4; n <= 13; ++n) {
    CAPTURE(n);
    CHECK(validate(cmsd_g0n_fans(n)).all_pass());
  }
}

TEST_CASE("feasibility reflects the parity obstruction") {
  CHECK_FALSE(feasibility(decomposition_target::zero_family, part_shape::fans, 9)
                  .feasible);
  CHECK_FALSE(feasibility(decomposition_target::zero_family, part_shape::books, 13)
                  .feasible);
  CHECK(feasibility(decomposition_target::zero_family, part_shape::books, 12)
            .feasible);
  CHECK(feasibility(decomposition_target::zero_family, part_shape::stars, 9)
            .feasible);
  CHECK_FALSE(
      feasibility(decomposition_target::complete, part_shape::fans, 6).feasible);
  CHECK_FALSE(
      feasibility(decomposition_target::complete, part_shape::fans, 7).feasible);
  CHECK(feasibility(decomposition_target::complete, part_shape::fans, 8).feasible);
}

TEST_CASE("fan search succeeds on the smallest feasible hosts") {
  const auto k4 = search_fan_cmsd(4, 2, 2);
  REQUIRE(k4.has_value());
  CHECK(sizes_of(*k4) == std::vector<long long>{2, 4});
  CHECK(validate(*k4).all_pass());

  const auto k5 = search_fan_cmsd(5, 4, 2);
  REQUIRE(k5.has_value());
  CHECK(sizes_of(*k5) == std::vector<long long>{4, 6});
  CHECK(validate(*k5).all_pass());
}

TEST_CASE("fan search reports none when sizes cannot work") {
  CHECK_FALSE(search_fan_cmsd(6, 2, 2).has_value());   // 2+4+6 misses 15
  CHECK_FALSE(search_fan_cmsd(6, 1, 2).has_value());   // odd part sizes
  CHECK_FALSE(search_fan_cmsd(7, 4, 2).has_value());   // 21 is odd
  CHECK_FALSE(search_fan_cmsd(5, 2, 2).has_value());   // 2+4 misses 10
}

TEST_CASE("fan search validates its inputs") {
  CHECK_THROWS_AS(search_fan_cmsd(2, 2, 2), validation_error);
  CHECK_THROWS_AS(search_fan_cmsd(5, 0, 2), validation_error);
  CHECK_THROWS_AS(search_fan_cmsd(5, 2, -1), validation_error);
  CHECK_THROWS_AS(search_fan_cmsd(40, 2, 2), capacity_error);
}

TEST_CASE("validation notices a missing edge") {
  decomposition dec = cmsd_kn_books(6);
  dec.parts.back().edges.pop_back();
  const verification_report rep = validate(dec);
  CHECK_FALSE(rep.all_pass());
  bool cover_failed = false;
  for (const report_entry& e : rep.entries)
    if (e.claim_id == "parts-cover-host" && !e.pass) cover_failed = true;
  CHECK(cover_failed);
}

TEST_CASE("validation notices a duplicated edge") {
  decomposition dec = cmsd_kn_stars(5);
  dec.parts.front().edges = dec.parts.back().edges;
  dec.parts.front().labels = dec.parts.back().labels;
  const verification_report rep = validate(dec);
  bool disjoint_failed = false;
  for (const report_entry& e : rep.entries)
    if (e.claim_id == "parts-edge-disjoint" && !e.pass) disjoint_failed = true;
  CHECK(disjoint_failed);
}

TEST_CASE("validation notices a broken size progression") {
  decomposition dec = cmsd_kn_books(8);
  std::swap(dec.parts[0], dec.parts[1]);
  const verification_report rep = validate(dec);
  bool progression_failed = false;
  for (const report_entry& e : rep.entries)
    if (e.claim_id == "sizes-follow-declared-progression" && !e.pass)
      progression_failed = true;
  CHECK(progression_failed);
}
