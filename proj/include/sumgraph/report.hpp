#pragma once

#include <string>
#include <vector>

namespace sumgraph {

struct report_entry {
  std::string claim_id;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct verification_report {
  std::vector<report_entry> entries;

  void add_claim(const std::string& claim_id, const std::string& expected,
                 const std::string& actual, bool pass);
  // pass iff expected == actual
  void add_equal(const std::string& claim_id, long long expected,
                 long long actual);
  // pass iff ok; expected is always "true"
  void add_true(const std::string& claim_id, bool ok);

  long long passed() const;
  long long failed() const;
  bool all_pass() const;
};

// Deterministic self-check matrix: formulas against oracles, colorings,
// labelings and decompositions over every family with parameter at most
// max_n (subject to the per-oracle order caps). max_n is capped at 16.
verification_report report(long long max_n);

}  // namespace sumgraph
