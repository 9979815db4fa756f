#include "doctest.h"

#include "akblock/verification.hpp"

using namespace akb;

TEST_CASE("weight 2 suite at e = 3 passes") {
  Weight2Options o;
  o.e_min = o.e_max = 3;
  auto rep = verify_weight2(o);
  CHECK(rep.passed());
  CHECK(rep.tally("column").passed > 0);
  CHECK(rep.tally("class_size").status() == CheckStatus::pass);
}

TEST_CASE("a corrupted formula entry is caught once") {
  Weight2Options o;
  o.e_min = o.e_max = 3;
  o.inject_fault = true;
  auto rep = verify_weight2(o);
  CHECK(rep.failure_count() == 1);
  CHECK(rep.tally("column").failed == 1);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].check == "column");
}

TEST_CASE("reports are deterministic") {
  InvariantOptions o;
  o.seed = 7;
  o.weight_cases = o.rim_hook_cases = 50;
  o.nice_ind_cases = 20;
  o.klesh_cases = 20;
  o.divided_power_cases = 10;
  o.ignore01_cases = 5;
  o.column_blocks = 5;
  o.multicore_r = 3;
  o.multicore_e = 3;
  o.multicore_n = 5;
  o.tree_r = 3;
  o.tree_cols = 4;
  auto a = verify_invariants(o), b = verify_invariants(o);
  CHECK(a.passed());
  CHECK(a.to_json() == b.to_json());
  o.seed = 8;
  CHECK(verify_invariants(o).passed());
}

TEST_CASE("r4 suite on a small sample") {
  R4Options o;
  o.e_min = o.e_max = 5;
  o.blocks_per_e = 10;
  auto rep = verify_r4(o);
  CHECK(rep.passed());
  CHECK(rep.tally("column").passed > 0);
}

TEST_CASE("status strings") {
  CHECK(to_string(CheckStatus::skipped_budget) == "skipped-budget");
  CheckTally t{"x", 3, 0, 1};
  CHECK(t.status() == CheckStatus::skipped_budget);
  t.failed = 1;
  CHECK(t.status() == CheckStatus::fail);
}
