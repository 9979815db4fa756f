#include "doctest.h"
#include "golden.hpp"

#include "akblock/formulas.hpp"

using namespace akb;

TEST_CASE("weight 2: classification of the golden blocks") {
  auto M = golden::core_of(golden::tables()[0]).matrix;
  auto c = classify_weight2(M);
  REQUIRE(c);
  CHECK(c->first.y() == 1);
  CHECK(c->first.z() == 1);
  CHECK(c->first.u == 1);
  CHECK(to_string(c->second) == "beta_1");
  CHECK(weight2_matrix(c->first, c->second) == M);
}

TEST_CASE("weight 2: labels, Kleshchev count, columns") {
  for (int u = 1; u <= 6; ++u) {
    Weight2Block blk{5, 0, 5, u, {0, 2}, {1, 3, 4}, {}};
    auto labs = weight2_labels(blk);
    CHECK(labs.size() == static_cast<size_t>((1 + 2) * (2 + 2) - 1));
    int klesh = 0;
    for (const auto& a : labs) {
      auto M = weight2_matrix(blk, a);
      bool k = kleshchev_weight2(blk, a);
      CHECK(k == member_is_kleshchev(zero_base(5), M));
      if (!k) {
        CHECK_THROWS_AS(column_weight2(blk, a), ContractViolation);
        continue;
      }
      ++klesh;
      auto res = compute_column(zero_base(5), M);
      REQUIRE(res.status == ColumnStatus::ok);
      CHECK(to_matrices(blk, column_weight2(blk, a)) == res.by_matrix);
    }
    CHECK(klesh == (1 + 1) * (2 + 1));
  }
}

TEST_CASE("weight 2: hook relation matches the diagrams") {
  auto cp = golden::core_of(golden::tables()[0]);
  auto cls = block_class(cp.matrix).members;
  for (const auto& L : cls)
    for (const auto& M : cls) {
      auto mu = from_core_parameters(cp.base, L).lam, lam = from_core_parameters(cp.base, M).lam;
      CHECK(hook_relation(L, M) == hook_relation_diagram(mu, lam));
    }
}

TEST_CASE("weight 2: rim-hook formula against the engine") {
  auto cp = golden::core_of(golden::tables()[1]);
  auto cls = block_class(cp.matrix).members;
  for (const auto& M : cls) {
    auto res = compute_column(cp.base, M);
    if (res.status != ColumnStatus::ok) continue;
    BlockMatrix tilde;
    for (const auto& [N, c] : res.by_matrix)
      if (c == LaurentPoly::monomial(2)) tilde = N;
    for (const auto& L : cls) {
      auto it = res.by_matrix.find(L);
      LaurentPoly want = it == res.by_matrix.end() ? LaurentPoly() : it->second;
      CHECK(d_via_mt2(cp.base, L, M, tilde) == want);
    }
  }
}

TEST_CASE("r = 4: one block of the appendix family") {
  R4Block blk{5, 0, 5, {{0, 1}, {2}, {3}, {4}, {}}};
  auto labs = r4_labels(blk);
  CHECK(labs.size() == 8);
  int klesh = 0;
  for (const auto& a : labs) {
    CHECK(parse_r4_label(to_string(a)) == a);
    auto M = r4_matrix(blk, a);
    auto c = classify_r4(M);
    REQUIRE(c);
    CHECK(c->second == a);
    bool k = kleshchev_r4(blk, a);
    CHECK(k == member_is_kleshchev(zero_base(5), M));
    if (!k) continue;
    ++klesh;
    auto res = compute_column(zero_base(5), M);
    REQUIRE(res.status == ColumnStatus::ok);
    auto col = column_r4(blk, a);
    CHECK(to_matrices(blk, col) == res.by_matrix);
    for (const auto& [b, p] : col) CHECK((p.at_one() == 0 || p.at_one() == 1));
  }
  CHECK(klesh == 2);
  CHECK(block_class(r4_matrix(blk, labs[0])).members.size() == 8);
}

TEST_CASE("golden tables from the closed formulas") {
  for (const auto& t : golden::tables()) {
    auto cp = golden::core_of(t);
    auto F = formula_decomposition_matrix(cp.base, cp.matrix);
    REQUIRE(F);
    CHECK(golden::compare(t, *F) == "");
    auto D = block_decomposition_matrix(cp.base, cp.matrix);
    CHECK(F->entries == D.entries);
    CHECK(F->cols == D.cols);
  }
}

TEST_CASE("row labels of the first golden block") {
  auto cp = golden::core_of(golden::tables()[0]);
  auto D = block_decomposition_matrix(cp.base, cp.matrix);
  REQUIRE(attach_labels(D));
  CHECK(D.labels == std::vector<std::string>{"beta_1", "gamma_1,1", "alpha_1", "gamma_1,2", "beta_2", "gamma_2,1",
                                             "gamma_2,2", "alpha_2"});
}

TEST_CASE("blocks outside both families") {
  auto M = parse_block_matrix(5, "11000/10100/01010/00110");
  CHECK_FALSE(formula_decomposition_matrix(zero_base(5), M));
  auto D = block_rows(zero_base(5), M);
  CHECK_FALSE(attach_labels(D));
  CHECK(D.labels.empty());
}
