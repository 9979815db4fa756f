#include <algorithm>

#include "doctest.h"
#include "golden.hpp"

#include "akblock/block.hpp"

using namespace akb;

namespace {

const Multicharge kAbacusMc{5, {4, 1, 0}};
const char* kAbacusMp = "4,2,2,2,1,1,1,1|7,5,4,2,2,2|3,1,1,1";

}  // namespace

TEST_CASE("abacus example: core parameters and back") {
  auto lam = parse_multipartition(kAbacusMp);
  auto cp = to_core_parameters(lam, kAbacusMc);
  REQUIRE(cp);
  CHECK(cp->base.b == std::vector<int>{1, 0, 3, 2, 2});
  CHECK(prec_order(cp->base) == std::vector<int>{1, 0, 3, 4, 2});
  CHECK(cp->matrix.bits() == std::vector<std::vector<int>>{{0, 1, 0, 0, 0}, {1, 0, 0, 1, 1}, {1, 1, 0, 0, 0}});
  auto back = from_core_parameters(cp->base, cp->matrix);
  CHECK(back.lam == lam);
  CHECK(back.mc == kAbacusMc);
}

TEST_CASE("non-multicores are not in a core block") {
  CHECK_FALSE(to_core_parameters({{3}, {}}, Multicharge{3, {0, 0}}));
  CHECK(to_core_parameters({{2}, {}}, Multicharge{3, {0, 0}}));
}

TEST_CASE("empty multipartition: weight 0, singleton block") {
  Multicharge mc{4, {0, 1, 2}};
  Multipartition lam{{}, {}, {}};
  CHECK(weight(lam, mc) == 0);
  auto cp = to_core_parameters(lam, mc);
  REQUIRE(cp);
  CHECK(matrix_weight(cp->matrix) == 0);
  CHECK(block_class(cp->matrix).members.size() == 1);
}

TEST_CASE("matrix text form") {
  auto M = parse_block_matrix(5, "01000/10011/11000");
  CHECK(M.r() == 3);
  CHECK(M.ncols == 5);
  CHECK(M.str() == "01000/10011/11000");
  CHECK(M.row_sum(1) == 3);
  CHECK(M.col_sum(0) == 2);
  CHECK_THROWS_AS(parse_block_matrix(5, "0100/10011"), InputError);
  CHECK_THROWS_AS(parse_block_matrix(5, "01020/10011"), InputError);
}

TEST_CASE("weights: pairwise sum and rim hooks") {
  Multicharge mc{4, {0, 1, 2}};
  CHECK(weight({{}, {2, 1}, {1, 1, 1}}, mc) == 2);
  auto cp = to_core_parameters({{}, {2, 1}, {1, 1, 1}}, mc);
  REQUIRE(cp);
  CHECK(matrix_weight(cp->matrix) == 2);
  CHECK(pair_weight(cp->matrix, 0, 1) + pair_weight(cp->matrix, 0, 2) + pair_weight(cp->matrix, 1, 2) == 2);
  // adding a rim e-hook raises the weight by r
  Multipartition lam{{}, {2, 1, 1, 1, 1, 1}, {1, 1, 1}};
  CHECK(weight(lam, mc) == 2 + 3);
}

TEST_CASE("golden blocks: class size, weight graph, tree") {
  for (const auto& t : golden::tables()) {
    auto cp = golden::core_of(t);
    auto cls = block_class(cp.matrix);
    CHECK(cls.members.size() == t.rows.size());
    CHECK_FALSE(cls.overflow);
    auto g = weight_graph(cp.matrix);
    CHECK(g.total() == 2);
    CHECK(is_tree(cp.matrix));
    auto tc = tree_classify(cp.matrix);
    REQUIRE(tc);
    auto cls2 = enumerate_tree_class(4, 4, tc->Y, tc->pi);
    CHECK(cls2 == cls.members);
  }
}

TEST_CASE("bead swaps preserve the block") {
  auto M = parse_block_matrix(5, "01000/10011/11000");
  auto lab = from_core_parameters(BaseTuple{5, {1, 0, 3, 2, 2}}, M);
  for (const auto& N : bead_swaps(M)) {
    auto mu = from_core_parameters(BaseTuple{5, {1, 0, 3, 2, 2}}, N).lam;
    CHECK(in_same_block(lab.lam, mu, lab.mc));
  }
}

TEST_CASE("decomposable matrices") {
  auto M = parse_block_matrix(4, "1100/1010/0001/0000");
  auto w = is_decomposable(M);
  REQUIRE(w);
  // the zero row is nested in every other row
  CHECK(w->first == std::vector<int>{0, 1, 2});
  CHECK(w->second == std::vector<int>{3});
  CHECK_FALSE(is_tree(M));
  CHECK_FALSE(is_decomposable(parse_block_matrix(4, "1000/0101/0111")));
}

TEST_CASE("tree shapes") {
  CHECK_THROWS_AS(check_tree_shape(4, 4, {{0, 1, 2}, {3}, {}}), ContractViolation);
  CHECK_NOTHROW(check_tree_shape(4, 4, {{0, 1}, {2, 3}, {}}));
  CHECK_THROWS_AS(check_tree_shape(4, 4, {{0}, {1}, {}, {2, 3}}), ContractViolation);
  auto N = canonical_tree_rep(4, 4, {{}, {0, 1}, {2, 3}, {}}, {0, 1, 2});
  CHECK(is_tree(N));
  CHECK(column_profile(N) == std::vector<std::vector<int>>{{}, {0, 1}, {2, 3}, {}});
}

TEST_CASE("tree block enumeration") {
  auto r2 = enumerate_tree_blocks(2, 4, 2);
  CHECK(r2.size() == 6);
  for (const auto& tb : r2) CHECK(weight_graph(tb.rep).total() == 1);

  auto r3 = enumerate_tree_blocks(3, 4, 2);
  CHECK(r3.size() == 120);
  for (const auto& t : golden::tables()) {
    auto M = golden::core_of(t).matrix;
    bool found = std::any_of(r3.begin(), r3.end(), [&](const TreeBlock& tb) {
      return std::binary_search(tb.block.members.begin(), tb.block.members.end(), M);
    });
    CHECK(found);
  }
  for (const auto& tb : r3) {
    int y = static_cast<int>(tb.Y[1].size()) - 1, z = static_cast<int>(tb.Y[2].size()) - 1;
    CHECK(tb.block.members.size() == static_cast<size_t>((y + 2) * (z + 2) - 1));
  }
}

TEST_CASE("constant columns strip and come back") {
  auto M = parse_block_matrix(6, "110010/100011/110000");
  auto st = strip_constant_columns(M);
  CHECK(st.kept == std::vector<int>{1, 4, 5});
  CHECK(unstrip(st.matrix, st.kept, M) == M);
}
