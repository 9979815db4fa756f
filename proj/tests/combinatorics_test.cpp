#include "doctest.h"

#include "akblock/combinatorics.hpp"
#include "akblock/laurent.hpp"

using namespace akb;

TEST_CASE("partition basics") {
  CHECK(conjugate({4, 2, 1}) == Partition{3, 2, 1, 1});
  CHECK(conjugate({}) == Partition{});
  CHECK(size(Multipartition{{}, {2, 1}, {1, 1, 1}}) == 6);
  CHECK(is_partition({3, 3, 1}));
  CHECK_FALSE(is_partition({1, 2}));
  CHECK_FALSE(is_partition({2, 0}));
}

TEST_CASE("multipartition text form") {
  auto lam = parse_multipartition("-|2,1|1,1,1");
  CHECK(lam == Multipartition{{}, {2, 1}, {1, 1, 1}});
  CHECK(parse_multipartition("-|2,1|1^3") == lam);
  CHECK(format_multipartition(lam) == "-|2,1|1,1,1");
  CHECK(format_multipartition_exp(lam) == "-|2,1|1^3");
  CHECK(format_multipartition_exp(parse_multipartition("4,2,2,2,1,1,1,1|7,5,4,2,2,2|3,1,1,1")) ==
        "4,2^3,1^4|7,5,4,2^3|3,1^3");
}

TEST_CASE("parse errors name the column") {
  try {
    parse_multipartition("-|2,,1|-");
    FAIL("no error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("column 5") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_multipartition("2,1|x"), InputError);
  CHECK_THROWS_AS(parse_multipartition("1,2"), InputError);
}

TEST_CASE("residues and content") {
  Multicharge mc{5, {4, 1, 0}};
  CHECK(residue(Node{1, 1, 1}, mc) == 4);
  CHECK(residue(Node{1, 1, 2}, mc) == 0);
  CHECK(residue(Node{3, 2, 1}, mc) == 4);
  auto rc = residue_content({{}, {2, 1}, {1, 1, 1}}, Multicharge{4, {0, 1, 2}});
  CHECK(rc == std::map<int, int>{{0, 2}, {1, 2}, {2, 2}});
  CHECK(mod_residue(-1, 4) == 3);
  CHECK(mod_residue(-7, 0) == -7);
}

TEST_CASE("dominance") {
  Multipartition a{{2}, {}}, b{{1}, {1}}, c{{1, 1}, {}};
  CHECK(dominance_ge(a, b));
  CHECK(dominance_ge(a, c));
  CHECK(dominance_ge(c, b));
  CHECK_FALSE(dominance_ge(b, c));
  CHECK(dominance_ge(b, b));
}

TEST_CASE("rim hooks and cores") {
  CHECK_FALSE(is_core({3}, 3));
  CHECK(is_core({2}, 3));
  CHECK(is_core({3, 1, 1}, 3));
  CHECK_FALSE(is_core({3, 1, 1}, 5));
  auto hs = rim_hooks({3}, 3);
  REQUIRE(hs.size() == 1);
  CHECK(remove_rim_hook({3}, hs[0]).empty());
  for (const auto& h : rim_hooks({4, 3, 1}, 3)) CHECK(size(remove_rim_hook({4, 3, 1}, h)) == 5);
  for (const auto& h : addable_rim_hooks({2, 1}, 4)) CHECK(size(add_rim_hook({2, 1}, h)) == 7);
}

TEST_CASE("Kleshchev at level one is e-restricted") {
  Multicharge mc{3, {0}};
  CHECK_FALSE(is_kleshchev({{3}}, mc));
  CHECK(is_kleshchev({{2, 1}}, mc));
  CHECK(is_kleshchev({{2, 2, 1}}, mc));
  CHECK_FALSE(is_kleshchev({{4, 1}}, mc));
  CHECK(is_kleshchev({{}}, mc));
}

TEST_CASE("good nodes") {
  Multicharge mc{3, {0}};
  // the addable 1-node (3,1) below cancels the removable (1,2)
  CHECK_FALSE(good_node({{2, 1}}, mc, 1));
  CHECK_FALSE(good_node({{2, 1}}, mc, 0));
  auto g = good_node({{2, 1}}, mc, 2);
  REQUIRE(g);
  CHECK(*g == Node{1, 2, 1});
  CHECK(is_kleshchev(remove_node({{2, 1}}, *g), mc));
}

TEST_CASE("laurent polynomials") {
  auto q3 = LaurentPoly::quantum_int(3);
  CHECK(q3.str() == "v2+1+v^-2");
  CHECK(LaurentPoly::quantum_factorial(3).str() == "v3+2v+2v^-1+v^-3");
  CHECK(LaurentPoly::quantum_int(2) * q3 == LaurentPoly::quantum_factorial(3));
  CHECK(LaurentPoly::parse("2v3+v-1") == LaurentPoly(0, {-1, 1, 0, 2}));
  CHECK(LaurentPoly::parse("v^-2").min_degree() == -2);
  CHECK(LaurentPoly::parse("v2").is_monomial());
  CHECK((q3 - q3).is_zero());
  CHECK(q3.at_one() == 3);
  CHECK(LaurentPoly::parse("v+v2").in_v_nat());
  CHECK_FALSE(LaurentPoly::parse("1+v").in_v_nat());
}
