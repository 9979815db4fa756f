#include "doctest.h"
#include "golden.hpp"

#include "akblock/io.hpp"

using namespace akb;

namespace {

const char* kTable =
    "e=4 mc=(0,1,2) B=(1,1,1,0)\n"
    "label      multipartition |   1   2   3   4\n"
    "-------------------------------------------\n"
    "beta_1     (-|2,1|1^3)    |   1\n"
    "gamma_1,1  (1|2|1^3)      |   v   1\n"
    "alpha_1    (1|2,1|1^2)    |  v2   v   1\n"
    "gamma_1,2  (1|2^2|1)      |           v\n"
    "beta_2     (2|2,1|1)      |       v  v2   1\n"
    "gamma_2,1  (3|-|1^3)      |       v\n"
    "gamma_2,2  (3|1^2|1)      |      v2       v\n"
    "alpha_2    (3|2,1|-)      |              v2\n";

DecompMatrix first_golden() {
  auto cp = golden::core_of(golden::tables()[0]);
  auto D = block_decomposition_matrix(cp.base, cp.matrix);
  attach_labels(D);
  return D;
}

}  // namespace

TEST_CASE("text rendering of the first golden block") { CHECK(render_text(first_golden()) == kTable); }

TEST_CASE("decomposition matrix JSON round-trips to identical text") {
  auto D = first_golden();
  auto back = decomp_from_json(decomp_to_json(D));
  CHECK(render_text(back) == kTable);
  CHECK(back.entries == D.entries);
  CHECK(back.rows == D.rows);
  CHECK(back.row_matrices == D.row_matrices);
  CHECK(decomp_to_json(back) == decomp_to_json(D));
}

TEST_CASE("flagged columns are marked") {
  SearchConfig tiny;
  tiny.budget = 1;
  auto D = block_decomposition_matrix(zero_base(5), parse_block_matrix(5, "11000/10100/01010/00110"), tiny);
  auto text = render_text(D);
  CHECK(text.find("1*") != std::string::npos);
  CHECK(text.find("budget_exhausted") != std::string::npos);
  CHECK(render_text(decomp_from_json(decomp_to_json(D))) == text);
}

TEST_CASE("block matrix JSON") {
  auto M = parse_block_matrix(5, "01000/10011/11000");
  BaseTuple B{5, {1, 0, 3, 2, 2}};
  auto s = block_matrix_to_json(M, &B);
  CHECK(s == R"({"base":[1,0,3,2,2],"bits":[[0,1,0,0,0],[1,0,0,1,1],[1,1,0,0,0]],"columns":[0,1,2,3,4],"e":5,"rows":3})");
  auto in = block_matrix_from_json(s);
  CHECK(in.matrix == M);
  REQUIRE(in.base);
  CHECK(*in.base == B);
  CHECK_FALSE(block_matrix_from_json(block_matrix_to_json(M)).base);
  CHECK_THROWS_AS(block_matrix_from_json(R"({"e":5,"bits":[[0,2]]})"), InputError);
}

TEST_CASE("small JSON forms") {
  auto lam = parse_multipartition("-|2,1|1^3");
  CHECK(multipartition_to_json(lam) == "[[],[2,1],[1,1,1]]");
  CHECK(multipartition_from_json("[[],[2,1],[1,1,1]]") == lam);
  CHECK_THROWS_AS(multipartition_from_json("[[1,2]]"), InputError);
  auto p = LaurentPoly::parse("v2+1");
  CHECK(poly_to_json(p) == R"({"coeffs":[1,0,1],"offset":0})");
  CHECK(poly_from_json(poly_to_json(p)) == p);
  auto g = weight_graph(parse_block_matrix(5, "01000/10011/11000"));
  CHECK(weight_graph_to_json(g) == R"({"edges":[[1,2],[2,3]],"rows":3})");
}

TEST_CASE("malformed JSON reports line and column") {
  try {
    decomp_from_json("{\n  \"e\": 4,\n  oops\n}");
    FAIL("no error");
  } catch (const InputError& e) {
    std::string w = e.what();
    CHECK(w.find("line 3") != std::string::npos);
    CHECK(w.find("column") != std::string::npos);
  }
  CHECK_THROWS_AS(decomp_from_json(R"({"e":4})"), InputError);
}
