// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "golden.hpp"

#include "akblock/fock.hpp"
#include "akblock/formulas.hpp"
#include "akblock/verification.hpp"

using namespace akb;

namespace {

int failures = 0;

// body returns "" on success, otherwise the reason
void criterion(int n, const char* what, double limit_s, const std::function<std::string()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string why;
  try {
    why = body();
  } catch (const std::exception& e) {
    why = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (why.empty() && s > limit_s) why = "too slow";
  if (!why.empty()) ++failures;
  std::printf("%s %d %s (%.2f s, limit %.0f s)%s%s\n", why.empty() ? "PASS" : "FAIL", n, what, s, limit_s,
              why.empty() ? "" : ": ", why.c_str());
  std::fflush(stdout);
}

std::string report_status(const VerificationReport& rep) {
  std::string why;
  for (const auto& c : rep.checks)
    if (c.status() != CheckStatus::pass)
      why += (why.empty() ? "" : ", ") + c.name + " " + to_string(c.status()) + " (" + std::to_string(c.failed) +
             " failed, " + std::to_string(c.skipped) + " skipped)";
  return why;
}

std::string golden_tables() {
  for (const auto& t : golden::tables()) {
    auto cp = golden::core_of(t);
    auto D = block_decomposition_matrix(cp.base, cp.matrix);
    if (auto d = golden::compare(t, D); !d.empty()) return "induction: " + d;
    auto F = formula_decomposition_matrix(cp.base, cp.matrix);
    if (!F) return "formula: block not recognised";
    if (auto d = golden::compare(t, *F); !d.empty()) return "formula: " + d;
  }
  return {};
}

std::string abacus_example() {
  Multicharge mc{5, {4, 1, 0}};
  auto lam = parse_multipartition("4,2,2,2,1,1,1,1|7,5,4,2,2,2|3,1,1,1");
  auto cp = to_core_parameters(lam, mc);
  if (!cp) return "not a core block";
  if (cp->base.b != std::vector<int>{1, 0, 3, 2, 2}) return "B";
  if (prec_order(cp->base) != std::vector<int>{1, 0, 3, 4, 2}) return "prec order";
  if (cp->matrix.bits() != std::vector<std::vector<int>>{{0, 1, 0, 0, 0}, {1, 0, 0, 1, 1}, {1, 1, 0, 0, 0}})
    return "M = " + cp->matrix.str();
  auto back = from_core_parameters(cp->base, cp->matrix);
  if (back.lam != lam || back.mc != mc) return "inverse";
  return {};
}

std::string induction_example() {
  BaseTuple B{5, {1, 0, 3, 2, 2}};
  auto M = parse_block_matrix(5, "01000/10011/11000");
  auto one = LaurentPoly::monomial(0), v = LaurentPoly::monomial(1);
  auto G = g_divided(MatVector{{M, one}}, 2, 1);
  MatVector want{{parse_block_matrix(5, "01000/10011/10100"), one}, {parse_block_matrix(5, "00100/10011/11000"), v}};
  if (G != want) return "G step";
  auto seq = expand_g_to_f_sequence(B, 2, 1);
  if (seq != std::vector<std::pair<int, int>>{{0, 1}, {4, 1}, {3, 2}, {1, 2}, {2, 2}}) return "F sequence";
  auto lab = from_core_parameters(B, M);
  auto F = apply_f_sequence(MpVector{{lab.lam, one}}, lab.mc, seq);
  MpVector fw{{parse_multipartition("4,2,2,2,1,1,1,1|7,5,4,2,2,2|4,4,2,2,2"), one},
              {parse_multipartition("5,5,3,3,3,1,1,1|7,5,4,2,2,2|3,1,1,1"), v}};
  if (F != fw) return "F expansion";
  if (map_through_pt(B, G) != F) return "G and F disagree";
  return {};
}

std::string weight2_census() {
  Weight2Options o;  // e = 3..6, u = 1..6, y, z <= 2
  auto rep = verify_weight2(o);
  return report_status(rep);
}

std::string r4_appendix() {
  R4Options o;  // e = 5..8, y_a <= 2, 200 sampled blocks per e
  auto rep = verify_r4(o);
  const auto& c = rep.tally("classification");
  if (c.passed + c.failed < 50) return "only " + std::to_string(c.passed + c.failed) + " blocks";
  return report_status(rep);
}

std::string property_suites() {
  InvariantOptions o;
  auto rep = verify_invariants(o);
  return report_status(rep);
}

}  // namespace

int main() {
  criterion(1, "golden tables, induction and formula", 5, golden_tables);
  criterion(2, "abacus example round trip", 1, abacus_example);
  criterion(3, "induction example", 1, induction_example);
  criterion(4, "weight-2 census and equivalences", 300, weight2_census);
  criterion(5, "r=4 appendix tables", 900, r4_appendix);
  criterion(6, "property suites", 600, property_suites);
  return failures ? 1 : 0;
}
