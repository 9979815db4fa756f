#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "akblock/block.hpp"
#include "akblock/fock.hpp"
#include "akblock/laurent.hpp"

namespace akb {

// ---- weight 2, r = 3 ----

// Columns of Y and Z, window-relative and ascending; |Y| = y+1, |Z| = z+1.
// X1 holds the all-ones columns (e = 0 only); every other column is zero.
struct Weight2Block {
  int e = 0;
  int lo = 0;
  int ncols = 0;
  int u = 1;
  std::vector<int> Y, Z, X1;
  int y() const { return static_cast<int>(Y.size()) - 1; }
  int z() const { return static_cast<int>(Z.size()) - 1; }
  friend auto operator<=>(const Weight2Block&, const Weight2Block&) = default;
};

enum class W2Kind { alpha, beta, gamma };

// alpha_k uses k, beta_l uses l, gamma_kl both
struct Weight2Label {
  W2Kind kind = W2Kind::alpha;
  int k = 0;
  int l = 0;
  friend auto operator<=>(const Weight2Label&, const Weight2Label&) = default;
};

std::string to_string(const Weight2Label& a);
bool valid_label(const Weight2Block& blk, const Weight2Label& a);

using Weight2Column = std::map<Weight2Label, LaurentPoly>;

std::vector<Weight2Label> weight2_labels(const Weight2Block& blk);
BlockMatrix weight2_matrix(const Weight2Block& blk, const Weight2Label& a);
std::optional<std::pair<Weight2Block, Weight2Label>> classify_weight2(const BlockMatrix& M);
bool kleshchev_weight2(const Weight2Block& blk, const Weight2Label& a);
// throws ContractViolation for a non-Kleshchev label, DataError if a case produces a label out of range
Weight2Column column_weight2(const Weight2Block& blk, const Weight2Label& a);
MatVector to_matrices(const Weight2Block& blk, const Weight2Column& col);

struct HookRelation {
  bool moves = false;       // mu ~> lam: one rim hook moved from component k to k+1
  bool equal_legs = false;  // the two hooks have the same leg length
  friend bool operator==(const HookRelation&, const HookRelation&) = default;
};

// matrix criterion: mu = Pt(B, L), lam = Pt(B, M)
HookRelation hook_relation(const BlockMatrix& L, const BlockMatrix& M);
// direct check on Young diagrams
HookRelation hook_relation_diagram(const Multipartition& mu, const Multipartition& lam);

// lam_tilde is the label carrying v^2 in the column of lam
LaurentPoly d_via_mt2(const BaseTuple& B, const BlockMatrix& mu, const BlockMatrix& lam,
                      const BlockMatrix& lam_tilde);

// ---- weight 3, r = 4 appendix family ----

enum class R4Kind { a1, a2, a3, b12, b13, bb13, b23, g };

// Y[0..4] as in the tree form with pi = Id; Y[1] = {i_f}, Y[2] = {j_g}, Y[3] = {k_h}
struct R4Block {
  int e = 0;
  int lo = 0;
  int ncols = 0;
  std::vector<std::vector<int>> Y;
  int y(int a) const { return static_cast<int>(Y[a].size()); }
  friend auto operator<=>(const R4Block&, const R4Block&) = default;
};

struct R4Label {
  R4Kind kind = R4Kind::a1;
  int f = 0, g = 0, h = 0;  // unused indices stay 0
  friend auto operator<=>(const R4Label&, const R4Label&) = default;
};

std::string to_string(const R4Label& a);
R4Label parse_r4_label(const std::string& s);  // "b13:2,1", "g:1,1,2"
bool valid_label(const R4Block& blk, const R4Label& a);

using R4Column = std::map<R4Label, LaurentPoly>;

std::vector<R4Label> r4_labels(const R4Block& blk);
BlockMatrix r4_matrix(const R4Block& blk, const R4Label& a);
std::optional<std::pair<R4Block, R4Label>> classify_r4(const BlockMatrix& M);
bool kleshchev_r4(const R4Block& blk, const R4Label& a);
// throws ContractViolation for a non-Kleshchev label, DataError when no table row matches
R4Column column_r4(const R4Block& blk, const R4Label& a);
MatVector to_matrices(const R4Block& blk, const R4Column& col);

// ---- whole blocks ----

// labels rows by the weight-2 or r = 4 family of the block; false (and D unchanged) otherwise
bool attach_labels(DecompMatrix& D);
// every column from the closed formulas; nullopt if the block is in neither family
std::optional<DecompMatrix> formula_decomposition_matrix(const BaseTuple& B, const BlockMatrix& M0);

}  // namespace akb
