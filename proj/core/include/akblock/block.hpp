#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "akblock/combinatorics.hpp"

namespace akb {

struct BaseTuple {
  int e = 0;
  std::vector<int> b;  // empty when e = 0
  friend auto operator<=>(const BaseTuple&, const BaseTuple&) = default;
};

BaseTuple zero_base(int e);
void check_base(const BaseTuple& B);
// pi[p] = runner at position p under the prec order; runners sorted by (b_i, i)
std::vector<int> prec_order(const BaseTuple& B);

// 0/1 matrix, one bitmask per row; bit c is column lo + c.
// For e = 0 everything left of the window is 1 and everything right of it is 0.
struct BlockMatrix {
  int e = 0;
  int lo = 0;
  int ncols = 0;
  std::vector<std::uint32_t> rows;

  static constexpr int kMaxCols = 32;

  BlockMatrix() = default;
  BlockMatrix(int e_, int ncols_, int r, int lo_ = 0);
  static BlockMatrix from_bits(int e, const std::vector<std::vector<int>>& bits, int lo = 0);

  int r() const { return static_cast<int>(rows.size()); }
  // c is a window-relative column; outside the window the e = 0 convention applies
  bool at(int s, int c) const {
    if (c < 0) return e == 0;
    if (c >= ncols) return false;
    return (rows[s] >> c) & 1u;
  }
  void set(int s, int c, bool v) {
    if (v)
      rows[s] |= 1u << c;
    else
      rows[s] &= ~(1u << c);
  }
  std::uint32_t column(int c) const;  // bit s = entry in row s
  int row_sum(int s) const;
  int col_sum(int c) const;
  std::vector<std::vector<int>> bits() const;
  bool reduced() const;
  std::string str() const;  // rows as 0/1 strings separated by '/'

  friend auto operator<=>(const BlockMatrix&, const BlockMatrix&) = default;
};

BlockMatrix parse_block_matrix(int e, const std::string& text, int lo = 0);
// grow an e = 0 window so that it covers [new_lo, new_hi)
BlockMatrix grow_window(const BlockMatrix& M, int new_lo, int new_hi);
// e = 0 only: shrink to the minimal window that still has a leading and trailing non-constant column
BlockMatrix trim_window(const BlockMatrix& M);

struct CoreParameters {
  BaseTuple base;
  BlockMatrix matrix;
};

std::optional<CoreParameters> to_core_parameters(const Multipartition& lam, const Multicharge& mc);

struct Labelled {
  Multicharge mc;
  Multipartition lam;
};

Labelled from_core_parameters(const BaseTuple& B, const BlockMatrix& M);
// absolute (unreduced) charges of Pt(B, M): bead counts at or above position 0
std::vector<int> pt_charges(const BaseTuple& B, const BlockMatrix& M);

int weight(const Multipartition& lam, const Multicharge& mc);
int pair_weight(const Partition& p, int a, const Partition& q, int b, int e);
bool in_same_block(const Multipartition& lam, const Multipartition& mu, const Multicharge& mc);
bool is_multicore(const Multipartition& lam, int e);

std::vector<BlockMatrix> bead_swaps(const BlockMatrix& M);

struct BlockClass {
  std::vector<BlockMatrix> members;  // sorted
  bool overflow = false;
};

BlockClass block_class(const BlockMatrix& M, std::size_t cap = 100000);

struct WeightGraph {
  int r = 0;
  std::vector<std::vector<int>> mult;  // symmetric, zero diagonal
  std::vector<std::pair<int, int>> edges() const;  // one entry per unit of multiplicity, 0-based s < t
  int total() const;
  friend bool operator==(const WeightGraph&, const WeightGraph&) = default;
};

int pair_weight(const BlockMatrix& M, int s, int t);
WeightGraph weight_graph(const BlockMatrix& M);
int matrix_weight(const BlockMatrix& M);
// witness (S, T) with S the component containing row 0
std::optional<std::pair<std::vector<int>, std::vector<int>>> is_decomposable(const BlockMatrix& M);
bool is_tree(const BlockMatrix& M);

// i, j are the row chains (1-based); w picks a column inside Y[i_u]
struct TreeClassification {
  std::vector<std::vector<int>> Y;  // Y[0..r], window-relative column positions, ascending
  std::vector<int> pi;              // pi[s] = row of the result holding row s of Delta (0-based)
  std::vector<int> i, j, w;
};

BlockMatrix delta_matrix(int e, int ncols, const std::vector<std::vector<int>>& Y, const std::vector<int>& pi,
                         const std::vector<int>& i, const std::vector<int>& j, const std::vector<int>& w,
                         int lo = 0);
// decode M as Delta^pi(Y,(i,j),w) for the given pi
std::optional<TreeClassification> match_delta(const BlockMatrix& M, const std::vector<int>& pi);
std::optional<TreeClassification> tree_classify(const BlockMatrix& M);
void check_tree_shape(int e, int ncols, const std::vector<std::vector<int>>& Y);
BlockMatrix canonical_tree_rep(int e, int ncols, const std::vector<std::vector<int>>& Y, const std::vector<int>& pi,
                               int lo = 0);
std::vector<BlockMatrix> enumerate_tree_class(int e, int ncols, const std::vector<std::vector<int>>& Y,
                                              const std::vector<int>& pi, int lo = 0);
struct TreeBlock {
  std::vector<std::vector<int>> Y;
  std::vector<int> pi;
  BlockMatrix rep;  // canonical_tree_rep(Y, pi)
  BlockClass block;
};

// e >= 2: one entry per tree block class with |Y_s| <= y_max for 0 < s < r, in generation order
std::vector<TreeBlock> enumerate_tree_blocks(int r, int e, int y_max, std::size_t cap = 100000);

// Y[s] = columns with exactly s ones
std::vector<std::vector<int>> column_profile(const BlockMatrix& M);

struct Stripped {
  BlockMatrix matrix;
  std::vector<int> kept;  // original window-relative index of each surviving column
};

Stripped strip_constant_columns(const BlockMatrix& M);
// reinsert the removed columns of `like` around a stripped matrix
BlockMatrix unstrip(const BlockMatrix& stripped, const std::vector<int>& kept, const BlockMatrix& like);

}  // namespace akb
