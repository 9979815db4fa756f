#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "akblock/block.hpp"
#include "akblock/laurent.hpp"

namespace akb {

template <class Label>
using FockVector = std::map<Label, LaurentPoly>;
using MpVector = FockVector<Multipartition>;
using MatVector = FockVector<BlockMatrix>;

template <class Label>
void add_term(FockVector<Label>& v, const Label& key, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto [it, fresh] = v.try_emplace(key, p);
  if (!fresh) {
    it->second += p;
    if (it->second.is_zero()) v.erase(it);
  }
}

MpVector f_divided(const MpVector& vec, const Multicharge& mc, int i, int k);
// e >= 2: i is a column position in 1..ncols-1.  e = 0: i is an absolute index, the window grows as needed.
MatVector g_divided(const MatVector& vec, int i, int k);
// application order: first pair is applied first
std::vector<std::pair<int, int>> expand_g_to_f_sequence(const BaseTuple& B, int i, int k);
MpVector apply_f_sequence(MpVector vec, const Multicharge& mc, const std::vector<std::pair<int, int>>& seq);
MpVector map_through_pt(const BaseTuple& B, const MatVector& vec);

std::vector<BlockMatrix> weight0_candidates(const BlockMatrix& K, int cap = 200);

struct SearchConfig {
  long long budget = 4'000'000;  // G-step term operations per column
  int candidate_cap = 200;
};

enum class ColumnStatus { ok, not_kleshchev, budget_exhausted, search_exhausted };
std::string to_string(ColumnStatus s);

struct DecompColumn {
  Multicharge mc;
  Multipartition target;
  std::map<Multipartition, LaurentPoly> entries;
};

struct ColumnResult {
  ColumnStatus status = ColumnStatus::search_exhausted;
  BlockMatrix target;
  BlockMatrix seed;                        // weight-0 starting matrix
  std::vector<std::pair<int, int>> steps;  // (i, k) on the full matrix, application order
  MatVector by_matrix;
  DecompColumn column;
  long long work = 0;
};

// Caches stripped search results; one instance per thread.
class InductionEngine {
 public:
  explicit InductionEngine(SearchConfig cfg = {}) : cfg_(cfg) {}
  ColumnResult column(const BaseTuple& B, const BlockMatrix& K);
  const SearchConfig& config() const { return cfg_; }
  std::size_t cache_size() const { return cache_.size(); }

  struct Stripped {
    ColumnStatus status = ColumnStatus::search_exhausted;
    BlockMatrix seed;
    std::vector<std::pair<int, int>> steps;
    MatVector vec;
    long long work = 0;
  };
  // search on a matrix with no constant columns; does not check Kleshchev-ness
  Stripped search(const BlockMatrix& K);

 private:
  SearchConfig cfg_;
  std::map<BlockMatrix, Stripped> cache_;
};

ColumnResult compute_column(const BaseTuple& B, const BlockMatrix& K, const SearchConfig& cfg = {});

// Kleshchev test for a block member, reduced to B = 0 when e >= 2
bool member_is_kleshchev(const BaseTuple& B, const BlockMatrix& M);

struct DecompMatrix {
  BaseTuple base;
  Multicharge mc;
  std::vector<BlockMatrix> row_matrices;
  std::vector<Multipartition> rows;
  std::vector<int> col_rows;  // row index of each column's label
  std::vector<Multipartition> cols;
  std::vector<std::vector<LaurentPoly>> entries;  // [row][col]
  std::vector<ColumnStatus> status;
  std::vector<std::string> labels;  // optional row labels, e.g. "gamma_1,2"
  bool overflow = false;
  bool complete() const;
};

// least dominant first: ascending lexicographic order of the component prefix sums, then of the
// dominance profile (a linear extension of dominance)
void sort_by_dominance(std::vector<Multipartition>& v);
std::vector<int> dominance_key(const Multipartition& lam, int width);

// rows of the block of M0 in display order, no columns yet
DecompMatrix block_rows(const BaseTuple& B, const BlockMatrix& M0);
// appends an empty column for rows[row] with status search_exhausted
void add_column(DecompMatrix& D, int row);

DecompMatrix block_decomposition_matrix(const BaseTuple& B, const BlockMatrix& M0, InductionEngine& engine);
DecompMatrix block_decomposition_matrix(const BaseTuple& B, const BlockMatrix& M0, const SearchConfig& cfg = {});

}  // namespace akb
