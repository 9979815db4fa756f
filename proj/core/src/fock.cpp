#include "akblock/fock.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace akb {

namespace {

// all k-subsets of the set bits of `mask`
template <class Fn>
void for_each_subset(std::uint32_t mask, int k, Fn&& fn) {
  std::vector<int> pos;
  for (std::uint32_t m = mask; m; m &= m - 1) pos.push_back(std::countr_zero(m));
  int n = static_cast<int>(pos.size());
  if (k > n || k <= 0) return;
  std::vector<int> idx(k);
  for (int a = 0; a < k; ++a) idx[a] = a;
  for (;;) {
    std::uint32_t sub = 0;
    for (int a : idx) sub |= 1u << pos[a];
    fn(sub);
    int a = k - 1;
    while (a >= 0 && idx[a] == n - k + a) --a;
    if (a < 0) return;
    ++idx[a];
    for (int b = a + 1; b < k; ++b) idx[b] = idx[b - 1] + 1;
  }
}

std::uint32_t above_bits(int a) { return a >= 31 ? 0u : ~((2u << a) - 1u); }

// one G-step on a single term at window-relative boundary p (columns p-1, p)
void g_term(const BlockMatrix& L, int p, int k, const LaurentPoly& c, MatVector& out, long long* work) {
  std::uint32_t left = L.column(p - 1), right = L.column(p);
  std::uint32_t movable = left & ~right;
  std::uint32_t l01 = ~left & right;
  for_each_subset(movable, k, [&](std::uint32_t sub) {
    BlockMatrix M = L;
    for (std::uint32_t m = sub; m; m &= m - 1) {
      int s = std::countr_zero(m);
      M.set(s, p - 1, false);
      M.set(s, p, true);
    }
    std::uint32_t m10 = movable & ~sub;  // rows still 1,0 after the move
    int N = 0;
    for (std::uint32_t m = sub; m; m &= m - 1) {
      int a = std::countr_zero(m);
      N += std::popcount(m10 & above_bits(a)) - std::popcount(l01 & above_bits(a));
    }
    add_term(out, M, c.shifted(N));
    if (work) ++*work;
  });
}

MatVector g_local(const MatVector& vec, int p, int k, long long* work) {
  MatVector out;
  for (const auto& [L, c] : vec) g_term(L, p, k, c, out, work);
  return out;
}

}  // namespace

MpVector f_divided(const MpVector& vec, const Multicharge& mc, int i, int k) {
  if (k < 1) throw ContractViolation("f_divided: k must be positive");
  MpVector out;
  for (const auto& [sigma, c] : vec) {
    auto add = addable_nodes(sigma, mc, i);
    int n = static_cast<int>(add.size());
    if (k > n) continue;
    std::vector<int> idx(k);
    for (int a = 0; a < k; ++a) idx[a] = a;
    for (;;) {
      Multipartition lam = sigma;
      for (int a : idx) lam = add_node(lam, add[a]);
      add_term(out, lam, c.shifted(n_statistic(sigma, lam, mc, i)));
      int a = k - 1;
      while (a >= 0 && idx[a] == n - k + a) --a;
      if (a < 0) break;
      ++idx[a];
      for (int b = a + 1; b < k; ++b) idx[b] = idx[b - 1] + 1;
    }
  }
  return out;
}

MatVector g_divided(const MatVector& vec, int i, int k) {
  if (k < 1) throw ContractViolation("g_divided: k must be positive");
  MatVector out;
  for (const auto& [L0, c] : vec) {
    BlockMatrix L = L0;
    int p = i;
    if (L.e == 0) {
      L = grow_window(L, i - 1, i + 1);
      p = i - L.lo;
    } else if (i < 1 || i >= L.ncols) {
      throw ContractViolation("g_divided: i outside 1..e-1");
    }
    g_term(L, p, k, c, out, nullptr);
  }
  return out;
}

std::vector<std::pair<int, int>> expand_g_to_f_sequence(const BaseTuple& B, int i, int k) {
  if (k < 1) throw ContractViolation("expand_g_to_f_sequence: k must be positive");
  if (B.e == 0) return {{i, k}};
  check_base(B);
  int e = B.e;
  if (i < 1 || i >= e) throw ContractViolation("expand_g_to_f_sequence: i outside 1..e-1");
  auto pi = prec_order(B);
  int j0 = pi[i - 1], j1 = pi[i];
  // rotate so that j0 becomes runner 0
  std::vector<int> b(e);
  for (int q = 0; q < e; ++q) {
    int rho = (q + j0) % e;
    b[q] = B.b[rho] - (rho < j0 ? 1 : 0);
  }
  int J1 = (j1 - j0 + e) % e;
  int delta = b[J1] - b[0];
  std::vector<int> l{0};
  for (int q = 1; q < e; ++q)
    if ((q < J1 && b[q] > b[J1]) || (q >= J1 && b[q] >= b[J1])) l.push_back(q);
  int m = static_cast<int>(l.size()) - 1;
  int y = static_cast<int>(std::find(l.begin(), l.end(), J1) - l.begin());
  std::vector<std::pair<int, int>> seq;
  auto push = [&](int q, int power) {
    if (power > 0) seq.push_back({(q + j0) % e, power});
  };
  if (delta > 0) {
    for (int q = l[m] + 1; q < e; ++q) push(q, k * delta);
    push(0, k * delta);
    for (int g = m; g > y; --g)
      for (int q = l[g - 1] + 1; q <= l[g]; ++q) push(q, k * delta);
  }
  for (int g = y; g >= 1; --g)
    for (int q = l[g - 1] + 1; q <= l[g]; ++q) push(q, k * (delta + 1));
  return seq;
}

MpVector apply_f_sequence(MpVector vec, const Multicharge& mc, const std::vector<std::pair<int, int>>& seq) {
  for (auto [i, k] : seq) vec = f_divided(vec, mc, i, k);
  return vec;
}

MpVector map_through_pt(const BaseTuple& B, const MatVector& vec) {
  MpVector out;
  for (const auto& [M, c] : vec) add_term(out, from_core_parameters(B, M).lam, c);
  return out;
}

std::vector<BlockMatrix> weight0_candidates(const BlockMatrix& K, int cap) {
  int r = K.r(), C = K.ncols;
  std::vector<int> order(r);
  for (int s = 0; s < r; ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return K.row_sum(a) < K.row_sum(b); });
  auto dominates = [&](std::uint32_t row, std::uint32_t krow) {
    for (int c = 1; c <= C; ++c) {
      std::uint32_t m = c >= 32 ? 0xffffffffu : ((1u << c) - 1u);
      if (std::popcount(row & m) < std::popcount(krow & m)) return false;
    }
    return true;
  };
  std::vector<BlockMatrix> all;
  BlockMatrix L(K.e, C, r, K.lo);
  std::function<void(int, std::uint32_t)> rec = [&](int idx, std::uint32_t cur) {
    if (idx == r) {
      all.push_back(L);
      return;
    }
    int s = order[idx];
    int need = K.row_sum(s) - std::popcount(cur);
    std::uint32_t free = ~cur & (C >= 32 ? 0xffffffffu : ((1u << C) - 1u));
    auto take = [&](std::uint32_t add) {
      std::uint32_t row = cur | add;
      if (!dominates(row, K.rows[s])) return;
      L.rows[s] = row;
      rec(idx + 1, row);
    };
    if (need == 0)
      take(0);
    else
      for_each_subset(free, need, take);
  };
  rec(0, 0);
  auto disp = [&](const BlockMatrix& M) {
    long long d = 0;
    for (int s = 0; s < r; ++s)
      for (int c = 0; c < C; ++c) d += (K.at(s, c) ? c : 0) - (M.at(s, c) ? c : 0);
    return d;
  };
  std::vector<std::pair<long long, BlockMatrix>> keyed;
  for (auto& M : all) keyed.push_back({disp(M), M});
  std::sort(keyed.begin(), keyed.end());
  std::vector<BlockMatrix> out;
  for (auto& [d, M] : keyed) {
    if (static_cast<int>(out.size()) >= cap) break;
    out.push_back(M);
  }
  return out;
}

std::string to_string(ColumnStatus s) {
  switch (s) {
    case ColumnStatus::ok: return "ok";
    case ColumnStatus::not_kleshchev: return "not_kleshchev";
    case ColumnStatus::budget_exhausted: return "budget_exhausted";
    case ColumnStatus::search_exhausted: return "search_exhausted";
  }
  return "?";
}

namespace {

struct BudgetOut {};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdull;
}

std::uint64_t hash_vec(const MatVector& v) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& [M, c] : v) {
    for (auto row : M.rows) h = mix(h, row);
    h = mix(h, static_cast<std::uint64_t>(c.offset()) + 1000);
    for (auto x : c.coeffs()) h = mix(h, static_cast<std::uint64_t>(x));
    h = mix(h, 0xabcdef);
  }
  return h;
}

class Dfs {
 public:
  Dfs(const BlockMatrix& K, long long budget, long long& work) : K_(K), budget_(budget), work_(work) {}

  bool run(const BlockMatrix& L) {
    int C = K_.ncols;
    flows_.assign(C, 0);
    int acc = 0;
    for (int p = 1; p < C; ++p) {
      acc += L.col_sum(p - 1) - K_.col_sum(p - 1);
      if (acc < 0) return false;
      flows_[p] = acc;
    }
    failed_.clear();
    steps_.clear();
    MatVector start{{L, LaurentPoly(1)}};
    return go(start, 0);
  }

  const MatVector& result() const { return result_; }
  const std::vector<std::pair<int, int>>& steps() const { return steps_; }

 private:
  bool reachable(const MatVector& V) const {
    int C = K_.ncols;
    for (const auto& [T, c] : V) {
      bool ok = true;
      for (int s = 0; s < T.r() && ok; ++s) {
        int a = 0, b = 0;
        for (int col = 0; col < C; ++col) {
          a += T.at(s, col);
          b += K_.at(s, col);
          if (a < b) {
            ok = false;
            break;
          }
        }
      }
      if (ok) return true;
    }
    return false;
  }

  bool accept(const MatVector& V) const {
    auto it = V.find(K_);
    if (it == V.end() || !it->second.is_one()) return false;
    for (const auto& [M, c] : V)
      if (!(M == K_) && !c.in_v_nat()) return false;
    return true;
  }

  bool go(const MatVector& V, int last) {
    bool done = true;
    for (int f : flows_)
      if (f) done = false;
    if (done) {
      if (accept(V)) {
        result_ = V;
        return true;
      }
      return false;
    }
    std::uint64_t key = mix(hash_vec(V), static_cast<std::uint64_t>(last));
    for (int f : flows_) key = mix(key, static_cast<std::uint64_t>(f));
    if (failed_.count(key)) return false;
    int C = K_.ncols;
    for (int p = 1; p < C; ++p) {
      if (!flows_[p] || p == last) continue;
      if (last && p < last - 1) continue;  // commuting steps only in increasing order
      for (int k = flows_[p]; k >= 1; --k) {
        MatVector W = g_local(V, p, k, &work_);
        if (work_ > budget_) throw BudgetOut{};
        if (W.empty() || !reachable(W)) continue;
        flows_[p] -= k;
        steps_.push_back({p, k});
        bool ok = go(W, p);
        flows_[p] += k;
        if (ok) return true;
        steps_.pop_back();
      }
    }
    failed_.insert(key);
    return false;
  }

  const BlockMatrix& K_;
  long long budget_;
  long long& work_;
  std::vector<int> flows_;
  std::unordered_set<std::uint64_t> failed_;
  std::vector<std::pair<int, int>> steps_;
  MatVector result_;
};

}  // namespace

InductionEngine::Stripped InductionEngine::search(const BlockMatrix& K) {
  if (auto it = cache_.find(K); it != cache_.end()) return it->second;
  Stripped out;
  long long work = 0;
  try {
    for (const auto& L : weight0_candidates(K, cfg_.candidate_cap)) {
      Dfs dfs(K, cfg_.budget, work);
      if (dfs.run(L)) {
        out.status = ColumnStatus::ok;
        out.seed = L;
        out.steps = dfs.steps();
        out.vec = dfs.result();
        break;
      }
    }
  } catch (const BudgetOut&) {
    out.status = ColumnStatus::budget_exhausted;
  }
  out.work = work;
  cache_.emplace(K, out);
  return out;
}

bool member_is_kleshchev(const BaseTuple& B, const BlockMatrix& M) {
  BaseTuple b0 = B.e >= 2 ? zero_base(B.e) : B;
  auto lab = from_core_parameters(b0, M);
  return is_kleshchev(lab.lam, lab.mc);
}

ColumnResult InductionEngine::column(const BaseTuple& B, const BlockMatrix& K) {
  ColumnResult res;
  res.target = K;
  auto lab = from_core_parameters(B, K);
  res.column.mc = lab.mc;
  res.column.target = lab.lam;
  if (!member_is_kleshchev(B, K)) {
    res.status = ColumnStatus::not_kleshchev;
    return res;
  }
  auto st = strip_constant_columns(K);
  auto found = search(st.matrix);
  res.status = found.status;
  res.work = found.work;
  if (found.status != ColumnStatus::ok) return res;
  res.seed = unstrip(found.seed, st.kept, K);
  for (auto [p, k] : found.steps) res.steps.push_back({st.kept[p], k});
  for (const auto& [M, c] : found.vec) add_term(res.by_matrix, unstrip(M, st.kept, K), c);
  for (const auto& [M, c] : res.by_matrix) add_term(res.column.entries, from_core_parameters(B, M).lam, c);
  return res;
}

ColumnResult compute_column(const BaseTuple& B, const BlockMatrix& K, const SearchConfig& cfg) {
  InductionEngine eng(cfg);
  return eng.column(B, K);
}

bool DecompMatrix::complete() const {
  for (auto s : status)
    if (s != ColumnStatus::ok) return false;
  return !overflow;
}

std::vector<int> dominance_key(const Multipartition& lam, int width) {
  // component totals first, then the full profile
  std::vector<int> key;
  int tot = 0;
  for (const auto& p : lam) key.push_back(tot += size(p));
  int before = 0;
  for (const auto& p : lam) {
    int acc = before;
    for (int z = 0; z < width; ++z) {
      if (z < static_cast<int>(p.size())) acc += p[z];
      key.push_back(acc);
    }
    before = acc;
  }
  return key;
}

void sort_by_dominance(std::vector<Multipartition>& v) {
  int width = 0;
  for (const auto& m : v) width = std::max(width, size(m));
  std::stable_sort(v.begin(), v.end(), [&](const Multipartition& a, const Multipartition& b) {
    return dominance_key(a, width) < dominance_key(b, width);
  });
}

DecompMatrix block_rows(const BaseTuple& B, const BlockMatrix& M0) {
  DecompMatrix D;
  D.base = B;
  auto cls = block_class(M0);
  D.overflow = cls.overflow;
  std::vector<std::pair<Multipartition, BlockMatrix>> members;
  for (const auto& M : cls.members) {
    auto lab = from_core_parameters(B, M);
    D.mc = lab.mc;
    members.push_back({lab.lam, M});
  }
  int width = 0;
  for (const auto& [lam, M] : members) width = std::max(width, size(lam));
  std::stable_sort(members.begin(), members.end(), [&](const auto& a, const auto& b) {
    return dominance_key(a.first, width) < dominance_key(b.first, width);
  });
  for (const auto& [lam, M] : members) {
    D.rows.push_back(lam);
    D.row_matrices.push_back(M);
  }
  D.entries.assign(D.rows.size(), {});
  return D;
}

void add_column(DecompMatrix& D, int row) {
  D.col_rows.push_back(row);
  D.cols.push_back(D.rows[row]);
  D.entries.resize(D.rows.size());
  for (auto& r : D.entries) r.emplace_back();
  D.status.push_back(ColumnStatus::search_exhausted);
}

DecompMatrix block_decomposition_matrix(const BaseTuple& B, const BlockMatrix& M0, InductionEngine& engine) {
  DecompMatrix D = block_rows(B, M0);
  std::map<Multipartition, int> row_of;
  for (size_t x = 0; x < D.rows.size(); ++x) row_of[D.rows[x]] = static_cast<int>(x);
  for (size_t x = 0; x < D.rows.size(); ++x)
    if (member_is_kleshchev(B, D.row_matrices[x])) add_column(D, static_cast<int>(x));
  for (size_t c = 0; c < D.cols.size(); ++c) {
    auto res = engine.column(B, D.row_matrices[D.col_rows[c]]);
    D.status[c] = res.status;
    if (res.status != ColumnStatus::ok) continue;
    for (const auto& [mu, p] : res.column.entries) {
      auto it = row_of.find(mu);
      if (it == row_of.end()) throw ContractViolation("column entry outside the block");
      D.entries[it->second][c] = p;
    }
  }
  return D;
}

DecompMatrix block_decomposition_matrix(const BaseTuple& B, const BlockMatrix& M0, const SearchConfig& cfg) {
  InductionEngine eng(cfg);
  return block_decomposition_matrix(B, M0, eng);
}

}  // namespace akb
