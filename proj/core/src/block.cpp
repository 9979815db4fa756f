#include "akblock/block.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace akb {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::uint32_t low_mask(int n) { return n >= 32 ? 0xffffffffu : ((1u << n) - 1u); }

}  // namespace

BaseTuple zero_base(int e) {
  BaseTuple B;
  B.e = e;
  if (e >= 2) B.b.assign(e, 0);
  return B;
}

void check_base(const BaseTuple& B) {
  if (B.e == 0) {
    if (!B.b.empty()) throw ContractViolation("base tuple for e=0 must be the constant 0");
    return;
  }
  if (B.e < 2 || static_cast<int>(B.b.size()) != B.e) throw ContractViolation("base tuple has wrong length");
  if (*std::min_element(B.b.begin(), B.b.end()) != 0)
    throw ContractViolation("base tuple needs a zero entry and no negative entries");
}

std::vector<int> prec_order(const BaseTuple& B) {
  std::vector<int> pi(B.e);
  std::iota(pi.begin(), pi.end(), 0);
  std::stable_sort(pi.begin(), pi.end(), [&](int x, int y) { return B.b[x] < B.b[y]; });
  return pi;
}

BlockMatrix::BlockMatrix(int e_, int ncols_, int r, int lo_) : e(e_), lo(lo_), ncols(ncols_), rows(r, 0u) {
  if (ncols_ < 0 || ncols_ > kMaxCols) throw ContractViolation("matrix window too wide");
}

BlockMatrix BlockMatrix::from_bits(int e, const std::vector<std::vector<int>>& bits, int lo) {
  int nc = bits.empty() ? (e >= 2 ? e : 0) : static_cast<int>(bits[0].size());
  BlockMatrix M(e, nc, static_cast<int>(bits.size()), lo);
  for (size_t s = 0; s < bits.size(); ++s) {
    if (static_cast<int>(bits[s].size()) != nc) throw InputError("matrix rows have different lengths");
    for (int c = 0; c < nc; ++c) {
      if (bits[s][c] != 0 && bits[s][c] != 1) throw InputError("matrix entries must be 0 or 1");
      M.set(static_cast<int>(s), c, bits[s][c]);
    }
  }
  if (e >= 2 && nc != e) throw InputError("matrix must have e columns");
  return M;
}

std::uint32_t BlockMatrix::column(int c) const {
  std::uint32_t v = 0;
  for (int s = 0; s < r(); ++s)
    if (at(s, c)) v |= 1u << s;
  return v;
}

int BlockMatrix::row_sum(int s) const { return std::popcount(rows[s]); }

int BlockMatrix::col_sum(int c) const { return std::popcount(column(c)); }

std::vector<std::vector<int>> BlockMatrix::bits() const {
  std::vector<std::vector<int>> out(r(), std::vector<int>(ncols, 0));
  for (int s = 0; s < r(); ++s)
    for (int c = 0; c < ncols; ++c) out[s][c] = at(s, c);
  return out;
}

bool BlockMatrix::reduced() const {
  if (e == 0) return true;
  std::uint32_t all = r() >= 32 ? 0xffffffffu : ((1u << r()) - 1u);
  for (int c = 0; c < ncols; ++c)
    if (column(c) == all && r() > 0) return false;
  return true;
}

std::string BlockMatrix::str() const {
  std::string out;
  for (int s = 0; s < r(); ++s) {
    if (s) out += '/';
    for (int c = 0; c < ncols; ++c) out += at(s, c) ? '1' : '0';
  }
  return out;
}

BlockMatrix parse_block_matrix(int e, const std::string& text, int lo) {
  std::vector<std::vector<int>> bits(1);
  for (size_t p = 0; p < text.size(); ++p) {
    char ch = text[p];
    if (ch == '0' || ch == '1') {
      bits.back().push_back(ch - '0');
    } else if (ch == '/' || ch == ';' || ch == '\n') {
      bits.emplace_back();
    } else if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',') {
      throw InputError("matrix '" + text + "', column " + std::to_string(p + 1) + ": unexpected character");
    }
  }
  if (bits.back().empty()) bits.pop_back();
  if (bits.empty()) throw InputError("empty matrix");
  return BlockMatrix::from_bits(e, bits, lo);
}

BlockMatrix grow_window(const BlockMatrix& M, int new_lo, int new_hi) {
  if (M.e != 0) throw ContractViolation("grow_window needs e=0");
  new_lo = std::min(new_lo, M.lo);
  new_hi = std::max(new_hi, M.lo + M.ncols);
  BlockMatrix R(0, new_hi - new_lo, M.r(), new_lo);
  for (int s = 0; s < M.r(); ++s)
    for (int c = 0; c < R.ncols; ++c) R.set(s, c, M.at(s, c + new_lo - M.lo));
  return R;
}

BlockMatrix trim_window(const BlockMatrix& M) {
  if (M.e != 0) return M;
  std::uint32_t all = low_mask(M.r());
  int a = 0, b = M.ncols;
  while (a < b && M.column(a) == all) ++a;
  while (b > a && M.column(b - 1) == 0) --b;
  BlockMatrix R(0, b - a, M.r(), M.lo + a);
  for (int s = 0; s < M.r(); ++s)
    for (int c = a; c < b; ++c) R.set(s, c - a, M.at(s, c));
  return R;
}

namespace {

struct Candidate {
  BaseTuple B;
  BlockMatrix M;
  int ones;
};

}  // namespace

std::optional<CoreParameters> to_core_parameters(const Multipartition& lam, const Multicharge& mc) {
  int r = static_cast<int>(lam.size());
  if (r != mc.r() || r == 0) throw ContractViolation("to_core_parameters: component count mismatch");
  int e = mc.e;
  if (e == 0) {
    int lo = 0, hi = 0;
    bool first = true;
    for (int s = 0; s < r; ++s) {
      int len = static_cast<int>(lam[s].size());
      int l = mc.a[s] - len;
      int h = len ? lam[s][0] - 1 + mc.a[s] + 1 : l;
      lo = first ? l : std::min(lo, l);
      hi = first ? h : std::max(hi, h);
      first = false;
    }
    hi = std::max(hi, lo);
    BlockMatrix M(0, hi - lo, r, lo);
    for (int s = 0; s < r; ++s) {
      auto b = beta_set(lam[s], mc.a[s], 0);
      for (int x : b.betas)
        if (x >= lo && x < hi) M.set(s, x - lo, true);
      for (int x = lo; x < b.floor; ++x) M.set(s, x - lo, true);
    }
    return CoreParameters{zero_base(0), trim_window(M)};
  }
  for (int x : mc.a)
    if (x < 0 || x >= e) throw ContractViolation("multicharge entries must lie in 0..e-1");
  // bead counts alone would silently replace lam by its multicore
  if (!is_multicore(lam, e)) return std::nullopt;

  long long F = 0;
  for (int s = 0; s < r; ++s) {
    long long f = mc.a[s] - static_cast<long long>(lam[s].size());
    F = s == 0 ? f : std::min(F, f);
  }
  F = floor_div(F, e) * e;
  std::vector<std::vector<int>> cnt(r, std::vector<int>(e, 0));
  for (int s = 0; s < r; ++s) {
    int len = static_cast<int>(lam[s].size());
    for (int j = 1; j <= len; ++j) ++cnt[s][mod_residue(lam[s][j - 1] - j + mc.a[s], e)];
    for (long long x = mc.a[s] - len - 1; x >= F; --x) ++cnt[s][mod_residue(x, e)];
  }
  // lift component s by t_s full rows of beads; t_0 = 0
  std::vector<std::vector<int>> range(r);
  for (int s = 0; s < r; ++s) {
    int lo = -1000000, hi = 1000000;
    for (int i = 0; i < e; ++i) {
      lo = std::max(lo, cnt[0][i] - cnt[s][i] - 1);
      hi = std::min(hi, cnt[0][i] - cnt[s][i] + 1);
    }
    if (s == 0) lo = hi = 0;
    for (int t = lo; t <= hi; ++t) range[s].push_back(t);
    if (range[s].empty()) return std::nullopt;
  }
  std::optional<Candidate> best;
  std::vector<int> t(r, 0);
  std::function<void(int)> rec = [&](int s) {
    if (s < r) {
      for (int v : range[s]) {
        t[s] = v;
        rec(s + 1);
      }
      return;
    }
    std::vector<int> b(e);
    for (int i = 0; i < e; ++i) {
      int mn = cnt[0][i] + t[0], mx = mn;
      for (int u = 0; u < r; ++u) {
        mn = std::min(mn, cnt[u][i] + t[u]);
        mx = std::max(mx, cnt[u][i] + t[u]);
      }
      if (mx - mn > 1) return;
      b[i] = mn;
    }
    int shift = *std::min_element(b.begin(), b.end());
    BaseTuple B{e, b};
    for (auto& x : B.b) x -= shift;
    auto pi = prec_order(B);
    BlockMatrix M(e, e, r);
    int ones = 0;
    for (int u = 0; u < r; ++u)
      for (int p = 0; p < e; ++p)
        if (cnt[u][pi[p]] + t[u] > b[pi[p]]) {
          M.set(u, p, true);
          ++ones;
        }
    Candidate c{B, M, ones};
    if (!best || std::tie(c.ones, c.B, c.M) < std::tie(best->ones, best->B, best->M)) best = c;
  };
  rec(1);
  if (!best) return std::nullopt;
  return CoreParameters{best->B, best->M};
}

std::vector<int> pt_charges(const BaseTuple& B, const BlockMatrix& M) {
  std::vector<int> out(M.r(), 0);
  if (B.e == 0) {
    for (int s = 0; s < M.r(); ++s) out[s] = M.lo + M.row_sum(s);
    return out;
  }
  check_base(B);
  if (M.ncols != B.e) throw ContractViolation("matrix width must equal e");
  int tot = std::accumulate(B.b.begin(), B.b.end(), 0);
  for (int s = 0; s < M.r(); ++s) out[s] = tot + M.row_sum(s);
  return out;
}

Labelled from_core_parameters(const BaseTuple& B, const BlockMatrix& M) {
  Labelled out;
  out.mc.e = B.e;
  std::vector<int> pos;
  if (B.e >= 2) {
    check_base(B);
    if (M.ncols != B.e) throw ContractViolation("matrix width must equal e");
    auto pi = prec_order(B);
    pos.assign(B.e, 0);
    for (int p = 0; p < B.e; ++p) pos[pi[p]] = p;
  }
  for (int s = 0; s < M.r(); ++s) {
    std::vector<int> beads;
    if (B.e >= 2) {
      for (int i = 0; i < B.e; ++i) {
        int c = B.b[i] + (M.at(s, pos[i]) ? 1 : 0);
        for (int m = 0; m < c; ++m) beads.push_back(i + B.e * m);
      }
    } else {
      for (int c = 0; c < M.ncols; ++c)
        if (M.at(s, c)) beads.push_back(M.lo + c);
    }
    std::sort(beads.rbegin(), beads.rend());
    int A = B.e >= 2 ? static_cast<int>(beads.size()) : M.lo + static_cast<int>(beads.size());
    Partition p;
    for (size_t j = 0; j < beads.size(); ++j)
      if (int part = beads[j] + static_cast<int>(j) + 1 - A; part > 0) p.push_back(part);
    out.lam.push_back(p);
    out.mc.a.push_back(mod_residue(A, B.e));
  }
  return out;
}

int weight(const Multipartition& lam, const Multicharge& mc) {
  auto c = residue_content(lam, mc);
  long long sum = 0;
  for (int s = 0; s < mc.r(); ++s)
    if (auto it = c.find(mc.a[s]); it != c.end()) sum += it->second;
  long long sq = 0;
  auto get = [&](int i) {
    auto it = c.find(i);
    return it == c.end() ? 0LL : static_cast<long long>(it->second);
  };
  if (mc.e >= 2) {
    for (int i = 0; i < mc.e; ++i) {
      long long d = get(i) - get((i + 1) % mc.e);
      sq += d * d;
    }
  } else if (!c.empty()) {
    for (int i = c.begin()->first - 1; i <= c.rbegin()->first; ++i) {
      long long d = get(i) - get(i + 1);
      sq += d * d;
    }
  }
  long long twice = 2 * sum - sq;
  return static_cast<int>(twice / 2);
}

bool is_multicore(const Multipartition& lam, int e) {
  for (const auto& p : lam)
    if (!is_core(p, e)) return false;
  return true;
}

int pair_weight(const Partition& p, int a, const Partition& q, int b, int e) {
  if (!is_core(p, e) || !is_core(q, e)) throw ContractViolation("pair_weight: components must be e-cores");
  Multipartition lam{p, q};
  Multicharge mc{e, {a, b}};
  if (auto cp = to_core_parameters(lam, mc)) return pair_weight(cp->matrix, 0, 1);
  return weight(lam, mc);
}

bool in_same_block(const Multipartition& lam, const Multipartition& mu, const Multicharge& mc) {
  if (size(lam) != size(mu)) throw ContractViolation("in_same_block: sizes differ");
  return residue_content(lam, mc) == residue_content(mu, mc);
}

std::vector<BlockMatrix> bead_swaps(const BlockMatrix& M) {
  std::vector<BlockMatrix> out;
  for (int s = 0; s < M.r(); ++s)
    for (int t = 0; t < M.r(); ++t) {
      if (s == t) continue;
      std::uint32_t d1 = M.rows[s] & ~M.rows[t];  // 1 in s, 0 in t
      std::uint32_t d2 = M.rows[t] & ~M.rows[s];
      for (std::uint32_t a = d1; a; a &= a - 1)
        for (std::uint32_t b = d2; b; b &= b - 1) {
          std::uint32_t i = a & -a, j = b & -b;
          if (s > t) continue;
          BlockMatrix N = M;
          N.rows[s] ^= i | j;
          N.rows[t] ^= i | j;
          out.push_back(N);
        }
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BlockClass block_class(const BlockMatrix& M, std::size_t cap) {
  std::set<BlockMatrix> seen{M};
  std::deque<BlockMatrix> q{M};
  BlockClass out;
  while (!q.empty()) {
    auto cur = q.front();
    q.pop_front();
    for (auto& n : bead_swaps(cur)) {
      if (seen.count(n)) continue;
      if (seen.size() >= cap) {
        out.overflow = true;
        break;
      }
      seen.insert(n);
      q.push_back(std::move(n));
    }
    if (out.overflow) break;
  }
  out.members.assign(seen.begin(), seen.end());
  return out;
}

int pair_weight(const BlockMatrix& M, int s, int t) {
  std::uint32_t m = low_mask(M.ncols);
  int plus = std::popcount(M.rows[t] & ~M.rows[s] & m);
  int minus = std::popcount(M.rows[s] & ~M.rows[t] & m);
  return std::min(plus, minus);
}

std::vector<std::pair<int, int>> WeightGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < r; ++s)
    for (int t = s + 1; t < r; ++t)
      for (int k = 0; k < mult[s][t]; ++k) out.push_back({s, t});
  return out;
}

int WeightGraph::total() const { return static_cast<int>(edges().size()); }

WeightGraph weight_graph(const BlockMatrix& M) {
  WeightGraph g;
  g.r = M.r();
  g.mult.assign(g.r, std::vector<int>(g.r, 0));
  for (int s = 0; s < g.r; ++s)
    for (int t = s + 1; t < g.r; ++t) g.mult[s][t] = g.mult[t][s] = pair_weight(M, s, t);
  return g;
}

int matrix_weight(const BlockMatrix& M) { return weight_graph(M).total(); }

std::optional<std::pair<std::vector<int>, std::vector<int>>> is_decomposable(const BlockMatrix& M) {
  auto g = weight_graph(M);
  if (g.r == 0) return std::nullopt;
  std::vector<char> seen(g.r, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int t = 0; t < g.r; ++t)
      if (g.mult[s][t] && !seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
  }
  std::vector<int> S, T;
  for (int s = 0; s < g.r; ++s) (seen[s] ? S : T).push_back(s);
  if (T.empty()) return std::nullopt;
  return std::pair{S, T};
}

bool is_tree(const BlockMatrix& M) {
  if (M.r() == 0) return false;
  return !is_decomposable(M) && matrix_weight(M) == M.r() - 1;
}

std::vector<std::vector<int>> column_profile(const BlockMatrix& M) {
  std::vector<std::vector<int>> Y(M.r() + 1);
  for (int c = 0; c < M.ncols; ++c) Y[M.col_sum(c)].push_back(c);
  return Y;
}

void check_tree_shape(int e, int ncols, const std::vector<std::vector<int>>& Y) {
  int r = static_cast<int>(Y.size()) - 1;
  if (r < 2) throw ContractViolation("tree shape needs r >= 2");
  if (e >= 2 && ncols != e) throw ContractViolation("tree shape: ncols must equal e");
  std::vector<int> hit(ncols, 0);
  for (const auto& ys : Y)
    for (int c : ys) {
      if (c < 0 || c >= ncols) throw ContractViolation("tree shape: column out of range");
      ++hit[c];
    }
  for (int h : hit)
    if (h != 1) throw ContractViolation("tree shape: Y is not a partition of the columns");
  if (Y[1].empty() || Y[r - 1].empty()) throw ContractViolation("tree shape: Y_1 and Y_{r-1} must be nonempty");
  // r = 2 with one column in Y_1 gives an edgeless graph
  if (r == 2 && Y[1].size() < 2) throw ContractViolation("tree shape: r = 2 needs |Y_1| >= 2");
  if (e >= 2 && !Y[r].empty()) throw ContractViolation("tree shape: Y_r must be empty when e >= 2");
}

BlockMatrix delta_matrix(int e, int ncols, const std::vector<std::vector<int>>& Y, const std::vector<int>& pi,
                         const std::vector<int>& i, const std::vector<int>& j, const std::vector<int>& w, int lo) {
  int r = static_cast<int>(Y.size()) - 1;
  BlockMatrix D(e, ncols, r, lo);
  for (int a = 0; a <= r; ++a) {
    std::vector<int> sorted = Y[a];
    std::sort(sorted.begin(), sorted.end());
    for (size_t idx = 0; idx < sorted.size(); ++idx) {
      int c = sorted[idx];
      std::vector<int> col(r, 0);
      for (int s = 0; s < a; ++s) col[s] = 1;
      for (size_t u = 0; u < i.size(); ++u)
        if (i[u] == a && w[u] == static_cast<int>(idx) + 1) std::swap(col[j[u] - 1], col[j[u + 1] - 1]);
      for (int s = 0; s < r; ++s) D.set(pi.empty() ? s : pi[s], c, col[s]);
    }
  }
  return D;
}

std::optional<TreeClassification> match_delta(const BlockMatrix& M, const std::vector<int>& pi) {
  int r = M.r();
  if (r < 2 || static_cast<int>(pi.size()) != r) return std::nullopt;
  auto Y = column_profile(M);
  if (Y[1].empty() || Y[r - 1].empty() || (r == 2 && Y[1].size() < 2)) return std::nullopt;
  if (M.e >= 2 && !Y[r].empty()) return std::nullopt;
  struct Special {
    int a, p, q, w;
  };
  std::vector<Special> sp;
  for (int a = 1; a < r; ++a) {
    for (size_t idx = 0; idx < Y[a].size(); ++idx) {
      int c = Y[a][idx];
      int zero_top = -1, nz = 0, one_bot = -1, no = 0;
      for (int s = 0; s < r; ++s) {
        bool v = M.at(pi[s], c);
        if (s < a && !v) {
          zero_top = s + 1;
          ++nz;
        }
        if (s >= a && v) {
          one_bot = s + 1;
          ++no;
        }
      }
      if (nz == 0 && no == 0) continue;
      if (nz != 1 || no != 1) return std::nullopt;
      sp.push_back({a, zero_top, one_bot, static_cast<int>(idx) + 1});
    }
  }
  if (sp.empty()) return std::nullopt;
  std::sort(sp.begin(), sp.end(), [](const Special& x, const Special& y) { return x.a < y.a; });
  TreeClassification tc;
  tc.Y = Y;
  tc.pi = pi;
  tc.j.push_back(1);
  for (size_t u = 0; u < sp.size(); ++u) {
    if (u > 0 && sp[u].a == sp[u - 1].a) return std::nullopt;
    if (sp[u].p != tc.j.back()) return std::nullopt;
    tc.i.push_back(sp[u].a);
    tc.j.push_back(sp[u].q);
    tc.w.push_back(sp[u].w);
  }
  if (tc.j.back() != r) return std::nullopt;
  return tc;
}

std::optional<TreeClassification> tree_classify(const BlockMatrix& M) {
  std::vector<int> pi(M.r());
  std::iota(pi.begin(), pi.end(), 0);
  do {
    if (auto tc = match_delta(M, pi)) return tc;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return std::nullopt;
}

BlockMatrix canonical_tree_rep(int e, int ncols, const std::vector<std::vector<int>>& Y, const std::vector<int>& pi,
                               int lo) {
  check_tree_shape(e, ncols, Y);
  int r = static_cast<int>(Y.size()) - 1;
  return delta_matrix(e, ncols, Y, pi, {1}, {1, r}, {1}, lo);
}

std::vector<BlockMatrix> enumerate_tree_class(int e, int ncols, const std::vector<std::vector<int>>& Y,
                                              const std::vector<int>& pi, int lo) {
  check_tree_shape(e, ncols, Y);
  int r = static_cast<int>(Y.size()) - 1;
  std::set<BlockMatrix> out;
  std::vector<int> is, js{1}, ws;
  // j_1 = 1 <= i_1 < j_2 <= i_2 < ... < j_{t+1} = r
  std::function<void()> rec = [&] {
    int jlast = js.back();
    for (int a = jlast; a < r; ++a) {
      if (Y[a].empty()) continue;
      for (int jn = a + 1; jn <= r; ++jn) {
        is.push_back(a);
        js.push_back(jn);
        if (jn == r) {
          std::function<void(size_t)> wr = [&](size_t u) {
            if (u == is.size()) {
              out.insert(delta_matrix(e, ncols, Y, pi, is, js, ws, lo));
              return;
            }
            for (int w = 1; w <= static_cast<int>(Y[is[u]].size()); ++w) {
              ws.push_back(w);
              wr(u + 1);
              ws.pop_back();
            }
          };
          wr(0);
        } else {
          rec();
        }
        is.pop_back();
        js.pop_back();
      }
    }
  };
  rec();
  return {out.begin(), out.end()};
}

std::vector<TreeBlock> enumerate_tree_blocks(int r, int e, int y_max, std::size_t cap) {
  if (r < 2 || e < 2) throw ContractViolation("tree blocks need r >= 2 and e >= 2");
  std::vector<TreeBlock> out;
  std::set<BlockMatrix> seen;  // every member of every class found so far
  std::vector<int> level(e, 0);
  for (;;) {
    std::vector<std::vector<int>> Y(r + 1);
    for (int c = 0; c < e; ++c) Y[level[c]].push_back(c);
    bool ok = !Y[1].empty() && !Y[r - 1].empty() && (r > 2 || Y[1].size() >= 2);
    for (int s = 1; s < r && ok; ++s) ok = static_cast<int>(Y[s].size()) <= y_max;
    if (ok) {
      std::vector<int> pi(r);
      std::iota(pi.begin(), pi.end(), 0);
      do {
        auto rep = canonical_tree_rep(e, e, Y, pi);
        if (seen.count(rep)) continue;
        auto cls = block_class(rep, cap);
        seen.insert(cls.members.begin(), cls.members.end());
        out.push_back({Y, pi, rep, std::move(cls)});
      } while (std::next_permutation(pi.begin(), pi.end()));
    }
    int c = e - 1;
    while (c >= 0 && level[c] == r - 1) level[c--] = 0;
    if (c < 0) break;
    ++level[c];
  }
  return out;
}

Stripped strip_constant_columns(const BlockMatrix& M) {
  std::uint32_t all = low_mask(M.r());
  Stripped st;
  for (int c = 0; c < M.ncols; ++c) {
    auto col = M.column(c);
    if (col != 0 && col != all) st.kept.push_back(c);
  }
  st.matrix = BlockMatrix(M.e, static_cast<int>(st.kept.size()), M.r());
  for (int s = 0; s < M.r(); ++s)
    for (size_t k = 0; k < st.kept.size(); ++k) st.matrix.set(s, static_cast<int>(k), M.at(s, st.kept[k]));
  return st;
}

BlockMatrix unstrip(const BlockMatrix& stripped, const std::vector<int>& kept, const BlockMatrix& like) {
  BlockMatrix R = like;
  for (int s = 0; s < R.r(); ++s)
    for (size_t k = 0; k < kept.size(); ++k) R.set(s, kept[k], stripped.at(s, static_cast<int>(k)));
  return R;
}

}  // namespace akb
