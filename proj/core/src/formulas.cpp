#include "akblock/formulas.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <initializer_list>
#include <memory>
#include <set>

#include "json.hpp"

namespace akb {

namespace detail {
const std::map<std::string, std::string>& r4_table_sources();
}

namespace {

bool chain(std::initializer_list<int> xs) {
  const int* p = xs.begin();
  for (size_t t = 1; t < xs.size(); ++t)
    if (!(p[t - 1] < p[t])) return false;
  return true;
}

// column types, bit s = row s (top row is bit 0): x y z 1_y 1_z 1(alpha) 1(beta)
struct W2Types {
  std::uint32_t x, y, z, one_y, one_z, one_a, one_b;
};

constexpr std::uint32_t bits3(const char* s) { return (s[0] == '1') | ((s[1] == '1') << 1) | ((s[2] == '1') << 2); }

const std::array<W2Types, 7>& w2_types() {
  static const std::array<W2Types, 7> t{{
      {},
      {bits3("000"), bits3("011"), bits3("001"), bits3("101"), bits3("010"), bits3("110"), bits3("100")},
      {bits3("000"), bits3("100"), bits3("101"), bits3("001"), bits3("110"), bits3("010"), bits3("011")},
      {bits3("000"), bits3("110"), bits3("010"), bits3("011"), bits3("100"), bits3("101"), bits3("001")},
      {bits3("000"), bits3("001"), bits3("101"), bits3("100"), bits3("011"), bits3("010"), bits3("110")},
      {bits3("000"), bits3("011"), bits3("010"), bits3("110"), bits3("001"), bits3("101"), bits3("100")},
      {bits3("000"), bits3("100"), bits3("110"), bits3("010"), bits3("101"), bits3("001"), bits3("011")},
  }};
  return t;
}

Weight2Label alpha(int k) { return {W2Kind::alpha, k, 0}; }
Weight2Label beta(int l) { return {W2Kind::beta, 0, l}; }
Weight2Label gamma(int k, int l) { return {W2Kind::gamma, k, l}; }

// positions with sentinels -1 and ncols
struct W2Pos {
  const Weight2Block& b;
  int I(int k) const {
    if (k <= 0) return -1;
    if (k > b.y() + 1) return b.ncols;
    return b.Y[k - 1];
  }
  int J(int l) const {
    if (l <= 0) return -1;
    if (l > b.z() + 1) return b.ncols;
    return b.Z[l - 1];
  }
};

}  // namespace

std::string to_string(const Weight2Label& a) {
  switch (a.kind) {
    case W2Kind::alpha:
      return "alpha_" + std::to_string(a.k);
    case W2Kind::beta:
      return "beta_" + std::to_string(a.l);
    case W2Kind::gamma:
      return "gamma_" + std::to_string(a.k) + "," + std::to_string(a.l);
  }
  return "?";
}

bool valid_label(const Weight2Block& blk, const Weight2Label& a) {
  bool kok = a.k >= 1 && a.k <= blk.y() + 1;
  bool lok = a.l >= 1 && a.l <= blk.z() + 1;
  switch (a.kind) {
    case W2Kind::alpha:
      return kok && a.l == 0;
    case W2Kind::beta:
      return lok && a.k == 0;
    case W2Kind::gamma:
      return kok && lok;
  }
  return false;
}

std::vector<Weight2Label> weight2_labels(const Weight2Block& blk) {
  std::vector<Weight2Label> out;
  for (int k = 1; k <= blk.y() + 1; ++k) out.push_back(alpha(k));
  for (int l = 1; l <= blk.z() + 1; ++l) out.push_back(beta(l));
  for (int k = 1; k <= blk.y() + 1; ++k)
    for (int l = 1; l <= blk.z() + 1; ++l) out.push_back(gamma(k, l));
  return out;
}

BlockMatrix weight2_matrix(const Weight2Block& blk, const Weight2Label& a) {
  if (blk.u < 1 || blk.u > 6) throw ContractViolation("weight2_matrix: u out of range");
  if (!valid_label(blk, a)) throw ContractViolation("weight2_matrix: label out of range");
  const auto& t = w2_types()[blk.u];
  BlockMatrix M(blk.e, blk.ncols, 3, blk.lo);
  auto put = [&](int c, std::uint32_t m) {
    for (int s = 0; s < 3; ++s) M.set(s, c, (m >> s) & 1u);
  };
  for (int c : blk.X1) put(c, 7u);
  for (int q = 0; q < static_cast<int>(blk.Y.size()); ++q) {
    std::uint32_t m = t.y;
    if (a.kind == W2Kind::alpha && a.k == q + 1) m = t.one_a;
    if (a.kind == W2Kind::gamma && a.k == q + 1) m = t.one_y;
    put(blk.Y[q], m);
  }
  for (int q = 0; q < static_cast<int>(blk.Z.size()); ++q) {
    std::uint32_t m = t.z;
    if (a.kind == W2Kind::beta && a.l == q + 1) m = t.one_b;
    if (a.kind == W2Kind::gamma && a.l == q + 1) m = t.one_z;
    put(blk.Z[q], m);
  }
  return M;
}

std::optional<std::pair<Weight2Block, Weight2Label>> classify_weight2(const BlockMatrix& M) {
  if (M.r() != 3) return std::nullopt;
  std::vector<std::pair<Weight2Block, Weight2Label>> cand;
  for (int u = 1; u <= 6; ++u) {
    const auto& t = w2_types()[u];
    int yc = std::popcount(t.y);
    Weight2Block blk{M.e, M.lo, M.ncols, u, {}, {}, {}};
    int na = 0, nb = 0, ny = 0, nz = 0, ka = 0, lb = 0, ky = 0, lz = 0;
    bool bad = false;
    for (int c = 0; c < M.ncols && !bad; ++c) {
      std::uint32_t m = M.column(c);
      int cnt = std::popcount(m);
      if (cnt == 0) continue;
      if (cnt == 3) {
        if (M.e != 0) bad = true;
        blk.X1.push_back(c);
      } else if (cnt == yc) {
        blk.Y.push_back(c);
        int q = static_cast<int>(blk.Y.size());
        if (m == t.one_a) {
          ++na;
          ka = q;
        } else if (m == t.one_y) {
          ++ny;
          ky = q;
        } else if (m != t.y) {
          bad = true;
        }
      } else {
        blk.Z.push_back(c);
        int q = static_cast<int>(blk.Z.size());
        if (m == t.one_b) {
          ++nb;
          lb = q;
        } else if (m == t.one_z) {
          ++nz;
          lz = q;
        } else if (m != t.z) {
          bad = true;
        }
      }
    }
    if (bad || blk.Y.empty() || blk.Z.empty()) continue;
    Weight2Label lab;
    if (na == 1 && nb + ny + nz == 0)
      lab = alpha(ka);
    else if (nb == 1 && na + ny + nz == 0)
      lab = beta(lb);
    else if (ny == 1 && nz == 1 && na + nb == 0)
      lab = gamma(ky, lz);
    else
      continue;
    if (weight2_matrix(blk, lab) != M) continue;
    cand.emplace_back(blk, lab);
  }
  if (cand.size() <= 1) {
    if (cand.empty()) return std::nullopt;
    return cand.front();
  }
  // several readings: keep the one whose label set is the whole block
  auto cls = block_class(M);
  for (auto& [blk, lab] : cand) {
    std::vector<BlockMatrix> mine;
    for (const auto& a : weight2_labels(blk)) mine.push_back(weight2_matrix(blk, a));
    std::sort(mine.begin(), mine.end());
    if (mine == cls.members) return std::make_pair(blk, lab);
  }
  return std::nullopt;
}

bool kleshchev_weight2(const Weight2Block& blk, const Weight2Label& a) {
  if (!valid_label(blk, a)) throw ContractViolation("kleshchev_weight2: label out of range");
  W2Pos p{blk};
  int y = blk.y(), z = blk.z();
  int k = a.k, l = a.l;
  switch (blk.u) {
    case 1:
      if (a.kind == W2Kind::gamma) return (p.I(k) < p.J(l) && l != z + 1) || (p.J(l) < p.I(k) && k != y + 1);
      if (a.kind == W2Kind::alpha) return p.I(k) < p.J(z + 1);
      return p.J(l) < p.I(y + 1);
    case 2:
    case 3:
      if (a.kind == W2Kind::gamma) return p.J(l) < p.I(k) || (k != 1 && l != z + 1);
      if (a.kind == W2Kind::alpha) return k != 1 && p.I(k) < p.J(z + 1);
      return p.I(1) < p.J(l);
    case 4:
    case 5:
      if (a.kind == W2Kind::gamma) return p.I(k) < p.J(l) || (l != 1 && k != y + 1);
      if (a.kind == W2Kind::alpha) return k != y + 1 && p.J(1) < p.I(k);
      return p.J(l) < p.I(y + 1);
    case 6:
      if (a.kind == W2Kind::gamma) return (p.I(k) < p.J(l) && k != 1) || (p.J(l) < p.I(k) && l != 1);
      if (a.kind == W2Kind::alpha) return p.J(1) < p.I(k);
      return p.I(1) < p.J(l);
  }
  throw ContractViolation("kleshchev_weight2: u out of range");
}

Weight2Column column_weight2(const Weight2Block& blk, const Weight2Label& a) {
  if (!kleshchev_weight2(blk, a)) throw ContractViolation("column_weight2: " + to_string(a) + " is not Kleshchev");
  W2Pos p{blk};
  auto I = [&](int k) { return p.I(k); };
  auto J = [&](int l) { return p.J(l); };
  int y = blk.y(), z = blk.z();
  int k = a.k, l = a.l;
  Weight2Column col;
  auto put = [&](const Weight2Label& b, int d) {
    if (!valid_label(blk, b))
      throw DataError("column_weight2: " + to_string(a) + " (u=" + std::to_string(blk.u) + ") produced " + to_string(b));
    add_term(col, b, LaurentPoly::monomial(d));
  };
  auto none = [&]() { throw DataError("column_weight2: no case matches " + to_string(a)); };
  // tilde indices; the sentinel positions make these total
  auto min_j_after = [&](int x) {  // minimal t with x < j_t
    int t = 1;
    while (t <= z + 1 && !(x < J(t))) ++t;
    return t;
  };
  auto max_j_before = [&](int x) {  // maximal t with j_t < x
    int t = z + 1;
    while (t >= 1 && !(J(t) < x)) --t;
    return t;
  };
  auto min_i_after = [&](int x) {
    int t = 1;
    while (t <= y + 1 && !(x < I(t))) ++t;
    return t;
  };
  auto max_i_before = [&](int x) {
    int t = y + 1;
    while (t >= 1 && !(I(t) < x)) --t;
    return t;
  };

  put(a, 0);
  switch (blk.u) {
    case 1:
      if (a.kind == W2Kind::alpha) {
        int kt = min_j_after(I(k));
        if (J(kt) < I(k + 1)) {
          put(gamma(k, kt), 1), put(beta(kt), 2);
        } else if (I(k + 1) < J(kt)) {
          put(alpha(k + 1), 1), put(gamma(k, kt), 1), put(gamma(k + 1, kt), 2);
        } else {
          none();
        }
      } else if (a.kind == W2Kind::beta) {
        int lt = min_i_after(J(l));
        if (I(lt) < J(l + 1)) {
          put(gamma(lt, l), 1), put(alpha(lt), 2);
        } else if (J(l + 1) < I(lt)) {
          put(beta(l + 1), 1), put(gamma(lt, l), 1), put(gamma(lt, l + 1), 2);
        } else {
          none();
        }
      } else {
        if (I(k + 1) < J(l) || J(l + 1) < I(k)) {
          put(gamma(k, l + 1), 1), put(gamma(k + 1, l), 1), put(gamma(k + 1, l + 1), 2);
        } else if (chain({I(k), J(l), I(k + 1), J(l + 1)})) {
          put(gamma(k, l + 1), 1), put(alpha(k + 1), 1), put(beta(l), 1), put(gamma(k + 1, l + 1), 2);
        } else if (chain({I(k), J(l), J(l + 1), I(k + 1)})) {
          put(gamma(k, l + 1), 1), put(beta(l), 1), put(beta(l + 1), 2);
        } else if (chain({J(l), I(k), I(k + 1), J(l + 1)})) {
          put(gamma(k + 1, l), 1), put(alpha(k), 1), put(alpha(k + 1), 2);
        } else if (chain({J(l), I(k), J(l + 1), I(k + 1)})) {
          put(gamma(k + 1, l), 1), put(alpha(k), 1), put(beta(l + 1), 1), put(gamma(k + 1, l + 1), 2);
        } else {
          none();
        }
      }
      break;
    case 2:
    case 3:
      if (a.kind == W2Kind::alpha) {
        int kt = min_j_after(I(k));
        if (I(k - 1) < J(kt - 1)) {
          put(beta(kt - 1), 1), put(gamma(k, kt), 1), put(gamma(k - 1, kt - 1), 1), put(gamma(k - 1, kt), 2);
        } else if (J(kt - 1) < I(k - 1)) {
          put(alpha(k - 1), 1), put(gamma(k, kt), 1), put(gamma(k - 1, kt), 2);
        } else {
          none();
        }
      } else if (a.kind == W2Kind::beta) {
        int lt = max_i_before(J(l));
        if (J(l - 1) < I(lt)) {
          put(alpha(lt), 1), put(gamma(lt, l), 2);
        } else if (I(lt) < J(l - 1)) {
          put(beta(l - 1), 1), put(gamma(lt, l - 1), 1), put(gamma(lt, l), 2);
        } else {
          none();
        }
      } else {
        if (I(k) < J(l) || J(l + 1) < I(k - 1)) {
          put(gamma(k - 1, l), 1), put(gamma(k, l + 1), 1), put(gamma(k - 1, l + 1), 2);
        } else if (chain({J(l), I(k - 1), J(l + 1), I(k)})) {
          put(gamma(k, l + 1), 1), put(gamma(k - 1, l), 1), put(beta(l + 1), 1), put(alpha(k - 1), 2);
        } else if (chain({J(l), I(k - 1), I(k), J(l + 1)})) {
          put(gamma(k - 1, l), 1), put(alpha(k), 1), put(alpha(k - 1), 2);
        } else if (chain({I(k - 1), J(l), J(l + 1), I(k)})) {
          put(gamma(k, l + 1), 1), put(beta(l + 1), 1), put(beta(l), 2);
        } else if (chain({I(k - 1), J(l), I(k), J(l + 1)})) {
          put(alpha(k), 1), put(beta(l), 2);
        } else {
          none();
        }
      }
      break;
    case 4:
    case 5:
      if (a.kind == W2Kind::alpha) {
        int kt = max_j_before(I(k));
        if (J(kt + 1) < I(k + 1)) {
          put(beta(kt + 1), 1), put(gamma(k, kt), 1), put(gamma(k + 1, kt + 1), 1), put(gamma(k + 1, kt), 2);
        } else if (I(k + 1) < J(kt + 1)) {
          put(alpha(k + 1), 1), put(gamma(k, kt), 1), put(gamma(k + 1, kt), 2);
        } else {
          none();
        }
      } else if (a.kind == W2Kind::beta) {
        int lt = min_i_after(J(l));
        if (I(lt) < J(l + 1)) {
          put(alpha(lt), 1), put(gamma(lt, l), 2);
        } else if (J(l + 1) < I(lt)) {
          put(beta(l + 1), 1), put(gamma(lt, l + 1), 1), put(gamma(lt, l), 2);
        } else {
          none();
        }
      } else {
        if (I(k + 1) < J(l - 1) || J(l) < I(k)) {
          put(gamma(k + 1, l), 1), put(gamma(k, l - 1), 1), put(gamma(k + 1, l - 1), 2);
        } else if (chain({I(k), J(l - 1), I(k + 1), J(l)})) {
          put(gamma(k, l - 1), 1), put(gamma(k + 1, l), 1), put(beta(l - 1), 1), put(alpha(k + 1), 2);
        } else if (chain({I(k), J(l - 1), J(l), I(k + 1)})) {
          put(gamma(k, l - 1), 1), put(beta(l - 1), 1), put(beta(l), 2);
        } else if (chain({J(l - 1), I(k), I(k + 1), J(l)})) {
          put(gamma(k + 1, l), 1), put(alpha(k), 1), put(alpha(k + 1), 2);
        } else if (chain({J(l - 1), I(k), J(l), I(k + 1)})) {
          put(alpha(k), 1), put(beta(l), 2);
        } else {
          none();
        }
      }
      break;
    case 6:
      if (a.kind == W2Kind::alpha) {
        int kt = max_j_before(I(k));
        if (I(k - 1) < J(kt)) {
          put(gamma(k, kt), 1), put(beta(kt), 2);
        } else if (J(kt) < I(k - 1)) {
          put(alpha(k - 1), 1), put(gamma(k, kt), 1), put(gamma(k - 1, kt), 2);
        } else {
          none();
        }
      } else if (a.kind == W2Kind::beta) {
        int lt = max_i_before(J(l));
        if (J(l - 1) < I(lt)) {
          put(gamma(lt, l), 1), put(alpha(lt), 2);
        } else if (I(lt) < J(l - 1)) {
          put(beta(l - 1), 1), put(gamma(lt, l), 1), put(gamma(lt, l - 1), 2);
        } else {
          none();
        }
      } else {
        if (I(k) < J(l - 1) || J(l) < I(k - 1)) {
          put(gamma(k, l - 1), 1), put(gamma(k - 1, l), 1), put(gamma(k - 1, l - 1), 2);
        } else if (chain({I(k - 1), J(l - 1), I(k), J(l)})) {
          put(gamma(k - 1, l), 1), put(alpha(k), 1), put(beta(l - 1), 1), put(gamma(k - 1, l - 1), 2);
        } else if (chain({I(k - 1), J(l - 1), J(l), I(k)})) {
          put(gamma(k, l - 1), 1), put(beta(l), 1), put(beta(l - 1), 2);
        } else if (chain({J(l - 1), I(k - 1), I(k), J(l)})) {
          put(gamma(k - 1, l), 1), put(alpha(k), 1), put(alpha(k - 1), 2);
        } else if (chain({J(l - 1), I(k - 1), J(l), I(k)})) {
          put(gamma(k, l - 1), 1), put(alpha(k - 1), 1), put(beta(l), 1), put(gamma(k - 1, l - 1), 2);
        } else {
          none();
        }
      }
      break;
    default:
      throw ContractViolation("column_weight2: u out of range");
  }
  return col;
}

MatVector to_matrices(const Weight2Block& blk, const Weight2Column& col) {
  MatVector out;
  for (const auto& [a, p] : col) add_term(out, weight2_matrix(blk, a), p);
  return out;
}

// ---- hook relation ----

namespace {

std::pair<BlockMatrix, BlockMatrix> align(const BlockMatrix& L, const BlockMatrix& M) {
  if (L.e != M.e || L.r() != M.r()) throw ContractViolation("hook_relation: matrices of different shape");
  if (L.lo == M.lo && L.ncols == M.ncols) return {L, M};
  if (L.e != 0) throw ContractViolation("hook_relation: windows differ");
  int lo = std::min(L.lo, M.lo), hi = std::max(L.lo + L.ncols, M.lo + M.ncols);
  return {grow_window(L, lo, hi), grow_window(M, lo, hi)};
}

}  // namespace

HookRelation hook_relation(const BlockMatrix& L0, const BlockMatrix& M0) {
  auto [L, M] = align(L0, M0);
  HookRelation out;
  int r = L.r();
  for (int k = 0; k + 1 < r; ++k) {
    bool others = true;
    for (int s = 0; s < r; ++s)
      if (s != k && s != k + 1 && L.rows[s] != M.rows[s]) others = false;
    if (!others) continue;
    std::uint32_t dk = L.rows[k] ^ M.rows[k], dk1 = L.rows[k + 1] ^ M.rows[k + 1];
    if (dk != dk1 || std::popcount(dk) != 2) continue;
    int i = std::countr_zero(dk);
    int j = 31 - std::countl_zero(dk);
    if (!(!L.at(k, i) && !L.at(k + 1, j) && !M.at(k, j) && !M.at(k + 1, i))) continue;
    if (!(L.at(k, j) && L.at(k + 1, i) && M.at(k, i) && M.at(k + 1, j))) continue;
    out.moves = true;
    std::uint32_t between = ((1u << j) - 1) & ~((1u << (i + 1)) - 1);
    out.equal_legs = std::popcount(L.rows[k] & between) == std::popcount(L.rows[k + 1] & between);
    return out;
  }
  return out;
}

HookRelation hook_relation_diagram(const Multipartition& mu, const Multipartition& lam) {
  HookRelation out;
  int r = static_cast<int>(mu.size());
  if (static_cast<int>(lam.size()) != r) return out;
  for (int k = 0; k + 1 < r; ++k) {
    bool others = true;
    for (int s = 0; s < r; ++s)
      if (s != k && s != k + 1 && mu[s] != lam[s]) others = false;
    if (!others) continue;
    int len = size(mu[k]) - size(lam[k]);
    if (len <= 0 || size(lam[k + 1]) - size(mu[k + 1]) != len) continue;
    for (const auto& h1 : rim_hooks(mu[k], len)) {
      if (remove_rim_hook(mu[k], h1) != lam[k]) continue;
      for (const auto& h2 : rim_hooks(lam[k + 1], len)) {
        if (remove_rim_hook(lam[k + 1], h2) != mu[k + 1]) continue;
        out.moves = true;
        if (h1.leg == h2.leg) {
          out.equal_legs = true;
          return out;
        }
      }
    }
  }
  return out;
}

LaurentPoly d_via_mt2(const BaseTuple& B, const BlockMatrix& mu, const BlockMatrix& lam,
                      const BlockMatrix& lam_tilde) {
  if (mu == lam) return 1;
  if (mu == lam_tilde) return LaurentPoly::monomial(2);
  auto m = from_core_parameters(B, mu).lam;
  auto l = from_core_parameters(B, lam).lam;
  auto lt = from_core_parameters(B, lam_tilde).lam;
  bool sandwich = m != l && m != lt && dominance_ge(lt, m) && dominance_ge(m, l);
  if (!sandwich) return 0;
  auto rel = [](const BlockMatrix& a, const BlockMatrix& b) {
    auto h = hook_relation(a, b);
    return h.moves && h.equal_legs;
  };
  if (rel(mu, lam) || rel(lam_tilde, mu)) return LaurentPoly::monomial(1);
  return 0;
}

// ---- r = 4 ----

namespace {

const char* kind_name(R4Kind k) {
  switch (k) {
    case R4Kind::a1:
      return "a1";
    case R4Kind::a2:
      return "a2";
    case R4Kind::a3:
      return "a3";
    case R4Kind::b12:
      return "b12";
    case R4Kind::b13:
      return "b13";
    case R4Kind::bb13:
      return "bb13";
    case R4Kind::b23:
      return "b23";
    case R4Kind::g:
      return "g";
  }
  return "?";
}

R4Kind kind_from(const std::string& s) {
  for (R4Kind k : {R4Kind::a1, R4Kind::a2, R4Kind::a3, R4Kind::b12, R4Kind::b13, R4Kind::bb13, R4Kind::b23, R4Kind::g})
    if (s == kind_name(k)) return k;
  throw InputError("unknown r=4 label kind '" + s + "'");
}

// which of f, g, h a kind carries, in order
std::vector<char> kind_vars(R4Kind k) {
  switch (k) {
    case R4Kind::a1:
      return {'f'};
    case R4Kind::a2:
      return {'g'};
    case R4Kind::a3:
      return {'h'};
    case R4Kind::b12:
      return {'f', 'g'};
    case R4Kind::b13:
    case R4Kind::bb13:
      return {'f', 'h'};
    case R4Kind::b23:
      return {'g', 'h'};
    case R4Kind::g:
      return {'f', 'g', 'h'};
  }
  return {};
}

// (i, j) chains of the tree form
std::pair<std::vector<int>, std::vector<int>> kind_chain(R4Kind k) {
  switch (k) {
    case R4Kind::a1:
      return {{1}, {1, 4}};
    case R4Kind::a2:
      return {{2}, {1, 4}};
    case R4Kind::a3:
      return {{3}, {1, 4}};
    case R4Kind::b12:
      return {{1, 2}, {1, 2, 4}};
    case R4Kind::b13:
      return {{1, 3}, {1, 3, 4}};
    case R4Kind::bb13:
      return {{1, 3}, {1, 2, 4}};
    case R4Kind::b23:
      return {{2, 3}, {1, 3, 4}};
    case R4Kind::g:
      return {{1, 2, 3}, {1, 2, 3, 4}};
  }
  return {};
}

int& var_ref(R4Label& a, char v) { return v == 'f' ? a.f : v == 'g' ? a.g : a.h; }
int var_of(const R4Label& a, char v) { return v == 'f' ? a.f : v == 'g' ? a.g : a.h; }
int row_of_letter(char c) { return c == 'i' ? 1 : c == 'j' ? 2 : 3; }
char var_of_letter(char c) { return c == 'i' ? 'f' : c == 'j' ? 'g' : 'h'; }

struct Term {
  char letter;  // i, j, k
  char var;     // f, g, h
  int off;
};
using Chain = std::vector<std::vector<Term>>;
using Cond = std::vector<std::vector<Chain>>;  // or of ands

struct Entry {
  R4Kind kind;
  std::vector<std::pair<char, int>> idx;
  int power;
};

struct Tilde {
  char var;
  char letter;
  Term bound;
};

struct Table {
  std::string name;
  R4Kind kind;
  std::vector<Tilde> tilde;
  Cond family;
  std::vector<std::pair<Cond, std::vector<Entry>>> rows;
};

std::pair<char, int> parse_index(const std::string& s) {
  if (s.empty() || (s[0] != 'f' && s[0] != 'g' && s[0] != 'h')) throw DataError("bad table index '" + s + "'");
  if (s.size() == 1) return {s[0], 0};
  if (s.substr(1) == "-1") return {s[0], -1};
  throw DataError("bad table index '" + s + "'");
}

Term parse_term(const std::string& s) {
  if (s.size() < 3 || s[1] != '_') throw DataError("bad table term '" + s + "'");
  auto [v, off] = parse_index(s.substr(2));
  if (var_of_letter(s[0]) != v) throw DataError("mismatched table term '" + s + "'");
  return {s[0], v, off};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Chain parse_chain(const std::string& s) {
  Chain ch;
  for (const auto& grp : split(s, '<')) {
    std::vector<Term> g;
    for (const auto& t : split(grp, ',')) g.push_back(parse_term(t));
    ch.push_back(g);
  }
  if (ch.size() < 2) throw DataError("bad table chain '" + s + "'");
  return ch;
}

Cond parse_cond(const nlohmann::json& j) {
  Cond c;
  for (const auto& alt : j) {
    std::vector<Chain> conj;
    for (const auto& s : alt) conj.push_back(parse_chain(s.get<std::string>()));
    c.push_back(conj);
  }
  return c;
}

Entry parse_entry(const nlohmann::json& j) {
  std::string lab = j.at("label").get<std::string>();
  auto colon = lab.find(':');
  if (colon == std::string::npos) throw DataError("bad table label '" + lab + "'");
  Entry e;
  e.kind = kind_from(lab.substr(0, colon));
  for (const auto& part : split(lab.substr(colon + 1), ',')) e.idx.push_back(parse_index(part));
  auto vars = kind_vars(e.kind);
  if (vars.size() != e.idx.size()) throw DataError("bad table label '" + lab + "'");
  for (size_t t = 0; t < vars.size(); ++t)
    if (vars[t] != e.idx[t].first) throw DataError("bad table label '" + lab + "'");
  e.power = j.at("power").get<int>();
  return e;
}

const std::vector<Table>& r4_tables() {
  static const std::vector<Table> tables = [] {
    std::vector<Table> out;
    for (const auto& [file, text] : detail::r4_table_sources()) {
      auto doc = nlohmann::json::parse(text);
      for (const auto& tj : doc.at("tables")) {
        Table t;
        t.name = tj.at("name").get<std::string>();
        t.kind = kind_from(tj.at("label").get<std::string>());
        for (const auto& [v, spec] : tj.at("tilde").items()) {
          auto s = spec.get<std::string>();  // "j<i_f"
          if (s.size() < 3 || s[1] != '<') throw DataError("bad tilde '" + s + "'");
          t.tilde.push_back({v.at(0), s[0], parse_term(s.substr(2))});
        }
        t.family = parse_cond(tj.at("family"));
        for (const auto& rj : tj.at("rows")) {
          std::vector<Entry> ents;
          for (const auto& ej : rj.at("entries")) ents.push_back(parse_entry(ej));
          t.rows.emplace_back(parse_cond(rj.at("condition")), ents);
        }
        out.push_back(std::move(t));
      }
    }
    // the gamma tables are keyed by family; keep a fixed order
    std::stable_sort(out.begin(), out.end(), [](const Table& a, const Table& b) { return a.name < b.name; });
    return out;
  }();
  return tables;
}

struct R4Pos {
  const R4Block& b;
  int at(char letter, int idx) const {
    int a = row_of_letter(letter);
    if (idx <= 0) return -1;
    if (idx > b.y(a)) return b.ncols;
    return b.Y[a][idx - 1];
  }
};

bool eval(const Cond& c, const R4Pos& p, const R4Label& vars) {
  for (const auto& conj : c) {
    bool ok = true;
    for (const auto& ch : conj) {
      for (size_t t = 0; ok && t + 1 < ch.size(); ++t)
        for (const auto& x : ch[t])
          for (const auto& y : ch[t + 1])
            if (!(p.at(x.letter, var_of(vars, x.var) + x.off) < p.at(y.letter, var_of(vars, y.var) + y.off))) ok = false;
      if (!ok) break;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::string to_string(const R4Label& a) {
  std::string s = kind_name(a.kind);
  s += ':';
  bool first = true;
  for (char v : kind_vars(a.kind)) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(var_of(a, v));
  }
  return s;
}

R4Label parse_r4_label(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw InputError("r=4 label needs 'kind:indices', got '" + s + "'");
  R4Label a;
  a.kind = kind_from(s.substr(0, colon));
  auto parts = split(s.substr(colon + 1), ',');
  auto vars = kind_vars(a.kind);
  if (parts.size() != vars.size()) throw InputError("wrong number of indices in '" + s + "'");
  for (size_t t = 0; t < vars.size(); ++t) {
    try {
      var_ref(a, vars[t]) = std::stoi(parts[t]);
    } catch (const std::exception&) {
      throw InputError("bad index in '" + s + "'");
    }
  }
  return a;
}

bool valid_label(const R4Block& blk, const R4Label& a) {
  if (blk.Y.size() != 5) return false;
  for (char v : {'f', 'g', 'h'}) {
    auto vars = kind_vars(a.kind);
    bool used = std::find(vars.begin(), vars.end(), v) != vars.end();
    int x = var_of(a, v);
    int ymax = blk.y(v == 'f' ? 1 : v == 'g' ? 2 : 3);
    if (used ? (x < 1 || x > ymax) : x != 0) return false;
  }
  return true;
}

std::vector<R4Label> r4_labels(const R4Block& blk) {
  std::vector<R4Label> out;
  int y1 = blk.y(1), y2 = blk.y(2), y3 = blk.y(3);
  for (int f = 1; f <= y1; ++f) out.push_back({R4Kind::a1, f, 0, 0});
  for (int g = 1; g <= y2; ++g) out.push_back({R4Kind::a2, 0, g, 0});
  for (int h = 1; h <= y3; ++h) out.push_back({R4Kind::a3, 0, 0, h});
  for (int f = 1; f <= y1; ++f)
    for (int g = 1; g <= y2; ++g) out.push_back({R4Kind::b12, f, g, 0});
  for (int f = 1; f <= y1; ++f)
    for (int h = 1; h <= y3; ++h) {
      out.push_back({R4Kind::b13, f, 0, h});
      out.push_back({R4Kind::bb13, f, 0, h});
    }
  for (int g = 1; g <= y2; ++g)
    for (int h = 1; h <= y3; ++h) out.push_back({R4Kind::b23, 0, g, h});
  for (int f = 1; f <= y1; ++f)
    for (int g = 1; g <= y2; ++g)
      for (int h = 1; h <= y3; ++h) out.push_back({R4Kind::g, f, g, h});
  return out;
}

BlockMatrix r4_matrix(const R4Block& blk, const R4Label& a) {
  if (!valid_label(blk, a)) throw ContractViolation("r4_matrix: label " + to_string(a) + " out of range");
  auto [i, j] = kind_chain(a.kind);
  std::vector<int> w;
  for (int s : i) w.push_back(var_of(a, s == 1 ? 'f' : s == 2 ? 'g' : 'h'));
  return delta_matrix(blk.e, blk.ncols, blk.Y, {}, i, j, w, blk.lo);
}

std::optional<std::pair<R4Block, R4Label>> classify_r4(const BlockMatrix& M) {
  if (M.r() != 4) return std::nullopt;
  auto tc = match_delta(M, {0, 1, 2, 3});
  if (!tc) return std::nullopt;
  R4Block blk{M.e, M.lo, M.ncols, tc->Y};
  if (blk.y(1) == 0 || blk.y(2) == 0 || blk.y(3) == 0) return std::nullopt;
  for (R4Kind k : {R4Kind::a1, R4Kind::a2, R4Kind::a3, R4Kind::b12, R4Kind::b13, R4Kind::bb13, R4Kind::b23, R4Kind::g}) {
    auto [i, j] = kind_chain(k);
    if (i != tc->i || j != tc->j) continue;
    R4Label a{k, 0, 0, 0};
    for (size_t t = 0; t < i.size(); ++t) var_ref(a, i[t] == 1 ? 'f' : i[t] == 2 ? 'g' : 'h') = tc->w[t];
    return std::make_pair(blk, a);
  }
  return std::nullopt;
}

bool kleshchev_r4(const R4Block& blk, const R4Label& a) {
  if (!valid_label(blk, a)) throw ContractViolation("kleshchev_r4: label out of range");
  R4Pos p{blk};
  int i1 = p.at('i', 1), j1 = p.at('j', 1), k1 = p.at('k', 1);
  int I = p.at('i', a.f), J = p.at('j', a.g), K = p.at('k', a.h);
  switch (a.kind) {
    case R4Kind::a1:
      return k1 < I;
    case R4Kind::a2:
      return i1 < J && k1 < J;
    case R4Kind::a3:
      return i1 < K;
    case R4Kind::b12:
      return chain({k1, J, I}) || (k1 < J && I < J && a.f != 1);
    case R4Kind::b13:
      return chain({j1, I, K}) || (K < I && a.h != 1);
    case R4Kind::bb13:
      return chain({j1, K, I}) || (I < K && a.f != 1);
    case R4Kind::b23:
      return chain({i1, J, K}) || (i1 < J && K < J && a.h != 1);
    case R4Kind::g:
      return (J < I && J < K && a.g != 1) || (chain({I, J, K}) && a.f != 1) || (chain({K, J, I}) && a.h != 1) ||
             (I < J && K < J && a.f != 1 && a.h != 1);
  }
  return false;
}

R4Column column_r4(const R4Block& blk, const R4Label& a) {
  if (!kleshchev_r4(blk, a)) throw ContractViolation("column_r4: " + to_string(a) + " is not Kleshchev");
  R4Pos p{blk};
  for (const auto& t : r4_tables()) {
    if (t.kind != a.kind) continue;
    R4Label vars = a;
    for (const auto& td : t.tilde) {
      int bound = p.at(td.bound.letter, var_of(a, td.bound.var) + td.bound.off);
      int best = 0;
      for (int x = 1; x <= blk.y(row_of_letter(td.letter)); ++x)
        if (p.at(td.letter, x) < bound) best = x;
      var_ref(vars, td.var) = best;
    }
    if (!t.family.empty() && !eval(t.family, p, vars)) continue;
    for (const auto& [cond, ents] : t.rows) {
      if (!eval(cond, p, vars)) continue;
      R4Column col;
      for (const auto& e : ents) {
        R4Label b{e.kind, 0, 0, 0};
        for (const auto& [v, off] : e.idx) var_ref(b, v) = var_of(vars, v) + off;
        if (!valid_label(blk, b))
          throw DataError("column_r4: table " + t.name + " produced " + to_string(b) + " for " + to_string(a));
        add_term(col, b, LaurentPoly::monomial(e.power));
      }
      return col;
    }
    throw DataError("column_r4: no row of table " + t.name + " matches " + to_string(a));
  }
  throw DataError("column_r4: no table covers " + to_string(a));
}

MatVector to_matrices(const R4Block& blk, const R4Column& col) {
  MatVector out;
  for (const auto& [a, p] : col) add_term(out, r4_matrix(blk, a), p);
  return out;
}

// ---- whole blocks ----

namespace {

struct Family {
  std::map<BlockMatrix, std::string> names;
  std::function<bool(const BlockMatrix&)> kleshchev;
  std::function<MatVector(const BlockMatrix&)> column;
};

std::optional<Family> family_of(const BlockMatrix& M0) {
  Family fam;
  if (auto c = classify_weight2(M0)) {
    auto blk = c->first;
    auto lab = std::make_shared<std::map<BlockMatrix, Weight2Label>>();
    for (const auto& a : weight2_labels(blk)) {
      auto M = weight2_matrix(blk, a);
      (*lab)[M] = a;
      fam.names[M] = to_string(a);
    }
    fam.kleshchev = [blk, lab](const BlockMatrix& M) { return kleshchev_weight2(blk, lab->at(M)); };
    fam.column = [blk, lab](const BlockMatrix& M) { return to_matrices(blk, column_weight2(blk, lab->at(M))); };
    return fam;
  }
  if (auto c = classify_r4(M0)) {
    auto blk = c->first;
    auto lab = std::make_shared<std::map<BlockMatrix, R4Label>>();
    for (const auto& a : r4_labels(blk)) {
      auto M = r4_matrix(blk, a);
      (*lab)[M] = a;
      fam.names[M] = to_string(a);
    }
    fam.kleshchev = [blk, lab](const BlockMatrix& M) { return kleshchev_r4(blk, lab->at(M)); };
    fam.column = [blk, lab](const BlockMatrix& M) { return to_matrices(blk, column_r4(blk, lab->at(M))); };
    return fam;
  }
  return std::nullopt;
}

}  // namespace

bool attach_labels(DecompMatrix& D) {
  if (D.row_matrices.empty()) return false;
  auto fam = family_of(D.row_matrices.front());
  if (!fam) return false;
  std::vector<std::string> out;
  for (const auto& M : D.row_matrices) {
    auto it = fam->names.find(M);
    if (it == fam->names.end()) return false;
    out.push_back(it->second);
  }
  D.labels = std::move(out);
  return true;
}

std::optional<DecompMatrix> formula_decomposition_matrix(const BaseTuple& B, const BlockMatrix& M0) {
  auto fam = family_of(M0);
  if (!fam) return std::nullopt;
  DecompMatrix D = block_rows(B, M0);
  std::map<BlockMatrix, int> row_of;
  for (size_t x = 0; x < D.rows.size(); ++x) {
    const auto& M = D.row_matrices[x];
    if (!fam->names.count(M)) throw DataError("formula_decomposition_matrix: block member without a label");
    row_of[M] = static_cast<int>(x);
    D.labels.push_back(fam->names.at(M));
  }
  if (row_of.size() != fam->names.size()) throw DataError("formula_decomposition_matrix: label set is not the block");
  for (size_t x = 0; x < D.rows.size(); ++x)
    if (fam->kleshchev(D.row_matrices[x])) add_column(D, static_cast<int>(x));
  for (size_t c = 0; c < D.cols.size(); ++c) {
    for (const auto& [M, p] : fam->column(D.row_matrices[D.col_rows[c]])) D.entries[row_of.at(M)][c] = p;
    D.status[c] = ColumnStatus::ok;
  }
  return D;
}

}  // namespace akb
