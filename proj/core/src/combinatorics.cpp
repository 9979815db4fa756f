#include "akblock/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

namespace akb {

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

int size(const Multipartition& lam) {
  int n = 0;
  for (const auto& p : lam) n += size(p);
  return n;
}

bool is_partition(const Partition& p) {
  for (size_t x = 0; x < p.size(); ++x) {
    if (p[x] <= 0) return false;
    if (x + 1 < p.size() && p[x] < p[x + 1]) return false;
  }
  return true;
}

Partition conjugate(const Partition& p) {
  Partition c(p.empty() ? 0 : p[0], 0);
  for (int part : p)
    for (int y = 0; y < part; ++y) ++c[y];
  return c;
}

Multipartition empty_multipartition(int r) { return Multipartition(r); }

int mod_residue(long long v, int e) {
  if (e == 0) return static_cast<int>(v);
  long long m = v % e;
  return static_cast<int>(m < 0 ? m + e : m);
}

int residue(const Node& n, const Multicharge& mc) {
  return mod_residue(static_cast<long long>(mc.a.at(n.s - 1)) - n.x + n.y, mc.e);
}

std::map<int, int> residue_content(const Multipartition& lam, const Multicharge& mc) {
  std::map<int, int> c;
  for (size_t s = 0; s < lam.size(); ++s)
    for (size_t x = 0; x < lam[s].size(); ++x)
      for (int y = 1; y <= lam[s][x]; ++y)
        ++c[residue({static_cast<int>(s) + 1, static_cast<int>(x) + 1, y}, mc)];
  return c;
}

std::vector<int> dominance_profile(const Multipartition& lam) {
  std::vector<int> prof;
  int before = 0;
  size_t width = 0;
  for (const auto& p : lam) width = std::max(width, p.size());
  for (const auto& p : lam) {
    int acc = before;
    for (size_t z = 0; z < width; ++z) {
      if (z < p.size()) acc += p[z];
      prof.push_back(acc);
    }
    before += size(p);
  }
  return prof;
}

bool dominance_ge(const Multipartition& mu, const Multipartition& lam) {
  if (mu.size() != lam.size()) throw ContractViolation("dominance_ge: component counts differ");
  if (size(mu) != size(lam)) throw ContractViolation("dominance_ge: sizes differ");
  int bm = 0, bl = 0;
  for (size_t t = 0; t < mu.size(); ++t) {
    size_t len = std::max(mu[t].size(), lam[t].size());
    int am = bm, al = bl;
    if (am < al) return false;
    for (size_t z = 0; z < len; ++z) {
      if (z < mu[t].size()) am += mu[t][z];
      if (z < lam[t].size()) al += lam[t][z];
      if (am < al) return false;
    }
    bm = am;
    bl = al;
  }
  return true;
}

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

BetaSet beta_set(const Partition& lam, int a, int e) {
  if (!is_partition(lam)) throw ContractViolation("beta_set: not a partition");
  int len = static_cast<int>(lam.size());
  std::vector<int> all;
  for (int j = 1; j <= len; ++j) all.push_back(lam[j - 1] - j + a);
  // positions <= a-len-1 are all beads; smallest gap
  std::set<int> beads(all.begin(), all.end());
  int gap = a - len;
  for (int x = a - len; beads.count(x); ++x) gap = x + 1;
  int fl = e >= 2 ? static_cast<int>(floor_div(gap, e) * e) : gap;
  BetaSet b;
  b.charge = a;
  b.floor = fl;
  for (int x : all)
    if (x >= fl) b.betas.push_back(x);
  for (int x = a - len - 1; x >= fl; --x) b.betas.push_back(x);
  return b;
}

Partition partition_from_beta(const BetaSet& b) {
  std::vector<int> bs = b.betas;
  std::sort(bs.rbegin(), bs.rend());
  if (std::adjacent_find(bs.begin(), bs.end()) != bs.end())
    throw ContractViolation("malformed beta set: repeated position");
  for (int x : bs)
    if (x < b.floor) throw ContractViolation("malformed beta set: position below floor");
  if (b.floor + static_cast<int>(bs.size()) != b.charge)
    throw ContractViolation("malformed beta set: charge does not match bead count");
  Partition p;
  for (size_t j = 0; j < bs.size(); ++j) {
    int part = bs[j] + static_cast<int>(j) + 1 - b.charge;
    if (part > 0) p.push_back(part);
  }
  return p;
}

std::vector<Node> removable_nodes(const Multipartition& lam) {
  std::vector<Node> out;
  for (size_t s = 0; s < lam.size(); ++s) {
    const auto& p = lam[s];
    for (size_t x = 0; x < p.size(); ++x)
      if (x + 1 == p.size() || p[x + 1] < p[x])
        out.push_back({static_cast<int>(s) + 1, static_cast<int>(x) + 1, p[x]});
  }
  return out;
}

std::vector<Node> addable_nodes(const Multipartition& lam) {
  std::vector<Node> out;
  for (size_t s = 0; s < lam.size(); ++s) {
    const auto& p = lam[s];
    for (size_t x = 0; x <= p.size(); ++x) {
      int cur = x < p.size() ? p[x] : 0;
      if (x == 0 || p[x - 1] > cur) out.push_back({static_cast<int>(s) + 1, static_cast<int>(x) + 1, cur + 1});
    }
  }
  return out;
}

std::vector<Node> removable_nodes(const Multipartition& lam, const Multicharge& mc, int i) {
  std::vector<Node> out;
  for (const auto& n : removable_nodes(lam))
    if (residue(n, mc) == i) out.push_back(n);
  return out;
}

std::vector<Node> addable_nodes(const Multipartition& lam, const Multicharge& mc, int i) {
  std::vector<Node> out;
  for (const auto& n : addable_nodes(lam))
    if (residue(n, mc) == i) out.push_back(n);
  return out;
}

Multipartition add_node(Multipartition lam, const Node& n) {
  auto& p = lam.at(n.s - 1);
  int cur = n.x - 1 < static_cast<int>(p.size()) ? p[n.x - 1] : 0;
  bool ok = n.y == cur + 1 && (n.x == 1 || p[n.x - 2] > cur) && n.x - 1 <= static_cast<int>(p.size());
  if (!ok) throw ContractViolation("add_node: node is not addable");
  if (n.x - 1 == static_cast<int>(p.size()))
    p.push_back(1);
  else
    ++p[n.x - 1];
  return lam;
}

Multipartition remove_node(Multipartition lam, const Node& n) {
  auto& p = lam.at(n.s - 1);
  bool ok = n.x >= 1 && n.x <= static_cast<int>(p.size()) && p[n.x - 1] == n.y &&
            (n.x == static_cast<int>(p.size()) || p[n.x] < n.y);
  if (!ok) throw ContractViolation("remove_node: node is not removable");
  if (--p[n.x - 1] == 0) p.pop_back();
  return lam;
}

namespace {

// all removable/addable i-nodes merged in "above" order; flag true = removable
std::vector<std::pair<Node, bool>> signature(const Multipartition& lam, const Multicharge& mc, int i) {
  std::vector<std::pair<Node, bool>> sig;
  for (const auto& n : removable_nodes(lam, mc, i)) sig.push_back({n, true});
  for (const auto& n : addable_nodes(lam, mc, i)) sig.push_back({n, false});
  std::sort(sig.begin(), sig.end(), [](const auto& p, const auto& q) {
    return std::pair(p.first.s, p.first.x) < std::pair(q.first.s, q.first.x);
  });
  return sig;
}

bool normal_at(const std::vector<std::pair<Node, bool>>& sig, size_t idx) {
  int rem = 0, add = 0;
  for (size_t j = idx + 1; j < sig.size(); ++j) {
    if (sig[j].second) {
      ++rem;
    } else {
      if (rem <= add) return false;
      ++add;
    }
  }
  return true;
}

}  // namespace

bool is_normal(const Multipartition& lam, const Multicharge& mc, const Node& n) {
  int i = residue(n, mc);
  auto sig = signature(lam, mc, i);
  for (size_t j = 0; j < sig.size(); ++j)
    if (sig[j].second && sig[j].first == n) return normal_at(sig, j);
  throw ContractViolation("is_normal: node is not removable");
}

std::optional<Node> good_node(const Multipartition& lam, const Multicharge& mc, int i) {
  auto sig = signature(lam, mc, i);
  for (size_t j = 0; j < sig.size(); ++j)
    if (sig[j].second && normal_at(sig, j)) return sig[j].first;
  return std::nullopt;
}

std::vector<int> removable_residues(const Multipartition& lam, const Multicharge& mc) {
  std::set<int> res;
  for (const auto& n : removable_nodes(lam)) res.insert(residue(n, mc));
  return {res.begin(), res.end()};
}

bool is_kleshchev(const Multipartition& lam, const Multicharge& mc) {
  std::map<Multipartition, bool> memo;
  std::function<bool(const Multipartition&)> go = [&](const Multipartition& m) -> bool {
    if (size(m) == 0) return true;
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    bool ok = false;
    for (int i : removable_residues(m, mc)) {
      if (auto g = good_node(m, mc, i); g && go(remove_node(m, *g))) {
        ok = true;
        break;
      }
    }
    memo[m] = ok;
    return ok;
  };
  return go(lam);
}

int n_statistic(const Multipartition& sigma, const Multipartition& lam, const Multicharge& mc, int i) {
  if (sigma.size() != lam.size()) throw ContractViolation("n_statistic: component counts differ");
  std::vector<Node> added;
  for (size_t s = 0; s < lam.size(); ++s) {
    const auto& a = sigma[s];
    const auto& b = lam[s];
    if (a.size() > b.size()) throw ContractViolation("n_statistic: sigma not contained in lambda");
    for (size_t x = 0; x < b.size(); ++x) {
      int ax = x < a.size() ? a[x] : 0;
      if (ax > b[x]) throw ContractViolation("n_statistic: sigma not contained in lambda");
      for (int y = ax + 1; y <= b[x]; ++y) {
        Node n{static_cast<int>(s) + 1, static_cast<int>(x) + 1, y};
        if (residue(n, mc) != i) throw ContractViolation("n_statistic: added node of wrong residue");
        added.push_back(n);
      }
    }
  }
  if (added.empty()) throw ContractViolation("n_statistic: nothing added");
  auto addl = addable_nodes(lam, mc, i);
  auto rems = removable_nodes(sigma, mc, i);
  int total = 0;
  for (const auto& g : added) {
    for (const auto& b : addl)
      if (above(g, b)) ++total;
    for (const auto& b : rems)
      if (above(g, b)) --total;
  }
  return total;
}

namespace {

std::vector<int> betas_charge(const Partition& lam, int n) {
  std::vector<int> b;
  for (int j = 1; j <= n; ++j) b.push_back((j <= static_cast<int>(lam.size()) ? lam[j - 1] : 0) - j + n);
  return b;
}

Partition from_betas(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  int n = static_cast<int>(b.size());
  Partition p;
  for (int j = 1; j <= n; ++j)
    if (int part = b[j - 1] + j - n; part > 0) p.push_back(part);
  return p;
}

RimHook diff_hook(const Partition& big, const Partition& small) {
  RimHook h;
  int top = 0, bottom = -1;
  for (size_t x = 0; x < big.size(); ++x) {
    int sx = x < small.size() ? small[x] : 0;
    for (int y = sx + 1; y <= big[x]; ++y) h.cells.push_back({static_cast<int>(x) + 1, y});
    if (big[x] > sx) {
      if (bottom < 0) top = static_cast<int>(x);
      bottom = static_cast<int>(x);
    }
  }
  h.leg = bottom - top;
  return h;
}

}  // namespace

std::vector<RimHook> rim_hooks(const Partition& lam, std::optional<int> length) {
  if (!is_partition(lam)) throw ContractViolation("rim_hooks: not a partition");
  int n = static_cast<int>(lam.size());
  auto b = betas_charge(lam, n);
  std::set<int> bs(b.begin(), b.end());
  std::vector<RimHook> out;
  // bead order top row first = largest bead first
  for (int j = 0; j < n; ++j) {
    for (int h = 1; h <= b[j]; ++h) {
      if (length && h != *length) continue;
      if (bs.count(b[j] - h)) continue;
      auto nb = b;
      nb[j] -= h;
      out.push_back(diff_hook(lam, from_betas(nb)));
    }
  }
  return out;
}

std::vector<RimHook> addable_rim_hooks(const Partition& lam, int length) {
  if (!is_partition(lam)) throw ContractViolation("addable_rim_hooks: not a partition");
  int n = static_cast<int>(lam.size()) + length;
  auto b = betas_charge(lam, n);
  std::set<int> bs(b.begin(), b.end());
  std::vector<RimHook> out;
  for (int j = 0; j < n; ++j) {
    if (bs.count(b[j] + length)) continue;
    auto nb = b;
    nb[j] += length;
    Partition big = from_betas(nb);
    out.push_back(diff_hook(big, lam));
  }
  return out;
}

Partition remove_rim_hook(const Partition& lam, const RimHook& h) {
  for (const auto& c : rim_hooks(lam, static_cast<int>(h.cells.size())))
    if (c.cells == h.cells) {
      Partition p = lam;
      for (auto [x, y] : h.cells) --p[x - 1];
      while (!p.empty() && p.back() == 0) p.pop_back();
      return p;
    }
  throw ContractViolation("remove_rim_hook: not a removable rim hook");
}

Partition add_rim_hook(const Partition& lam, const RimHook& h) {
  for (const auto& c : addable_rim_hooks(lam, static_cast<int>(h.cells.size())))
    if (c.cells == h.cells) {
      Partition p = lam;
      for (auto [x, y] : h.cells) {
        if (x > static_cast<int>(p.size())) p.resize(x, 0);
        ++p[x - 1];
      }
      return p;
    }
  throw ContractViolation("add_rim_hook: not an addable rim hook");
}

bool is_core(const Partition& lam, int e) { return e == 0 || rim_hooks(lam, e).empty(); }

namespace {

[[noreturn]] void parse_fail(const std::string& s, size_t col, const std::string& why) {
  throw InputError("multipartition '" + s + "', column " + std::to_string(col + 1) + ": " + why);
}

}  // namespace

Multipartition parse_multipartition(const std::string& s) {
  Multipartition out;
  size_t p = 0;
  auto skip_ws = [&] {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  };
  for (;;) {
    Partition part;
    skip_ws();
    if (p < s.size() && (s[p] == '-' || s[p] == '0')) {
      ++p;
      skip_ws();
    } else if (p < s.size() && s[p] != '|') {
      for (;;) {
        skip_ws();
        size_t st = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (st == p) parse_fail(s, p, "expected a positive integer");
        int v = std::stoi(s.substr(st, p - st));
        int rep = 1;
        if (p < s.size() && s[p] == '^') {
          size_t q = ++p;
          while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
          if (q == p) parse_fail(s, p, "expected an exponent");
          rep = std::stoi(s.substr(q, p - q));
        }
        if (v <= 0) parse_fail(s, st, "parts must be positive");
        for (int k = 0; k < rep; ++k) part.push_back(v);
        skip_ws();
        if (p < s.size() && s[p] == ',') {
          ++p;
          continue;
        }
        break;
      }
      if (!is_partition(part)) parse_fail(s, p == 0 ? 0 : p - 1, "parts must be weakly decreasing");
    }
    out.push_back(part);
    skip_ws();
    if (p == s.size()) break;
    if (s[p] != '|') parse_fail(s, p, std::string("unexpected character '") + s[p] + "'");
    ++p;
  }
  return out;
}

std::string format_partition(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (size_t x = 0; x < p.size(); ++x) out += (x ? "," : "") + std::to_string(p[x]);
  return out;
}

std::string format_multipartition(const Multipartition& lam) {
  std::string out;
  for (size_t s = 0; s < lam.size(); ++s) out += (s ? "|" : "") + format_partition(lam[s]);
  return out;
}

std::string format_partition_exp(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (size_t x = 0; x < p.size();) {
    size_t y = x;
    while (y < p.size() && p[y] == p[x]) ++y;
    if (!out.empty()) out += ",";
    out += std::to_string(p[x]);
    if (y - x > 1) out += "^" + std::to_string(y - x);
    x = y;
  }
  return out;
}

std::string format_multipartition_exp(const Multipartition& lam) {
  std::string out;
  for (size_t s = 0; s < lam.size(); ++s) out += (s ? "|" : "") + format_partition_exp(lam[s]);
  return out;
}

}  // namespace akb
