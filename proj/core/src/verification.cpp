#include "akblock/verification.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "akblock/formulas.hpp"
#include "json.hpp"

namespace akb {

using nlohmann::json;

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped_budget: return "skipped-budget";
  }
  return "?";
}

CheckStatus CheckTally::status() const {
  if (failed) return CheckStatus::fail;
  if (skipped) return CheckStatus::skipped_budget;
  return CheckStatus::pass;
}

CheckTally& VerificationReport::tally(const std::string& name) {
  for (auto& c : checks)
    if (c.name == name) return c;
  checks.push_back({name});
  return checks.back();
}

long long VerificationReport::failure_count() const {
  long long n = 0;
  for (const auto& c : checks) n += c.failed;
  return n;
}

std::string VerificationReport::to_json(int indent) const {
  json j;
  j["suite"] = suite;
  j["parameters"] = json::parse(parameters.empty() ? "{}" : parameters);
  json cs = json::array();
  for (const auto& c : checks)
    cs.push_back({{"name", c.name},
                  {"status", akb::to_string(c.status())},
                  {"passed", c.passed},
                  {"failed", c.failed},
                  {"skipped_budget", c.skipped}});
  j["checks"] = cs;
  auto list = [](const std::vector<Counterexample>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back({{"check", x.check}, {"payload", json::parse(x.payload)}});
    return a;
  };
  j["failures"] = list(failures);
  j["skips"] = list(skips);
  j["findings"] = list(findings);
  j["failure_count"] = failure_count();
  j["passed"] = passed();
  return j.dump(indent);
}

namespace {

constexpr int kKeepPerCheck = 20;

void pass(VerificationReport& rep, const std::string& check) { ++rep.tally(check).passed; }

void fail(VerificationReport& rep, const std::string& check, const json& payload) {
  auto& t = rep.tally(check);
  if (++t.failed <= kKeepPerCheck) rep.failures.push_back({check, payload.dump()});
}

void skip(VerificationReport& rep, const std::string& check, const json& payload) {
  auto& t = rep.tally(check);
  if (++t.skipped <= kKeepPerCheck) rep.skips.push_back({check, payload.dump()});
}

void check(VerificationReport& rep, const std::string& name, bool ok, const std::function<json()>& payload) {
  if (ok)
    pass(rep, name);
  else
    fail(rep, name, payload());
}

// portable: no distribution objects, whose output differs between standard libraries
struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  int uni(int lo, int hi) { return lo + static_cast<int>(g() % static_cast<std::uint64_t>(hi - lo + 1)); }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t x = v.size(); x > 1; --x) std::swap(v[x - 1], v[g() % x]);
  }
};

Multipartition pt(const BaseTuple& B, const BlockMatrix& M) { return from_core_parameters(B, M).lam; }

json bits_json(const BlockMatrix& M) { return M.bits(); }

json vec_json(const MatVector& v, const std::function<std::string(const BlockMatrix&)>& name) {
  json j = json::object();
  for (const auto& [M, p] : v) j[name(M)] = p.str();
  return j;
}

json diff_json(const MatVector& got, const MatVector& want, const std::function<std::string(const BlockMatrix&)>& name) {
  std::set<BlockMatrix> keys;
  for (const auto& [M, p] : got) keys.insert(M);
  for (const auto& [M, p] : want) keys.insert(M);
  json d = json::array();
  for (const auto& M : keys) {
    auto a = got.count(M) ? got.at(M) : LaurentPoly();
    auto b = want.count(M) ? want.at(M) : LaurentPoly();
    if (a != b) d.push_back({{"mu", name(M)}, {"formula", a.str()}, {"engine", b.str()}});
  }
  return d;
}

// lam~ is the entry equal to v^w; every entry lies between lam and lam~ in dominance
std::string mullconj_violation(const BaseTuple& B, const BlockMatrix& lam, const MatVector& col,
                               BlockMatrix* tilde = nullptr) {
  int w = matrix_weight(lam);
  auto it = col.find(lam);
  if (it == col.end() || !it->second.is_one()) return "diagonal entry is not 1";
  const BlockMatrix* top = nullptr;
  for (const auto& [M, p] : col)
    if (p == LaurentPoly::monomial(w)) {
      if (top) return "more than one entry equals v^w";
      top = &M;
    }
  if (!top) return "no entry equals v^w";
  auto L = pt(B, lam), T = pt(B, *top);
  for (const auto& [M, p] : col) {
    auto mu = pt(B, M);
    if (!dominance_ge(T, mu) || !dominance_ge(mu, L)) return "entry outside the dominance interval";
    if (M != lam && !p.in_v_nat()) return "off-diagonal entry not in vN[v]";
  }
  if (tilde) *tilde = *top;
  return {};
}

std::vector<int> bits_of(unsigned m, int n) {
  std::vector<int> out;
  for (int c = 0; c < n; ++c)
    if (m >> c & 1) out.push_back(c);
  return out;
}

}  // namespace

// ---- weight 2 ----

VerificationReport verify_weight2(const Weight2Options& opt) {
  VerificationReport rep;
  rep.suite = "weight2";
  rep.parameters = json{{"e_min", opt.e_min},
                        {"e_max", opt.e_max},
                        {"yz_max", opt.yz_max},
                        {"hook_e_max", opt.hook_e_max},
                        {"inject_fault", opt.inject_fault},
                        {"budget", opt.search.budget}}
                       .dump();
  for (auto n : {"class_size", "classification", "kleshchev_count", "kleshchev", "column", "mt2", "mullconj",
                 "hook_relation"})
    rep.tally(n);
  bool injected = false;

  for (int e = std::max(opt.e_min, 2); e <= opt.e_max; ++e) {
    InductionEngine eng(opt.search);
    BaseTuple B0 = zero_base(e);
    for (int u = 1; u <= 6; ++u)
      for (unsigned ym = 1; ym < (1u << e); ++ym)
        for (unsigned zm = 1; zm < (1u << e); ++zm) {
          if (ym & zm) continue;
          if (std::popcount(ym) > opt.yz_max + 1 || std::popcount(zm) > opt.yz_max + 1) continue;
          Weight2Block blk{e, 0, e, u, bits_of(ym, e), bits_of(zm, e), {}};
          json where{{"e", e}, {"u", u}, {"Y", blk.Y}, {"Z", blk.Z}};
          auto labels = weight2_labels(blk);
          std::map<Weight2Label, BlockMatrix> mat;
          std::map<BlockMatrix, std::string> name;
          for (const auto& a : labels) {
            mat[a] = weight2_matrix(blk, a);
            name[mat[a]] = to_string(a);
          }
          auto nm = [&](const BlockMatrix& M) { return name.count(M) ? name.at(M) : M.str(); };

          auto cls = block_class(mat.begin()->second);
          std::vector<BlockMatrix> mine;
          for (const auto& [a, M] : mat) mine.push_back(M);
          std::sort(mine.begin(), mine.end());
          long long want = (blk.y() + 2LL) * (blk.z() + 2) - 1;
          check(rep, "class_size", mine == cls.members && static_cast<long long>(mine.size()) == want, [&] {
            return json{{"block", where}, {"labels", mine.size()}, {"class", cls.members.size()}, {"expected", want}};
          });

          std::optional<Weight2Block> fam;
          bool cls_ok = true;
          for (const auto& M : mine) {
            auto c = classify_weight2(M);
            if (!c || weight2_matrix(c->first, c->second) != M || (fam && *fam != c->first)) cls_ok = false;
            if (c && !fam) fam = c->first;
          }
          check(rep, "classification", cls_ok, [&] { return json{{"block", where}}; });

          int kcount = 0;
          for (const auto& a : labels) {
            const auto& M = mat[a];
            bool k1 = kleshchev_weight2(blk, a), k2 = member_is_kleshchev(B0, M);
            kcount += k1;
            check(rep, "kleshchev", k1 == k2, [&] {
              return json{{"block", where}, {"label", to_string(a)}, {"formula", k1}, {"oracle", k2}};
            });
            if (!k1 || !k2) continue;

            json here{{"block", where}, {"label", to_string(a)}, {"matrix", bits_json(M)}};
            MatVector mv;
            try {
              mv = to_matrices(blk, column_weight2(blk, a));
            } catch (const DataError& ex) {
              here["error"] = ex.what();
              fail(rep, "column", here);
              continue;
            }
            if (opt.inject_fault && !injected && mv.size() > 1) {
              auto& p = std::prev(mv.end())->second;
              p = p * LaurentPoly::monomial(1);
              injected = true;
            }
            auto res = eng.column(B0, M);
            if (res.status != ColumnStatus::ok) {
              here["status"] = to_string(res.status);
              for (auto n : {"column", "mt2", "mullconj"}) skip(rep, n, here);
              continue;
            }
            check(rep, "column", mv == res.by_matrix, [&] {
              json p = here;
              p["formula"] = vec_json(mv, nm);
              p["engine"] = vec_json(res.by_matrix, nm);
              p["diff"] = diff_json(mv, res.by_matrix, nm);
              return p;
            });

            BlockMatrix tilde;
            auto why = mullconj_violation(B0, M, res.by_matrix, &tilde);
            check(rep, "mullconj", why.empty(), [&] {
              json p = here;
              p["reason"] = why;
              p["engine"] = vec_json(res.by_matrix, nm);
              return p;
            });
            if (!why.empty()) continue;

            json bad = json::array();
            for (const auto& b : labels) {
              auto d = d_via_mt2(B0, mat[b], M, tilde);
              auto it = res.by_matrix.find(mat[b]);
              auto x = it == res.by_matrix.end() ? LaurentPoly() : it->second;
              if (d != x) bad.push_back({{"mu", to_string(b)}, {"mt2", d.str()}, {"engine", x.str()}});
            }
            check(rep, "mt2", bad.empty(), [&] {
              json p = here;
              p["diff"] = bad;
              return p;
            });
          }
          long long kwant = (blk.y() + 1LL) * (blk.z() + 1);
          check(rep, "kleshchev_count", kcount == kwant,
                [&] { return json{{"block", where}, {"count", kcount}, {"expected", kwant}}; });

          if (e <= opt.hook_e_max) {
            json bad = json::array();
            for (const auto& [a, M] : mat)
              for (const auto& [b, N] : mat) {
                auto h1 = hook_relation(M, N);
                auto h2 = hook_relation_diagram(pt(B0, M), pt(B0, N));
                if (h1 != h2 && bad.size() < 5) bad.push_back({to_string(a), to_string(b)});
              }
            check(rep, "hook_relation", bad.empty(), [&] { return json{{"block", where}, {"pairs", bad}}; });
          }
        }
  }
  return rep;
}

// ---- r = 4 ----

VerificationReport verify_r4(const R4Options& opt) {
  VerificationReport rep;
  rep.suite = "r4";
  rep.parameters = json{{"e_min", opt.e_min},
                        {"e_max", opt.e_max},
                        {"y_max", opt.y_max},
                        {"blocks_per_e", opt.blocks_per_e},
                        {"seed", opt.seed},
                        {"budget", opt.search.budget}}
                       .dump();
  for (auto n : {"classification", "kleshchev", "column", "specialization", "mullconj"}) rep.tally(n);
  Rng rng(opt.seed);
  long long blocks = 0, cols = 0, entries = 0, holds = 0, kept = 0;
  json violations = json::array();

  for (int e = std::max(opt.e_min, 3); e <= opt.e_max; ++e) {
    // columns go to Y_0..Y_3 with 1 <= |Y_a| <= y_max for a = 1, 2, 3
    std::vector<std::vector<int>> assigns;
    std::vector<int> as(e, 0);
    std::function<void(int)> rec = [&](int p) {
      if (p == e) {
        int c[4] = {0, 0, 0, 0};
        for (int x : as) ++c[x];
        for (int a = 1; a <= 3; ++a)
          if (c[a] < 1 || c[a] > opt.y_max) return;
        assigns.push_back(as);
        return;
      }
      for (int v = 0; v < 4; ++v) {
        as[p] = v;
        rec(p + 1);
      }
    };
    rec(0);
    if (opt.blocks_per_e > 0 && static_cast<int>(assigns.size()) > opt.blocks_per_e) {
      rng.shuffle(assigns);
      assigns.resize(opt.blocks_per_e);
      std::sort(assigns.begin(), assigns.end());
    }

    InductionEngine eng(opt.search);
    BaseTuple B0 = zero_base(e);
    for (const auto& asg : assigns) {
      ++blocks;
      R4Block blk{e, 0, e, std::vector<std::vector<int>>(5)};
      for (int c = 0; c < e; ++c) blk.Y[asg[c]].push_back(c);
      json where{{"e", e}, {"Y", blk.Y}};
      auto labels = r4_labels(blk);
      std::map<R4Label, BlockMatrix> mat;
      std::map<BlockMatrix, std::string> name;
      for (const auto& a : labels) {
        mat[a] = r4_matrix(blk, a);
        name[mat[a]] = to_string(a);
      }
      auto nm = [&](const BlockMatrix& M) { return name.count(M) ? name.at(M) : M.str(); };

      bool cls_ok = true;
      for (const auto& [a, M] : mat) {
        auto c = classify_r4(M);
        if (!c || c->first != blk || c->second != a) cls_ok = false;
      }
      check(rep, "classification", cls_ok, [&] { return json{{"block", where}}; });

      for (const auto& a : labels) {
        const auto& M = mat[a];
        bool k1 = kleshchev_r4(blk, a), k2 = member_is_kleshchev(B0, M);
        check(rep, "kleshchev", k1 == k2, [&] {
          return json{{"block", where}, {"label", to_string(a)}, {"formula", k1}, {"oracle", k2}};
        });
        if (!k1 || !k2) continue;
        ++cols;
        json here{{"block", where}, {"label", to_string(a)}, {"matrix", bits_json(M)}};
        auto res = eng.column(B0, M);
        if (res.status != ColumnStatus::ok) {
          here["status"] = to_string(res.status);
          for (auto n : {"column", "specialization", "mullconj"}) skip(rep, n, here);
          continue;
        }
        try {
          auto mv = to_matrices(blk, column_r4(blk, a));
          check(rep, "column", mv == res.by_matrix, [&] {
            json p = here;
            p["table"] = vec_json(mv, nm);
            p["engine"] = vec_json(res.by_matrix, nm);
            p["diff"] = diff_json(mv, res.by_matrix, nm);
            return p;
          });
        } catch (const DataError& ex) {
          here["error"] = ex.what();
          fail(rep, "column", here);
          here.erase("error");
        }

        bool zero_one = true;
        for (const auto& [N, p] : res.by_matrix)
          if (p.at_one() != 0 && p.at_one() != 1) zero_one = false;
        check(rep, "specialization", zero_one, [&] {
          json p = here;
          p["engine"] = vec_json(res.by_matrix, nm);
          return p;
        });

        BlockMatrix tilde;
        auto why = mullconj_violation(B0, M, res.by_matrix, &tilde);
        check(rep, "mullconj", why.empty(), [&] {
          json p = here;
          p["reason"] = why;
          return p;
        });
        if (!why.empty()) continue;

        // two components of mu agree with lam, or two of lam~ agree with mu
        auto lam = pt(B0, M), lt = pt(B0, tilde);
        auto same = [](const Multipartition& x, const Multipartition& y) {
          int n = 0;
          for (size_t s = 0; s < x.size(); ++s) n += x[s] == y[s];
          return n;
        };
        for (const auto& [N, p] : res.by_matrix) {
          if (N == M) continue;
          ++entries;
          auto mu = pt(B0, N);
          if (same(mu, lam) >= 2 || same(lt, mu) >= 2) {
            ++holds;
          } else if (kept++ < kKeepPerCheck) {
            violations.push_back({{"block", where},
                                  {"label", to_string(a)},
                                  {"mu", nm(N)},
                                  {"d", p.str()},
                                  {"lam", format_multipartition(lam)},
                                  {"mu_mp", format_multipartition(mu)},
                                  {"tilde", format_multipartition(lt)}});
          }
        }
      }
    }
  }
  rep.findings.push_back({"two_equal_components", json{{"blocks", blocks},
                                                       {"columns", cols},
                                                       {"entries", entries},
                                                       {"holds", holds},
                                                       {"violations", entries - holds},
                                                       {"examples", violations}}
                                                      .dump()});
  return rep;
}

// ---- invariants ----

namespace {

Partition random_partition(Rng& rng, int n) {
  Multipartition lam{{}};
  for (int t = 0; t < n; ++t) {
    auto add = addable_nodes(lam);
    lam = add_node(lam, add[rng.uni(0, static_cast<int>(add.size()) - 1)]);
  }
  return lam[0];
}

Multipartition random_multipartition(Rng& rng, int r, int nmax) {
  Multipartition lam;
  for (int s = 0; s < r; ++s) lam.push_back(random_partition(rng, rng.uni(0, nmax)));
  return lam;
}

Multicharge random_charge(Rng& rng, int e, int r) {
  Multicharge mc{e, {}};
  for (int s = 0; s < r; ++s) mc.a.push_back(rng.uni(0, e - 1));
  return mc;
}

BaseTuple random_base(Rng& rng, int e) {
  BaseTuple B{e, std::vector<int>(e)};
  for (int& b : B.b) b = rng.uni(0, 2);
  B.b[rng.uni(0, e - 1)] = 0;
  return B;
}

BlockMatrix random_matrix(Rng& rng, int e, int r) {
  BlockMatrix M(e, e, r);
  for (int s = 0; s < r; ++s)
    for (int c = 0; c < e; ++c) M.set(s, c, rng.uni(0, 1));
  return M;
}

void partitions_upto(int n, std::vector<Partition>& out) {
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    out.push_back(cur);
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
}

BlockMatrix insert_column(const BlockMatrix& M, int pos, bool one) {
  auto bits = M.bits();
  for (auto& row : bits) row.insert(row.begin() + pos, one ? 1 : 0);
  return BlockMatrix::from_bits(M.e == 0 ? 0 : M.e + 1, bits, M.lo);
}

BlockMatrix delete_column(const BlockMatrix& M, int pos) {
  auto bits = M.bits();
  for (auto& row : bits) row.erase(row.begin() + pos);
  return BlockMatrix::from_bits(M.e == 0 ? 0 : M.e - 1, bits, M.lo);
}

}  // namespace

VerificationReport verify_invariants(const InvariantOptions& opt) {
  VerificationReport rep;
  rep.suite = "invariants";
  rep.parameters = json{{"seed", opt.seed},
                        {"weight_cases", opt.weight_cases},
                        {"rim_hook_cases", opt.rim_hook_cases},
                        {"nice_ind_cases", opt.nice_ind_cases},
                        {"klesh_cases", opt.klesh_cases},
                        {"divided_power_cases", opt.divided_power_cases},
                        {"ignore01_cases", opt.ignore01_cases},
                        {"column_blocks", opt.column_blocks},
                        {"multicore", {{"r", opt.multicore_r}, {"e", opt.multicore_e}, {"n", opt.multicore_n}}},
                        {"tree", {{"r", opt.tree_r}, {"cols", opt.tree_cols}}},
                        {"budget", opt.search.budget}}
                       .dump();
  Rng rng(opt.seed);

  for (int t = 0; t < opt.weight_cases; ++t) {
    int r = rng.uni(1, 4), e = rng.uni(2, 6);
    auto lam = random_multipartition(rng, r, 8);
    auto mc = random_charge(rng, e, r);
    int w = weight(lam, mc);
    check(rep, "weight_nonnegative", w >= 0, [&] {
      return json{{"mp", format_multipartition(lam)}, {"e", e}, {"charge", mc.a}, {"weight", w}};
    });
  }

  for (int t = 0; t < opt.rim_hook_cases; ++t) {
    int r = rng.uni(1, 4), e = rng.uni(2, 6);
    auto lam = random_multipartition(rng, r, 8);
    auto mc = random_charge(rng, e, r);
    int s = rng.uni(0, r - 1);
    auto hooks = addable_rim_hooks(lam[s], e);
    auto big = lam;
    big[s] = add_rim_hook(lam[s], hooks[rng.uni(0, static_cast<int>(hooks.size()) - 1)]);
    // remove a random e-hook from the enlarged component
    auto rem = rim_hooks(big[s], e);
    auto small = big;
    small[s] = remove_rim_hook(big[s], rem[rng.uni(0, static_cast<int>(rem.size()) - 1)]);
    int d = weight(big, mc) - weight(small, mc);
    check(rep, "rim_hook_weight_drop", d == r, [&] {
      return json{{"mp", format_multipartition(big)}, {"removed", format_multipartition(small)},
                  {"e", e},                           {"charge", mc.a},
                  {"drop", d}};
    });
  }

  for (int r = 2; r <= opt.multicore_r; ++r)
    for (int e = 2; e <= opt.multicore_e; ++e) {
      std::vector<Partition> all, cores;
      partitions_upto(opt.multicore_n, all);
      for (auto& p : all)
        if (is_core(p, e)) cores.push_back(p);
      std::map<std::tuple<int, int, int, int>, int> memo;
      auto pw = [&](int p, int a, int q, int b) {
        auto key = std::make_tuple(p, a, q, b);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        return memo[key] = pair_weight(cores[p], a, cores[q], b, e);
      };
      std::vector<int> pick(r), ch(r);
      std::function<void(int, int)> rec = [&](int s, int left) {
        if (s == r) {
          Multipartition lam;
          for (int x : pick) lam.push_back(cores[x]);
          // charges up to a common shift: a_1 = 0
          std::function<void(int)> rc = [&](int t) {
            if (t == r) {
              int sum = 0;
              for (int a = 0; a < r; ++a)
                for (int b = a + 1; b < r; ++b) sum += pw(pick[a], ch[a], pick[b], ch[b]);
              int w = weight(lam, Multicharge{e, ch});
              check(rep, "multicore_pair_sum", w == sum, [&] {
                return json{{"mp", format_multipartition(lam)}, {"e", e}, {"charge", ch}, {"weight", w}, {"pair_sum", sum}};
              });
              return;
            }
            for (int a = 0; a < e; ++a) {
              ch[t] = a;
              rc(t + 1);
            }
          };
          ch[0] = 0;
          rc(1);
          return;
        }
        for (size_t x = 0; x < cores.size(); ++x) {
          int n = size(cores[x]);
          if (n > left) continue;
          pick[s] = static_cast<int>(x);
          rec(s + 1, left - n);
        }
      };
      rec(0, opt.multicore_n);
    }

  for (int t = 0; t < opt.nice_ind_cases; ++t) {
    int r = rng.uni(1, 3), e = rng.uni(2, 5);
    auto B = random_base(rng, e);
    auto L = random_matrix(rng, e, r);
    int i = rng.uni(1, e - 1), k = rng.uni(1, r);
    auto lab = from_core_parameters(B, L);
    auto lhs = map_through_pt(B, g_divided(MatVector{{L, 1}}, i, k));
    auto rhs = apply_f_sequence(MpVector{{lab.lam, 1}}, lab.mc, expand_g_to_f_sequence(B, i, k));
    check(rep, "nice_ind", lhs == rhs, [&] {
      return json{{"e", e}, {"base", B.b}, {"matrix", bits_json(L)}, {"i", i}, {"k", k}};
    });
  }

  for (int t = 0; t < opt.klesh_cases; ++t) {
    int r = rng.uni(1, 3), e = rng.uni(2, 5);
    auto B = random_base(rng, e);
    auto M = random_matrix(rng, e, r);
    auto a = from_core_parameters(B, M), b = from_core_parameters(zero_base(e), M);
    bool k1 = is_kleshchev(a.lam, a.mc), k2 = is_kleshchev(b.lam, b.mc);
    check(rep, "klesh_reduce", k1 == k2, [&] {
      return json{{"e", e}, {"base", B.b}, {"matrix", bits_json(M)}, {"at_B", k1}, {"at_0", k2}};
    });
  }

  for (int t = 0; t < opt.divided_power_cases; ++t) {
    int r = rng.uni(1, 3), e = rng.uni(2, 5);
    auto lam = random_multipartition(rng, r, 6 / r);
    auto mc = random_charge(rng, e, r);
    int i = rng.uni(0, e - 1), k = rng.uni(1, 3);
    MpVector v{{lam, 1}}, step = v;
    for (int x = 0; x < k; ++x) step = f_divided(step, mc, i, 1);
    MpVector want;
    for (const auto& [mu, p] : f_divided(v, mc, i, k)) add_term(want, mu, p * LaurentPoly::quantum_factorial(k));
    check(rep, "divided_powers", step == want, [&] {
      return json{{"mp", format_multipartition(lam)}, {"e", e}, {"charge", mc.a}, {"i", i}, {"k", k}};
    });
  }

  InductionEngine eng(opt.search);
  for (int t = 0; t < opt.ignore01_cases; ++t) {
    int r = rng.uni(2, 3), e = rng.uni(2, 4);
    auto K = random_matrix(rng, e, r);
    auto B0 = zero_base(e);
    if (!member_is_kleshchev(B0, K)) {
      --t;
      continue;
    }
    int pos = rng.uni(0, e);
    bool one = rng.uni(0, 1);
    auto K2 = insert_column(K, pos, one);
    json here{{"matrix", bits_json(K)}, {"position", pos}, {"ones", one}};
    auto a = eng.column(B0, K), b = eng.column(zero_base(e + 1), K2);
    if (a.status != ColumnStatus::ok || b.status != ColumnStatus::ok) {
      skip(rep, "ignore01", here);
      continue;
    }
    MatVector back;
    for (const auto& [M, p] : b.by_matrix) add_term(back, delete_column(M, pos), p);
    check(rep, "ignore01", back == a.by_matrix, [&] { return here; });
  }

  for (int t = 0; t < opt.column_blocks; ++t) {
    int r = rng.uni(2, 3), e = rng.uni(2, 5);
    auto M0 = random_matrix(rng, e, r);
    auto B0 = zero_base(e);
    auto D = block_decomposition_matrix(B0, M0, eng);
    for (size_t c = 0; c < D.cols.size(); ++c) {
      const auto& lam = D.row_matrices[D.col_rows[c]];
      json here{{"block", bits_json(M0)}, {"e", e}, {"column", bits_json(lam)}};
      if (D.status[c] != ColumnStatus::ok) {
        skip(rep, "mullconj", here);
        continue;
      }
      MatVector col;
      for (size_t x = 0; x < D.rows.size(); ++x) add_term(col, D.row_matrices[x], D.entries[x][c]);
      auto why = mullconj_violation(B0, lam, col);
      check(rep, "mullconj", why.empty(), [&] {
        here["reason"] = why;
        return here;
      });
    }
  }

  // every column multiset up to order; the all-ones column is excluded (e >= 2)
  for (int r = 2; r <= opt.tree_r; ++r) {
    std::map<BlockMatrix, const std::vector<BlockMatrix>*> seen;
    std::deque<std::vector<BlockMatrix>> classes;
    for (int n = 2; n <= opt.tree_cols; ++n) {
      int top = (1 << r) - 2;
      std::vector<int> cols(n, 0);
      std::function<void(int, int)> rec = [&](int p, int lo) {
        if (p == n) {
          BlockMatrix M(n, n, r);
          for (int c = 0; c < n; ++c)
            for (int s = 0; s < r; ++s) M.set(s, c, cols[c] >> s & 1);
          auto tc = tree_classify(M);
          bool tree = is_tree(M);
          check(rep, "tree_classify", tree == tc.has_value(), [&] {
            return json{{"matrix", bits_json(M)}, {"is_tree", tree}, {"classified", tc.has_value()}};
          });
          if (!tree || !tc) return;
          auto en = enumerate_tree_class(n, n, tc->Y, tc->pi);
          const std::vector<BlockMatrix>* cls = nullptr;
          if (auto it = seen.find(M); it != seen.end()) {
            cls = it->second;
          } else {
            classes.push_back(block_class(M).members);
            cls = &classes.back();
            for (const auto& N : *cls) seen[N] = cls;
          }
          check(rep, "tree_class", en == *cls, [&] {
            return json{{"matrix", bits_json(M)}, {"enumerated", en.size()}, {"block_class", cls->size()}};
          });
          return;
        }
        for (int v = lo; v <= top; ++v) {
          cols[p] = v;
          rec(p + 1, v);
        }
      };
      rec(0, 0);
    }
  }
  return rep;
}

}  // namespace akb
