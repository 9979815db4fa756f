#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "akblock/errors.hpp"

namespace akb {

using Partition = std::vector<int>;
using Multipartition = std::vector<Partition>;

struct Multicharge {
  int e = 0;
  std::vector<int> a;
  int r() const { return static_cast<int>(a.size()); }
  friend bool operator==(const Multicharge&, const Multicharge&) = default;
};

// 1-based component, row, column
struct Node {
  int s = 1, x = 1, y = 1;
  friend auto operator<=>(const Node&, const Node&) = default;
};

inline bool above(const Node& p, const Node& q) { return p.s < q.s || (p.s == q.s && p.x < q.x); }

int size(const Partition& p);
int size(const Multipartition& lam);
bool is_partition(const Partition& p);
Partition conjugate(const Partition& p);
Multipartition empty_multipartition(int r);

int mod_residue(long long v, int e);  // reduce into {0..e-1}; identity for e=0
int residue(const Node& n, const Multicharge& mc);
std::map<int, int> residue_content(const Multipartition& lam, const Multicharge& mc);

// prefix sums sum_{s<t}|mu^s| + sum_{x<=z} mu^t_x, row-major; used for dominance
std::vector<int> dominance_profile(const Multipartition& lam);
bool dominance_ge(const Multipartition& mu, const Multipartition& lam);

struct BetaSet {
  int charge = 0;
  int floor = 0;           // every position below floor is a bead
  std::vector<int> betas;  // descending, all >= floor
  friend bool operator==(const BetaSet&, const BetaSet&) = default;
};

BetaSet beta_set(const Partition& lam, int a, int e);
Partition partition_from_beta(const BetaSet& b);

std::vector<Node> removable_nodes(const Multipartition& lam, const Multicharge& mc, int i);
std::vector<Node> addable_nodes(const Multipartition& lam, const Multicharge& mc, int i);
std::vector<Node> removable_nodes(const Multipartition& lam);
std::vector<Node> addable_nodes(const Multipartition& lam);

Multipartition add_node(Multipartition lam, const Node& n);
Multipartition remove_node(Multipartition lam, const Node& n);

bool is_normal(const Multipartition& lam, const Multicharge& mc, const Node& n);
std::optional<Node> good_node(const Multipartition& lam, const Multicharge& mc, int i);
// residues that currently have a removable node, in increasing order
std::vector<int> removable_residues(const Multipartition& lam, const Multicharge& mc);
bool is_kleshchev(const Multipartition& lam, const Multicharge& mc);

int n_statistic(const Multipartition& sigma, const Multipartition& lam, const Multicharge& mc, int i);

struct RimHook {
  std::vector<std::pair<int, int>> cells;  // (row, col), 1-based
  int leg = 0;
  friend bool operator==(const RimHook&, const RimHook&) = default;
};

std::vector<RimHook> rim_hooks(const Partition& lam, std::optional<int> length = std::nullopt);
std::vector<RimHook> addable_rim_hooks(const Partition& lam, int length);
Partition remove_rim_hook(const Partition& lam, const RimHook& h);
Partition add_rim_hook(const Partition& lam, const RimHook& h);
bool is_core(const Partition& lam, int e);

// text form "-|2,1|1,1,1"
Multipartition parse_multipartition(const std::string& s);
std::string format_partition(const Partition& p);
std::string format_multipartition(const Multipartition& lam);
// exponent style "2,1^3"
std::string format_partition_exp(const Partition& p);
std::string format_multipartition_exp(const Multipartition& lam);

}  // namespace akb
