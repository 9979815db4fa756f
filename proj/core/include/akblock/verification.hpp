#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "akblock/fock.hpp"

namespace akb {

enum class CheckStatus { pass, fail, skipped_budget };
std::string to_string(CheckStatus s);

struct CheckTally {
  std::string name;
  long long passed = 0, failed = 0, skipped = 0;
  CheckStatus status() const;
};

// payloads are JSON objects serialized to text
struct Counterexample {
  std::string check;
  std::string payload;
};

struct VerificationReport {
  std::string suite;
  std::string parameters;  // JSON object
  std::vector<CheckTally> checks;
  std::vector<Counterexample> failures;  // first few per check; counts are in `checks`
  std::vector<Counterexample> skips;
  std::vector<Counterexample> findings;  // observations that are not pass/fail

  CheckTally& tally(const std::string& name);
  long long failure_count() const;
  bool passed() const { return failure_count() == 0; }
  std::string to_json(int indent = 1) const;
};

struct Weight2Options {
  int e_min = 3, e_max = 6;
  int yz_max = 2;
  int hook_e_max = 5;  // diagram check of the hook relation up to this e
  bool inject_fault = false;
  SearchConfig search;
};

struct R4Options {
  int e_min = 5, e_max = 8;
  int y_max = 2;
  int blocks_per_e = 200;  // 0 = every block
  std::uint64_t seed = 1;
  SearchConfig search;
};

struct InvariantOptions {
  std::uint64_t seed = 1;
  int weight_cases = 500;
  int rim_hook_cases = 500;
  int nice_ind_cases = 200;
  int klesh_cases = 300;
  int divided_power_cases = 100;
  int ignore01_cases = 60;
  int column_blocks = 40;
  int multicore_r = 4, multicore_e = 6, multicore_n = 10;
  int tree_r = 4, tree_cols = 7;
  SearchConfig search;
};

VerificationReport verify_weight2(const Weight2Options& opt = {});
VerificationReport verify_r4(const R4Options& opt = {});
VerificationReport verify_invariants(const InvariantOptions& opt = {});

}  // namespace akb
