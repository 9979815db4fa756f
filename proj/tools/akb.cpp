// akb: inspect core blocks, print decomposition matrices, enumerate tree blocks, run the verification suites

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "akblock/block.hpp"
#include "akblock/fock.hpp"
#include "akblock/formulas.hpp"
#include "akblock/io.hpp"
#include "akblock/verification.hpp"

namespace {

using nlohmann::json;
using namespace akb;

enum Exit { kOk = 0, kVerifyFail = 1, kInputError = 2, kBudget = 3 };

struct Options {
  int e = -1;
  std::string charge, mp, base, matrix, json_input;
  std::string method = "induction";
  std::string format = "text";
  long long budget = SearchConfig{}.budget;
  std::uint64_t seed = 1;
  int e_max = -1, y_max = -1, r = 3, samples = -1;
  std::string out;
  std::string suite = "all";
};

std::vector<int> parse_ints(const std::string& flag, const std::string& s) {
  std::vector<int> v;
  size_t p = 0;
  while (true) {
    size_t q = p;
    if (q < s.size() && (s[q] == '-' || s[q] == '+')) ++q;
    size_t d = q;
    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
    if (q == d) throw InputError(flag + " '" + s + "', column " + std::to_string(p + 1) + ": expected an integer");
    v.push_back(std::stoi(s.substr(p, q - p)));
    if (q == s.size()) break;
    if (s[q] != ',') throw InputError(flag + " '" + s + "', column " + std::to_string(q + 1) + ": expected ','");
    p = q + 1;
  }
  return v;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write '" + o.out + "'");
  f << text;
}

std::string tuple_text(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
  return s + ")";
}

// exactly one of: labelled input, core parameters, or a stored decomposition matrix
struct Input {
  std::optional<Labelled> labelled;
  std::optional<CoreParameters> core;
  std::optional<DecompMatrix> decomp;
};

Labelled labelled_from(int e, const std::vector<int>& charge, const Multipartition& lam) {
  if (e < 0) throw InputError("--e must be >= 0");
  if (charge.empty()) throw InputError("--charge is required with --mp");
  if (lam.size() != charge.size())
    throw InputError("multipartition has " + std::to_string(lam.size()) + " components but the charge has " +
                     std::to_string(charge.size()));
  return {Multicharge{e, charge}, lam};
}

Input read_json_input(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw InputError(std::string("JSON: ") + err.what());
  }
  Input in;
  try {
    if (j.contains("entries")) {
      in.decomp = decomp_from_json(text);
    } else if (j.contains("bits")) {
      auto bm = block_matrix_from_json(text);
      in.core = CoreParameters{bm.base.value_or(zero_base(bm.matrix.e)), bm.matrix};
    } else if (j.contains("mp")) {
      Multipartition lam = j["mp"].is_string() ? parse_multipartition(j["mp"].get<std::string>())
                                               : multipartition_from_json(j["mp"].dump());
      in.labelled = labelled_from(j.at("e").get<int>(), j.at("charge").get<std::vector<int>>(), lam);
    } else {
      throw InputError("JSON input needs \"mp\", \"bits\" or \"entries\"");
    }
  } catch (const json::exception& err) {
    throw InputError(std::string("JSON: ") + err.what());
  }
  return in;
}

Input read_flags(const Options& o) {
  int forms = !o.json_input.empty() + !o.mp.empty() + !o.matrix.empty();
  if (forms != 1) throw InputError("give exactly one of --mp, --matrix or --json-input");
  if (!o.json_input.empty()) return read_json_input(read_input(o.json_input));
  if (o.e < 0) throw InputError("--e is required");
  Input in;
  if (!o.mp.empty()) {
    if (!o.base.empty()) throw InputError("--base goes with --matrix, not --mp");
    auto charge = o.charge.empty() ? std::vector<int>{} : parse_ints("--charge", o.charge);
    in.labelled = labelled_from(o.e, charge, parse_multipartition(o.mp));
    return in;
  }
  if (!o.charge.empty()) throw InputError("--charge goes with --mp, not --matrix");
  BlockMatrix M = parse_block_matrix(o.e, o.matrix);
  BaseTuple B = o.base.empty() ? zero_base(o.e) : BaseTuple{o.e, parse_ints("--base", o.base)};
  check_base(B);
  in.core = CoreParameters{B, M};
  return in;
}

std::string graph_shape(const BlockMatrix& M, const WeightGraph& g) {
  if (M.r() == 1) return "single vertex";
  if (is_decomposable(M)) return "disconnected";
  if (!is_tree(M)) return "connected, not a tree";
  for (int s = 0; s < g.r; ++s) {
    int deg = 0;
    for (int t = 0; t < g.r; ++t) deg += g.mult[s][t];
    if (deg > 2) return "tree";
  }
  return "path";
}

std::string y_text(const std::vector<std::vector<int>>& Y) {
  std::string s;
  for (size_t a = 0; a < Y.size(); ++a) {
    if (a) s += " ";
    s += "Y" + std::to_string(a) + "={";
    for (size_t k = 0; k < Y[a].size(); ++k) s += (k ? "," : "") + std::to_string(Y[a][k] + 1);
    s += "}";
  }
  return s;
}

std::string family_text(const BlockMatrix& M) {
  if (auto w2 = classify_weight2(M)) {
    const auto& b = w2->first;
    return "weight 2, y=" + std::to_string(b.y()) + " z=" + std::to_string(b.z()) + " u=" + std::to_string(b.u) +
           ", " + to_string(w2->second);
  }
  if (auto r4 = classify_r4(M)) return "r=4 weight 3, " + to_string(r4->second);
  return "";
}

json matrix_json(const BlockMatrix& M, const BaseTuple* B) { return json::parse(block_matrix_to_json(M, B)); }

int cmd_info(const Options& o) {
  Input in = read_flags(o);
  if (in.decomp) {
    if (in.decomp->row_matrices.empty()) throw InputError("stored matrix has no block");
    in.core = CoreParameters{in.decomp->base, in.decomp->row_matrices.front()};
  }
  Labelled lab = in.labelled ? *in.labelled : from_core_parameters(in.core->base, in.core->matrix);
  auto core = in.labelled ? to_core_parameters(lab.lam, lab.mc) : in.core;

  json j;
  j["e"] = lab.mc.e;
  j["multicharge"] = lab.mc.a;
  j["multipartition"] = format_multipartition(lab.lam);
  j["size"] = size(lab.lam);
  json rc = json::object();
  for (auto [i, n] : residue_content(lab.lam, lab.mc)) rc[std::to_string(i)] = n;
  j["residue_content"] = rc;
  j["weight"] = weight(lab.lam, lab.mc);
  j["core_block"] = core.has_value();
  j["kleshchev"] = is_kleshchev(lab.lam, lab.mc);
  std::optional<WeightGraph> g;
  std::optional<TreeClassification> tc;
  if (core) {
    const auto& [B, M] = *core;
    g = weight_graph(M);
    j["base"] = B.b;
    j["matrix"] = matrix_json(M, &B);
    j["weight_graph"] = json::parse(weight_graph_to_json(*g));
    j["weight_graph_shape"] = graph_shape(M, *g);
    if (M.r() >= 2 && is_tree(M)) tc = tree_classify(M);
    if (tc) j["tree"] = {{"Y", tc->Y}, {"pi", tc->pi}, {"i", tc->i}, {"j", tc->j}, {"w", tc->w}};
    auto fam = family_text(M);
    if (!fam.empty()) j["family"] = fam;
    auto cls = block_class(M);
    j["block_size"] = cls.members.size();
    j["block_overflow"] = cls.overflow;
  }
  if (o.format == "json") {
    emit(o, j.dump(1) + "\n");
    return kOk;
  }

  std::ostringstream s;
  s << "e=" << lab.mc.e << " mc=" << tuple_text(lab.mc.a) << " lam=(" << format_multipartition_exp(lab.lam) << ")\n";
  s << "size: " << size(lab.lam) << "\n";
  s << "residue content:";
  for (auto [i, n] : residue_content(lab.lam, lab.mc)) s << " " << i << ":" << n;
  s << "\nweight: " << j["weight"].get<int>() << "\n";
  s << "kleshchev: " << (j["kleshchev"].get<bool>() ? "yes" : "no") << "\n";
  if (!core) {
    s << "core block: no (some member of the block is not a multicore)\n";
    emit(o, s.str());
    return kOk;
  }
  const auto& [B, M] = *core;
  s << "core block: yes\n";
  s << "B=" << tuple_text(B.b) << "\n";
  if (B.e >= 2) {
    auto pi = prec_order(B);
    s << "runner order:";
    for (int x : pi) s << " " << x;
    s << "\n";
  }
  s << "M (columns " << M.lo << ".." << M.lo + M.ncols - 1 << "):\n";
  for (const auto& row : M.bits()) {
    s << " ";
    for (int x : row) s << " " << x;
    s << "\n";
  }
  s << "weight graph (" << graph_shape(M, *g) << "):";
  auto edges = g->edges();
  if (edges.empty()) s << " no edges";
  for (auto [a, b] : edges) s << " " << a + 1 << "-" << b + 1;
  s << "\n";
  if (tc) s << "tree: " << y_text(tc->Y) << " pi=" << tuple_text(tc->pi) << "\n";
  if (j.contains("family")) s << "family: " << j["family"].get<std::string>() << "\n";
  s << "block size: " << j["block_size"].get<size_t>() << (j["block_overflow"].get<bool>() ? " (truncated)" : "")
    << "\n";
  emit(o, s.str());
  return kOk;
}

int cmd_decomp(const Options& o) {
  Input in = read_flags(o);
  DecompMatrix D;
  if (in.decomp) {
    D = *in.decomp;
  } else {
    CoreParameters cp;
    if (in.labelled) {
      auto c = to_core_parameters(in.labelled->lam, in.labelled->mc);
      if (!c) throw InputError("input is not in a core block");
      cp = *c;
    } else {
      cp = *in.core;
    }
    if (o.method == "formula") {
      auto F = formula_decomposition_matrix(cp.base, cp.matrix);
      if (!F) throw InputError("block is covered by neither closed-formula family; use --method induction");
      D = std::move(*F);
    } else {
      SearchConfig cfg;
      cfg.budget = o.budget;
      D = block_decomposition_matrix(cp.base, cp.matrix, cfg);
      attach_labels(D);
    }
  }
  emit(o, o.format == "json" ? decomp_to_json(D) + "\n" : render_text(D));
  if (!D.complete()) {
    std::cerr << "akb: matrix incomplete; flagged columns were not computed\n";
    return kBudget;
  }
  return kOk;
}

int cmd_trees(const Options& o) {
  if (o.e < 2) throw InputError("trees needs --e >= 2");
  if (o.r < 2) throw InputError("trees needs --r >= 2");
  int y_max = o.y_max < 0 ? 2 : o.y_max;
  auto blocks = enumerate_tree_blocks(o.r, o.e, y_max);
  BaseTuple B0 = zero_base(o.e);
  json arr = json::array();
  std::ostringstream s;
  s << "r=" << o.r << " e=" << o.e << " |Y_s|<=" << y_max << ": " << blocks.size() << " tree block classes\n";
  int n = 0;
  for (const auto& tb : blocks) {
    int klesh = 0;
    for (const auto& m : tb.block.members) klesh += member_is_kleshchev(B0, m);
    auto fam = family_text(tb.rep);
    json jt{{"Y", tb.Y},
            {"pi", tb.pi},
            {"representative", matrix_json(tb.rep, nullptr)},
            {"weight", matrix_weight(tb.rep)},
            {"class_size", tb.block.members.size()},
            {"overflow", tb.block.overflow},
            {"kleshchev", klesh}};
    if (!fam.empty()) jt["family"] = fam;
    arr.push_back(jt);
    s << ++n << ". " << y_text(tb.Y) << " pi=" << tuple_text(tb.pi) << " N=" << tb.rep.str()
      << " weight=" << matrix_weight(tb.rep) << " size=" << tb.block.members.size()
      << (tb.block.overflow ? "+" : "") << " kleshchev=" << klesh;
    if (!fam.empty()) s << " [" << fam << "]";
    s << "\n";
  }
  if (o.format == "json")
    emit(o, json{{"r", o.r}, {"e", o.e}, {"y_max", y_max}, {"classes", arr}}.dump(1) + "\n");
  else
    emit(o, s.str());
  return kOk;
}

int cmd_verify(const Options& o) {
  if (o.suite != "weight2" && o.suite != "r4" && o.suite != "invariants" && o.suite != "all")
    throw InputError("unknown suite '" + o.suite + "' (weight2, r4, invariants, all)");
  SearchConfig cfg;
  cfg.budget = o.budget;
  std::vector<VerificationReport> reps;
  if (o.suite == "weight2" || o.suite == "all") {
    Weight2Options w;
    w.search = cfg;
    if (o.e_max >= 0) w.e_max = o.e_max;
    if (o.y_max >= 0) w.yz_max = o.y_max;
    w.e_min = std::min(w.e_min, w.e_max);
    reps.push_back(verify_weight2(w));
  }
  if (o.suite == "r4" || o.suite == "all") {
    R4Options w;
    w.search = cfg;
    w.seed = o.seed;
    if (o.e_max >= 0) w.e_max = o.e_max;
    if (o.y_max >= 0) w.y_max = o.y_max;
    if (o.samples >= 0) w.blocks_per_e = o.samples;
    w.e_min = std::min(w.e_min, w.e_max);
    reps.push_back(verify_r4(w));
  }
  if (o.suite == "invariants" || o.suite == "all") {
    InvariantOptions w;
    w.search = cfg;
    w.seed = o.seed;
    reps.push_back(verify_invariants(w));
  }

  bool failed = false, skipped = false;
  std::ostringstream s;
  for (const auto& rep : reps) {
    failed |= !rep.passed();
    s << "suite " << rep.suite << ": " << (rep.passed() ? "pass" : "FAIL") << "\n";
    for (const auto& c : rep.checks) {
      skipped |= c.status() == CheckStatus::skipped_budget;
      s << "  " << c.name << ": " << to_string(c.status()) << " (" << c.passed << " passed, " << c.failed
        << " failed, " << c.skipped << " skipped)\n";
    }
    for (const auto& f : rep.failures) s << "  failure " << f.check << ": " << f.payload << "\n";
  }
  std::string report;
  if (reps.size() == 1) {
    report = reps.front().to_json();
  } else {
    json arr = json::array();
    for (const auto& rep : reps) arr.push_back(json::parse(rep.to_json()));
    report = json{{"suites", arr}, {"passed", !failed}}.dump(1);
  }
  if (!o.out.empty()) {
    emit(o, report + "\n");
    std::cout << s.str();
  } else {
    std::cout << (o.format == "json" ? report + "\n" : s.str());
  }
  if (failed) return kVerifyFail;
  return skipped ? kBudget : kOk;
}

void add_input_flags(CLI::App* c, Options& o) {
  c->add_option("--e", o.e, "quantum characteristic e (0 or >= 2)");
  c->add_option("--charge", o.charge, "multicharge, e.g. 0,1,2");
  c->add_option("--mp", o.mp, "multipartition, e.g. \"-|2,1|1,1,1\"");
  c->add_option("--base", o.base, "base tuple B (with --matrix), default all zero");
  c->add_option("--matrix", o.matrix, "block matrix rows as 0/1 strings separated by '/'");
  c->add_option("--json-input", o.json_input, "JSON file ('-' for stdin)");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"graded decomposition numbers of core blocks of Ariki-Koike algebras"};
  app.require_subcommand(1);
  auto fmt = CLI::IsMember({"text", "json"});

  auto* info = app.add_subcommand("info", "summarise a multipartition and its block");
  add_input_flags(info, o);
  info->add_option("--format", o.format)->check(fmt);
  info->add_option("--out", o.out, "write to FILE");

  auto* decomp = app.add_subcommand("decomp", "decomposition matrix of a core block");
  add_input_flags(decomp, o);
  decomp->add_option("--method", o.method)->check(CLI::IsMember({"induction", "formula"}));
  decomp->add_option("--format", o.format)->check(fmt);
  decomp->add_option("--budget", o.budget, "G-step term operations per column");
  decomp->add_option("--out", o.out, "write to FILE");

  auto* trees = app.add_subcommand("trees", "enumerate tree block classes");
  trees->add_option("--e", o.e)->required();
  trees->add_option("--r", o.r, "number of rows");
  trees->add_option("--y-max", o.y_max, "bound on |Y_s| for 0 < s < r (default 2)");
  trees->add_option("--format", o.format)->check(fmt);
  trees->add_option("--out", o.out, "write to FILE");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", o.suite, "weight2, r4, invariants or all");
  verify->add_option("--e-max", o.e_max);
  verify->add_option("--y-max", o.y_max);
  verify->add_option("--seed", o.seed);
  verify->add_option("--samples", o.samples, "r4: sampled blocks per e (0 = all)");
  verify->add_option("--budget", o.budget, "G-step term operations per column");
  verify->add_option("--format", o.format)->check(fmt);
  verify->add_option("--out", o.out, "write the JSON report to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int rc = app.exit(err);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*info) return cmd_info(o);
    if (*decomp) return cmd_decomp(o);
    if (*trees) return cmd_trees(o);
    return cmd_verify(o);
  } catch (const InputError& err) {
    std::cerr << "akb: " << err.what() << "\n";
    return kInputError;
  } catch (const ContractViolation& err) {
    std::cerr << "akb: invalid input: " << err.what() << "\n";
    return kInputError;
  } catch (const std::exception& err) {
    std::cerr << "akb: " << err.what() << "\n";
    return kVerifyFail;
  }
}
