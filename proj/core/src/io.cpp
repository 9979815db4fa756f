#include "akblock/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace akb {

using nlohmann::json;

namespace {

json parse(const std::string& s) {
  try {
    return json::parse(s);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON: ") + e.what());
  }
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string("JSON: ") + e.what());
  }
}

json mp_json(const Multipartition& lam) {
  json j = json::array();
  for (const auto& p : lam) j.push_back(p);
  return j;
}

Multipartition mp_from(const json& j) {
  Multipartition lam;
  for (const auto& p : j) lam.push_back(p.get<Partition>());
  for (const auto& p : lam)
    if (!is_partition(p)) throw InputError("JSON: not a partition");
  return lam;
}

json poly_json(const LaurentPoly& p) { return {{"offset", p.offset()}, {"coeffs", p.coeffs()}}; }

LaurentPoly poly_from(const json& j) {
  return LaurentPoly(j.at("offset").get<int>(), j.at("coeffs").get<std::vector<long long>>());
}

json bm_json(const BlockMatrix& M, const BaseTuple* B) {
  json cols = json::array();
  for (int c = 0; c < M.ncols; ++c) cols.push_back(M.lo + c);
  json j{{"e", M.e}, {"rows", M.r()}, {"columns", cols}, {"bits", M.bits()}};
  if (B) j["base"] = B->b;
  return j;
}

BlockMatrixInput bm_from(const json& j) {
  BlockMatrixInput in;
  int e = j.at("e").get<int>();
  auto bits = j.at("bits").get<std::vector<std::vector<int>>>();
  int lo = 0;
  if (j.contains("columns") && !j["columns"].empty()) lo = j["columns"].front().get<int>();
  if (j.contains("rows") && j["rows"].get<int>() != static_cast<int>(bits.size()))
    throw InputError("JSON: \"rows\" does not match \"bits\"");
  for (const auto& row : bits)
    for (int x : row)
      if (x != 0 && x != 1) throw InputError("JSON: matrix entries must be 0 or 1");
  in.matrix = BlockMatrix::from_bits(e, bits, lo);
  if (j.contains("base")) {
    BaseTuple B{e, j["base"].get<std::vector<int>>()};
    check_base(B);
    in.base = B;
  }
  return in;
}

std::string mc_text(const Multicharge& mc) {
  std::string s = "(";
  for (int t = 0; t < mc.r(); ++t) s += (t ? "," : "") + std::to_string(mc.a[t]);
  return s + ")";
}

}  // namespace

std::string multipartition_to_json(const Multipartition& lam) { return mp_json(lam).dump(); }

Multipartition multipartition_from_json(const std::string& s) {
  return guarded([&] { return mp_from(parse(s)); });
}

std::string poly_to_json(const LaurentPoly& p) { return poly_json(p).dump(); }

LaurentPoly poly_from_json(const std::string& s) {
  return guarded([&] { return poly_from(parse(s)); });
}

std::string block_matrix_to_json(const BlockMatrix& M, const BaseTuple* B) { return bm_json(M, B).dump(); }

BlockMatrixInput block_matrix_from_json(const std::string& s) {
  return guarded([&] { return bm_from(parse(s)); });
}

std::string weight_graph_to_json(const WeightGraph& g) {
  json edges = json::array();
  for (auto [s, t] : g.edges()) edges.push_back({s + 1, t + 1});
  return json{{"rows", g.r}, {"edges", edges}}.dump();
}

ColumnStatus column_status_from_string(const std::string& s) {
  for (auto st : {ColumnStatus::ok, ColumnStatus::not_kleshchev, ColumnStatus::budget_exhausted,
                  ColumnStatus::search_exhausted})
    if (to_string(st) == s) return st;
  throw InputError("unknown column status '" + s + "'");
}

std::string decomp_to_json(const DecompMatrix& D, int indent) {
  json j;
  if (!D.row_matrices.empty()) j["block"] = bm_json(D.row_matrices.front(), &D.base);
  j["e"] = D.base.e;
  j["base"] = D.base.b;
  j["multicharge"] = D.mc.a;
  json rows = json::array(), cols = json::array(), mats = json::array();
  for (const auto& lam : D.rows) rows.push_back(mp_json(lam));
  for (const auto& lam : D.cols) cols.push_back(mp_json(lam));
  for (const auto& M : D.row_matrices) mats.push_back(bm_json(M, nullptr));
  j["rows"] = rows;
  j["cols"] = cols;
  j["col_rows"] = D.col_rows;
  j["row_matrices"] = mats;
  json ent = json::array();
  for (const auto& r : D.entries) {
    json jr = json::array();
    for (const auto& p : r) jr.push_back(poly_json(p));
    ent.push_back(jr);
  }
  j["entries"] = ent;
  json st = json::array();
  for (auto s : D.status) st.push_back(to_string(s));
  j["status"] = st;
  if (!D.labels.empty()) j["labels"] = D.labels;
  j["overflow"] = D.overflow;
  return j.dump(indent);
}

DecompMatrix decomp_from_json(const std::string& s) {
  return guarded([&] {
    json j = parse(s);
    DecompMatrix D;
    D.base = BaseTuple{j.at("e").get<int>(), j.at("base").get<std::vector<int>>()};
    D.mc = Multicharge{D.base.e, j.at("multicharge").get<std::vector<int>>()};
    for (const auto& x : j.at("rows")) D.rows.push_back(mp_from(x));
    for (const auto& x : j.at("cols")) D.cols.push_back(mp_from(x));
    D.col_rows = j.at("col_rows").get<std::vector<int>>();
    if (j.contains("row_matrices"))
      for (const auto& x : j["row_matrices"]) D.row_matrices.push_back(bm_from(x).matrix);
    for (const auto& r : j.at("entries")) {
      std::vector<LaurentPoly> row;
      for (const auto& p : r) row.push_back(poly_from(p));
      D.entries.push_back(std::move(row));
    }
    for (const auto& x : j.at("status")) D.status.push_back(column_status_from_string(x.get<std::string>()));
    if (j.contains("labels")) D.labels = j["labels"].get<std::vector<std::string>>();
    D.overflow = j.value("overflow", false);
    if (D.entries.size() != D.rows.size() || D.col_rows.size() != D.cols.size() || D.status.size() != D.cols.size())
      throw InputError("JSON: inconsistent decomposition matrix dimensions");
    for (const auto& r : D.entries)
      if (r.size() != D.cols.size()) throw InputError("JSON: ragged entries");
    return D;
  });
}

std::string render_text(const DecompMatrix& D) {
  std::ostringstream out;
  out << "e=" << D.base.e << " mc=" << mc_text(D.mc);
  if (!D.base.b.empty()) {
    out << " B=(";
    for (size_t t = 0; t < D.base.b.size(); ++t) out << (t ? "," : "") << D.base.b[t];
    out << ")";
  }
  out << "\n";

  size_t nr = D.rows.size(), nc = D.cols.size();
  bool labelled = D.labels.size() == nr;
  std::vector<std::string> head, lab(nr), mp(nr);
  std::vector<std::vector<std::string>> cell(nr, std::vector<std::string>(nc));
  for (size_t c = 0; c < nc; ++c) head.push_back(std::to_string(c + 1) + (D.status[c] == ColumnStatus::ok ? "" : "*"));
  size_t wl = labelled ? 5 : 0, wm = 14;
  for (size_t x = 0; x < nr; ++x) {
    if (labelled) wl = std::max(wl, (lab[x] = D.labels[x]).size());
    wm = std::max(wm, (mp[x] = "(" + format_multipartition_exp(D.rows[x]) + ")").size());
    for (size_t c = 0; c < nc; ++c)
      if (!D.entries[x][c].is_zero()) cell[x][c] = D.entries[x][c].str();
  }
  std::vector<size_t> wc(nc);
  for (size_t c = 0; c < nc; ++c) {
    wc[c] = head[c].size();
    for (size_t x = 0; x < nr; ++x) wc[c] = std::max(wc[c], cell[x][c].size());
  }

  auto pad = [](const std::string& s, size_t w) { return s + std::string(w - s.size(), ' '); };
  auto line = [&](const std::string& l, const std::string& m, const std::vector<std::string>& cs) {
    std::string s;
    if (labelled) s += pad(l, wl) + "  ";
    s += pad(m, wm) + " |";
    for (size_t c = 0; c < nc; ++c) s += "  " + std::string(wc[c] - cs[c].size(), ' ') + cs[c];
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << "\n";
  };
  line("label", "multipartition", head);
  size_t rule = (labelled ? wl + 2 : 0) + wm + 2;
  for (size_t c = 0; c < nc; ++c) rule += wc[c] + 2;
  out << std::string(rule, '-') << "\n";
  for (size_t x = 0; x < nr; ++x) line(lab[x], mp[x], cell[x]);

  for (size_t c = 0; c < nc; ++c)
    if (D.status[c] != ColumnStatus::ok)
      out << "* column " << c + 1 << " (" << format_multipartition_exp(D.cols[c]) << "): " << to_string(D.status[c])
          << "\n";
  if (D.overflow) out << "block class truncated at the size cap\n";
  return out.str();
}

}  // namespace akb
