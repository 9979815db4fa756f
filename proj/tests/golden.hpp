#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "akblock/fock.hpp"
#include "akblock/formulas.hpp"

// The six weight-2 blocks at e = 4 with charges a permutation of (0,1,2).
// Rows are listed least dominant first; "." is a zero entry.
namespace golden {

struct Row {
  const char* mp;
  const char* entries;
};

struct Table {
  std::vector<int> mc;
  std::vector<Row> rows;
};

inline const std::vector<Table>& tables() {
  static const std::vector<Table> t = {
      {{0, 1, 2},
       {{"-|2,1|1^3", "1 . . ."},
        {"1|2|1^3", "v 1 . ."},
        {"1|2,1|1^2", "v2 v 1 ."},
        {"1|2^2|1", ". . v ."},
        {"2|2,1|1", ". v v2 1"},
        {"3|-|1^3", ". v . ."},
        {"3|1^2|1", ". v2 . v"},
        {"3|2,1|-", ". . . v2"}}},
      {{2, 1, 0},
       {{"-|2,1|3", "1 . . ."},
        {"1|1^2|3", "v 1 . ."},
        {"1|2,1|2", "v2 v 1 ."},
        {"1|2^2|1", ". . v ."},
        {"1^2|2,1|1", ". v v2 1"},
        {"1^3|-|3", ". v . ."},
        {"1^3|2|1", ". v2 . v"},
        {"1^3|2,1|-", ". . . v2"}}},
      {{2, 0, 1},
       {{"-|3|2,1", "1 . . ."},
        {"1|1|2^2", ". 1 . ."},
        {"1|2|2,1", "v v 1 ."},
        {"1|3|1^2", "v2 . v ."},
        {"1^2|1|2,1", ". v2 v 1"},
        {"1^3|-|2,1", ". . . v"},
        {"1^3|1|2", ". . v v2"},
        {"1^3|3|-", ". . v2 ."}}},
      // row 4, column 3 is printed as v2 in the source table; every method gives v
      {{0, 2, 1},
       {{"-|1^3|2,1", "1 . . ."},
        {"1|1|2^2", ". 1 . ."},
        {"1|1^2|2,1", "v v 1 ."},
        {"1|1^3|2", "v2 . v ."},
        {"2|1|2,1", ". v2 v 1"},
        {"3|-|2,1", ". . . v"},
        {"3|1|1^2", ". . v v2"},
        {"3|1^3|-", ". . v2 ."}}},
      {{1, 2, 0},
       {{"-|1^3|3", "1 . . ."},
        {"1^2|1|3", "v 1 . ."},
        {"2|1^3|1", "v . 1 ."},
        {"2,1|-|3", ". v . ."},
        {"2,1|1|2", "v v2 . 1"},
        {"2,1|1^2|1", "v2 . v v"},
        {"2,1|1^3|-", ". . v2 ."},
        {"2^2|1|1", ". . . v2"}}},
      {{1, 0, 2},
       {{"-|3|1^3", "1 . . ."},
        {"2|1|1^3", "v 1 . ."},
        {"1^2|3|1", "v . 1 ."},
        {"2,1|-|1^3", ". v . ."},
        {"2,1|1|1^2", "v v2 . 1"},
        {"2,1|2|1", "v2 . v v"},
        {"2,1|3|-", ". . v2 ."},
        {"2^2|1|1", ". . . v2"}}},
  };
  return t;
}

inline akb::CoreParameters core_of(const Table& t) {
  akb::Multicharge mc{4, t.mc};
  return *akb::to_core_parameters(akb::parse_multipartition(t.rows.front().mp), mc);
}

// empty string on success, otherwise the first difference
inline std::string compare(const Table& t, const akb::DecompMatrix& D) {
  std::ostringstream err;
  if (D.rows.size() != t.rows.size()) {
    err << "row count " << D.rows.size() << " != " << t.rows.size();
    return err.str();
  }
  std::vector<int> diag;
  for (size_t x = 0; x < t.rows.size(); ++x) {
    auto want = akb::parse_multipartition(t.rows[x].mp);
    if (D.rows[x] != want) {
      err << "row " << x + 1 << ": " << akb::format_multipartition_exp(D.rows[x]) << " != " << t.rows[x].mp;
      return err.str();
    }
    std::istringstream in(t.rows[x].entries);
    std::string cell;
    for (size_t c = 0; in >> cell; ++c) {
      if (c >= D.cols.size()) {
        err << "column count " << D.cols.size();
        return err.str();
      }
      auto want_p = cell == "." ? akb::LaurentPoly() : akb::LaurentPoly::parse(cell);
      if (D.entries[x][c] != want_p) {
        err << "entry (" << x + 1 << "," << c + 1 << "): " << D.entries[x][c].str() << " != " << cell;
        return err.str();
      }
      if (cell == "1") diag.push_back(static_cast<int>(x));
    }
  }
  if (diag.size() != D.cols.size()) return "column count differs";
  for (size_t c = 0; c < diag.size(); ++c)
    if (D.col_rows[c] != diag[c] || D.cols[c] != D.rows[diag[c]]) {
      err << "column " << c + 1 << " label";
      return err.str();
    }
  return {};
}

}  // namespace golden
