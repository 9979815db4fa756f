#pragma once

#include <optional>
#include <string>

#include "akblock/block.hpp"
#include "akblock/fock.hpp"

namespace akb {

// JSON travels as std::string so that the installed headers need no JSON library.

std::string multipartition_to_json(const Multipartition& lam);
Multipartition multipartition_from_json(const std::string& s);

std::string poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const std::string& s);

// {"e", "rows", "columns", "bits", "base"}; base is omitted when B is null
std::string block_matrix_to_json(const BlockMatrix& M, const BaseTuple* B = nullptr);

struct BlockMatrixInput {
  BlockMatrix matrix;
  std::optional<BaseTuple> base;
};
BlockMatrixInput block_matrix_from_json(const std::string& s);

// rows are numbered from 1, one edge per unit of multiplicity
std::string weight_graph_to_json(const WeightGraph& g);

ColumnStatus column_status_from_string(const std::string& s);

std::string decomp_to_json(const DecompMatrix& D, int indent = 1);
DecompMatrix decomp_from_json(const std::string& s);

// one row per Specht module, v-powers as v, v2, blank for zero
std::string render_text(const DecompMatrix& D);

}  // namespace akb
