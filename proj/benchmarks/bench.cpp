#include <benchmark/benchmark.h>

#include "akblock/fock.hpp"
#include "akblock/formulas.hpp"

using namespace akb;

namespace {

const BlockMatrix kWeight2 = parse_block_matrix(6, "100000/010110/011110");
const BlockMatrix kBig = parse_block_matrix(5, "11000/10100/01010/00110");

void BM_ColumnFresh(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(compute_column(zero_base(6), kWeight2));
}
BENCHMARK(BM_ColumnFresh);

void BM_BlockInduction(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(block_decomposition_matrix(zero_base(5), kBig));
}
BENCHMARK(BM_BlockInduction)->Unit(benchmark::kMillisecond);

void BM_BlockFormula(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(formula_decomposition_matrix(zero_base(6), kWeight2));
}
BENCHMARK(BM_BlockFormula);

void BM_BlockClass(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(block_class(kBig));
}
BENCHMARK(BM_BlockClass);

void BM_TreeBlocks(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_tree_blocks(3, static_cast<int>(st.range(0)), 2));
}
BENCHMARK(BM_TreeBlocks)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
