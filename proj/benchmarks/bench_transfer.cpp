#include "ainfty/corpus.hpp"
#include "ainfty/hodge.hpp"
#include "ainfty/transfer.hpp"

#include <benchmark/benchmark.h>

using namespace ainfty;

namespace {

const char* const kNames[] = {"interval", "circle", "sphere2", "torus", "heisenberg", "abelian3"};

void BM_BuildHodge(benchmark::State& state) {
  const DGA dga = corpus_dga(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(build_hodge(dga));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_BuildHodge)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_Transfer(benchmark::State& state, const char* name) {
  const auto h = std::make_shared<const HodgeData>(build_hodge(corpus_dga(name)));
  const TransferOptions options{static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)),
                                SignVariant::printed};
  for (auto _ : state) benchmark::DoNotOptimize(transfer_structure(h, options));
}
BENCHMARK_CAPTURE(BM_Transfer, heisenberg, "heisenberg")
    ->ArgsProduct({{3, 4, 5, 6}, {1}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Transfer, torus, "torus")->ArgsProduct({{4, 6}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_Stasheff(benchmark::State& state, const char* name) {
  const auto h = std::make_shared<const HodgeData>(build_hodge(corpus_dga(name)));
  const auto n = static_cast<std::size_t>(state.range(0));
  const AInfinityStructure s = transfer_structure(h, {n, 1, SignVariant::printed});
  for (auto _ : state) benchmark::DoNotOptimize(stasheff_check(s, n));
}
BENCHMARK_CAPTURE(BM_Stasheff, heisenberg, "heisenberg")->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
