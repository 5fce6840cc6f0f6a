#include <benchmark/benchmark.h>

#include "linebal/encoding.hpp"
#include "linebal/kernels.hpp"

using namespace linebal;

namespace {

std::vector<std::vector<int>> population(const Instance& inst, Encoding enc, std::size_t count) {
  Rng rng(7);
  std::vector<std::vector<int>> genomes;
  for (std::size_t i = 0; i < count; ++i)
    genomes.push_back(enc == Encoding::Task ? random_valid_assignment(inst, rng).genes
                                            : random_valid_permutation(inst, rng).order);
  return genomes;
}

template <auto Evaluate>
void BM_Evaluate(benchmark::State& state) {
  const auto enc = static_cast<Encoding>(state.range(1));
  const auto inst = generate_case(Coupling::Loose, 40, 20, 1);
  const auto genomes = population(inst, enc, static_cast<std::size_t>(state.range(0)));
  std::vector<Decimal> costs(genomes.size());
  for (auto _ : state) {
    Evaluate(enc, genomes, inst, costs);
    benchmark::DoNotOptimize(costs.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Enumerate>
void BM_Enumerate(benchmark::State& state) {
  const auto inst = generate_case(Coupling::Loose, static_cast<int>(state.range(0)), 10, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Enumerate(inst, kDefaultOracleCap));
}

}  // namespace

BENCHMARK(BM_Evaluate<evaluate_costs_serial>)->Name("evaluate/serial")->ArgsProduct({{100, 10000}, {0, 1}});
BENCHMARK(BM_Evaluate<evaluate_costs_parallel>)->Name("evaluate/parallel")->ArgsProduct({{100, 10000}, {0, 1}});
BENCHMARK(BM_Enumerate<enumerate_optimum_serial>)->Name("enumerate/serial")->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate<enumerate_optimum_parallel>)->Name("enumerate/parallel")->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
