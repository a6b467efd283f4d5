// Serial reference vs OpenMP kernels on the heaviest corpus algebras.
#include <benchmark/benchmark.h>

#include "liegrad/classify.hpp"
#include "liegrad/corpus.hpp"

using namespace liegrad;

namespace {

const char* const kAlgebras[] = {"L_6_1", "L_6_2", "L_6_22(1)"};

Grading maximal_of(std::size_t i) {
  return maximal_grading(std::make_shared<const LieAlgebra>(corpus_algebra(kAlgebras[i])));
}

void BM_Quotients(benchmark::State& state) {
  Grading m = maximal_of(static_cast<std::size_t>(state.range(0)));
  const Exec exec = state.range(1) ? Exec::Parallel : Exec::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(torsionfree_quotients(m, exec).size());
  state.SetLabel(std::string(kAlgebras[state.range(0)]) + (state.range(1) ? " parallel" : " serial"));
}

void BM_Classify(benchmark::State& state) {
  Grading m = maximal_of(static_cast<std::size_t>(state.range(0)));
  const Exec exec = state.range(1) ? Exec::Parallel : Exec::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(classify_gradings(m, exec).counts.classes);
  state.SetLabel(std::string(kAlgebras[state.range(0)]) + (state.range(1) ? " parallel" : " serial") + ", " +
                 std::to_string(thread_count()) + " threads");
}

}  // namespace

BENCHMARK(BM_Quotients)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Classify)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
