// Serial reference vs. OpenMP kernels. Each parallel benchmark first checks
// that its result equals the serial one and aborts the run if not.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "oa/construct.hpp"
#include "oa/enumerate.hpp"
#include "oa/kernels.hpp"

namespace {

std::vector<std::int64_t> random_vector(std::size_t size) {
  std::mt19937_64 rng(size);
  std::uniform_int_distribution<std::int64_t> dist(0, 8);
  std::vector<std::int64_t> v(size);
  for (auto& x : v) x = dist(rng);
  return v;
}

template <bool Parallel>
void BM_HadamardTransform(benchmark::State& state) {
  const auto input = random_vector(std::size_t{1} << state.range(0));
  if constexpr (Parallel) {
    auto a = input, b = input;
    oa::kernels::hadamard_transform(a);
    oa::kernels::serial::hadamard_transform(b);
    if (a != b) state.SkipWithError("parallel transform disagrees with serial");
  }
  auto work = input;
  for (auto _ : state) {
    work = input;
    if constexpr (Parallel) {
      oa::kernels::hadamard_transform(work);
    } else {
      oa::kernels::serial::hadamard_transform(work);
    }
    benchmark::DoNotOptimize(work.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(input.size()));
}
BENCHMARK(BM_HadamardTransform<false>)->DenseRange(10, 22, 4);
BENCHMARK(BM_HadamardTransform<true>)->DenseRange(10, 22, 4)->UseRealTime();

// A feasible shortened J-vector for m columns: the full factorial
// replicated `copies` times has every slot zero.
template <bool Parallel>
void BM_CountsFromShortJ(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const std::int64_t n = std::int64_t{4} << m;
  std::vector<std::int64_t> entries(static_cast<std::size_t>(m + 1), 0);
  entries[0] = -(std::int64_t{1} << m);
  if constexpr (Parallel) {
    if (oa::kernels::counts_from_short_j(m, n, entries) !=
        oa::kernels::serial::counts_from_short_j(m, n, entries)) {
      state.SkipWithError("parallel counts disagree with serial");
    }
  }
  for (auto _ : state) {
    auto counts = Parallel ? oa::kernels::counts_from_short_j(m, n, entries)
                           : oa::kernels::serial::counts_from_short_j(m, n, entries);
    benchmark::DoNotOptimize(counts.data());
  }
}
BENCHMARK(BM_CountsFromShortJ<false>)->DenseRange(10, 22, 4);
BENCHMARK(BM_CountsFromShortJ<true>)->DenseRange(10, 22, 4)->UseRealTime();

template <bool Parallel>
void BM_RunHistogram(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<std::int64_t> counts = random_vector(std::size_t{1} << m);
  const auto design = oa::design_from_counts(oa::NVector{m, counts});
  if constexpr (Parallel) {
    if (oa::kernels::run_histogram(design) != oa::kernels::serial::run_histogram(design)) {
      state.SkipWithError("parallel histogram disagrees with serial");
    }
  }
  for (auto _ : state) {
    auto hist = Parallel ? oa::kernels::run_histogram(design)
                         : oa::kernels::serial::run_histogram(design);
    benchmark::DoNotOptimize(hist.data());
  }
  state.SetItemsProcessed(state.iterations() * design.runs());
}
BENCHMARK(BM_RunHistogram<false>)->DenseRange(8, 16, 4);
BENCHMARK(BM_RunHistogram<true>)->DenseRange(8, 16, 4)->UseRealTime();

// Enumeration of OA(lambda 2^3, 5, 2, 3) solutions, parallel over k.
template <bool Parallel>
void BM_Solutions(benchmark::State& state) {
  const std::int64_t lambda = state.range(0);
  if constexpr (Parallel) {
    if (oa::solutions(3, lambda) != oa::serial::solutions(3, lambda)) {
      state.SkipWithError("parallel enumeration disagrees with serial");
    }
  }
  for (auto _ : state) {
    auto s = Parallel ? oa::solutions(3, lambda) : oa::serial::solutions(3, lambda);
    benchmark::DoNotOptimize(s.data());
  }
}
BENCHMARK(BM_Solutions<false>)->Arg(51)->Arg(101);
BENCHMARK(BM_Solutions<true>)->Arg(51)->Arg(101)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
