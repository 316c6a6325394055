// Serial reference against the OpenMP kernels.

#include <random>

#include <benchmark/benchmark.h>

#include "akspecht/specht.hpp"

using namespace ak;

namespace {

const Algebra<RationalField>& algebra() {
  static const Algebra<RationalField> A(generic_parameters(2, 4));
  return A;
}

std::vector<Algebra<RationalField>::Elem> random_batch(std::size_t n) {
  const auto& A = algebra();
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(A.dimension() - 1));
  std::vector<Algebra<RationalField>::Elem> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::pair<std::uint32_t, mpq_class>> t;
    for (int k = 0; k < 12; ++k) t.emplace_back(pick(rng), mpq_class(k + 1));
    out.push_back(Algebra<RationalField>::combine(std::move(t)));
  }
  return out;
}

void BM_right_mul(benchmark::State& state) {
  const auto& A = algebra();
  auto vs = random_batch(512);
  const Exec exec = state.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : state)
    for (int g = 0; g < A.r(); ++g) benchmark::DoNotOptimize(batch_right_mul(A, vs, g, exec));
}

void BM_specht_closure(benchmark::State& state) {
  const auto& A = algebra();
  const Multipartition L({{2}, {1, 1}});
  const Exec exec = state.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : state) benchmark::DoNotOptimize(specht_module(A, L, exec).rank());
}

void BM_rank_one(benchmark::State& state) {
  Algebra<RationalField> A(generic_parameters(2, 3));
  const Multipartition L({{1}, {2}});
  for (auto _ : state) benchmark::DoNotOptimize(rank_one_report(A, L).rank);
}

}  // namespace

BENCHMARK(BM_right_mul)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_specht_closure)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_one)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
