// Serial reference vs OpenMP kernels: GF(2) elimination on the truncated
// multiplication operators and a suite sweep.

#include <benchmark/benchmark.h>

#include "dk/element.hpp"
#include "dk/gf2.hpp"
#include "dk/solver.hpp"
#include "dk/suites.hpp"

namespace {

  dk::Exec exec_of(benchmark::State const& state) {
    return state.range(1) == 0 ? dk::Exec::serial : dk::Exec::parallel;
  }

  void BM_Kernel(benchmark::State& state) {
    auto const L = static_cast<std::size_t>(state.range(0));
    dk::solver::TruncatedOperator const op(dk::parse_element("a + xa^2 + axa"),
                                           dk::solver::Side::left_mul, L);
    auto const exec = exec_of(state);
    for (auto _ : state) {
      benchmark::DoNotOptimize(dk::gf2::kernel(op.matrix(), exec));
    }
    state.counters["cols"] = static_cast<double>(op.matrix().cols());
  }

  void BM_Solve(benchmark::State& state) {
    auto const L = static_cast<std::size_t>(state.range(0));
    dk::solver::TruncatedOperator const op(dk::parse_element("1 + a + xa^2"),
                                           dk::solver::Side::left_mul, L);
    auto const rhs  = op.columns().encode(dk::RingElement::one());
    auto const exec = exec_of(state);
    for (auto _ : state) {
      benchmark::DoNotOptimize(dk::gf2::solve(op.matrix(), rhs, exec));
    }
  }

  void BM_SuiteSweep(benchmark::State& state) {
    dk::suites::SuiteOptions o;
    o.samples = 100;
    o.exec    = exec_of(state);
    for (auto _ : state) {
      benchmark::DoNotOptimize(dk::suites::run_suite("rann", o));
    }
  }

}  // namespace

BENCHMARK(BM_Kernel)->ArgsProduct({{8, 10, 12}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Solve)->ArgsProduct({{8, 10, 12}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteSweep)->Args({0, 0})->Args({0, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
