#include <benchmark/benchmark.h>

#include "lh/cg.hpp"
#include "lh/hyper.hpp"
#include "lh/liealg.hpp"
#include "lh/oracle.hpp"
#include "lh/repmat.hpp"

namespace {

const lh::ComplexEulerAngles kA{0.3, 0.2, 1.1, 0.4, 0.7, -0.3};

void BM_RepMatrix(benchmark::State& state) {
  const auto l = lh::HalfInt::from_twice(static_cast<int>(state.range(0)));
  const auto method = static_cast<lh::ZEvalMethod>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lh::rep_matrix(l, kA, method));
}
BENCHMARK(BM_RepMatrix)->ArgsProduct({{1, 2, 4, 6, 10}, {0, 1, 2}});

void BM_OracleMatrix(benchmark::State& state) {
  const auto l = lh::HalfInt::from_twice(static_cast<int>(state.range(0)));
  const auto g = lh::to_matrix(kA);
  for (auto _ : state) benchmark::DoNotOptimize(lh::oracle_matrix(l, g));
}
BENCHMARK(BM_OracleMatrix)->Arg(1)->Arg(2)->Arg(4)->Arg(6)->Arg(10);

void BM_ZJet(benchmark::State& state) {
  const auto l = lh::HalfInt::from_twice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lh::z_jet(l, 0, 0, 1.1, 0.4));
}
BENCHMARK(BM_ZJet)->Arg(2)->Arg(4)->Arg(8);

void BM_Commutator(benchmark::State& state) {
  const auto f = lh::m_family(1, 0, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(lh::commutator_residual(lh::OperatorId::A1, lh::OperatorId::A2,
                                                     {1, lh::OperatorId::A3}, f, kA));
}
BENCHMARK(BM_Commutator);

void BM_ClebschGordan(benchmark::State& state) {
  const lh::CGIndex idx{3, lh::HalfInt::from_twice(5), lh::HalfInt::from_twice(3), 1, -lh::kHalf,
                        lh::kHalf};
  for (auto _ : state) benchmark::DoNotOptimize(lh::clebsch_gordan(idx));
}
BENCHMARK(BM_ClebschGordan);

void BM_ClebschGordanExact(benchmark::State& state) {
  const lh::CGIndex idx{3, lh::HalfInt::from_twice(5), lh::HalfInt::from_twice(3), 1, -lh::kHalf, lh::kHalf};
  for (auto _ : state) benchmark::DoNotOptimize(lh::clebsch_gordan_exact(idx));
}
BENCHMARK(BM_ClebschGordanExact);

}  // namespace

BENCHMARK_MAIN();
