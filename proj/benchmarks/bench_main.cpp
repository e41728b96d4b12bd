#include <benchmark/benchmark.h>

#include <random>

#include "modalg/algebra.hpp"
#include "modalg/catalog.hpp"
#include "modalg/decomposition.hpp"
#include "modalg/fp_subspace.hpp"

using namespace modalg;

namespace {

const char* spec_for(std::int64_t order) {
  switch (order) {
    case 16: return "C2xD8";
    case 32: return "C4xD8";
    case 64: return "C8xD8";
    default: return "C2^8";
  }
}

FpVector random_element(std::mt19937_64& rng, unsigned p, std::size_t n) {
  FpVector v(p, n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, static_cast<unsigned>(rng() % p));
  return v;
}

void BM_Multiply(benchmark::State& state) {
  const GroupAlgebra ctx(parse_group_spec(spec_for(state.range(0))));
  std::mt19937_64 rng(1);
  const FpVector a = random_element(rng, 2, ctx.dim()), b = random_element(rng, 2, ctx.dim());
  for (auto _ : state) benchmark::DoNotOptimize(ctx.multiply(a, b));
}
BENCHMARK(BM_Multiply)->Arg(16)->Arg(32)->Arg(64)->Arg(256);

void BM_AugmentationPowers(benchmark::State& state) {
  const PGroup g = parse_group_spec(spec_for(state.range(0)));
  for (auto _ : state) {
    const GroupAlgebra ctx(g);
    for (unsigned m = 1; !ctx.augmentation_power(m).is_zero(); ++m) benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_AugmentationPowers)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Echelon(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const unsigned p = static_cast<unsigned>(state.range(1));
  std::mt19937_64 rng(2);
  std::vector<FpVector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(random_element(rng, p, n));
  for (auto _ : state) benchmark::DoNotOptimize(FpSubspace::span(p, n, rows));
}
BENCHMARK(BM_Echelon)->Args({64, 2})->Args({256, 2})->Args({64, 3})->Args({128, 5});

void BM_Recover(benchmark::State& state) {
  const PGroup a = parse_group_spec("C4"), b = parse_group_spec("D8");
  const PGroup g = direct_product(a, b);
  const GroupAlgebra ctx(g);
  std::vector<FpVector> bs, cs;
  for (Element x = 0; x < a.order(); ++x) bs.push_back(ctx.basis(x * b.order()));
  for (Element y = 0; y < b.order(); ++y) cs.push_back(ctx.basis(y));
  const auto fact = verify_tensor_factorization(ctx, AugmentedSubalgebra(ctx, FpSubspace::span(2, g.order(), bs)),
                                                AugmentedSubalgebra(ctx, FpSubspace::span(2, g.order(), cs)));
  for (auto _ : state) benchmark::DoNotOptimize(recover_decomposition(fact));
}
BENCHMARK(BM_Recover)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
