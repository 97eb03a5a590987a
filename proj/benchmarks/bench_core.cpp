#include <benchmark/benchmark.h>

#include <vector>

#include "tdlf/oracle.hpp"
#include "tdlf/parse.hpp"
#include "tdlf/seminorm.hpp"
#include "tdlf/series.hpp"
#include "tdlf/submodule.hpp"

namespace {

using tdlf::FieldKind;
namespace oracle = tdlf::oracle;

void BM_MinplusConvolve(benchmark::State& state) {
  oracle::Rng rng(1);
  std::vector<std::pair<tdlf::SeqSpec, tdlf::SeqSpec>> inputs;
  for (int n = 0; n < 64; ++n) inputs.emplace_back(oracle::random_seqspec(rng), oracle::random_seqspec(rng));
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [a, b] = inputs[k++ % inputs.size()];
    benchmark::DoNotOptimize(tdlf::minplus_convolve(a, b));
  }
}
BENCHMARK(BM_MinplusConvolve);

void BM_PAdicMul(benchmark::State& state) {
  const auto precision = state.range(0);
  oracle::Rng rng(2);
  const tdlf::PAdic x = oracle::random_padic(rng, 5, 1, precision);
  const tdlf::PAdic y = oracle::random_padic(rng, 5, -2, precision);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_PAdicMul)->Arg(8)->Arg(32)->Arg(128)->Arg(512);

void BM_MixedSeriesMul(benchmark::State& state) {
  const auto width = state.range(0);
  oracle::Rng rng(3);
  const tdlf::Series x = oracle::random_element(rng, FieldKind::MixedChar, 5, -width, width,
                                                static_cast<std::size_t>(2 * width + 1), 32);
  const tdlf::Series y = oracle::random_element(rng, FieldKind::MixedChar, 5, -width, width,
                                                static_cast<std::size_t>(2 * width + 1), 32);
  for (auto _ : state) benchmark::DoNotOptimize(tdlf::mul(x, y));
  state.SetComplexityN(width);
}
BENCHMARK(BM_MixedSeriesMul)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_TailedSeriesMul(benchmark::State& state) {
  oracle::Rng rng(4);
  const tdlf::MixedSeries x = oracle::random_tailed_element(rng, 5, 32);
  const tdlf::MixedSeries y = oracle::random_tailed_element(rng, 5, 32);
  for (auto _ : state) benchmark::DoNotOptimize(tdlf::mul(x, y));
}
BENCHMARK(BM_TailedSeriesMul);

void BM_SeminormEval(benchmark::State& state) {
  oracle::Rng rng(5);
  std::vector<std::pair<tdlf::SeminormSpec, tdlf::Series>> inputs;
  for (int n = 0; n < 64; ++n)
    inputs.emplace_back(oracle::random_seminorm(rng, FieldKind::MixedChar),
                        oracle::random_element(rng, FieldKind::MixedChar, 5, -10, 10, 8, 32));
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [n, x] = inputs[k++ % inputs.size()];
    benchmark::DoNotOptimize(tdlf::eval_exponent(n, x));
  }
}
BENCHMARK(BM_SeminormEval);

void BM_BruteSeminorm(benchmark::State& state) {
  oracle::Rng rng(6);
  const tdlf::SeminormSpec n = oracle::random_seminorm(rng, FieldKind::MixedChar);
  const tdlf::Series x = oracle::random_element(rng, FieldKind::MixedChar, 5, -10, 10, 8, 32);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_seminorm(n, x, -20, 20));
}
BENCHMARK(BM_BruteSeminorm);

void BM_ParseRender(benchmark::State& state) {
  const std::string text = "3*p^2*t^-4 - 17/3*t^-1 + 2 + p^-1*t^5 + tail(v>=left 0 slope 2; right 6)";
  const tdlf::ParseOptions opts{5, 32, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(tdlf::render(tdlf::parse_series(text, opts)));
}
BENCHMARK(BM_ParseRender);

}  // namespace

BENCHMARK_MAIN();
