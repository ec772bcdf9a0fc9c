#include <benchmark/benchmark.h>

#include "lpc/chamber.hpp"
#include "lpc/fuzz.hpp"
#include "lpc/weyl.hpp"

namespace {

void BM_WeylGenerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  lpc::BasedRootDatum d = lpc::BasedRootDatum::gln(n);
  for (auto _ : state) {
    lpc::WeylGroup W = lpc::WeylGroup::generate(d);
    benchmark::DoNotOptimize(W.order());
  }
}
BENCHMARK(BM_WeylGenerate)->Arg(5)->Arg(6)->Arg(7);

void BM_RelativeWeyl(benchmark::State& state) {
  // GL_4 over a quaternion algebra: two blocks of size 2.
  lpc::BasedRootDatum d = lpc::BasedRootDatum::gln(4);
  lpc::WeylGroup W = lpc::WeylGroup::generate(d);
  lpc::GaloisAction a = lpc::GaloisAction::trivial(d);
  lpc::ParabolicSubset I0 = lpc::ParabolicSubset::make({0, 2}, d.ssrank());
  for (auto _ : state) {
    lpc::RelativeWeylGroup R = lpc::relative_weyl(W, I0, a);
    benchmark::DoNotOptimize(R.order());
  }
}
BENCHMARK(BM_RelativeWeyl);

void BM_ClassifyRoundTrip(benchmark::State& state) {
  lpc::Fuzzer fz(7);
  std::vector<lpc::GLnLParameter> params;
  for (int i = 0; i < 64; ++i) params.push_back(fz.parameter(16, 1));
  size_t i = 0;
  for (auto _ : state) {
    const auto& p = params[i++ % params.size()];
    auto t = lpc::classify(p, lpc::Mode::quotient);
    benchmark::DoNotOptimize(lpc::assemble(t, lpc::Mode::quotient));
  }
}
BENCHMARK(BM_ClassifyRoundTrip);

void BM_DominantConjugate(benchmark::State& state) {
  lpc::BasedRootDatum d = lpc::BasedRootDatum::gln(8);
  lpc::WeylGroup W = lpc::WeylGroup::generate(d);
  lpc::GaloisAction a = lpc::GaloisAction::trivial(d);
  lpc::ParabolicSubset I0 = lpc::ParabolicSubset::make({}, d.ssrank());
  lpc::RelativeWeylGroup R = lpc::relative_weyl(W, I0, a);
  lpc::AStarSpace space = lpc::AStarSpace::create(d, I0);
  std::vector<lpc::Rational> coords;
  for (int i = 0; i < 8; ++i) coords.emplace_back((i * 5) % 8, 2);
  lpc::NuVector nu = lpc::NuVector::create(space, coords);
  for (auto _ : state) {
    auto [w, dom] = lpc::dominant_conjugate(nu, R, space, W);
    benchmark::DoNotOptimize(dom.coords.size());
  }
}
BENCHMARK(BM_DominantConjugate);

}  // namespace

BENCHMARK_MAIN();
