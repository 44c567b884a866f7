#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "emg/data_io.hpp"
#include "emg/dsp.hpp"
#include "emg/features.hpp"
#include "emg/forest.hpp"
#include "emg/mlp.hpp"
#include "emg/scaler.hpp"

using namespace emg;

namespace {

std::vector<double> noise(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> d(0.0, 30.0);
  std::vector<double> v(n);
  for (double& x : v) x = d(gen);
  return v;
}

struct Fixture {
  Dataset data;
  FeatureMatrix z;
  RandomForestModel forest;
  MlpModel mlp;

  Fixture() {
    SynthConfig cfg;
    cfg.trials_per_gesture = 2;
    BuildOptions opts;
    opts.window_ms = 200;
    data = data::build_dataset(data::gen_synthetic_corpus(cfg), opts);
    z = Scaler::fit(data.x).apply(data.x);
    forest = rf_fit(z, data.y, 100, 0);
    TrainConfig tc;
    tc.max_epochs = 30;
    mlp = mlp_train(z, data.y, tc);
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

}  // namespace

static void BM_Denoise(benchmark::State& state) {
  const auto x = noise(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(dsp::denoise(x));
}
BENCHMARK(BM_Denoise)->Arg(200)->Arg(600)->Arg(1000)->Unit(benchmark::kMicrosecond);

static void BM_DwtRoundTrip(benchmark::State& state) {
  const auto x = noise(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(dsp::dwt_inverse(dsp::dwt_forward(x)));
}
BENCHMARK(BM_DwtRoundTrip)->Arg(200)->Arg(1000)->Unit(benchmark::kMicrosecond);

static void BM_WelchPsd(benchmark::State& state) {
  const auto x = noise(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(features::welch_psd(x, 1000.0));
}
BENCHMARK(BM_WelchPsd)->Arg(200)->Arg(1000)->Unit(benchmark::kMicrosecond);

static void BM_FeatureVector(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto fds = noise(n, 4), edc = noise(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(features::assemble_feature_vector(fds, edc, 1000.0, 0));
}
BENCHMARK(BM_FeatureVector)->Arg(200)->Arg(600)->Arg(1000)->Unit(benchmark::kMicrosecond);

static void BM_ForestPredict(benchmark::State& state) {
  const auto& f = fixture();
  Eigen::Index r = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rf_predict(f.forest, row_span(f.z, r)));
    r = (r + 1) % f.z.rows();
  }
}
BENCHMARK(BM_ForestPredict)->Unit(benchmark::kMicrosecond);

static void BM_MlpPredict(benchmark::State& state) {
  const auto& f = fixture();
  Eigen::Index r = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mlp_predict(f.mlp, row_span(f.z, r)));
    r = (r + 1) % f.z.rows();
  }
}
BENCHMARK(BM_MlpPredict)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
