#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace emg {

struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
  std::uint64_t seed = 0;
};

/// rows = true class, columns = predicted class.
struct ConfusionMatrix {
  int n_classes = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t at(int truth, int pred) const {
    return counts[static_cast<std::size_t>(truth * n_classes + pred)];
  }
  std::uint64_t total() const;
  std::uint64_t trace() const;
  std::uint64_t row_sum(int truth) const;
  std::uint64_t col_sum(int pred) const;
};

struct ClassMetrics {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::uint64_t support = 0;
};

struct MetricsReport {
  double accuracy = 0;
  double macro_precision = 0;
  double macro_recall = 0;
  double macro_f1 = 0;
  std::vector<ClassMetrics> per_class;
};

struct LatencyReport {
  std::string stage;
  double mean_ms = 0;
  double std_ms = 0;
  std::size_t repetitions = 0;
  std::vector<double> samples_ms;
};

namespace evalx {

/// Seeded permutation; the first round(train_fraction * n) indices train.
SplitIndices shuffle_split(std::size_t n, double train_fraction, std::uint64_t seed);

ConfusionMatrix confusion(std::span<const int> y_true, std::span<const int> y_pred,
                          int n_classes = 8);

/// Per-class precision TP/(TP+FP), recall TP/(TP+FN) and
/// F1 TP/(TP + (FP+FN)/2); a zero denominator scores 0. Macro values are
/// unweighted means over all n_classes.
MetricsReport metrics(const ConfusionMatrix& cm);

/// Mean and sample standard deviation of timings in milliseconds.
LatencyReport summarize_latency(std::string stage, std::vector<double> samples_ms);

inline constexpr std::size_t kMinReps = 5;

void check_reps(std::size_t reps);

template <class T>
inline void do_not_optimize(T const& value) {
#if defined(__GNUC__) || defined(__clang__)
  asm volatile("" : : "r,m"(value) : "memory");
#else
  static volatile const void* sink;
  sink = &value;
#endif
}

/// Times `reps` calls of `stage` on one thread after `warmup` discarded
/// calls. The stage's return value, if any, is kept alive.
template <class F>
LatencyReport bench_stage(std::string name, F&& stage, std::size_t reps, std::size_t warmup = 1) {
  check_reps(reps);
  using Clock = std::chrono::steady_clock;
  auto call = [&] {
    if constexpr (std::is_void_v<std::invoke_result_t<F&>>) {
      stage();
    } else {
      auto result = stage();
      do_not_optimize(result);
    }
  };
  for (std::size_t i = 0; i < warmup; ++i) call();
  std::vector<double> samples;
  samples.reserve(reps);
  for (std::size_t i = 0; i < reps; ++i) {
    const auto t0 = Clock::now();
    call();
    const auto t1 = Clock::now();
    samples.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return summarize_latency(std::move(name), std::move(samples));
}

}  // namespace evalx
}  // namespace emg
