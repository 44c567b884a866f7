#include "emg/evalx.hpp"

#include <cmath>
#include <numeric>

#include "emg/errors.hpp"
#include "emg/rng.hpp"

namespace emg {

std::uint64_t ConfusionMatrix::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::uint64_t ConfusionMatrix::trace() const {
  std::uint64_t t = 0;
  for (int k = 0; k < n_classes; ++k) t += at(k, k);
  return t;
}

std::uint64_t ConfusionMatrix::row_sum(int truth) const {
  std::uint64_t s = 0;
  for (int p = 0; p < n_classes; ++p) s += at(truth, p);
  return s;
}

std::uint64_t ConfusionMatrix::col_sum(int pred) const {
  std::uint64_t s = 0;
  for (int t = 0; t < n_classes; ++t) s += at(t, pred);
  return s;
}

namespace evalx {

SplitIndices shuffle_split(std::size_t n, double train_fraction, std::uint64_t seed) {
  if (n < 5) throw Error(ErrorCode::TooFew, "split needs at least 5 samples, got " + std::to_string(n));
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "train fraction must lie in (0, 1)");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(mix_seed(seed, 0x5917));
  rng.shuffle(order);
  // round half up
  const auto n_train =
      static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(n) + 0.5));
  SplitIndices s;
  s.seed = seed;
  s.train.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_train));
  s.test.assign(order.begin() + static_cast<std::ptrdiff_t>(n_train), order.end());
  return s;
}

ConfusionMatrix confusion(std::span<const int> y_true, std::span<const int> y_pred, int n_classes) {
  if (y_true.size() != y_pred.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(y_true.size()) + " truths vs " +
                                               std::to_string(y_pred.size()) + " predictions");
  }
  if (n_classes < 1) throw Error(ErrorCode::InvalidArgument, "n_classes must be positive");
  ConfusionMatrix cm;
  cm.n_classes = n_classes;
  cm.counts.assign(static_cast<std::size_t>(n_classes * n_classes), 0);
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const int t = y_true[i];
    const int p = y_pred[i];
    if (t < 0 || t >= n_classes || p < 0 || p >= n_classes) {
      throw Error(ErrorCode::LabelOutOfRange, "label pair (" + std::to_string(t) + ", " +
                                                  std::to_string(p) + ") at index " +
                                                  std::to_string(i));
    }
    ++cm.counts[static_cast<std::size_t>(t * n_classes + p)];
  }
  return cm;
}

MetricsReport metrics(const ConfusionMatrix& cm) {
  const std::uint64_t total = cm.total();
  if (total == 0) throw Error(ErrorCode::EmptyMatrix, "confusion matrix has no samples");
  MetricsReport r;
  r.per_class.resize(static_cast<std::size_t>(cm.n_classes));
  for (int k = 0; k < cm.n_classes; ++k) {
    const auto tp = static_cast<double>(cm.at(k, k));
    const auto fp = static_cast<double>(cm.col_sum(k)) - tp;
    const auto fn = static_cast<double>(cm.row_sum(k)) - tp;
    ClassMetrics& c = r.per_class[static_cast<std::size_t>(k)];
    c.support = cm.row_sum(k);
    c.precision = tp + fp > 0 ? tp / (tp + fp) : 0.0;
    c.recall = tp + fn > 0 ? tp / (tp + fn) : 0.0;
    const double f1_den = tp + 0.5 * (fp + fn);
    c.f1 = f1_den > 0 ? tp / f1_den : 0.0;
    r.macro_precision += c.precision;
    r.macro_recall += c.recall;
    r.macro_f1 += c.f1;
  }
  const auto k = static_cast<double>(cm.n_classes);
  r.macro_precision /= k;
  r.macro_recall /= k;
  r.macro_f1 /= k;
  r.accuracy = static_cast<double>(cm.trace()) / static_cast<double>(total);
  return r;
}

void check_reps(std::size_t reps) {
  if (reps < kMinReps) {
    throw Error(ErrorCode::TooFewReps, "need at least " + std::to_string(kMinReps) +
                                           " repetitions, got " + std::to_string(reps));
  }
}

LatencyReport summarize_latency(std::string stage, std::vector<double> samples_ms) {
  if (samples_ms.size() < 2) throw Error(ErrorCode::TooFewReps, "need at least 2 timings");
  LatencyReport r;
  r.stage = std::move(stage);
  r.repetitions = samples_ms.size();
  const auto n = static_cast<double>(samples_ms.size());
  r.mean_ms = std::accumulate(samples_ms.begin(), samples_ms.end(), 0.0) / n;
  double ss = 0.0;
  for (double s : samples_ms) ss += (s - r.mean_ms) * (s - r.mean_ms);
  r.std_ms = std::sqrt(ss / (n - 1.0));
  r.samples_ms = std::move(samples_ms);
  return r;
}

}  // namespace evalx
}  // namespace emg
