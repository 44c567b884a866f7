#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emg/data_io.hpp"
#include "emg/evalx.hpp"
#include "emg/model_io.hpp"

namespace emg::cli {

inline const std::vector<double> kSweepWindowsMs = {200, 400, 600, 800, 1000};

struct ModelOptions {
  std::vector<std::size_t> tree_grid = {std::begin(kDefaultTreeGrid), std::end(kDefaultTreeGrid)};
  std::size_t cv_folds = 5;
  bool wide_nn = false;
  TrainConfig nn;
};

/// Train/test rows of one dataset, split with the pipeline seed.
struct Experiment {
  Dataset data;
  SplitIndices split;
};

Experiment prepare(const std::vector<TrialRecording>& recordings, const PipelineConfig& pipeline);

/// Fits the scaler and the classifier on the given rows only.
TrainedModel fit_model(const Dataset& data, const std::vector<std::size_t>& rows,
                       Algorithm algorithm, const PipelineConfig& pipeline,
                       const ModelOptions& options);

ConfusionMatrix evaluate(const TrainedModel& model, const Dataset& data,
                         const std::vector<std::size_t>& rows);

struct SweepRow {
  Algorithm algorithm;
  double window_ms;
  MetricsReport metrics;
};

struct SweepOptions {
  std::vector<double> windows_ms = kSweepWindowsMs;
  double overlap = 0.9;
  bool denoise = true;
  std::uint64_t seed = 0;
  ModelOptions models;
};

/// Rows ordered by algorithm (rf, nn), then window size.
std::vector<SweepRow> run_sweep(const std::vector<TrialRecording>& recordings,
                                const SweepOptions& options);

struct SnrRow {
  double window_ms;
  double raw_snr_mean;
  double denoised_snr_mean;
  std::size_t windows;          // channel-windows averaged
  std::size_t improved;         // channel-windows whose SNR rose
};

/// Spectral SNR of every channel-window before and after denoising.
std::vector<SnrRow> snr_table(const std::vector<TrialRecording>& recordings,
                              const std::vector<double>& windows_ms, double overlap);

std::string format_real(double v);

}  // namespace emg::cli
