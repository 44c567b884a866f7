#include "pipeline.hpp"

#include <cstdio>

#include "emg/features.hpp"
#include "emg/forest.hpp"
#include "emg/mlp.hpp"

namespace emg::cli {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

Experiment prepare(const std::vector<TrialRecording>& recordings, const PipelineConfig& pipeline) {
  BuildOptions build;
  build.window_ms = pipeline.window_ms;
  build.overlap = pipeline.overlap;
  build.denoise = pipeline.denoise;
  build.include_duplicate_ie = pipeline.include_duplicate_ie;
  Experiment e;
  e.data = data::build_dataset(recordings, build);
  e.split = evalx::shuffle_split(e.data.y.size(), 0.8, pipeline.seed);
  return e;
}

TrainedModel fit_model(const Dataset& data, const std::vector<std::size_t>& rows,
                       Algorithm algorithm, const PipelineConfig& pipeline,
                       const ModelOptions& options) {
  const FeatureMatrix raw = take_rows(data.x, rows);
  const Labels y = take_labels(data.y, rows);
  TrainedModel m;
  m.algorithm = algorithm;
  m.pipeline = pipeline;
  m.scaler = Scaler::fit(raw);
  const FeatureMatrix x = m.scaler.apply(raw);
  if (algorithm == Algorithm::RandomForest) {
    const std::size_t n_trees =
        options.tree_grid.size() == 1
            ? options.tree_grid.front()
            : select_n_trees_cv(x, y, options.tree_grid, options.cv_folds, pipeline.seed);
    m.forest = rf_fit(x, y, n_trees, pipeline.seed);
  } else {
    TrainConfig cfg = options.nn;
    cfg.seed = pipeline.seed;
    if (options.wide_nn) cfg.hidden = kWideHiddenLayers;
    m.mlp = mlp_train(x, y, cfg);
  }
  return m;
}

ConfusionMatrix evaluate(const TrainedModel& model, const Dataset& data,
                         const std::vector<std::size_t>& rows) {
  std::vector<int> truth, pred;
  truth.reserve(rows.size());
  pred.reserve(rows.size());
  for (std::size_t r : rows) {
    truth.push_back(data.y[r]);
    pred.push_back(model.predict(row_span(data.x, static_cast<Eigen::Index>(r))));
  }
  return evalx::confusion(truth, pred, features::kNumClasses);
}

std::vector<SweepRow> run_sweep(const std::vector<TrialRecording>& recordings,
                                const SweepOptions& options) {
  std::vector<SweepRow> rf_rows, nn_rows;
  for (double window : options.windows_ms) {
    PipelineConfig pipeline;
    pipeline.window_ms = window;
    pipeline.overlap = options.overlap;
    pipeline.denoise = options.denoise;
    pipeline.seed = options.seed;
    const Experiment e = prepare(recordings, pipeline);
    for (Algorithm a : {Algorithm::RandomForest, Algorithm::NeuralNet}) {
      const TrainedModel m = fit_model(e.data, e.split.train, a, pipeline, options.models);
      SweepRow row{a, window, evalx::metrics(evaluate(m, e.data, e.split.test))};
      (a == Algorithm::RandomForest ? rf_rows : nn_rows).push_back(std::move(row));
    }
  }
  rf_rows.insert(rf_rows.end(), nn_rows.begin(), nn_rows.end());
  return rf_rows;
}

std::vector<SnrRow> snr_table(const std::vector<TrialRecording>& recordings,
                              const std::vector<double>& windows_ms, double overlap) {
  std::vector<SnrRow> out;
  std::vector<std::vector<double>> raw, clean;
  std::vector<double> rates;
  for (const auto& rec : recordings) {
    for (const SampleSeries* ch : {&rec.fds, &rec.edc}) {
      raw.push_back(ch->samples);
      clean.push_back(dsp::denoise(std::span<const double>(ch->samples)));
      rates.push_back(ch->rate_hz);
    }
  }
  for (double window : windows_ms) {
    SnrRow row{window, 0.0, 0.0, 0, 0};
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const std::size_t len = data::window_samples(window, rates[i]);
      const std::span<const double> a(raw[i]), b(clean[i]);
      for (std::size_t s : dsp::window_starts(a.size(), len, overlap)) {
        const double before =
            features::freq_features(features::welch_psd(a.subspan(s, len), rates[i])).snr;
        const double after =
            features::freq_features(features::welch_psd(b.subspan(s, len), rates[i])).snr;
        row.raw_snr_mean += before;
        row.denoised_snr_mean += after;
        row.improved += after > before ? 1 : 0;
        ++row.windows;
      }
    }
    if (row.windows > 0) {
      row.raw_snr_mean /= static_cast<double>(row.windows);
      row.denoised_snr_mean /= static_cast<double>(row.windows);
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace emg::cli
