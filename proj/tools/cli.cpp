#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "emg/errors.hpp"
#include "emg/features.hpp"
#include "pipeline.hpp"

namespace emg::cli {
namespace fs = std::filesystem;
namespace {

struct Flags {
  std::uint64_t seed = 0;
  std::string out;
  std::string manifest;
  std::string model;
  std::vector<std::string> latency;
  double window_ms = -1;  // < 0: command default
  double overlap = 0.9;
  std::string algo = "rf";
  bool wide_nn = false;
  bool no_denoise = false;
  // synth
  int subjects = 1;
  int trials = 10;
  double duration_s = 2.0;
  // bench
  std::size_t reps = 50;
  std::size_t warmup = 5;
};

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::MissingFile, "cannot write " + path.string());
  return f;
}

void write_metrics_csv(const fs::path& path, const std::vector<SweepRow>& rows) {
  auto f = open_out(path);
  f << "algorithm,window_ms,accuracy,precision,recall,f1\n";
  for (const auto& r : rows) {
    f << to_string(r.algorithm) << ',' << static_cast<long long>(std::llround(r.window_ms)) << ','
      << format_real(r.metrics.accuracy) << ',' << format_real(r.metrics.macro_precision) << ','
      << format_real(r.metrics.macro_recall) << ',' << format_real(r.metrics.macro_f1) << '\n';
  }
}

void write_confusion_csv(const fs::path& path, const ConfusionMatrix& cm) {
  auto f = open_out(path);
  f << "true";
  for (int p = 0; p < cm.n_classes; ++p) f << ",pred_" << p;
  f << '\n';
  for (int t = 0; t < cm.n_classes; ++t) {
    f << t;
    for (int p = 0; p < cm.n_classes; ++p) f << ',' << cm.at(t, p);
    f << '\n';
  }
}

PipelineConfig pipeline_from(const Flags& flags, double default_window) {
  PipelineConfig p;
  p.window_ms = flags.window_ms > 0 ? flags.window_ms : default_window;
  p.overlap = flags.overlap;
  p.denoise = !flags.no_denoise;
  p.seed = flags.seed;
  return p;
}

std::vector<TrialRecording> load_required(const Flags& flags) {
  if (flags.manifest.empty()) throw Error(ErrorCode::MissingInput, "--manifest is required");
  return data::load_manifest_recordings(flags.manifest);
}

int cmd_synth(const Flags& flags, std::ostream& out) {
  SynthConfig cfg;
  cfg.seed = flags.seed;
  cfg.n_subjects = flags.subjects;
  cfg.trials_per_gesture = flags.trials;
  cfg.duration_s = flags.duration_s;
  const auto manifest = data::write_corpus(data::gen_synthetic_corpus(cfg), flags.out);
  out << "wrote " << manifest.string() << '\n';
  return kExitOk;
}

int cmd_train(const Flags& flags, std::ostream& out) {
  const auto recordings = load_required(flags);
  const PipelineConfig pipeline = pipeline_from(flags, 1000.0);
  const Experiment e = prepare(recordings, pipeline);
  ModelOptions options;
  options.wide_nn = flags.wide_nn;
  const TrainedModel m =
      fit_model(e.data, e.split.train, parse_algorithm(flags.algo), pipeline, options);
  fs::create_directories(flags.out);
  const fs::path path = fs::path(flags.out) / "model.txt";
  save_model_file(m, path);
  out << "trained " << flags.algo << " on " << e.split.train.size() << " of " << e.data.y.size()
      << " windows";
  if (m.algorithm == Algorithm::RandomForest) out << " (" << m.forest.n_trees() << " trees)";
  out << "; wrote " << path.string() << '\n';
  return kExitOk;
}

int cmd_eval(const Flags& flags, std::ostream& out) {
  if (flags.model.empty()) throw Error(ErrorCode::MissingInput, "--model is required");
  const TrainedModel m = load_model_file(flags.model);
  const auto recordings = load_required(flags);
  const Experiment e = prepare(recordings, m.pipeline);
  const ConfusionMatrix cm = evaluate(m, e.data, e.split.test);
  const MetricsReport report = evalx::metrics(cm);
  write_metrics_csv(fs::path(flags.out) / "metrics.csv",
                    {SweepRow{m.algorithm, m.pipeline.window_ms, report}});
  write_confusion_csv(fs::path(flags.out) / "confusion.csv", cm);
  out << "accuracy " << format_real(report.accuracy) << " on " << e.split.test.size()
      << " held-out windows\n";
  return kExitOk;
}

int cmd_bench(const Flags& flags, std::ostream& out) {
  const auto recordings = load_required(flags);
  if (recordings.empty()) throw Error(ErrorCode::EmptyDataset, "manifest lists no trials");
  const PipelineConfig pipeline = pipeline_from(flags, 200.0);

  TrainedModel model;
  if (!flags.model.empty()) {
    model = load_model_file(flags.model);
  } else {
    const Experiment e = prepare(recordings, pipeline);
    ModelOptions options;
    options.tree_grid = {100};
    options.wide_nn = flags.wide_nn;
    model = fit_model(e.data, e.split.train, parse_algorithm(flags.algo), pipeline, options);
  }

  const TrialRecording& rec = recordings.front();
  const double rate = rec.fds.rate_hz;
  const std::size_t len = data::window_samples(pipeline.window_ms, rate);
  if (len > rec.length()) throw Error(ErrorCode::WindowTooLong, "trial shorter than the window");
  const std::span<const double> fds(rec.fds.samples.data(), len);
  const std::span<const double> edc(rec.edc.samples.data(), len);
  const auto clean_fds = dsp::denoise(fds);
  const auto clean_edc = dsp::denoise(edc);
  const auto fv = features::assemble_feature_vector(clean_fds, clean_edc, rate, rec.label);

  std::vector<LatencyReport> reports;
  reports.push_back(evalx::bench_stage(
      "denoise", [&] { return dsp::denoise(fds).back() + dsp::denoise(edc).back(); }, flags.reps,
      flags.warmup));
  reports.push_back(evalx::bench_stage(
      "features",
      [&] { return features::assemble_feature_vector(clean_fds, clean_edc, rate, rec.label).values; },
      flags.reps, flags.warmup));
  reports.push_back(evalx::bench_stage(
      "predict", [&] { return model.predict(fv.values); }, flags.reps, flags.warmup));
  reports.push_back(evalx::bench_stage(
      "pipeline",
      [&] {
        const auto a = dsp::denoise(fds);
        const auto b = dsp::denoise(edc);
        return model.predict(features::assemble_feature_vector(a, b, rate, rec.label).values);
      },
      flags.reps, flags.warmup));

  auto f = open_out(fs::path(flags.out) / "latency.csv");
  f << "stage,window_ms,mean_ms,std_ms,repetitions\n";
  for (const auto& r : reports) {
    f << r.stage << ',' << static_cast<long long>(std::llround(pipeline.window_ms)) << ','
      << format_real(r.mean_ms) << ',' << format_real(r.std_ms) << ',' << r.repetitions << '\n';
    out << r.stage << ": " << format_real(r.mean_ms) << " +- " << format_real(r.std_ms) << " ms\n";
  }
  return kExitOk;
}

int cmd_sweep(const Flags& flags, std::ostream& out) {
  const auto recordings = load_required(flags);
  SweepOptions options;
  options.overlap = flags.overlap;
  options.denoise = !flags.no_denoise;
  options.seed = flags.seed;
  options.models.wide_nn = flags.wide_nn;
  if (flags.window_ms > 0) options.windows_ms = {flags.window_ms};
  const auto rows = run_sweep(recordings, options);
  const fs::path path = fs::path(flags.out) / "sweep.csv";
  write_metrics_csv(path, rows);
  for (const auto& r : rows) {
    out << to_string(r.algorithm) << " @ " << r.window_ms << " ms: accuracy "
        << format_real(r.metrics.accuracy) << '\n';
  }
  return kExitOk;
}

struct LatencyAggregate {
  double n = 0, mean = 0, m2 = 0;  // pooled moments
};

int cmd_report(const Flags& flags, std::ostream& out) {
  if (flags.manifest.empty() && flags.latency.empty()) {
    throw Error(ErrorCode::MissingInput, "report needs --manifest and/or --latency inputs");
  }
  if (!flags.manifest.empty()) {
    const auto recordings = data::load_manifest_recordings(flags.manifest);
    const auto rows = snr_table(recordings, kSweepWindowsMs, flags.overlap);
    auto f = open_out(fs::path(flags.out) / "snr_by_window.csv");
    f << "window_ms,raw_snr_mean,denoised_snr_mean\n";
    for (const auto& r : rows) {
      f << static_cast<long long>(std::llround(r.window_ms)) << ',' << format_real(r.raw_snr_mean)
        << ',' << format_real(r.denoised_snr_mean) << '\n';
    }
    out << "wrote snr_by_window.csv\n";
  }
  if (!flags.latency.empty()) {
    std::vector<std::string> order;
    std::map<std::string, LatencyAggregate> stages;
    for (const auto& path : flags.latency) {
      std::ifstream in(path);
      if (!in) throw Error(ErrorCode::MissingInput, "cannot open " + path);
      std::string line;
      std::getline(in, line);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line != "stage,window_ms,mean_ms,std_ms,repetitions") {
        throw Error(ErrorCode::BadHeader, path + ": not a latency CSV");
      }
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string stage, window, mean, sd, reps;
        std::getline(ss, stage, ',');
        std::getline(ss, window, ',');
        std::getline(ss, mean, ',');
        std::getline(ss, sd, ',');
        std::getline(ss, reps, ',');
        const double n = std::stod(reps), mu = std::stod(mean), s = std::stod(sd);
        auto [it, fresh] = stages.try_emplace(stage);
        if (fresh) order.push_back(stage);
        LatencyAggregate& agg = it->second;
        // Chan et al. parallel combination of (n, mean, M2)
        const double total = agg.n + n;
        const double delta = mu - agg.mean;
        agg.m2 += s * s * (n - 1.0) + delta * delta * agg.n * n / total;
        agg.mean += delta * n / total;
        agg.n = total;
      }
    }
    auto f = open_out(fs::path(flags.out) / "latency_summary.csv");
    f << "stage,mean_ms,std_ms\n";
    for (const auto& stage : order) {
      const auto& a = stages[stage];
      const double sd = a.n > 1 ? std::sqrt(a.m2 / (a.n - 1.0)) : 0.0;
      f << stage << ',' << format_real(a.mean) << ',' << format_real(sd) << '\n';
    }
    out << "wrote latency_summary.csv\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"EMG gesture pipeline: synthetic corpus, training, evaluation, benchmarks",
               "emgctl"};
  app.require_subcommand(1);
  Flags flags;

  auto seed = [&](CLI::App* sub) {
    sub->add_option("--seed", flags.seed, "RNG seed")->capture_default_str();
  };
  auto manifest = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--manifest", flags.manifest, "manifest.csv of the trial corpus");
    if (required) o->required();
  };
  auto pipeline_opts = [&](CLI::App* sub) {
    sub->add_option("--window-ms", flags.window_ms, "window length in milliseconds")
        ->check(CLI::PositiveNumber);
    sub->add_option("--overlap", flags.overlap, "fraction of overlap between windows")
        ->check(CLI::Range(0.0, 0.999999))
        ->capture_default_str();
    sub->add_flag("--no-denoise", flags.no_denoise, "skip wavelet denoising");
  };
  auto out_dir = [&](CLI::App* sub) {
    sub->add_option("--out", flags.out, "output directory")->required();
  };

  auto* synth = app.add_subcommand("synth", "write a seeded synthetic corpus and manifest");
  seed(synth);
  out_dir(synth);
  synth->add_option("--subjects", flags.subjects)->check(CLI::PositiveNumber)->capture_default_str();
  synth->add_option("--trials", flags.trials, "trials per gesture per subject")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth->add_option("--duration", flags.duration_s, "seconds per trial")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* train = app.add_subcommand("train", "fit a model on the 80% training split");
  seed(train);
  out_dir(train);
  manifest(train, true);
  pipeline_opts(train);
  train->add_option("--algo", flags.algo)->check(CLI::IsMember({"rf", "nn"}))->capture_default_str();
  train->add_flag("--wide-nn", flags.wide_nn, "use the 60-1000-1000-1000 hidden layout");

  auto* eval = app.add_subcommand("eval", "score a model on its held-out split");
  seed(eval);
  out_dir(eval);
  manifest(eval, true);
  eval->add_option("--model", flags.model, "model.txt written by train")->required();

  auto* bench = app.add_subcommand("bench", "time denoise, features and predict on one window");
  seed(bench);
  out_dir(bench);
  manifest(bench, true);
  pipeline_opts(bench);
  bench->add_option("--model", flags.model, "model.txt (default: fit a 100-tree forest)");
  bench->add_option("--algo", flags.algo)->check(CLI::IsMember({"rf", "nn"}))->capture_default_str();
  bench->add_flag("--wide-nn", flags.wide_nn);
  bench->add_option("--reps", flags.reps)->check(CLI::Range(5, 1000000))->capture_default_str();
  bench->add_option("--warmup", flags.warmup)->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "accuracy of rf and nn across window sizes");
  seed(sweep);
  out_dir(sweep);
  manifest(sweep, true);
  pipeline_opts(sweep);
  sweep->add_flag("--wide-nn", flags.wide_nn);

  auto* report = app.add_subcommand("report", "summary CSVs: SNR by window, latency");
  seed(report);
  out_dir(report);
  manifest(report, false);
  report->add_option("--latency", flags.latency, "latency.csv files written by bench");
  report->add_option("--overlap", flags.overlap)->check(CLI::Range(0.0, 0.999999));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*synth) return cmd_synth(flags, out);
    if (*train) return cmd_train(flags, out);
    if (*eval) return cmd_eval(flags, out);
    if (*bench) return cmd_bench(flags, out);
    if (*sweep) return cmd_sweep(flags, out);
    if (*report) return cmd_report(flags, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::invalid_argument& e) {
    err << "error: malformed number in input (" << e.what() << ")\n";
    return kExitDataError;
  }
  return kExitUsage;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace emg::cli
