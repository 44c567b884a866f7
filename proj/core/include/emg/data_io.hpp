#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "emg/dsp.hpp"
#include "emg/matrix.hpp"

namespace emg {

struct TrialRecording {
  SampleSeries fds;
  SampleSeries edc;
  int label = 0;
  int subject = 0;
  int trial = 0;

  std::size_t length() const noexcept { return fds.samples.size(); }
};

struct ManifestEntry {
  std::string path;  // relative to the manifest's directory
  int label = 0;
  int subject = 0;
  int trial = 0;

  bool operator==(const ManifestEntry&) const = default;
};

struct DatasetManifest {
  std::vector<ManifestEntry> entries;
};

struct SynthNoise {
  double white_sigma_uv = 20.0;
  double powerline_uv = 4.0;
  double powerline_hz = 50.0;
  double wander_uv = 8.0;
  double wander_hz = 0.3;
};

struct SynthConfig {
  double duration_s = 2.0;
  double rate_hz = 1000.0;
  int n_subjects = 1;
  int trials_per_gesture = 10;
  SynthNoise noise;
  std::uint64_t seed = 0;
};

/// Per-gesture generator parameters: channel amplitudes (RMS, microvolts,
/// before subject gain) and the mean rate of activation bursts.
struct GestureSignature {
  double fds_uv;
  double edc_uv;
  double burst_hz;
};

inline constexpr int kNumGestures = 8;

/// Low/high amplitude on each muscle crossed with sparse/dense bursting.
inline constexpr std::array<GestureSignature, kNumGestures> kGestureSignatures = {{
    {40.0, 40.0, 8.0},
    {40.0, 40.0, 40.0},
    {40.0, 80.0, 8.0},
    {40.0, 80.0, 40.0},
    {80.0, 40.0, 8.0},
    {80.0, 40.0, 40.0},
    {80.0, 80.0, 8.0},
    {80.0, 80.0, 40.0},
}};

struct Dataset {
  FeatureMatrix x;
  Labels y;
  std::vector<int> groups;                // subject id per row
  std::vector<std::size_t> recording;     // source recording index per row
  std::vector<std::size_t> window_start;  // sample offset per row
};

struct BuildOptions {
  double window_ms = 1000.0;
  double overlap = 0.9;
  bool denoise = true;
  bool include_duplicate_ie = false;
  unsigned threads = 0;  // 0 -> hardware concurrency
};

namespace data {

inline constexpr const char* kTrialHeader = "t_ms,fds_uv,edc_uv";
inline constexpr const char* kManifestHeader = "path,label,subject,trial";

TrialRecording load_trial_csv(const std::filesystem::path& path, int label, int subject, int trial);
void write_trial_csv(const TrialRecording& rec, const std::filesystem::path& path);

DatasetManifest read_manifest(const std::filesystem::path& path);
void write_manifest(const DatasetManifest& manifest, const std::filesystem::path& path);
/// Loads every trial listed in a manifest, resolving paths against its directory.
std::vector<TrialRecording> load_manifest_recordings(const std::filesystem::path& manifest_path);

void validate(const SynthConfig& cfg);

/// Deterministic in (cfg.seed, label, subject, trial).
TrialRecording gen_synthetic_trial(const SynthConfig& cfg, int label, int subject, int trial);

std::vector<TrialRecording> gen_synthetic_corpus(const SynthConfig& cfg);

/// Writes one CSV per recording plus manifest.csv into `dir`; returns the
/// manifest path.
std::filesystem::path write_corpus(const std::vector<TrialRecording>& recordings,
                                   const std::filesystem::path& dir);

std::size_t window_samples(double window_ms, double rate_hz);

/// Denoise (optional) -> shared window boundaries for both channels ->
/// feature vectors, rows in recording order.
Dataset build_dataset(const std::vector<TrialRecording>& recordings, const BuildOptions& opts);

}  // namespace data
}  // namespace emg
