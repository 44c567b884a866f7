#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>

#include "emg/forest.hpp"
#include "emg/mlp.hpp"
#include "emg/scaler.hpp"

namespace emg {

enum class Algorithm { RandomForest, NeuralNet };

std::string_view to_string(Algorithm a) noexcept;  // "rf" / "nn"
Algorithm parse_algorithm(std::string_view name);

/// How raw recordings were turned into feature rows for a model.
struct PipelineConfig {
  double window_ms = 1000.0;
  double overlap = 0.9;
  bool denoise = true;
  bool include_duplicate_ie = false;
  std::uint64_t seed = 0;
};

/// A scaler plus one classifier, with the feature pipeline it expects.
struct TrainedModel {
  Algorithm algorithm = Algorithm::RandomForest;
  PipelineConfig pipeline;
  Scaler scaler;
  RandomForestModel forest;
  MlpModel mlp;

  /// Scales the raw feature row, then classifies it.
  int predict(std::span<const double> raw_features) const;
};

inline constexpr std::string_view kModelMagic = "EMGMODEL";
inline constexpr int kModelVersion = 1;

// Text format, one token stream; reals are written as hex floats so a
// load reproduces every parameter bit for bit.
void save_model(const TrainedModel& model, std::ostream& out);
TrainedModel load_model(std::istream& in);

void save_model_file(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel load_model_file(const std::filesystem::path& path);

}  // namespace emg
