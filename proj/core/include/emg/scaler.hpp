#pragma once

#include <span>
#include <vector>

#include "emg/matrix.hpp"

namespace emg {

/// Per-column standardization. Columns whose population std falls below
/// kMinStd are given std 1, so they map to x - mean.
struct Scaler {
  static constexpr double kMinStd = 1e-8;

  std::vector<double> means;
  std::vector<double> stds;

  std::size_t width() const noexcept { return means.size(); }

  static Scaler fit(const FeatureMatrix& rows);

  std::vector<double> apply(std::span<const double> row) const;
  FeatureMatrix apply(const FeatureMatrix& rows) const;
  std::vector<double> inverse(std::span<const double> row) const;
};

}  // namespace emg
