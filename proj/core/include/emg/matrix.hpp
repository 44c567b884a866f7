#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace emg {

/// Feature rows, one sample per row.
using FeatureMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Labels = std::vector<int>;

inline std::span<const double> row_span(const FeatureMatrix& m, Eigen::Index r) {
  return {m.data() + r * m.cols(), static_cast<std::size_t>(m.cols())};
}

/// Copies the listed rows into a new matrix.
FeatureMatrix take_rows(const FeatureMatrix& m, std::span<const std::size_t> rows);
Labels take_labels(const Labels& y, std::span<const std::size_t> rows);

}  // namespace emg
