#include "emg/scaler.hpp"

#include <cmath>
#include <string>

#include "emg/errors.hpp"

namespace emg {

FeatureMatrix take_rows(const FeatureMatrix& m, std::span<const std::size_t> rows) {
  FeatureMatrix out(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = m.row(static_cast<Eigen::Index>(rows[i]));
  }
  return out;
}

Labels take_labels(const Labels& y, std::span<const std::size_t> rows) {
  Labels out;
  out.reserve(rows.size());
  for (std::size_t r : rows) out.push_back(y[r]);
  return out;
}

Scaler Scaler::fit(const FeatureMatrix& rows) {
  if (rows.rows() < 2) {
    throw Error(ErrorCode::TooFewRows,
                "scaler needs at least 2 rows, got " + std::to_string(rows.rows()));
  }
  const auto n = static_cast<double>(rows.rows());
  Scaler s;
  s.means.resize(static_cast<std::size_t>(rows.cols()));
  s.stds.resize(static_cast<std::size_t>(rows.cols()));
  for (Eigen::Index c = 0; c < rows.cols(); ++c) {
    const double mean = rows.col(c).sum() / n;
    const double var = (rows.col(c).array() - mean).square().sum() / n;
    const double sd = std::sqrt(var);
    s.means[static_cast<std::size_t>(c)] = mean;
    s.stds[static_cast<std::size_t>(c)] = sd < kMinStd ? 1.0 : sd;
  }
  return s;
}

std::vector<double> Scaler::apply(std::span<const double> row) const {
  if (row.size() != width()) {
    throw Error(ErrorCode::WidthMismatch, "row width " + std::to_string(row.size()) +
                                              ", scaler fitted on " + std::to_string(width()));
  }
  std::vector<double> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) out[i] = (row[i] - means[i]) / stds[i];
  return out;
}

FeatureMatrix Scaler::apply(const FeatureMatrix& rows) const {
  if (static_cast<std::size_t>(rows.cols()) != width()) {
    throw Error(ErrorCode::WidthMismatch, "matrix width " + std::to_string(rows.cols()) +
                                              ", scaler fitted on " + std::to_string(width()));
  }
  FeatureMatrix out(rows.rows(), rows.cols());
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    for (Eigen::Index c = 0; c < rows.cols(); ++c) {
      const auto k = static_cast<std::size_t>(c);
      out(r, c) = (rows(r, c) - means[k]) / stds[k];
    }
  }
  return out;
}

std::vector<double> Scaler::inverse(std::span<const double> row) const {
  if (row.size() != width()) throw Error(ErrorCode::WidthMismatch, "inverse width mismatch");
  std::vector<double> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) out[i] = row[i] * stds[i] + means[i];
  return out;
}

}  // namespace emg
