#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "emg/matrix.hpp"

namespace emg {

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  int label = 0;

  bool is_leaf() const noexcept { return feature < 0; }
};

/// Flat binary tree; node 0 is the root. Rows with x[feature] <= threshold
/// go left.
struct DecisionTree {
  std::vector<TreeNode> nodes;

  int predict(std::span<const double> row) const;
  int depth() const;
};

struct ForestParams {
  int max_depth = 32;
  std::size_t min_samples_split = 2;
  std::size_t min_samples_leaf = 1;
  std::size_t max_features = 0;  // 0 -> ceil(sqrt(width))
  unsigned threads = 0;          // 0 -> hardware concurrency
};

struct RandomForestModel {
  std::vector<DecisionTree> trees;
  int n_classes = 0;
  std::size_t width = 0;
  std::uint64_t seed = 0;
  ForestParams params;

  std::size_t n_trees() const noexcept { return trees.size(); }

  /// Plurality vote of the first `n_used` trees (all when 0); ties go to the
  /// smallest class id.
  int predict(std::span<const double> row, std::size_t n_used = 0) const;
  std::vector<int> votes(std::span<const double> row, std::size_t n_used = 0) const;
};

/// Each tree i draws its bootstrap sample and feature subsets from a stream
/// seeded by (seed, i), so a forest of n trees is the n-tree prefix of any
/// larger forest fitted with the same seed, and threading does not change
/// the result.
RandomForestModel rf_fit(const FeatureMatrix& x, const Labels& y, std::size_t n_trees,
                         std::uint64_t seed, const ForestParams& params = {});

int rf_predict(const RandomForestModel& model, std::span<const double> row);

/// Fold sizes differ by at most one; the first n % folds folds take the
/// extra row. Rows are shuffled with `seed` then cut contiguously.
std::vector<std::vector<std::size_t>> kfold_partition(std::size_t n, std::size_t folds,
                                                      std::uint64_t seed);

/// Mean validation accuracy per grid value, in grid order.
std::vector<double> cv_accuracies(const FeatureMatrix& x, const Labels& y,
                                  std::span<const std::size_t> grid, std::size_t folds,
                                  std::uint64_t seed, const ForestParams& params = {});

/// Grid value with the highest mean fold accuracy; smallest value on ties.
std::size_t select_n_trees_cv(const FeatureMatrix& x, const Labels& y,
                              std::span<const std::size_t> grid, std::size_t folds,
                              std::uint64_t seed, const ForestParams& params = {});

inline constexpr std::size_t kDefaultTreeGrid[] = {25, 50, 100, 200, 400};

}  // namespace emg
