#include "emg/forest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "emg/errors.hpp"
#include "emg/rng.hpp"

namespace emg {
namespace {

int majority(std::span<const std::size_t> counts) {
  return static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

double gini(std::span<const std::size_t> counts, std::size_t total) {
  if (total == 0) return 0.0;
  double sum_sq = 0.0;
  const auto t = static_cast<double>(total);
  for (std::size_t c : counts) {
    const double p = static_cast<double>(c) / t;
    sum_sq += p * p;
  }
  return 1.0 - sum_sq;
}

class TreeBuilder {
 public:
  TreeBuilder(const FeatureMatrix& x, const Labels& y, int n_classes, const ForestParams& params,
              std::size_t max_features, Rng& rng)
      : x_(x), y_(y), n_classes_(n_classes), params_(params), max_features_(max_features),
        rng_(rng) {
    feature_pool_.resize(static_cast<std::size_t>(x.cols()));
    std::iota(feature_pool_.begin(), feature_pool_.end(), 0);
  }

  DecisionTree build(std::vector<std::size_t> rows) {
    tree_.nodes.clear();
    grow(rows, 0);
    return std::move(tree_);
  }

 private:
  struct Split {
    int feature = -1;
    double threshold = 0.0;
    double impurity = 0.0;
  };

  int grow(std::span<std::size_t> rows, int depth) {
    const int index = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();

    std::vector<std::size_t> counts(static_cast<std::size_t>(n_classes_), 0);
    for (std::size_t r : rows) ++counts[static_cast<std::size_t>(y_[r])];
    const int label = majority(counts);
    tree_.nodes[static_cast<std::size_t>(index)].label = label;

    const bool pure = counts[static_cast<std::size_t>(label)] == rows.size();
    if (pure || depth >= params_.max_depth || rows.size() < params_.min_samples_split) {
      return index;
    }
    const Split split = best_split(rows);
    if (split.feature < 0) return index;

    auto mid = std::partition(rows.begin(), rows.end(), [&](std::size_t r) {
      return x_(static_cast<Eigen::Index>(r), split.feature) <= split.threshold;
    });
    const auto n_left = static_cast<std::size_t>(mid - rows.begin());
    const int left = grow(rows.subspan(0, n_left), depth + 1);
    const int right = grow(rows.subspan(n_left), depth + 1);

    TreeNode& node = tree_.nodes[static_cast<std::size_t>(index)];
    node.feature = split.feature;
    node.threshold = split.threshold;
    node.left = left;
    node.right = right;
    return index;
  }

  Split best_split(std::span<const std::size_t> rows) {
    // partial Fisher-Yates: first max_features_ entries become the sample
    for (std::size_t i = 0; i < max_features_; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng_.below(feature_pool_.size() - i));
      std::swap(feature_pool_[i], feature_pool_[j]);
    }

    Split best;
    best.impurity = std::numeric_limits<double>::infinity();
    const std::size_t n = rows.size();
    std::vector<std::pair<double, int>> column(n);
    std::vector<std::size_t> left(static_cast<std::size_t>(n_classes_));
    std::vector<std::size_t> right(static_cast<std::size_t>(n_classes_));

    for (std::size_t fi = 0; fi < max_features_; ++fi) {
      const int feature = feature_pool_[fi];
      for (std::size_t i = 0; i < n; ++i) {
        column[i] = {x_(static_cast<Eigen::Index>(rows[i]), feature), y_[rows[i]]};
      }
      std::sort(column.begin(), column.end());
      if (column.front().first == column.back().first) continue;

      std::fill(left.begin(), left.end(), 0);
      std::fill(right.begin(), right.end(), 0);
      for (const auto& [v, c] : column) ++right[static_cast<std::size_t>(c)];

      for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto c = static_cast<std::size_t>(column[i].second);
        ++left[c];
        --right[c];
        if (column[i].first == column[i + 1].first) continue;
        const std::size_t n_left = i + 1;
        const std::size_t n_right = n - n_left;
        if (n_left < params_.min_samples_leaf || n_right < params_.min_samples_leaf) continue;
        const double impurity =
            (static_cast<double>(n_left) * gini(left, n_left) +
             static_cast<double>(n_right) * gini(right, n_right)) /
            static_cast<double>(n);
        if (impurity < best.impurity) {
          best.impurity = impurity;
          best.feature = feature;
          double t = 0.5 * (column[i].first + column[i + 1].first);
          // midpoint can round up onto the right value for adjacent doubles
          if (!(t < column[i + 1].first)) t = column[i].first;
          best.threshold = t;
        }
      }
    }
    return best;
  }

  const FeatureMatrix& x_;
  const Labels& y_;
  int n_classes_;
  const ForestParams& params_;
  std::size_t max_features_;
  Rng& rng_;
  std::vector<int> feature_pool_;
  DecisionTree tree_;
};

DecisionTree fit_tree(const FeatureMatrix& x, const Labels& y, int n_classes,
                      const ForestParams& params, std::size_t max_features, std::uint64_t seed) {
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(x.rows());
  std::vector<std::size_t> sample(n);
  for (auto& s : sample) s = static_cast<std::size_t>(rng.below(n));
  TreeBuilder builder(x, y, n_classes, params, max_features, rng);
  return builder.build(std::move(sample));
}

void validate(const FeatureMatrix& x, const Labels& y) {
  if (x.rows() == 0 || y.empty()) throw Error(ErrorCode::EmptyDataset, "no training rows");
  if (static_cast<std::size_t>(x.rows()) != y.size()) {
    throw Error(ErrorCode::LabelMismatch, std::to_string(x.rows()) + " rows but " +
                                              std::to_string(y.size()) + " labels");
  }
  if (x.rows() < 2) throw Error(ErrorCode::EmptyDataset, "need at least 2 rows");
  for (int label : y) {
    if (label < 0) throw Error(ErrorCode::LabelOutOfRange, "negative class label");
  }
}

}  // namespace

int DecisionTree::predict(std::span<const double> row) const {
  std::size_t i = 0;
  while (!nodes[i].is_leaf()) {
    const TreeNode& n = nodes[i];
    i = static_cast<std::size_t>(row[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left
                                                                                          : n.right);
  }
  return nodes[i].label;
}

int DecisionTree::depth() const {
  if (nodes.empty()) return 0;
  std::vector<std::pair<int, int>> stack{{0, 0}};
  int deepest = 0;
  while (!stack.empty()) {
    auto [i, d] = stack.back();
    stack.pop_back();
    deepest = std::max(deepest, d);
    const TreeNode& n = nodes[static_cast<std::size_t>(i)];
    if (!n.is_leaf()) {
      stack.emplace_back(n.left, d + 1);
      stack.emplace_back(n.right, d + 1);
    }
  }
  return deepest;
}

std::vector<int> RandomForestModel::votes(std::span<const double> row, std::size_t n_used) const {
  if (row.size() != width) {
    throw Error(ErrorCode::WidthMismatch, "row width " + std::to_string(row.size()) +
                                              ", forest trained on " + std::to_string(width));
  }
  const std::size_t used = n_used == 0 ? trees.size() : std::min(n_used, trees.size());
  std::vector<int> tally(static_cast<std::size_t>(n_classes), 0);
  for (std::size_t t = 0; t < used; ++t) ++tally[static_cast<std::size_t>(trees[t].predict(row))];
  return tally;
}

int RandomForestModel::predict(std::span<const double> row, std::size_t n_used) const {
  const auto tally = votes(row, n_used);
  return static_cast<int>(std::max_element(tally.begin(), tally.end()) - tally.begin());
}

RandomForestModel rf_fit(const FeatureMatrix& x, const Labels& y, std::size_t n_trees,
                         std::uint64_t seed, const ForestParams& params) {
  validate(x, y);
  if (n_trees == 0) throw Error(ErrorCode::InvalidArgument, "forest needs at least one tree");

  RandomForestModel model;
  model.n_classes = *std::max_element(y.begin(), y.end()) + 1;
  model.width = static_cast<std::size_t>(x.cols());
  model.seed = seed;
  model.params = params;
  model.trees.resize(n_trees);

  const std::size_t width = model.width;
  std::size_t max_features = params.max_features;
  if (max_features == 0) {
    max_features = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(width))));
  }
  max_features = std::clamp<std::size_t>(max_features, 1, width);

  unsigned threads = params.threads == 0 ? std::thread::hardware_concurrency() : params.threads;
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(n_trees));

  auto work = [&](unsigned worker) {
    for (std::size_t t = worker; t < n_trees; t += threads) {
      model.trees[t] = fit_tree(x, y, model.n_classes, params, max_features, mix_seed(seed, t));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  return model;
}

int rf_predict(const RandomForestModel& model, std::span<const double> row) {
  return model.predict(row);
}

std::vector<std::vector<std::size_t>> kfold_partition(std::size_t n, std::size_t folds,
                                                      std::uint64_t seed) {
  if (folds < 2 || n < folds) {
    throw Error(ErrorCode::TooFewSamples, std::to_string(n) + " samples cannot form " +
                                              std::to_string(folds) + " folds");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(mix_seed(seed, 0xf01d));
  rng.shuffle(order);

  std::vector<std::vector<std::size_t>> out(folds);
  std::size_t pos = 0;
  for (std::size_t f = 0; f < folds; ++f) {
    const std::size_t size = n / folds + (f < n % folds ? 1 : 0);
    out[f].assign(order.begin() + static_cast<std::ptrdiff_t>(pos),
                  order.begin() + static_cast<std::ptrdiff_t>(pos + size));
    pos += size;
  }
  return out;
}

std::vector<double> cv_accuracies(const FeatureMatrix& x, const Labels& y,
                                  std::span<const std::size_t> grid, std::size_t folds,
                                  std::uint64_t seed, const ForestParams& params) {
  validate(x, y);
  if (grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty tree-count grid");
  if (std::find(grid.begin(), grid.end(), std::size_t{0}) != grid.end()) {
    throw Error(ErrorCode::InvalidArgument, "tree counts must be positive");
  }
  const auto parts = kfold_partition(static_cast<std::size_t>(x.rows()), folds, seed);
  const std::size_t largest = *std::max_element(grid.begin(), grid.end());

  std::vector<double> sums(grid.size(), 0.0);
  for (std::size_t f = 0; f < folds; ++f) {
    std::vector<std::size_t> train;
    for (std::size_t g = 0; g < folds; ++g) {
      if (g != f) train.insert(train.end(), parts[g].begin(), parts[g].end());
    }
    std::sort(train.begin(), train.end());
    const auto& valid = parts[f];
    // prefixes of one large forest equal independently fitted smaller ones
    const auto forest = rf_fit(take_rows(x, train), take_labels(y, train), largest, seed, params);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      std::size_t correct = 0;
      for (std::size_t r : valid) {
        if (forest.predict(row_span(x, static_cast<Eigen::Index>(r)), grid[k]) == y[r]) ++correct;
      }
      sums[k] += static_cast<double>(correct) / static_cast<double>(valid.size());
    }
  }
  for (double& s : sums) s /= static_cast<double>(folds);
  return sums;
}

std::size_t select_n_trees_cv(const FeatureMatrix& x, const Labels& y,
                              std::span<const std::size_t> grid, std::size_t folds,
                              std::uint64_t seed, const ForestParams& params) {
  const auto acc = cv_accuracies(x, y, grid, folds, seed, params);
  std::size_t best = 0;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    // fold means are sums of ratios; treat rounding-level differences as ties
    const bool tie = std::abs(acc[k] - acc[best]) <= 1e-12;
    if ((!tie && acc[k] > acc[best]) || (tie && grid[k] < grid[best])) best = k;
  }
  return grid[best];
}

}  // namespace emg
