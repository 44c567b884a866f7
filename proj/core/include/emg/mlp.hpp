#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "emg/matrix.hpp"

namespace emg {

/// Fully connected network: rectifier on hidden layers, logistic output
/// units (or softmax when softmax_output is set). weights[l] maps layer l to
/// layer l+1 and has shape (layer_dims[l+1], layer_dims[l]).
struct MlpModel {
  std::vector<int> layer_dims;
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;
  bool softmax_output = false;

  int n_inputs() const { return layer_dims.front(); }
  int n_outputs() const { return layer_dims.back(); }
  std::size_t n_params() const;
};

struct MlpGradients {
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;
};

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::uint64_t step = 0;
};

struct TrainConfig {
  std::vector<int> hidden = {64, 64};
  std::size_t batch_size = 64;
  AdamConfig adam;
  int max_epochs = 300;
  int patience = 20;
  double min_improvement = 1e-5;
  double val_fraction = 0.0;
  bool softmax_output = false;
  std::uint64_t seed = 0;
};

struct TrainHistory {
  double initial_loss = 0.0;
  std::vector<double> epoch_loss;
  std::vector<double> val_loss;
};

inline const std::vector<int> kWideHiddenLayers = {60, 1000, 1000, 1000};

/// He-normal weights, zero biases.
MlpModel mlp_init(std::vector<int> layer_dims, std::uint64_t seed, bool softmax_output = false);

/// Per-class outputs, one row per input row.
Eigen::MatrixXd mlp_forward(const MlpModel& model, const FeatureMatrix& batch);

/// Categorical cross-entropy. With logistic outputs the cross-entropy is
/// taken against the outputs renormalized to sum to one.
double mlp_loss(const MlpModel& model, const FeatureMatrix& batch, const Eigen::MatrixXd& onehot);

std::pair<double, MlpGradients> mlp_loss_and_grad(const MlpModel& model,
                                                  const FeatureMatrix& batch,
                                                  const Eigen::MatrixXd& onehot);

/// One bias-corrected Adam update, in place. Sizes the state on first use.
void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state,
               const AdamConfig& config);

std::vector<double> flatten_params(const MlpModel& model);
void assign_params(MlpModel& model, std::span<const double> flat);
std::vector<double> flatten_grads(const MlpGradients& grads);

Eigen::MatrixXd one_hot(const Labels& y, int n_classes);

MlpModel mlp_train(const FeatureMatrix& x, const Labels& y, const TrainConfig& config,
                   TrainHistory* history = nullptr);

/// argmax of the output units; smallest index on exact ties.
int mlp_predict(const MlpModel& model, std::span<const double> row);

}  // namespace emg
