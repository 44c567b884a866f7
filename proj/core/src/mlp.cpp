#include "emg/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "emg/errors.hpp"
#include "emg/rng.hpp"

namespace emg {
namespace {

// log(sigmoid(z)) without overflow
double log_sigmoid(double z) {
  return z >= 0.0 ? -std::log1p(std::exp(-z)) : z - std::log1p(std::exp(z));
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

struct ForwardPass {
  std::vector<Eigen::MatrixXd> activations;  // activations[0] = input
  Eigen::MatrixXd logits;                    // pre-activation of the output layer
};

void check_width(const MlpModel& m, Eigen::Index cols) {
  if (cols != m.n_inputs()) {
    throw Error(ErrorCode::WidthMismatch, "input width " + std::to_string(cols) +
                                              ", network expects " +
                                              std::to_string(m.n_inputs()));
  }
}

ForwardPass run_forward(const MlpModel& m, const FeatureMatrix& batch) {
  check_width(m, batch.cols());
  ForwardPass fp;
  fp.activations.reserve(m.weights.size());
  fp.activations.emplace_back(batch);
  const std::size_t layers = m.weights.size();
  for (std::size_t l = 0; l < layers; ++l) {
    Eigen::MatrixXd z = fp.activations.back() * m.weights[l].transpose();
    z.rowwise() += m.biases[l].transpose();
    if (l + 1 == layers) {
      fp.logits = std::move(z);
    } else {
      fp.activations.emplace_back(z.cwiseMax(0.0));
    }
  }
  return fp;
}

Eigen::MatrixXd outputs_from_logits(const MlpModel& m, const Eigen::MatrixXd& logits) {
  Eigen::MatrixXd out(logits.rows(), logits.cols());
  if (m.softmax_output) {
    for (Eigen::Index r = 0; r < logits.rows(); ++r) {
      const double top = logits.row(r).maxCoeff();
      out.row(r) = (logits.row(r).array() - top).exp();
      out.row(r) /= out.row(r).sum();
    }
  } else {
    out = logits.unaryExpr([](double z) { return sigmoid(z); });
  }
  return out;
}

// Mean loss and dL/dlogits (already divided by the batch size).
double output_loss(const MlpModel& m, const Eigen::MatrixXd& logits, const Eigen::MatrixXd& onehot,
                   Eigen::MatrixXd* dlogits) {
  const Eigen::Index rows = logits.rows();
  const Eigen::Index k = logits.cols();
  const double inv_b = 1.0 / static_cast<double>(rows);
  if (dlogits) dlogits->resize(rows, k);
  double total = 0.0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (m.softmax_output) {
      const double top = logits.row(r).maxCoeff();
      const double lse = top + std::log((logits.row(r).array() - top).exp().sum());
      for (Eigen::Index c = 0; c < k; ++c) {
        total -= onehot(r, c) * (logits(r, c) - lse);
        if (dlogits) (*dlogits)(r, c) = (std::exp(logits(r, c) - lse) - onehot(r, c)) * inv_b;
      }
    } else {
      // q_c = p_c / S with p = sigmoid(z), S = sum p;
      // L = -sum y_c log p_c + (sum y) log S
      double s = 0.0;
      for (Eigen::Index c = 0; c < k; ++c) s += sigmoid(logits(r, c));
      const double y_sum = onehot.row(r).sum();
      double row_loss = y_sum * std::log(s);
      for (Eigen::Index c = 0; c < k; ++c) {
        row_loss -= onehot(r, c) * log_sigmoid(logits(r, c));
        if (dlogits) {
          const double p = sigmoid(logits(r, c));
          (*dlogits)(r, c) = (1.0 - p) * (y_sum * p / s - onehot(r, c)) * inv_b;
        }
      }
      total += row_loss;
    }
  }
  return total * inv_b;
}

void check_labels(const MlpModel& m, const FeatureMatrix& batch, const Eigen::MatrixXd& onehot) {
  if (onehot.rows() != batch.rows() || onehot.cols() != m.n_outputs()) {
    throw Error(ErrorCode::ShapeMismatch,
                "labels are " + std::to_string(onehot.rows()) + "x" + std::to_string(onehot.cols()) +
                    ", expected " + std::to_string(batch.rows()) + "x" +
                    std::to_string(m.n_outputs()));
  }
}

bool all_finite(const MlpModel& m) {
  for (const auto& w : m.weights) {
    if (!w.allFinite()) return false;
  }
  for (const auto& b : m.biases) {
    if (!b.allFinite()) return false;
  }
  return true;
}

}  // namespace

std::size_t MlpModel::n_params() const {
  std::size_t n = 0;
  for (std::size_t l = 0; l < weights.size(); ++l) {
    n += static_cast<std::size_t>(weights[l].size() + biases[l].size());
  }
  return n;
}

MlpModel mlp_init(std::vector<int> layer_dims, std::uint64_t seed, bool softmax_output) {
  if (layer_dims.size() < 2) {
    throw Error(ErrorCode::ShapeMismatch, "network needs at least input and output layers");
  }
  for (int d : layer_dims) {
    if (d < 1) throw Error(ErrorCode::ShapeMismatch, "layer widths must be positive");
  }
  MlpModel m;
  m.layer_dims = std::move(layer_dims);
  m.softmax_output = softmax_output;
  Rng rng(mix_seed(seed, 0x1417));
  for (std::size_t l = 0; l + 1 < m.layer_dims.size(); ++l) {
    const int fan_in = m.layer_dims[l];
    const int fan_out = m.layer_dims[l + 1];
    const double sd = std::sqrt(2.0 / fan_in);
    Eigen::MatrixXd w(fan_out, fan_in);
    for (Eigen::Index r = 0; r < w.rows(); ++r) {
      for (Eigen::Index c = 0; c < w.cols(); ++c) w(r, c) = rng.normal(0.0, sd);
    }
    m.weights.push_back(std::move(w));
    m.biases.push_back(Eigen::VectorXd::Zero(fan_out));
  }
  return m;
}

Eigen::MatrixXd mlp_forward(const MlpModel& model, const FeatureMatrix& batch) {
  return outputs_from_logits(model, run_forward(model, batch).logits);
}

double mlp_loss(const MlpModel& model, const FeatureMatrix& batch, const Eigen::MatrixXd& onehot) {
  check_labels(model, batch, onehot);
  return output_loss(model, run_forward(model, batch).logits, onehot, nullptr);
}

std::pair<double, MlpGradients> mlp_loss_and_grad(const MlpModel& model,
                                                  const FeatureMatrix& batch,
                                                  const Eigen::MatrixXd& onehot) {
  check_labels(model, batch, onehot);
  const ForwardPass fp = run_forward(model, batch);
  Eigen::MatrixXd delta;
  const double loss = output_loss(model, fp.logits, onehot, &delta);

  const std::size_t layers = model.weights.size();
  MlpGradients g;
  g.weights.resize(layers);
  g.biases.resize(layers);
  for (std::size_t l = layers; l-- > 0;) {
    g.weights[l] = delta.transpose() * fp.activations[l];
    g.biases[l] = delta.colwise().sum().transpose();
    if (l > 0) {
      Eigen::MatrixXd back = delta * model.weights[l];
      // rectifier derivative: pass where the activation was positive
      delta = back.cwiseProduct(
          fp.activations[l].unaryExpr([](double a) { return a > 0.0 ? 1.0 : 0.0; }));
    }
  }
  return {loss, std::move(g)};
}

void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state,
               const AdamConfig& config) {
  if (params.size() != grads.size()) {
    throw Error(ErrorCode::ShapeMismatch, "parameter and gradient sizes differ");
  }
  if (state.m.empty() && state.v.empty()) {
    state.m.assign(params.size(), 0.0);
    state.v.assign(params.size(), 0.0);
  }
  if (state.m.size() != params.size() || state.v.size() != params.size()) {
    throw Error(ErrorCode::ShapeMismatch, "optimizer state does not match parameter count");
  }
  ++state.step;
  const double t = static_cast<double>(state.step);
  const double correction1 = 1.0 - std::pow(config.beta1, t);
  const double correction2 = 1.0 - std::pow(config.beta2, t);
  for (std::size_t i = 0; i < params.size(); ++i) {
    state.m[i] = config.beta1 * state.m[i] + (1.0 - config.beta1) * grads[i];
    state.v[i] = config.beta2 * state.v[i] + (1.0 - config.beta2) * grads[i] * grads[i];
    const double m_hat = state.m[i] / correction1;
    const double v_hat = state.v[i] / correction2;
    params[i] -= config.learning_rate * m_hat / (std::sqrt(v_hat) + config.epsilon);
  }
}

std::vector<double> flatten_params(const MlpModel& model) {
  std::vector<double> flat;
  flat.reserve(model.n_params());
  for (std::size_t l = 0; l < model.weights.size(); ++l) {
    const auto& w = model.weights[l];
    flat.insert(flat.end(), w.data(), w.data() + w.size());
    const auto& b = model.biases[l];
    flat.insert(flat.end(), b.data(), b.data() + b.size());
  }
  return flat;
}

void assign_params(MlpModel& model, std::span<const double> flat) {
  if (flat.size() != model.n_params()) {
    throw Error(ErrorCode::ShapeMismatch, "flat parameter vector has wrong length");
  }
  std::size_t pos = 0;
  for (std::size_t l = 0; l < model.weights.size(); ++l) {
    auto& w = model.weights[l];
    std::copy_n(flat.begin() + static_cast<std::ptrdiff_t>(pos), w.size(), w.data());
    pos += static_cast<std::size_t>(w.size());
    auto& b = model.biases[l];
    std::copy_n(flat.begin() + static_cast<std::ptrdiff_t>(pos), b.size(), b.data());
    pos += static_cast<std::size_t>(b.size());
  }
}

std::vector<double> flatten_grads(const MlpGradients& grads) {
  std::vector<double> flat;
  for (std::size_t l = 0; l < grads.weights.size(); ++l) {
    const auto& w = grads.weights[l];
    flat.insert(flat.end(), w.data(), w.data() + w.size());
    const auto& b = grads.biases[l];
    flat.insert(flat.end(), b.data(), b.data() + b.size());
  }
  return flat;
}

Eigen::MatrixXd one_hot(const Labels& y, int n_classes) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(y.size()), n_classes);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] < 0 || y[i] >= n_classes) {
      throw Error(ErrorCode::LabelOutOfRange, "label " + std::to_string(y[i]));
    }
    out(static_cast<Eigen::Index>(i), y[i]) = 1.0;
  }
  return out;
}

MlpModel mlp_train(const FeatureMatrix& x, const Labels& y, const TrainConfig& config,
                   TrainHistory* history) {
  if (x.rows() == 0 || y.empty()) throw Error(ErrorCode::EmptyDataset, "no training rows");
  if (static_cast<std::size_t>(x.rows()) != y.size()) {
    throw Error(ErrorCode::LabelMismatch, "row and label counts differ");
  }
  if (config.batch_size < 1) throw Error(ErrorCode::InvalidArgument, "batch_size must be >= 1");
  if (!(config.adam.learning_rate > 0.0) || !(config.adam.beta1 > 0.0 && config.adam.beta1 < 1.0) ||
      !(config.adam.beta2 > 0.0 && config.adam.beta2 < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "Adam hyperparameters out of range");
  }

  std::vector<int> dims;
  dims.push_back(static_cast<int>(x.cols()));
  dims.insert(dims.end(), config.hidden.begin(), config.hidden.end());
  dims.push_back(std::max(*std::max_element(y.begin(), y.end()) + 1, 2));
  MlpModel model = mlp_init(dims, config.seed, config.softmax_output);
  const int n_classes = dims.back();

  Rng rng(mix_seed(config.seed, 0x7a1));
  std::vector<std::size_t> order(y.size());
  std::iota(order.begin(), order.end(), 0);

  std::vector<std::size_t> train_rows = order, val_rows;
  if (config.val_fraction > 0.0) {
    rng.shuffle(order);
    const auto n_val = static_cast<std::size_t>(
        std::floor(config.val_fraction * static_cast<double>(order.size())));
    val_rows.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_val));
    train_rows.assign(order.begin() + static_cast<std::ptrdiff_t>(n_val), order.end());
    std::sort(train_rows.begin(), train_rows.end());
  }
  const FeatureMatrix x_train = take_rows(x, train_rows);
  const Eigen::MatrixXd y_train = one_hot(take_labels(y, train_rows), n_classes);
  FeatureMatrix x_val;
  Eigen::MatrixXd y_val;
  if (!val_rows.empty()) {
    x_val = take_rows(x, val_rows);
    y_val = one_hot(take_labels(y, val_rows), n_classes);
  }

  if (history) history->initial_loss = mlp_loss(model, x_train, y_train);

  std::vector<AdamState> states(2 * model.weights.size());
  std::vector<std::size_t> batch_order(train_rows.size());
  std::iota(batch_order.begin(), batch_order.end(), 0);

  double best = std::numeric_limits<double>::infinity();
  int stale = 0;
  for (int epoch = 0; epoch < config.max_epochs; ++epoch) {
    rng.shuffle(batch_order);
    double epoch_loss = 0.0;
    for (std::size_t start = 0; start < batch_order.size(); start += config.batch_size) {
      const std::size_t end = std::min(start + config.batch_size, batch_order.size());
      const std::span<const std::size_t> idx(batch_order.data() + start, end - start);
      const FeatureMatrix xb = take_rows(x_train, idx);
      Eigen::MatrixXd yb(static_cast<Eigen::Index>(idx.size()), n_classes);
      for (std::size_t i = 0; i < idx.size(); ++i) {
        yb.row(static_cast<Eigen::Index>(i)) = y_train.row(static_cast<Eigen::Index>(idx[i]));
      }
      auto [loss, grads] = mlp_loss_and_grad(model, xb, yb);
      epoch_loss += loss * static_cast<double>(idx.size());
      for (std::size_t l = 0; l < model.weights.size(); ++l) {
        auto& w = model.weights[l];
        auto& b = model.biases[l];
        adam_step({w.data(), static_cast<std::size_t>(w.size())},
                  {grads.weights[l].data(), static_cast<std::size_t>(w.size())}, states[2 * l],
                  config.adam);
        adam_step({b.data(), static_cast<std::size_t>(b.size())},
                  {grads.biases[l].data(), static_cast<std::size_t>(b.size())},
                  states[2 * l + 1], config.adam);
      }
    }
    epoch_loss /= static_cast<double>(batch_order.size());
    if (!all_finite(model) || !std::isfinite(epoch_loss)) {
      throw Error(ErrorCode::NonFiniteValue,
                  "training diverged at epoch " + std::to_string(epoch + 1));
    }
    if (history) {
      history->epoch_loss.push_back(epoch_loss);
      if (!val_rows.empty()) history->val_loss.push_back(mlp_loss(model, x_val, y_val));
    }
    if (best - epoch_loss < config.min_improvement) {
      if (++stale >= config.patience) break;
    } else {
      stale = 0;
    }
    best = std::min(best, epoch_loss);
  }
  return model;
}

int mlp_predict(const MlpModel& model, std::span<const double> row) {
  check_width(model, static_cast<Eigen::Index>(row.size()));
  Eigen::RowVectorXd a = Eigen::Map<const Eigen::RowVectorXd>(row.data(),
                                                               static_cast<Eigen::Index>(row.size()));
  const std::size_t layers = model.weights.size();
  for (std::size_t l = 0; l < layers; ++l) {
    Eigen::RowVectorXd z = a * model.weights[l].transpose() + model.biases[l].transpose();
    a = l + 1 == layers ? z : z.cwiseMax(0.0);
  }
  const Eigen::MatrixXd out = outputs_from_logits(model, Eigen::MatrixXd(a));
  int best = 0;
  for (Eigen::Index c = 1; c < out.cols(); ++c) {
    if (out(0, c) > out(0, best)) best = static_cast<int>(c);
  }
  return best;
}

}  // namespace emg
