#include "emg/model_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "emg/errors.hpp"

namespace emg {
namespace {

std::string hex(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::string word() {
    std::string w;
    if (!(in_ >> w)) throw Error(ErrorCode::BadModel, "unexpected end of model file");
    return w;
  }

  void expect(std::string_view keyword) {
    const std::string w = word();
    if (w != keyword) {
      throw Error(ErrorCode::BadModel,
                  "expected '" + std::string(keyword) + "', found '" + w + "'");
    }
  }

  double real() {
    const std::string w = word();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(w.c_str(), &end);
    if (end == w.c_str() || *end != '\0' || errno == ERANGE) {
      throw Error(ErrorCode::BadModel, "bad number '" + w + "'");
    }
    return v;
  }

  long long integer() {
    const std::string w = word();
    char* end = nullptr;
    const long long v = std::strtoll(w.c_str(), &end, 10);
    if (end == w.c_str() || *end != '\0') throw Error(ErrorCode::BadModel, "bad integer '" + w + "'");
    return v;
  }

  std::size_t count(long long limit = 100'000'000) {
    const long long v = integer();
    if (v < 0 || v > limit) throw Error(ErrorCode::BadModel, "count out of range");
    return static_cast<std::size_t>(v);
  }

  std::uint64_t u64() {
    const std::string w = word();
    char* end = nullptr;
    const unsigned long long v = std::strtoull(w.c_str(), &end, 10);
    if (end == w.c_str() || *end != '\0') throw Error(ErrorCode::BadModel, "bad seed '" + w + "'");
    return v;
  }

 private:
  std::istream& in_;
};

void write_forest(const RandomForestModel& f, std::ostream& out) {
  out << "forest " << f.trees.size() << ' ' << f.n_classes << ' ' << f.width << ' ' << f.seed
      << ' ' << f.params.max_depth << ' ' << f.params.min_samples_split << ' '
      << f.params.min_samples_leaf << ' ' << f.params.max_features << '\n';
  for (const auto& tree : f.trees) {
    out << "tree " << tree.nodes.size() << '\n';
    for (const auto& n : tree.nodes) {
      out << n.feature << ' ' << hex(n.threshold) << ' ' << n.left << ' ' << n.right << ' '
          << n.label << '\n';
    }
  }
}

RandomForestModel read_forest(Reader& r) {
  r.expect("forest");
  RandomForestModel f;
  const std::size_t n_trees = r.count();
  f.n_classes = static_cast<int>(r.count(1 << 20));
  f.width = r.count();
  f.seed = r.u64();
  f.params.max_depth = static_cast<int>(r.count(1 << 20));
  f.params.min_samples_split = r.count();
  f.params.min_samples_leaf = r.count();
  f.params.max_features = r.count();
  if (n_trees == 0 || f.n_classes < 1) throw Error(ErrorCode::BadModel, "empty forest");
  f.trees.resize(n_trees);
  for (auto& tree : f.trees) {
    r.expect("tree");
    const std::size_t n_nodes = r.count();
    if (n_nodes == 0) throw Error(ErrorCode::BadModel, "empty tree");
    tree.nodes.resize(n_nodes);
    for (std::size_t i = 0; i < n_nodes; ++i) {
      TreeNode& n = tree.nodes[i];
      n.feature = static_cast<int>(r.integer());
      n.threshold = r.real();
      n.left = static_cast<int>(r.integer());
      n.right = static_cast<int>(r.integer());
      n.label = static_cast<int>(r.integer());
      const auto limit = static_cast<long long>(n_nodes);
      const bool bad_leaf = n.label < 0 || n.label >= f.n_classes;
      // children always follow their parent in the flat layout
      const bool bad_split =
          !n.is_leaf() && (n.feature >= static_cast<int>(f.width) || n.left <= static_cast<int>(i) ||
                           n.right <= static_cast<int>(i) || n.left >= limit || n.right >= limit);
      if (bad_leaf || bad_split || n.feature < -1) {
        throw Error(ErrorCode::BadModel, "malformed tree node " + std::to_string(i));
      }
    }
  }
  return f;
}

void write_mlp(const MlpModel& m, std::ostream& out) {
  out << "mlp " << m.layer_dims.size();
  for (int d : m.layer_dims) out << ' ' << d;
  out << ' ' << (m.softmax_output ? 1 : 0) << '\n';
  for (std::size_t l = 0; l < m.weights.size(); ++l) {
    const auto& w = m.weights[l];
    out << "layer " << l << '\n';
    for (Eigen::Index r = 0; r < w.rows(); ++r) {
      for (Eigen::Index c = 0; c < w.cols(); ++c) out << (c ? " " : "") << hex(w(r, c));
      out << '\n';
    }
    const auto& b = m.biases[l];
    for (Eigen::Index i = 0; i < b.size(); ++i) out << (i ? " " : "") << hex(b(i));
    out << '\n';
  }
}

MlpModel read_mlp(Reader& r) {
  r.expect("mlp");
  const std::size_t n_dims = r.count(64);
  std::vector<int> dims(n_dims);
  for (int& d : dims) d = static_cast<int>(r.count(1 << 16));
  const bool softmax = r.integer() != 0;
  MlpModel m = mlp_init(dims, 0, softmax);
  for (std::size_t l = 0; l < m.weights.size(); ++l) {
    r.expect("layer");
    if (r.count() != l) throw Error(ErrorCode::BadModel, "layers out of order");
    auto& w = m.weights[l];
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      for (Eigen::Index c = 0; c < w.cols(); ++c) w(i, c) = r.real();
    }
    auto& b = m.biases[l];
    for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = r.real();
  }
  return m;
}

}  // namespace

std::string_view to_string(Algorithm a) noexcept {
  return a == Algorithm::RandomForest ? "rf" : "nn";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "rf") return Algorithm::RandomForest;
  if (name == "nn") return Algorithm::NeuralNet;
  throw Error(ErrorCode::InvalidArgument, "unknown algorithm '" + std::string(name) + "'");
}

int TrainedModel::predict(std::span<const double> raw_features) const {
  const auto scaled = scaler.apply(raw_features);
  return algorithm == Algorithm::RandomForest ? rf_predict(forest, scaled)
                                              : mlp_predict(mlp, scaled);
}

void save_model(const TrainedModel& model, std::ostream& out) {
  out << kModelMagic << ' ' << kModelVersion << '\n';
  out << "algorithm " << to_string(model.algorithm) << '\n';
  const auto& p = model.pipeline;
  out << "pipeline " << hex(p.window_ms) << ' ' << hex(p.overlap) << ' ' << (p.denoise ? 1 : 0)
      << ' ' << (p.include_duplicate_ie ? 1 : 0) << ' ' << p.seed << '\n';
  out << "scaler " << model.scaler.width() << '\n';
  for (std::size_t i = 0; i < model.scaler.width(); ++i) out << (i ? " " : "") << hex(model.scaler.means[i]);
  out << '\n';
  for (std::size_t i = 0; i < model.scaler.width(); ++i) out << (i ? " " : "") << hex(model.scaler.stds[i]);
  out << '\n';
  if (model.algorithm == Algorithm::RandomForest) {
    write_forest(model.forest, out);
  } else {
    write_mlp(model.mlp, out);
  }
  out << "end\n";
  if (!out) throw Error(ErrorCode::BadModel, "failed writing model");
}

TrainedModel load_model(std::istream& in) {
  Reader r(in);
  r.expect(kModelMagic);
  const long long version = r.integer();
  if (version != kModelVersion) {
    throw Error(ErrorCode::BadModel, "unsupported model version " + std::to_string(version));
  }
  TrainedModel m;
  r.expect("algorithm");
  m.algorithm = parse_algorithm(r.word());
  r.expect("pipeline");
  m.pipeline.window_ms = r.real();
  m.pipeline.overlap = r.real();
  m.pipeline.denoise = r.integer() != 0;
  m.pipeline.include_duplicate_ie = r.integer() != 0;
  m.pipeline.seed = r.u64();
  r.expect("scaler");
  const std::size_t width = r.count();
  m.scaler.means.resize(width);
  m.scaler.stds.resize(width);
  for (double& v : m.scaler.means) v = r.real();
  for (double& v : m.scaler.stds) v = r.real();
  if (m.algorithm == Algorithm::RandomForest) {
    m.forest = read_forest(r);
    if (m.forest.width != width) throw Error(ErrorCode::BadModel, "forest/scaler width mismatch");
  } else {
    m.mlp = read_mlp(r);
    if (static_cast<std::size_t>(m.mlp.n_inputs()) != width) {
      throw Error(ErrorCode::BadModel, "network/scaler width mismatch");
    }
  }
  r.expect("end");
  return m;
}

void save_model_file(const TrainedModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::MissingFile, "cannot write " + path.string());
  save_model(model, out);
}

TrainedModel load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MissingFile, "cannot open " + path.string());
  return load_model(in);
}

}  // namespace emg
