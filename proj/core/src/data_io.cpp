#include "emg/data_io.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "emg/errors.hpp"
#include "emg/features.hpp"

namespace emg::data {
namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

double parse_real(const std::string& s, const std::filesystem::path& path, std::size_t line_no) {
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end == s.c_str() || *end != '\0' || !std::isfinite(v)) {
    throw Error(ErrorCode::NonFiniteValue, path.string() + ":" + std::to_string(line_no) +
                                               ": '" + s + "' is not a finite number");
  }
  return v;
}

int parse_int(const std::string& s, const std::filesystem::path& path, std::size_t line_no) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end == s.c_str() || *end != '\0') {
    throw Error(ErrorCode::InvalidArgument, path.string() + ":" + std::to_string(line_no) +
                                                ": '" + s + "' is not an integer");
  }
  return static_cast<int>(v);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

void check_label(int label) {
  if (label < 0 || label >= kNumGestures) {
    throw Error(ErrorCode::LabelOutOfRange, "gesture label " + std::to_string(label));
  }
}

}  // namespace

TrialRecording load_trial_csv(const std::filesystem::path& path, int label, int subject,
                              int trial) {
  check_label(label);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingFile, "cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::BadHeader, path.string() + " is empty");
  strip_cr(line);
  if (line != kTrialHeader) {
    throw Error(ErrorCode::BadHeader, path.string() + ": header '" + line + "', expected '" +
                                          kTrialHeader + "'");
  }
  std::vector<double> t_ms, fds, edc;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 3) {
      throw Error(ErrorCode::BadHeader, path.string() + ":" + std::to_string(line_no) +
                                            ": expected 3 columns");
    }
    t_ms.push_back(parse_real(fields[0], path, line_no));
    fds.push_back(parse_real(fields[1], path, line_no));
    edc.push_back(parse_real(fields[2], path, line_no));
  }
  if (t_ms.size() < 2) {
    throw Error(ErrorCode::NonUniformSampling, path.string() + ": need 2 rows to infer the rate");
  }
  std::vector<double> steps(t_ms.size() - 1);
  for (std::size_t i = 0; i + 1 < t_ms.size(); ++i) steps[i] = t_ms[i + 1] - t_ms[i];
  const double step = median(steps);
  if (std::abs(step - 1.0) > 0.01) {
    throw Error(ErrorCode::NonUniformSampling,
                path.string() + ": median sample spacing " + std::to_string(step) + " ms, expected 1 ms");
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (std::abs(steps[i] - step) > 0.01 * step) {
      throw Error(ErrorCode::NonUniformSampling,
                  path.string() + ": spacing " + std::to_string(steps[i]) + " ms after row " +
                      std::to_string(i + 2) + " deviates from " + std::to_string(step) + " ms");
    }
  }
  const double rate = 1000.0 / step;
  TrialRecording rec;
  rec.fds = SampleSeries{std::move(fds), rate, Channel::FDS};
  rec.edc = SampleSeries{std::move(edc), rate, Channel::EDC};
  rec.label = label;
  rec.subject = subject;
  rec.trial = trial;
  return rec;
}

void write_trial_csv(const TrialRecording& rec, const std::filesystem::path& path) {
  if (rec.fds.samples.size() != rec.edc.samples.size()) {
    throw Error(ErrorCode::LengthMismatch, "channels differ in length");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::MissingFile, "cannot write " + path.string());
  out << kTrialHeader << '\n';
  char buf[128];
  const double step_ms = 1000.0 / rec.fds.rate_hz;
  for (std::size_t i = 0; i < rec.fds.samples.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.3f,%.6f,%.6f\n", static_cast<double>(i) * step_ms,
                  rec.fds.samples[i], rec.edc.samples[i]);
    out << buf;
  }
}

DatasetManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingFile, "cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::BadHeader, path.string() + " is empty");
  strip_cr(line);
  if (line != kManifestHeader) {
    throw Error(ErrorCode::BadHeader, path.string() + ": header '" + line + "', expected '" +
                                          kManifestHeader + "'");
  }
  DatasetManifest m;
  std::set<std::string> seen;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 4) {
      throw Error(ErrorCode::BadHeader, path.string() + ":" + std::to_string(line_no) +
                                            ": expected 4 columns");
    }
    ManifestEntry e{f[0], parse_int(f[1], path, line_no), parse_int(f[2], path, line_no),
                    parse_int(f[3], path, line_no)};
    check_label(e.label);
    if (!seen.insert(e.path).second) {
      throw Error(ErrorCode::InvalidArgument, path.string() + ": duplicate path " + e.path);
    }
    m.entries.push_back(std::move(e));
  }
  return m;
}

void write_manifest(const DatasetManifest& manifest, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::MissingFile, "cannot write " + path.string());
  out << kManifestHeader << '\n';
  for (const auto& e : manifest.entries) {
    out << e.path << ',' << e.label << ',' << e.subject << ',' << e.trial << '\n';
  }
}

std::vector<TrialRecording> load_manifest_recordings(const std::filesystem::path& manifest_path) {
  const auto manifest = read_manifest(manifest_path);
  const auto base = manifest_path.parent_path();
  std::vector<TrialRecording> out;
  out.reserve(manifest.entries.size());
  for (const auto& e : manifest.entries) {
    out.push_back(load_trial_csv(base / e.path, e.label, e.subject, e.trial));
  }
  return out;
}

std::filesystem::path write_corpus(const std::vector<TrialRecording>& recordings,
                                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  DatasetManifest manifest;
  char name[64];
  for (const auto& rec : recordings) {
    std::snprintf(name, sizeof name, "s%02d_g%d_t%02d.csv", rec.subject, rec.label, rec.trial);
    write_trial_csv(rec, dir / name);
    manifest.entries.push_back({name, rec.label, rec.subject, rec.trial});
  }
  const auto path = dir / "manifest.csv";
  write_manifest(manifest, path);
  return path;
}

std::size_t window_samples(double window_ms, double rate_hz) {
  const double n = std::round(window_ms * rate_hz / 1000.0);
  if (!(n >= static_cast<double>(dsp::kMinWindowLength))) {
    throw Error(ErrorCode::TooShort, std::to_string(window_ms) + " ms at " +
                                         std::to_string(rate_hz) + " Hz is under " +
                                         std::to_string(dsp::kMinWindowLength) + " samples");
  }
  return static_cast<std::size_t>(n);
}

Dataset build_dataset(const std::vector<TrialRecording>& recordings, const BuildOptions& opts) {
  struct Part {
    std::vector<std::vector<double>> rows;
    std::vector<std::size_t> starts;
  };
  std::vector<Part> parts(recordings.size());

  auto process = [&](std::size_t i) {
    const TrialRecording& rec = recordings[i];
    if (rec.fds.samples.size() != rec.edc.samples.size() || rec.fds.rate_hz != rec.edc.rate_hz) {
      throw Error(ErrorCode::LengthMismatch, "recording channels are not aligned");
    }
    const double rate = rec.fds.rate_hz;
    const std::size_t len = window_samples(opts.window_ms, rate);
    std::vector<double> fds = rec.fds.samples;
    std::vector<double> edc = rec.edc.samples;
    if (opts.denoise) {
      fds = dsp::denoise(fds);
      edc = dsp::denoise(edc);
    }
    const std::span<const double> a(fds), b(edc);
    for (std::size_t s : dsp::window_starts(fds.size(), len, opts.overlap)) {
      auto fv = features::assemble_feature_vector(a.subspan(s, len), b.subspan(s, len), rate,
                                                  rec.label, opts.include_duplicate_ie);
      parts[i].rows.push_back(std::move(fv.values));
      parts[i].starts.push_back(s);
    }
  };

  unsigned threads = opts.threads == 0 ? std::thread::hardware_concurrency() : opts.threads;
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(1, recordings.size())));
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < recordings.size(); i += threads) process(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::size_t total = 0;
  for (const auto& p : parts) total += p.rows.size();
  const std::size_t width =
      features::features_per_channel(opts.include_duplicate_ie) * 2;
  Dataset ds;
  ds.x.resize(static_cast<Eigen::Index>(total), static_cast<Eigen::Index>(width));
  ds.y.reserve(total);
  Eigen::Index r = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t k = 0; k < parts[i].rows.size(); ++k, ++r) {
      std::copy(parts[i].rows[k].begin(), parts[i].rows[k].end(), ds.x.row(r).begin());
      ds.y.push_back(recordings[i].label);
      ds.groups.push_back(recordings[i].subject);
      ds.recording.push_back(i);
      ds.window_start.push_back(parts[i].starts[k]);
    }
  }
  return ds;
}

}  // namespace emg::data
