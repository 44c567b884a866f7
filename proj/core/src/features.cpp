#include "emg/features.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "emg/errors.hpp"
#include "fft.hpp"

namespace emg::features {
namespace {

constexpr const char* kTimeNames[] = {"iemg", "iasd", "iatd", "ieav", "mav",
                                      "rms",  "var",  "zc",   "wl"};
constexpr const char* kTimeNamesWithIe[] = {"iemg", "iasd", "iatd", "ieav", "ie",
                                            "mav",  "rms",  "var",  "zc",   "wl"};
constexpr const char* kFreqNames[] = {"mf", "mdf", "pf", "se", "tp", "mpf", "snr", "sef", "fr"};

std::size_t quantile_bin(std::span<const double> psd, double total, double fraction) {
  double cumulative = 0.0;
  const double target = fraction * total;
  for (std::size_t j = 0; j < psd.size(); ++j) {
    cumulative += psd[j];
    if (cumulative >= target) return j;
  }
  return psd.size() - 1;
}

}  // namespace

std::size_t features_per_channel(bool include_duplicate_ie) noexcept {
  return include_duplicate_ie ? 19 : 18;
}

TimeFeatures time_features(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 4) {
    throw Error(ErrorCode::TooShort,
                "time features need at least 4 samples, got " + std::to_string(n));
  }
  TimeFeatures f;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = x[i];
    f.iemg += std::abs(v);
    sum_sq += v * v;
    const double mv = std::clamp(v / kMicrovoltsPerMillivolt, -kExpClamp, kExpClamp);
    f.ieav += std::exp(std::abs(mv));
    f.ie += std::exp(mv);
    if (i + 1 < n) {
      f.wl += std::abs(x[i + 1] - v);
      if (v * x[i + 1] < 0.0) f.zc += 1.0;
    }
    if (i + 2 < n) {
      // x'[i+1] - x'[i]
      f.iasd += std::abs(x[i + 2] - 2.0 * x[i + 1] + v);
    }
    if (i + 3 < n) {
      // x''[i+1] - x''[i]
      f.iatd += std::abs(x[i + 3] - 3.0 * x[i + 2] + 3.0 * x[i + 1] - v);
    }
  }
  const double dn = static_cast<double>(n);
  f.mav = f.iemg / dn;
  f.rms = std::sqrt(sum_sq / dn);
  f.var = sum_sq / (dn - 1.0);
  return f;
}

Periodogram welch_psd(std::span<const double> x, double rate_hz) {
  const std::size_t n = x.size();
  if (n < 32) {
    throw Error(ErrorCode::TooShort, "Welch estimate needs at least 32 samples, got " +
                                         std::to_string(n));
  }
  if (!(rate_hz > 0.0)) throw Error(ErrorCode::InvalidArgument, "rate_hz must be positive");

  const auto seg_len = static_cast<std::size_t>(std::lround(kWelchSegmentFraction * n));
  const auto hop = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::lround(kWelchHopFraction * n)));

  // periodic Hann
  std::vector<double> taper(seg_len);
  double taper_power = 0.0;
  for (std::size_t i = 0; i < seg_len; ++i) {
    taper[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                    static_cast<double>(seg_len));
    taper_power += taper[i] * taper[i];
  }

  const std::size_t bins = seg_len / 2 + 1;
  Periodogram pg;
  pg.bin_width_hz = rate_hz / static_cast<double>(seg_len);
  pg.freqs_hz.resize(bins);
  pg.psd.assign(bins, 0.0);
  for (std::size_t k = 0; k < bins; ++k) pg.freqs_hz[k] = static_cast<double>(k) * pg.bin_width_hz;

  std::vector<double> segment(seg_len);
  std::size_t count = 0;
  for (std::size_t start = 0; start + seg_len <= n; start += hop, ++count) {
    for (std::size_t i = 0; i < seg_len; ++i) segment[i] = x[start + i] * taper[i];
    const auto power = detail::rfft_power(segment);
    for (std::size_t k = 0; k < bins; ++k) pg.psd[k] += power[k];
  }

  const double scale = 1.0 / (static_cast<double>(count) * static_cast<double>(seg_len) * taper_power);
  const bool has_nyquist_bin = seg_len % 2 == 0;
  for (std::size_t k = 0; k < bins; ++k) {
    const bool unpaired = k == 0 || (has_nyquist_bin && k == bins - 1);
    pg.psd[k] *= scale * (unpaired ? 1.0 : 2.0);
  }
  return pg;
}

FreqFeatures freq_features(const Periodogram& pg) {
  const auto& p = pg.psd;
  const auto& f = pg.freqs_hz;
  if (p.empty() || p.size() != f.size()) {
    throw Error(ErrorCode::LengthMismatch, "periodogram frequency/power lengths differ");
  }
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (!(total > 0.0)) throw Error(ErrorCode::EmptySpectrum, "total spectral power is zero");

  FreqFeatures out;
  out.tp = total;

  double weighted = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) weighted += f[j] * p[j];
  out.mf = weighted / total;
  out.mpf = out.mf;

  out.mdf = f[quantile_bin(p, total, 0.5)];
  out.sef = f[quantile_bin(p, total, kEdgeFraction)];

  const auto peak = std::max_element(p.begin(), p.end());
  out.pf = f[static_cast<std::size_t>(peak - p.begin())];

  for (double pj : p) {
    if (pj > 0.0) {
      const double q = pj / total;
      out.se -= q * std::log2(q);
    }
  }

  const double floor = kNoiseFloorFraction * *peak;
  double sig_sum = 0.0, noise_sum = 0.0;
  std::size_t sig_n = 0, noise_n = 0;
  for (double pj : p) {
    if (pj >= floor) {
      sig_sum += pj;
      ++sig_n;
    } else {
      noise_sum += pj;
      ++noise_n;
    }
  }
  if (noise_n == 0) {
    out.snr = total / kEpsilon;
  } else {
    out.snr = (sig_sum / static_cast<double>(sig_n)) /
              (noise_sum / static_cast<double>(noise_n) + kEpsilon);
  }

  // low band [20, 250), high band [250, Nyquist]
  double low = 0.0, high = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (f[j] >= kLowBandHz[0] && f[j] < kLowBandHz[1]) low += p[j];
    else if (f[j] >= kHighBandLowHz) high += p[j];
  }
  out.fr = low / (high + kEpsilon);
  return out;
}

std::vector<double> channel_features(std::span<const double> window, double rate_hz,
                                     bool include_duplicate_ie) {
  const TimeFeatures t = time_features(window);
  const FreqFeatures s = freq_features(welch_psd(window, rate_hz));
  std::vector<double> v;
  v.reserve(features_per_channel(include_duplicate_ie));
  v.insert(v.end(), {t.iemg, t.iasd, t.iatd, t.ieav});
  if (include_duplicate_ie) v.push_back(t.ie);
  v.insert(v.end(), {t.mav, t.rms, t.var, t.zc, t.wl});
  v.insert(v.end(), {s.mf, s.mdf, s.pf, s.se, s.tp, s.mpf, s.snr, s.sef, s.fr});
  return v;
}

FeatureVector assemble_feature_vector(std::span<const double> fds, std::span<const double> edc,
                                      double rate_hz, int label, bool include_duplicate_ie) {
  if (fds.size() != edc.size()) {
    throw Error(ErrorCode::LengthMismatch, "channel windows differ in length (" +
                                               std::to_string(fds.size()) + " vs " +
                                               std::to_string(edc.size()) + ")");
  }
  if (label < 0 || label >= kNumClasses) {
    throw Error(ErrorCode::LabelOutOfRange, "gesture label " + std::to_string(label));
  }
  FeatureVector fv;
  fv.label = label;
  fv.window_ms = 1000.0 * static_cast<double>(fds.size()) / rate_hz;
  fv.values = channel_features(fds, rate_hz, include_duplicate_ie);
  const auto second = channel_features(edc, rate_hz, include_duplicate_ie);
  fv.values.insert(fv.values.end(), second.begin(), second.end());
  return fv;
}

std::vector<std::string> feature_names(bool include_duplicate_ie) {
  std::vector<std::string> names;
  for (const char* ch : {"fds", "edc"}) {
    if (include_duplicate_ie) {
      for (const char* n : kTimeNamesWithIe) names.push_back(std::string(ch) + "_" + n);
    } else {
      for (const char* n : kTimeNames) names.push_back(std::string(ch) + "_" + n);
    }
    for (const char* n : kFreqNames) names.push_back(std::string(ch) + "_" + n);
  }
  return names;
}

}  // namespace emg::features
