#pragma once

#include <span>
#include <string>
#include <vector>

namespace emg {

struct TimeFeatures {
  double iemg = 0;  // sum |x|
  double iasd = 0;  // sum |x'[n+1] - x'[n]|
  double iatd = 0;  // sum |x''[n+1] - x''[n]|
  double ieav = 0;  // sum exp(|x_mv|), |x_mv| clamped
  double ie = 0;    // sum exp(x_mv), x_mv clamped
  double mav = 0;
  double rms = 0;
  double var = 0;   // uncentered: sum x^2 / (N - 1)
  double zc = 0;    // strict sign changes between consecutive samples
  double wl = 0;
};

/// One-sided Welch estimate. psd[j] is power per bin (not per Hz), so that
/// sum(psd) is the taper-compensated mean square of the input.
struct Periodogram {
  std::vector<double> freqs_hz;
  std::vector<double> psd;
  double bin_width_hz = 0;
};

struct FreqFeatures {
  double mf = 0;
  double mdf = 0;
  double pf = 0;
  double se = 0;
  double tp = 0;
  double mpf = 0;
  double snr = 0;
  double sef = 0;
  double fr = 0;
};

struct FeatureVector {
  std::vector<double> values;
  int label = 0;
  int subject = 0;
  double window_ms = 0;
};

namespace features {

inline constexpr double kMicrovoltsPerMillivolt = 1000.0;
inline constexpr double kExpClamp = 30.0;
inline constexpr double kWelchSegmentFraction = 0.9;
inline constexpr double kWelchHopFraction = 0.1;
inline constexpr double kNoiseFloorFraction = 0.1;
inline constexpr double kEdgeFraction = 0.95;
inline constexpr double kLowBandHz[2] = {20.0, 250.0};
inline constexpr double kHighBandLowHz = 250.0;
inline constexpr double kEpsilon = 1e-12;
inline constexpr int kNumClasses = 8;

TimeFeatures time_features(std::span<const double> window);

Periodogram welch_psd(std::span<const double> window, double rate_hz);

FreqFeatures freq_features(const Periodogram& pg);

/// Per-channel block: time features (IEAV only unless include_duplicate_ie)
/// followed by the nine spectral features. 18 values, or 19 with the flag.
std::vector<double> channel_features(std::span<const double> window, double rate_hz,
                                     bool include_duplicate_ie = false);

FeatureVector assemble_feature_vector(std::span<const double> fds, std::span<const double> edc,
                                      double rate_hz, int label,
                                      bool include_duplicate_ie = false);

/// Column names in vector order, e.g. "fds_iemg", ..., "edc_fr".
std::vector<std::string> feature_names(bool include_duplicate_ie = false);

std::size_t features_per_channel(bool include_duplicate_ie = false) noexcept;

}  // namespace features
}  // namespace emg
