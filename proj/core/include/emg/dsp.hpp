#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace emg {

enum class Channel { FDS, EDC };

/// One channel of EMG samples in microvolts.
struct SampleSeries {
  std::vector<double> samples;
  double rate_hz = 1000.0;
  Channel channel = Channel::FDS;
};

/// A contiguous view into a series. The view does not own its samples; it is
/// valid only while the source series is alive and unmodified.
struct Window {
  std::span<const double> samples;
  std::size_t start_index = 0;

  std::size_t length() const noexcept { return samples.size(); }
};

/// Multi-level DWT decomposition. details[0] is the finest (level 1) band.
struct WaveletCoeffs {
  std::vector<double> approx;
  std::vector<std::vector<double>> details;
  std::size_t original_length = 0;
};

namespace dsp {

inline constexpr std::size_t kMinWindowLength = 32;
inline constexpr int kDefaultLevels = 4;
inline constexpr double kMadToSigma = 0.6745;

/// Daubechies-6 analysis low-pass filter (12 taps, orthonormal).
std::span<const double> db6_lowpass() noexcept;

/// hop = round(window_len * (1 - overlap)), at least 1.
std::size_t hop_length(std::size_t window_len, double overlap);

/// Start offsets of every full window; the trailing remainder is dropped.
std::vector<std::size_t> window_starts(std::size_t series_len, std::size_t window_len,
                                       double overlap);

std::vector<Window> segment_windows(const SampleSeries& series, std::size_t window_len,
                                    double overlap);

/// Symmetric (half-sample) extension, db6, `levels` cascaded splits.
/// Throws TooShort when x has fewer than 2^(levels+1) samples.
WaveletCoeffs dwt_forward(std::span<const double> x, int levels = kDefaultLevels);

/// Synthesis cascade; returns exactly coeffs.original_length samples.
std::vector<double> dwt_inverse(const WaveletCoeffs& coeffs);

/// Subband lengths produced by dwt_forward for an input of length n:
/// element k is the length of level-(k+1) details, the last one also
/// the approximation length.
std::vector<std::size_t> subband_lengths(std::size_t n, int levels);

/// median(|d|) / 0.6745
double estimate_noise_sigma(std::span<const double> finest_details);

double bayes_shrink_threshold(std::span<const double> subband, double sigma_noise);

double soft_threshold(double c, double threshold) noexcept;

std::vector<double> denoise(std::span<const double> samples);
SampleSeries denoise(const SampleSeries& series);

}  // namespace dsp
}  // namespace emg
