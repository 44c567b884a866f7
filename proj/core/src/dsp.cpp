#include "emg/dsp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "emg/errors.hpp"

namespace emg::dsp {
namespace {

constexpr std::array<double, 12> kDb6Lo = {
    -0.0010773010853084796, 0.004777257510945511,  0.0005538422011614961,
    -0.03158203931748603,   0.027522865530305727,  0.09750160558732304,
    -0.12976686756726194,   -0.22626469396543983,  0.31525035170919763,
    0.7511339080210954,     0.49462389039845306,   0.11154074335010947,
};
constexpr std::ptrdiff_t kTaps = static_cast<std::ptrdiff_t>(kDb6Lo.size());

struct FilterBank {
  std::array<double, 12> dec_lo{}, dec_hi{}, rec_lo{}, rec_hi{};
};

constexpr FilterBank make_bank() {
  FilterBank fb;
  for (std::size_t j = 0; j < kDb6Lo.size(); ++j) {
    const std::size_t r = kDb6Lo.size() - 1 - j;
    fb.dec_lo[j] = kDb6Lo[j];
    fb.dec_hi[j] = (j % 2 == 0 ? -1.0 : 1.0) * kDb6Lo[r];
  }
  for (std::size_t j = 0; j < kDb6Lo.size(); ++j) {
    const std::size_t r = kDb6Lo.size() - 1 - j;
    fb.rec_lo[j] = fb.dec_lo[r];
    fb.rec_hi[j] = fb.dec_hi[r];
  }
  return fb;
}

constexpr FilterBank kBank = make_bank();

// Index into the half-sample symmetric extension of a length-n signal.
std::size_t reflect(std::ptrdiff_t i, std::ptrdiff_t n) {
  const std::ptrdiff_t period = 2 * n;
  std::ptrdiff_t m = i % period;
  if (m < 0) m += period;
  return static_cast<std::size_t>(m < n ? m : period - 1 - m);
}

void analyze(std::span<const double> x, std::vector<double>& approx,
             std::vector<double>& detail) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  const std::size_t out = static_cast<std::size_t>((n + kTaps - 1) / 2);
  approx.assign(out, 0.0);
  detail.assign(out, 0.0);
  for (std::size_t o = 0; o < out; ++o) {
    const std::ptrdiff_t centre = 2 * static_cast<std::ptrdiff_t>(o) + 1;
    double a = 0.0, d = 0.0;
    for (std::ptrdiff_t j = 0; j < kTaps; ++j) {
      const std::ptrdiff_t i = centre - j;
      const double v = (i >= 0 && i < n) ? x[static_cast<std::size_t>(i)] : x[reflect(i, n)];
      a += kBank.dec_lo[static_cast<std::size_t>(j)] * v;
      d += kBank.dec_hi[static_cast<std::size_t>(j)] * v;
    }
    approx[o] = a;
    detail[o] = d;
  }
}

// Inverse of one analysis step, truncated to target_len samples.
std::vector<double> synthesize(std::span<const double> approx, std::span<const double> detail,
                               std::size_t target_len) {
  std::vector<double> y(target_len, 0.0);
  const auto m = static_cast<std::ptrdiff_t>(approx.size());
  for (std::size_t k = 0; k < target_len; ++k) {
    // y[k] = sum_o a[o] rec_lo[k + F - 2 - 2o] + d[o] rec_hi[...]
    const std::ptrdiff_t shifted = static_cast<std::ptrdiff_t>(k) + kTaps - 2;
    // filter tap t = shifted - 2o must lie in [0, F)
    const std::ptrdiff_t o_lo = std::max<std::ptrdiff_t>(0, (shifted - kTaps + 2) / 2);
    const std::ptrdiff_t o_hi = std::min<std::ptrdiff_t>(shifted / 2, m - 1);
    double acc = 0.0;
    for (std::ptrdiff_t o = o_lo; o <= o_hi; ++o) {
      const std::ptrdiff_t t = shifted - 2 * o;
      acc += approx[static_cast<std::size_t>(o)] * kBank.rec_lo[static_cast<std::size_t>(t)] +
             detail[static_cast<std::size_t>(o)] * kBank.rec_hi[static_cast<std::size_t>(t)];
    }
    y[k] = acc;
  }
  return y;
}

double median_of(std::vector<double> v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

}  // namespace

std::span<const double> db6_lowpass() noexcept { return kDb6Lo; }

std::size_t hop_length(std::size_t window_len, double overlap) {
  if (!(overlap >= 0.0 && overlap < 1.0)) {
    throw Error(ErrorCode::InvalidOverlap, "overlap must lie in [0, 1), got " +
                                               std::to_string(overlap));
  }
  const double hop = std::round(static_cast<double>(window_len) * (1.0 - overlap));
  return std::max<std::size_t>(1, static_cast<std::size_t>(hop));
}

std::vector<std::size_t> window_starts(std::size_t series_len, std::size_t window_len,
                                       double overlap) {
  const std::size_t hop = hop_length(window_len, overlap);
  if (window_len < kMinWindowLength) {
    throw Error(ErrorCode::TooShort, "window length " + std::to_string(window_len) +
                                         " below minimum " + std::to_string(kMinWindowLength));
  }
  if (window_len > series_len) {
    throw Error(ErrorCode::WindowTooLong, "window " + std::to_string(window_len) +
                                              " exceeds series length " +
                                              std::to_string(series_len));
  }
  std::vector<std::size_t> starts;
  starts.reserve((series_len - window_len) / hop + 1);
  for (std::size_t s = 0; s + window_len <= series_len; s += hop) starts.push_back(s);
  return starts;
}

std::vector<Window> segment_windows(const SampleSeries& series, std::size_t window_len,
                                    double overlap) {
  const std::span<const double> all(series.samples);
  std::vector<Window> out;
  for (std::size_t s : window_starts(all.size(), window_len, overlap)) {
    out.push_back(Window{all.subspan(s, window_len), s});
  }
  return out;
}

std::vector<std::size_t> subband_lengths(std::size_t n, int levels) {
  std::vector<std::size_t> lens;
  lens.reserve(static_cast<std::size_t>(std::max(levels, 0)));
  for (int l = 0; l < levels; ++l) {
    n = (n + static_cast<std::size_t>(kTaps) - 1) / 2;
    lens.push_back(n);
  }
  return lens;
}

WaveletCoeffs dwt_forward(std::span<const double> x, int levels) {
  if (levels < 1) throw Error(ErrorCode::InvalidArgument, "levels must be >= 1");
  const std::size_t min_len = std::size_t{1} << (levels + 1);
  if (x.size() < min_len) {
    throw Error(ErrorCode::TooShort, "signal of " + std::to_string(x.size()) +
                                         " samples cannot support " + std::to_string(levels) +
                                         " levels (need " + std::to_string(min_len) + ")");
  }
  WaveletCoeffs c;
  c.original_length = x.size();
  c.details.resize(static_cast<std::size_t>(levels));
  std::vector<double> current(x.begin(), x.end());
  std::vector<double> next;
  for (int l = 0; l < levels; ++l) {
    analyze(current, next, c.details[static_cast<std::size_t>(l)]);
    current.swap(next);
  }
  c.approx = std::move(current);
  return c;
}

std::vector<double> dwt_inverse(const WaveletCoeffs& coeffs) {
  const int levels = static_cast<int>(coeffs.details.size());
  if (levels < 1 || coeffs.original_length == 0) {
    throw Error(ErrorCode::InconsistentSubbands, "no detail subbands or zero original length");
  }
  const auto lens = subband_lengths(coeffs.original_length, levels);
  for (int l = 0; l < levels; ++l) {
    if (coeffs.details[static_cast<std::size_t>(l)].size() != lens[static_cast<std::size_t>(l)]) {
      throw Error(ErrorCode::InconsistentSubbands,
                  "level " + std::to_string(l + 1) + " details have " +
                      std::to_string(coeffs.details[static_cast<std::size_t>(l)].size()) +
                      " coefficients, expected " + std::to_string(lens[static_cast<std::size_t>(l)]));
    }
  }
  if (coeffs.approx.size() != lens.back()) {
    throw Error(ErrorCode::InconsistentSubbands,
                "approximation has " + std::to_string(coeffs.approx.size()) +
                    " coefficients, expected " + std::to_string(lens.back()));
  }
  std::vector<double> current = coeffs.approx;
  for (int l = levels - 1; l >= 0; --l) {
    const std::size_t target =
        l == 0 ? coeffs.original_length : lens[static_cast<std::size_t>(l - 1)];
    current = synthesize(current, coeffs.details[static_cast<std::size_t>(l)], target);
  }
  return current;
}

double estimate_noise_sigma(std::span<const double> finest_details) {
  if (finest_details.empty()) {
    throw Error(ErrorCode::InvalidArgument, "noise estimate needs at least one coefficient");
  }
  std::vector<double> mags(finest_details.size());
  std::transform(finest_details.begin(), finest_details.end(), mags.begin(),
                 [](double d) { return std::abs(d); });
  return median_of(std::move(mags)) / kMadToSigma;
}

double bayes_shrink_threshold(std::span<const double> subband, double sigma_noise) {
  if (subband.empty()) throw Error(ErrorCode::InvalidArgument, "empty subband");
  if (sigma_noise < 0.0) throw Error(ErrorCode::InvalidArgument, "negative noise sigma");
  if (sigma_noise == 0.0) return 0.0;
  double m2 = 0.0, peak = 0.0;
  for (double c : subband) {
    m2 += c * c;
    peak = std::max(peak, std::abs(c));
  }
  m2 /= static_cast<double>(subband.size());
  const double noise_var = sigma_noise * sigma_noise;
  const double sigma_x = std::sqrt(std::max(m2 - noise_var, 0.0));
  // noise-dominated subband: suppress it entirely
  if (sigma_x <= 0.0) return peak;
  return noise_var / sigma_x;
}

double soft_threshold(double c, double threshold) noexcept {
  const double mag = std::abs(c) - threshold;
  if (mag <= 0.0) return 0.0;
  return std::copysign(mag, c);
}

std::vector<double> denoise(std::span<const double> samples) {
  WaveletCoeffs c = dwt_forward(samples, kDefaultLevels);
  const double sigma = estimate_noise_sigma(c.details.front());
  for (auto& band : c.details) {
    const double t = bayes_shrink_threshold(band, sigma);
    for (double& v : band) v = soft_threshold(v, t);
  }
  return dwt_inverse(c);
}

SampleSeries denoise(const SampleSeries& series) {
  return SampleSeries{denoise(std::span<const double>(series.samples)), series.rate_hz,
                      series.channel};
}

}  // namespace emg::dsp
