#include <cmath>
#include <numbers>
#include <string>

#include "emg/data_io.hpp"
#include "emg/errors.hpp"
#include "emg/rng.hpp"

namespace emg::data {
namespace {

constexpr double kBurstWidthS = 0.025;
constexpr double kEnvelopeFloor = 0.05;
constexpr double kSubjectGainSpread = 0.15;

void normalize_rms(std::vector<double>& v) {
  double ss = 0.0;
  for (double x : v) ss += x * x;
  const double rms = std::sqrt(ss / static_cast<double>(v.size()));
  if (rms > 0.0) {
    for (double& x : v) x /= rms;
  }
}

// White noise shaped by per-subband weights of a 4-level db6 decomposition.
// At 1000 Hz the bands are 250-500 (dropped), 125-250, 62-125, 31-62 and
// 0-31 Hz, which leaves roughly the 20-250 Hz EMG band; unit RMS.
std::vector<double> emg_carrier(std::size_t n, Rng& rng) {
  std::vector<double> white(n);
  for (double& w : white) w = rng.normal();
  WaveletCoeffs c = dsp::dwt_forward(white, 4);
  constexpr double kDetailWeights[4] = {0.0, 0.8, 1.0, 0.7};
  constexpr double kApproxWeight = 0.25;
  for (std::size_t l = 0; l < 4; ++l) {
    for (double& v : c.details[l]) v *= kDetailWeights[l];
  }
  for (double& v : c.approx) v *= kApproxWeight;
  auto out = dsp::dwt_inverse(c);
  normalize_rms(out);
  return out;
}

// Floor plus Hann-shaped activation bursts at a Poisson mean rate; unit RMS.
std::vector<double> burst_envelope(std::size_t n, double rate_hz, double burst_hz, Rng& rng) {
  std::vector<double> env(n, kEnvelopeFloor);
  const double interval = 1.0 / burst_hz;
  const double width = kBurstWidthS * rate_hz;
  const double duration = static_cast<double>(n) / rate_hz;
  // Poisson arrivals; starting one interval early avoids a quiet onset
  for (double t = -interval; t < duration; t += -interval * std::log(1.0 - rng.uniform())) {
    const double centre = t * rate_hz;
    const auto lo = static_cast<long>(std::ceil(centre - width / 2));
    const auto hi = static_cast<long>(std::floor(centre + width / 2));
    for (long i = std::max(lo, 0L); i <= hi && i < static_cast<long>(n); ++i) {
      const double phase = (static_cast<double>(i) - centre) / width;  // [-0.5, 0.5]
      env[static_cast<std::size_t>(i)] += 0.5 + 0.5 * std::cos(2.0 * std::numbers::pi * phase);
    }
  }
  normalize_rms(env);
  return env;
}

std::vector<double> channel(std::size_t n, const SynthConfig& cfg, double amplitude,
                            double burst_hz, Rng& rng) {
  const auto carrier = emg_carrier(n, rng);
  const auto env = burst_envelope(n, cfg.rate_hz, burst_hz, rng);
  const double line_phase = 2.0 * std::numbers::pi * rng.uniform();
  const double wander_phase = 2.0 * std::numbers::pi * rng.uniform();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / cfg.rate_hz;
    double v = amplitude * env[i] * carrier[i];
    if (cfg.noise.white_sigma_uv > 0.0) v += cfg.noise.white_sigma_uv * rng.normal();
    v += cfg.noise.powerline_uv *
         std::sin(2.0 * std::numbers::pi * cfg.noise.powerline_hz * t + line_phase);
    v += cfg.noise.wander_uv *
         std::sin(2.0 * std::numbers::pi * cfg.noise.wander_hz * t + wander_phase);
    out[i] = v;
  }
  return out;
}

}  // namespace

void validate(const SynthConfig& cfg) {
  if (!(cfg.duration_s > 0.0)) throw Error(ErrorCode::InvalidArgument, "duration_s must be positive");
  if (!(cfg.rate_hz > 0.0)) throw Error(ErrorCode::InvalidArgument, "rate_hz must be positive");
  if (std::llround(cfg.duration_s * cfg.rate_hz) < static_cast<long long>(dsp::kMinWindowLength)) {
    throw Error(ErrorCode::TooShort, "trial shorter than the minimum window");
  }
  if (cfg.n_subjects < 1 || cfg.trials_per_gesture < 1) {
    throw Error(ErrorCode::InvalidArgument, "need at least one subject and one trial");
  }
  const auto& nz = cfg.noise;
  if (nz.white_sigma_uv < 0.0 || nz.powerline_uv < 0.0 || nz.wander_uv < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "noise amplitudes must be non-negative");
  }
  if (nz.powerline_hz != 50.0 && nz.powerline_hz != 60.0) {
    throw Error(ErrorCode::InvalidArgument, "powerline frequency must be 50 or 60 Hz");
  }
}

TrialRecording gen_synthetic_trial(const SynthConfig& cfg, int label, int subject, int trial) {
  validate(cfg);
  if (label < 0 || label >= kNumGestures) {
    throw Error(ErrorCode::LabelOutOfRange, "gesture label " + std::to_string(label));
  }
  const auto n = static_cast<std::size_t>(std::llround(cfg.duration_s * cfg.rate_hz));
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "trial would have no samples");

  // subject gain depends on (seed, subject) only
  Rng subject_rng(mix_seed(cfg.seed, 0x5B000000ULL + static_cast<std::uint64_t>(subject)));
  const double fds_gain = 1.0 + kSubjectGainSpread * subject_rng.uniform(-1.0, 1.0);
  const double edc_gain = 1.0 + kSubjectGainSpread * subject_rng.uniform(-1.0, 1.0);

  std::uint64_t stream = mix_seed(cfg.seed, static_cast<std::uint64_t>(label));
  stream = mix_seed(stream, static_cast<std::uint64_t>(subject));
  stream = mix_seed(stream, static_cast<std::uint64_t>(trial));
  Rng rng(stream);

  const GestureSignature& sig = kGestureSignatures[static_cast<std::size_t>(label)];
  TrialRecording rec;
  rec.label = label;
  rec.subject = subject;
  rec.trial = trial;
  rec.fds = SampleSeries{channel(n, cfg, sig.fds_uv * fds_gain, sig.burst_hz, rng), cfg.rate_hz,
                         Channel::FDS};
  rec.edc = SampleSeries{channel(n, cfg, sig.edc_uv * edc_gain, sig.burst_hz, rng), cfg.rate_hz,
                         Channel::EDC};
  return rec;
}

std::vector<TrialRecording> gen_synthetic_corpus(const SynthConfig& cfg) {
  validate(cfg);
  std::vector<TrialRecording> out;
  for (int s = 0; s < cfg.n_subjects; ++s) {
    for (int g = 0; g < kNumGestures; ++g) {
      for (int t = 0; t < cfg.trials_per_gesture; ++t) out.push_back(gen_synthetic_trial(cfg, g, s, t));
    }
  }
  return out;
}

}  // namespace emg::data
