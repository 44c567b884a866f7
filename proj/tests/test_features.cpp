#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numeric>

#include "emg/features.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace emg;
using namespace emg::features;

namespace {

std::map<std::string, double> as_map(const TimeFeatures& t) {
  return {{"iemg", t.iemg}, {"iasd", t.iasd}, {"iatd", t.iatd}, {"ieav", t.ieav}, {"ie", t.ie},
          {"mav", t.mav},   {"rms", t.rms},   {"var", t.var},   {"zc", t.zc},     {"wl", t.wl}};
}

std::map<std::string, double> as_map(const FreqFeatures& f) {
  return {{"mf", f.mf}, {"mdf", f.mdf}, {"pf", f.pf},   {"se", f.se},  {"tp", f.tp},
          {"mpf", f.mpf}, {"snr", f.snr}, {"sef", f.sef}, {"fr", f.fr}};
}

Periodogram make_pg(std::vector<double> psd, double width) {
  Periodogram pg;
  pg.psd = std::move(psd);
  pg.bin_width_hz = width;
  for (std::size_t j = 0; j < pg.psd.size(); ++j) pg.freqs_hz.push_back(static_cast<double>(j) * width);
  return pg;
}

}  // namespace

TEST_CASE("time features: worked examples") {
  const auto t = time_features(std::vector<double>{1, -1, 1, -1});
  CHECK(t.iemg == 4);
  CHECK(t.mav == 1);
  CHECK(t.rms == 1);
  CHECK(t.wl == 6);
  CHECK(t.zc == 3);
  CHECK(t.var == doctest::Approx(4.0 / 3.0));
  CHECK(t.iasd == 8);   // second difference [4, -4]
  CHECK(t.iatd == 8);   // third difference [-8]

  const auto z = time_features(std::vector<double>{0, 0, 0, 0});
  CHECK(z.iemg == 0);
  CHECK(z.mav == 0);
  CHECK(z.rms == 0);
  CHECK(z.var == 0);
  CHECK(z.wl == 0);
  CHECK(z.zc == 0);
  CHECK(z.iasd == 0);
  CHECK(z.iatd == 0);
  CHECK(z.ieav == 4);
  CHECK(z.ie == 4);
}

TEST_CASE("time features: zeros break sign runs") {
  CHECK(time_features(std::vector<double>{1, 0, -1, 0}).zc == 0);
  CHECK(time_features(std::vector<double>{1, -2, 0, 3, -1}).zc == 2);
}

TEST_CASE("time features: exp features stay finite on huge inputs") {
  const auto t = time_features(std::vector<double>{1e9, -1e9, 5e8, 0});
  CHECK(std::isfinite(t.ieav));
  CHECK(std::isfinite(t.ie));
  CHECK(t.ieav == doctest::Approx(3 * std::exp(30.0) + 1));
}

TEST_CASE("time features match the direct-formula oracle") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto x = testutil::gaussian(200, seed, 400.0, 10.0);
    const auto want = oracle::time_features(x);
    const auto got = as_map(time_features(x));
    for (const auto& [name, value] : want) {
      CAPTURE(name);
      CHECK(oracle::rel_err(got.at(name), value) < 1e-9);
    }
  }
}

TEST_CASE("time features: scaling") {
  const auto x = testutil::gaussian(300, 4, 50.0);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = 3.5 * x[i];
  const auto a = time_features(x), b = time_features(y);
  CHECK(b.mav == doctest::Approx(3.5 * a.mav));
  CHECK(b.rms == doctest::Approx(3.5 * a.rms));
  CHECK(b.iemg == doctest::Approx(3.5 * a.iemg));
  CHECK(b.wl == doctest::Approx(3.5 * a.wl));
  CHECK(b.zc == a.zc);
}

TEST_CASE("time features: too short") {
  CHECK_ERROR_CODE(time_features(std::vector<double>{1, 2, 3}), ErrorCode::TooShort);
}

TEST_CASE("welch: layout") {
  const auto pg = welch_psd(testutil::gaussian(1000, 1), 1000.0);
  CHECK(pg.bin_width_hz == doctest::Approx(1000.0 / 900.0));
  REQUIRE(pg.psd.size() == pg.freqs_hz.size());
  CHECK(pg.psd.size() == 451);
  CHECK(pg.freqs_hz.front() == 0.0);
  CHECK(pg.freqs_hz.back() == doctest::Approx(500.0));
  for (std::size_t j = 1; j < pg.freqs_hz.size(); ++j) CHECK(pg.freqs_hz[j] > pg.freqs_hz[j - 1]);
  for (double p : pg.psd) CHECK(p >= 0.0);
}

TEST_CASE("welch matches the direct-DFT oracle") {
  for (std::size_t n : {32u, 200u, 333u, 1000u}) {
    CAPTURE(n);
    const auto x = testutil::gaussian(n, n, 25.0, 3.0);
    const auto want = oracle::welch(x, 1000.0);
    const auto got = welch_psd(x, 1000.0);
    REQUIRE(got.psd.size() == want.p.size());
    CHECK(testutil::max_rel_diff(got.psd, want.p) < 1e-9);
    CHECK(testutil::max_rel_diff(got.freqs_hz, want.f) < 1e-12);
  }
}

TEST_CASE("welch matches the reference density times bin width") {
  const auto pg = welch_psd(golden::kWelchInput, 1000.0);
  REQUIRE(pg.psd.size() == golden::kWelchDensity.size());
  std::vector<double> want(golden::kWelchDensity);
  for (double& v : want) v *= pg.bin_width_hz;
  CHECK(testutil::max_rel_diff(pg.psd, want) < 1e-9);
}

TEST_CASE("welch: tones land in the nearest bin") {
  for (double hz : {10.0, 50.0, 100.0, 200.0, 450.0}) {
    CAPTURE(hz);
    const auto pg = welch_psd(testutil::sine(1000, hz, 1000.0), 1000.0);
    const auto peak = static_cast<std::size_t>(std::max_element(pg.psd.begin(), pg.psd.end()) - pg.psd.begin());
    CHECK(peak == static_cast<std::size_t>(std::lround(hz / pg.bin_width_hz)));
  }
}

TEST_CASE("welch: Parseval on white noise") {
  double ratio_sum = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto x = testutil::gaussian(1000, seed, 10.0);
    const auto pg = welch_psd(x, 1000.0);
    const double total = std::accumulate(pg.psd.begin(), pg.psd.end(), 0.0);
    CHECK(std::abs(total - oracle::tapered_mean_square(x)) < 0.05 * oracle::tapered_mean_square(x));
    CHECK(oracle::rel_err(total, oracle::tapered_mean_square(x)) < 1e-9);
    ratio_sum += total / (testutil::energy(x) / 1000.0);
  }
  // single draws scatter by a few percent around the plain mean square; the estimate is unbiased
  CHECK(std::abs(ratio_sum / 20.0 - 1.0) < 0.05);
}

TEST_CASE("welch: offset moves power only near DC") {
  // The Hann taper has a two-bin main lobe, so a constant shows up in bins 0 and 1.
  const auto x = testutil::gaussian(500, 3, 10.0);
  auto y = x;
  for (double& v : y) v += 40.0;
  const auto a = welch_psd(x, 1000.0), b = welch_psd(y, 1000.0);
  CHECK(b.psd[0] > a.psd[0]);
  for (std::size_t j = 2; j < a.psd.size(); ++j) CHECK(b.psd[j] == doctest::Approx(a.psd[j]).epsilon(1e-9));
}

TEST_CASE("welch: errors") {
  CHECK_ERROR_CODE(welch_psd(std::vector<double>(31, 1.0), 1000.0), ErrorCode::TooShort);
  CHECK_ERROR_CODE(welch_psd(std::vector<double>(64, 1.0), 0.0), ErrorCode::InvalidArgument);
}

TEST_CASE("frequency features: worked examples") {
  SUBCASE("single bin") {
    std::vector<double> p(100, 0.0);
    p[50] = 2.0;
    const auto f = freq_features(make_pg(p, 1.0));
    CHECK(f.mf == 50);
    CHECK(f.mpf == 50);
    CHECK(f.mdf == 50);
    CHECK(f.pf == 50);
    CHECK(f.sef == 50);
    CHECK(f.tp == 2);
    CHECK(f.se == 0);
  }
  SUBCASE("flat") {
    const auto f = freq_features(make_pg(std::vector<double>(64, 0.25), 1.0));
    CHECK(f.se == doctest::Approx(6.0));
    CHECK(f.snr == doctest::Approx(16.0 / 1e-12));
    CHECK(f.pf == 0.0);
  }
  SUBCASE("empty") {
    CHECK_ERROR_CODE(freq_features(make_pg(std::vector<double>(10, 0.0), 1.0)), ErrorCode::EmptySpectrum);
  }
  SUBCASE("band ratio clamps at Nyquist and counts 250 Hz once") {
    std::vector<double> p(501, 0.0);
    p[100] = 3.0;
    p[250] = 1.0;
    p[500] = 1.0;
    CHECK(freq_features(make_pg(p, 1.0)).fr == doctest::Approx(1.5));
  }
}

TEST_CASE("frequency features match the direct-formula oracle") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto p = testutil::gaussian(451, seed, 1.0);
    for (double& v : p) v = v * v;
    p[static_cast<std::size_t>(seed * 13 % 451)] += 40.0;
    const auto pg = make_pg(p, 1000.0 / 900.0);
    const auto want = oracle::freq_features(oracle::Spectrum{pg.freqs_hz, pg.psd});
    const auto got = as_map(freq_features(pg));
    for (const auto& [name, value] : want) {
      CAPTURE(name);
      CHECK(oracle::rel_err(got.at(name), value) < 1e-9);
    }
    CHECK(got.at("mdf") <= got.at("sef"));
    CHECK(got.at("se") <= std::log2(451.0) + 1e-12);
  }
}

TEST_CASE("feature vector layout") {
  const auto a = testutil::gaussian(200, 1, 30.0), b = testutil::gaussian(200, 2, 30.0);
  const auto fv = assemble_feature_vector(a, b, 1000.0, 3);
  CHECK(fv.values.size() == 36);
  CHECK(fv.label == 3);
  CHECK(fv.window_ms == doctest::Approx(200.0));
  CHECK(feature_names().size() == 36);
  CHECK(feature_names().front() == "fds_iemg");
  CHECK(feature_names()[18] == "edc_iemg");
  CHECK(feature_names().back() == "edc_fr");
  CHECK(assemble_feature_vector(a, b, 1000.0, 3, true).values.size() == 38);
  CHECK(feature_names(true).size() == 38);
  CHECK(feature_names(true)[4] == "fds_ie");

  const auto again = assemble_feature_vector(a, b, 1000.0, 3);
  CHECK(std::memcmp(again.values.data(), fv.values.data(), fv.values.size() * sizeof(double)) == 0);

  const auto t = time_features(a);
  const auto s = freq_features(welch_psd(a, 1000.0));
  CHECK(fv.values[0] == t.iemg);
  CHECK(fv.values[3] == t.ieav);
  CHECK(fv.values[4] == t.mav);
  CHECK(fv.values[17] == s.fr);

  for (double v : fv.values) CHECK(std::isfinite(v));
}

TEST_CASE("feature vector errors") {
  const auto a = testutil::gaussian(200, 1);
  CHECK_ERROR_CODE(assemble_feature_vector(a, testutil::gaussian(199, 1), 1000.0, 0), ErrorCode::LengthMismatch);
  CHECK_ERROR_CODE(assemble_feature_vector(a, a, 1000.0, 8), ErrorCode::LabelOutOfRange);
  CHECK_ERROR_CODE(assemble_feature_vector(a, a, 1000.0, -1), ErrorCode::LabelOutOfRange);
}
