#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "laz/dft.hpp"

using namespace laz;

namespace {

// Direct quadratic-time transform, the oracle for every FFT path.
std::vector<cdouble> naive_dft(const std::vector<cdouble>& x, bool inverse) {
  const int n = static_cast<int>(x.size());
  std::vector<cdouble> out(static_cast<size_t>(n), cdouble{0.0, 0.0});
  const double sign = inverse ? 1.0 : -1.0;
  for (int f = 0; f < n; ++f)
    for (int t = 0; t < n; ++t)
      out[f] += x[t] * std::polar(1.0, sign * 2.0 * std::numbers::pi * f * t / n);
  return out;
}

std::vector<cdouble> random_vec(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<cdouble> v(static_cast<size_t>(n));
  for (auto& c : v) c = {d(rng), d(rng)};
  return v;
}

}  // namespace

TEST_CASE("unnormalized transform matches the direct sum at assorted lengths") {
  std::mt19937 rng(11);
  for (int n : {1, 2, 3, 4, 5, 7, 8, 12, 13, 16, 21, 31, 32, 45, 64, 97, 128}) {
    const auto x = random_vec(n, rng);
    for (bool inv : {false, true}) {
      auto fast = x;
      Dft(n).forward(fast);
      if (inv) {
        fast = x;
        Dft(n).inverse(fast);
      }
      const auto slow = naive_dft(x, inv);
      double err = 0.0;
      for (int i = 0; i < n; ++i) err = std::max(err, std::abs(fast[i] - slow[i]));
      CHECK(err < 1e-9);
    }
  }
}

TEST_CASE("symmetric dft of the all-ones vector") {
  for (int n : {4, 9, 16}) {
    const std::vector<cdouble> ones(static_cast<size_t>(n), cdouble{1.0, 0.0});
    const auto spectrum = dft(ones);
    CHECK(std::abs(spectrum[0] - std::sqrt(static_cast<double>(n))) < 1e-12);
    for (int f = 1; f < n; ++f) CHECK(std::abs(spectrum[f]) < 1e-12);
  }
}

TEST_CASE("idft(dft(x)) is the identity within 1e-10") {
  std::mt19937 rng(23);
  const auto x = random_vec(64, rng);
  const auto back = idft(dft(x));
  for (int i = 0; i < 64; ++i) CHECK(std::abs(back[i] - x[i]) < 1e-10);
}

TEST_CASE("symmetric normalization preserves energy") {
  std::mt19937 rng(29);
  for (int n : {13, 31, 40}) {
    const auto x = random_vec(n, rng);
    const auto spectrum = dft(x);
    double ex = 0.0, es = 0.0;
    for (int i = 0; i < n; ++i) {
      ex += std::norm(x[i]);
      es += std::norm(spectrum[i]);
    }
    CHECK(ex == doctest::Approx(es).epsilon(1e-12));
  }
}

TEST_CASE("time dual of the difference-set spectrum carries energy n") {
  const double amp = std::sqrt(13.0 / 4.0);
  std::vector<cdouble> spectrum(13, cdouble{0.0, 0.0});
  spectrum[4] = {amp, 0.0};
  spectrum[5] = {-amp, 0.0};
  spectrum[8] = {amp, 0.0};
  spectrum[10] = {amp, 0.0};
  const auto c = idft(spectrum);
  double energy = 0.0;
  for (const auto& v : c) energy += std::norm(v);
  CHECK(energy == doctest::Approx(13.0).epsilon(1e-12));
}

TEST_CASE("fft_pow2 rejects non-power-of-two lengths") {
  std::vector<cdouble> v(6, cdouble{0.0, 0.0});
  CHECK_THROWS_AS(fft_pow2(v, false), std::invalid_argument);
}
