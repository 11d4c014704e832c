#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "laz/constructions.hpp"
#include "laz/oracles.hpp"
#include "test_util.hpp"

using namespace laz;

TEST_CASE("quadratic gauss-type sums: closed form vs brute force, spot values") {
  CHECK(std::abs(quadratic_sum_bruteforce(9, 0, 0)) == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(quadratic_sum_closed(9, 0, 0) == doctest::Approx(9.0).epsilon(1e-12));

  CHECK(std::abs(quadratic_sum_bruteforce(9, 3, 6)) == doctest::Approx(std::sqrt(27.0)).epsilon(1e-10));
  CHECK(quadratic_sum_closed(9, 3, 6) == doctest::Approx(std::sqrt(27.0)).epsilon(1e-14));

  CHECK(std::abs(quadratic_sum_bruteforce(9, 3, 1)) <= 1e-9 * 9);
  CHECK(quadratic_sum_closed(9, 3, 1) == 0.0);
}

TEST_CASE("quadratic gauss-type sums agree exhaustively for all odd n <= 25") {
  for (int n = 1; n <= 25; n += 2) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const double brute = std::abs(quadratic_sum_bruteforce(n, x, y));
        const double closed = quadratic_sum_closed(n, x, y);
        CHECK(std::abs(brute - closed) <= 1e-9 * n);
      }
    }
  }
}

TEST_CASE("quadratic sums reject even n") {
  CHECK_THROWS_AS(quadratic_sum_bruteforce(8, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(quadratic_sum_closed(8, 1, 1), std::invalid_argument);
}

TEST_CASE("zero-delay column check") {
  const auto ones = make_polyphase(16, std::vector<int>(16, 0));
  const auto flat = zero_doppler_column_check(ones);
  CHECK(flat.pass);
  CHECK(flat.max_off_origin <= 1e-12 * 16);

  const auto cubic = zero_doppler_column_check(generic_cubic(31, 1, 0, 0));
  CHECK(cubic.pass);
  CHECK(cubic.max_off_origin <= 1e-9 * 31);

  std::mt19937 rng(13);
  const auto random_check = zero_doppler_column_check(laz::testing::random_unimodular(64, rng));
  CHECK(random_check.pass);
  CHECK(random_check.worst_energy_rel_err <= 1e-6);
}

TEST_CASE("zero-delay column check rejects non-unimodular input") {
  const auto scs = scs_from_difference_set(verify_difference_set(7, {1, 2, 4}));
  CHECK_THROWS_AS(zero_doppler_column_check(scs.time_domain), std::invalid_argument);
}

TEST_CASE("difference-set af prediction values") {
  const auto p13 = scs_af_predicted(13, 4);
  CHECK(p13.at_origin == doctest::Approx(13.0));
  CHECK(p13.zero_doppler == doctest::Approx(13.0 * std::sqrt(3.0) / 4.0).epsilon(1e-14));
  CHECK(p13.zero_doppler == doctest::Approx(5.6292).epsilon(1e-4));
  CHECK(p13.elsewhere == doctest::Approx(3.25));

  const auto p7 = scs_af_predicted(7, 3);
  CHECK(p7.zero_doppler == doctest::Approx(7.0 * std::sqrt(2.0) / 3.0).epsilon(1e-14));
  CHECK(p7.zero_doppler == doctest::Approx(3.2998).epsilon(1e-4));
  CHECK(p7.elsewhere == doctest::Approx(7.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("difference-set af check passes for every catalog entry") {
  for (const auto& ds : difference_set_catalog()) {
    const auto check = scs_af_check(ds);
    CHECK(check.pass);
    CHECK(check.worst_err <= 1e-9 * ds.modulus);
  }
}

TEST_CASE("character-sum ceiling: fixed polynomials") {
  const auto cubic = weil_check(7, {0, 1, 0, 1});  // t^3 + t
  CHECK(cubic.ceiling == doctest::Approx(2.0 * std::sqrt(7.0)).epsilon(1e-14));
  CHECK(cubic.pass);

  const auto linear = weil_check(11, {3, 5});
  CHECK(linear.measured <= 1e-9);
  CHECK(linear.ceiling == 0.0);
  CHECK(linear.pass);

  CHECK_THROWS_AS(weil_check(7, {4}), std::invalid_argument);        // constant
  CHECK_THROWS_AS(weil_check(3, {0, 0, 0, 1}), std::invalid_argument);  // gcd(3, 3) != 1
}

TEST_CASE("character-sum ceiling: 200 random cubics over small primes") {
  std::mt19937 rng(29);
  const int primes[] = {5, 7, 11, 13};
  for (int trial = 0; trial < 200; ++trial) {
    const int p = primes[trial % 4];
    std::uniform_int_distribution<int> coeff(0, p - 1);
    std::uniform_int_distribution<int> lead(1, p - 1);
    const auto res = weil_check(p, {coeff(rng), coeff(rng), coeff(rng), lead(rng)});
    CHECK(res.pass);
  }
}

TEST_CASE("distinct-leading-coefficient cross sums stay under the ceiling everywhere") {
  const int p = 11;
  const double ceiling = 2.0 * std::sqrt(static_cast<double>(p));
  for (int a2 : {2, 5}) {
    for (int tau = 0; tau < p; ++tau) {
      for (int nu = 0; nu < p; ++nu) {
        // cross-AF exponent between (1, 0, 0) and (a2, 1, 2) at (tau, nu)
        const long long x = mod_n(0 - 3LL * a2 * tau - 1, p);
        const long long y = mod_n(0 - 3LL * a2 * tau * tau - 2LL * 1 * tau - 2 + nu, p);
        const auto res = weil_check(p, {0, y, x, mod_n(1 - a2, p)});
        CHECK(res.pass);
        CHECK(res.measured <= ceiling + 1e-9);
      }
    }
  }
}
