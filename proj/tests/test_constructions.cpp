#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "laz/af_engine.hpp"
#include "laz/constructions.hpp"
#include "laz/dft.hpp"
#include "laz/oracles.hpp"

using namespace laz;

TEST_CASE("cubic family members carry t^3 + j t phases") {
  const auto fam = cubic_family(5);
  CHECK(fam.size() == 5);
  CHECK(fam.members[0].exact_phases == std::vector<int>{0, 1, 3, 2, 4});

  const auto fam31 = cubic_family(31);
  CHECK(fam31.size() == 31);
  for (long long t = 0; t < 31; ++t) {
    CHECK(fam31.members[0].exact_phases[t] == static_cast<int>((t * t * t) % 31));
    CHECK(fam31.members[15].exact_phases[t] == static_cast<int>((t * t * t + 15 * t) % 31));
  }
  CHECK(validate_family(fam).ok());
}

TEST_CASE("cubic family rejects non-prime and small periods") {
  CHECK_THROWS_AS(cubic_family(4), std::invalid_argument);
  CHECK_THROWS_AS(cubic_family(9), std::invalid_argument);
  CHECK_THROWS_AS(cubic_family(3), std::invalid_argument);
}

TEST_CASE("generic cubic phases evaluate directly") {
  const auto u = generic_cubic(31, 1, 0, 0);
  const auto v = generic_cubic(31, 1, 0, 15);
  for (long long t = 0; t < 31; ++t) {
    CHECK(u.exact_phases[t] == static_cast<int>((t * t * t) % 31));
    CHECK(v.exact_phases[t] == static_cast<int>((t * t * t + 15 * t) % 31));
  }

  std::vector<int> expected;
  for (long long t = 0; t < 5; ++t) expected.push_back(static_cast<int>((t * t * t + t * t + t) % 5));
  CHECK(generic_cubic(5, 1, 1, 1).exact_phases == expected);

  CHECK_THROWS_AS(generic_cubic(31, 0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(generic_cubic(31, 31, 1, 1), std::invalid_argument);
}

TEST_CASE("cubic cross-af prediction against the measured grid, equal leading coefficient") {
  const int p = 7;
  const CubicParams s1{1, 2, 5};
  const CubicParams s2{1, 4, 1};
  const auto a = generic_cubic(p, s1.a, s1.b, s1.c);
  const auto b = generic_cubic(p, s2.a, s2.b, s2.c);
  const auto g = periodic_grid(a, b);
  bool saw_peak = false, saw_zero = false, saw_sqrt = false;
  for (int tau = 0; tau < p; ++tau) {
    for (int nu = 0; nu < p; ++nu) {
      const auto pred = predicted_cubic_cross_af(p, s1, s2, tau, nu);
      REQUIRE(pred.cls != CubicAfClass::weil_bounded);
      CHECK(g.cell(tau, nu) == doctest::Approx(pred.value).epsilon(1e-9));
      saw_peak = saw_peak || pred.cls == CubicAfClass::full_peak;
      saw_zero = saw_zero || pred.cls == CubicAfClass::zero;
      saw_sqrt = saw_sqrt || pred.cls == CubicAfClass::sqrt_peak;
    }
  }
  CHECK(saw_peak);
  CHECK(saw_zero);
  CHECK(saw_sqrt);
}

TEST_CASE("cubic cross-af prediction, distinct leading coefficients stay under 2 sqrt p") {
  const int p = 11;
  const CubicParams s1{1, 0, 3};
  const CubicParams s2{4, 2, 0};
  const auto a = generic_cubic(p, s1.a, s1.b, s1.c);
  const auto b = generic_cubic(p, s2.a, s2.b, s2.c);
  const auto g = periodic_grid(a, b);
  const double ceiling = 2.0 * std::sqrt(static_cast<double>(p));
  for (int tau = 0; tau < p; ++tau) {
    for (int nu = 0; nu < p; ++nu) {
      const auto pred = predicted_cubic_cross_af(p, s1, s2, tau, nu);
      CHECK(pred.cls == CubicAfClass::weil_bounded);
      CHECK(pred.value == doctest::Approx(ceiling));
      CHECK(g.cell(tau, nu) <= ceiling + 1e-9);
    }
  }
}

TEST_CASE("generic cubic auto-af takes the three-valued profile") {
  std::mt19937 rng(71);
  for (int p : {5, 7, 11, 13, 31}) {
    std::uniform_int_distribution<int> coeff(0, p - 1);
    std::uniform_int_distribution<int> lead(1, p - 1);
    const int a = lead(rng), b = coeff(rng), c = coeff(rng);
    const auto u = generic_cubic(p, a, b, c);
    const auto g = periodic_grid(u, u);
    const double root = std::sqrt(static_cast<double>(p));
    for (int tau = 0; tau < p; ++tau) {
      for (int nu = 0; nu < p; ++nu) {
        const double expected = (tau == 0 && nu == 0) ? p : tau == 0 ? 0.0 : root;
        CHECK(std::abs(g.cell(tau, nu) - expected) <= 1e-9 * p);
      }
    }
  }
}

TEST_CASE("quadratic sequence and family literals") {
  const auto s = quadratic_sequence(15, 3, 1);
  for (long long t = 0; t < 15; ++t)
    CHECK(s.exact_phases[t] == static_cast<int>((3 * t * t + t) % 15));

  const auto fam = quadratic_family(32, 2, 2);
  CHECK(fam.size() == 2);
  for (long long t = 0; t < 32; ++t) {
    CHECK(fam.members[0].exact_phases[t] == static_cast<int>((2 * t * t) % 32));
    CHECK(fam.members[1].exact_phases[t] == static_cast<int>((2 * t * t + 16 * t) % 32));
  }
  CHECK(validate_family(fam).ok());
}

TEST_CASE("odd-period coprime quadratic is a zero-autocorrelation sequence") {
  for (int b : {0, 1, 7}) {
    const auto u = quadratic_sequence(15, 1, b);
    for (int tau = 1; tau < 15; ++tau)
      CHECK(std::abs(correlation(u, u, tau)) <= 1e-9 * 15);
  }
}

TEST_CASE("quadratic auto-af peaks exactly on nu = 2 a tau") {
  for (auto [n, a] : std::vector<std::pair<int, int>>{{32, 2}, {15, 3}, {16, 4}, {15, 1}}) {
    const auto u = quadratic_sequence(n, a, 0);
    const auto g = periodic_grid(u, u);
    for (int tau = 0; tau < n; ++tau)
      for (int nu = 0; nu < n; ++nu) {
        const double expected = mod_n(nu - 2LL * a * tau, n) == 0 ? n : 0.0;
        CHECK(std::abs(g.cell(tau, nu) - expected) <= 1e-9 * n);
      }
  }
}

TEST_CASE("predicted quadratic zero zone") {
  const Zone z = predicted_quadratic_zaz(32, 2);
  CHECK(z.zx == 8);
  CHECK(z.zy == 4);
  CHECK(z.area() == 128);

  const Zone z15 = predicted_quadratic_zaz(15, 3);
  CHECK(z15.zx == 5);
  CHECK(z15.zy == 3);
  // verify against the measured grid
  const auto single = make_family({quadratic_sequence(15, 3, 0)});
  CHECK(f_pi(single, z15) <= 1e-9 * 15);

  CHECK_THROWS_AS(predicted_quadratic_zaz(15, 1), std::invalid_argument);
}

TEST_CASE("difference set verification") {
  const auto ds13 = verify_difference_set(13, {4, 5, 8, 10});
  CHECK(ds13.modulus == 13);
  CHECK(ds13.size == 4);
  CHECK(ds13.lambda == 1);

  const auto ds7 = verify_difference_set(7, {1, 2, 4});
  CHECK(ds7.size == 3);
  CHECK(ds7.lambda == 1);

  CHECK_THROWS_AS(verify_difference_set(8, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("difference-set spectrum matches the alternating-sign literal") {
  const auto ds = verify_difference_set(13, {4, 5, 8, 10});
  const auto c = scs_from_difference_set(ds);
  const double amp = std::sqrt(13.0 / 4.0);
  const std::vector<double> expected_re = {0, 0, 0, 0, amp, -amp, 0, 0, amp, 0, amp, 0, 0};
  REQUIRE(c.frequency_dual.size() == 13);
  for (int f = 0; f < 13; ++f) {
    CHECK(c.frequency_dual[f].real() == doctest::Approx(expected_re[f]).epsilon(1e-14));
    CHECK(c.frequency_dual[f].imag() == 0.0);
  }
  CHECK(c.time_domain.energy() == doctest::Approx(13.0).epsilon(1e-9));
  CHECK(!c.time_domain.unimodular);
  CHECK(c.mask.admissible_count() == 4);

  // AF magnitude classes via the executable identity check.
  CHECK(scs_af_check(ds).pass);
}

TEST_CASE("scs construction rejects lambda != 1") {
  const auto ds = verify_difference_set(7, {0, 1, 2, 4});  // lambda = 2 complement set
  CHECK(ds.lambda == 2);
  CHECK_THROWS_AS(scs_from_difference_set(ds), std::invalid_argument);
}

TEST_CASE("dft orthogonal rows") {
  const auto rows2 = dft_orthogonal_family(2);
  CHECK(rows2[0] == std::vector<cdouble>{{1.0, 0.0}, {1.0, 0.0}});
  CHECK(std::abs(rows2[1][0] - cdouble{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(rows2[1][1] - cdouble{-1.0, 0.0}) < 1e-12);

  const auto rows = dft_orthogonal_family(4);
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows.size(); ++j) {
      cdouble ip{0.0, 0.0};
      for (int f = 0; f < 4; ++f) ip += rows[i][f] * std::conj(rows[j][f]);
      CHECK(std::abs(ip - (i == j ? cdouble{4.0, 0.0} : cdouble{0.0, 0.0})) < 1e-10);
    }
  }
}

TEST_CASE("comb family reproduces the spread-spectrum literals") {
  const auto all_rows = dft_orthogonal_family(4);
  const auto fam = comb_scs_family({all_rows[0], all_rows[2]}, 2);
  CHECK(fam.n == 8);
  CHECK(fam.size() == 2);
  REQUIRE(fam.mask.has_value());
  CHECK(fam.mask->admissible_count() == 4);

  // Frequency duals are sqrt(2) [1,0,1,0,1,0,1,0] and sqrt(2) [1,0,-1,0,1,0,-1,0].
  const double amp = std::sqrt(2.0);
  const auto dual0 = dft(fam.members[0].values);
  const auto dual1 = dft(fam.members[1].values);
  for (int f = 0; f < 8; ++f) {
    const double sign = (f / 2) % 2 == 0 ? 1.0 : -1.0;
    const cdouble e0 = f % 2 == 0 ? cdouble{amp, 0.0} : cdouble{0.0, 0.0};
    const cdouble e1 = f % 2 == 0 ? cdouble{sign * amp, 0.0} : cdouble{0.0, 0.0};
    CHECK(std::abs(dual0[f] - e0) < 1e-10);
    CHECK(std::abs(dual1[f] - e1) < 1e-10);
  }
  CHECK(validate_family(fam).ok());

  // Orthogonal rows null the cross term at the origin, and every member's
  // ambiguity vanishes whenever k does not divide nu. Cross peaks at nonzero
  // delay do exist (here at tau = 2), which is what caps the zone at 2 x 2.
  const auto cross = periodic_grid(fam.members[0], fam.members[1]);
  CHECK(cross.cell(0, 0) <= 1e-9 * 8);
  CHECK(cross.cell(2, 0) == doctest::Approx(8.0).epsilon(1e-9));
  for (int tau = 0; tau < 8; ++tau)
    for (int nu = 1; nu < 8; nu += 2) CHECK(cross.cell(tau, nu) <= 1e-9 * 8);
  const auto auto0 = periodic_grid(fam.members[0], fam.members[0]);
  for (int tau = 0; tau < 8; ++tau)
    for (int nu = 1; nu < 8; nu += 2) CHECK(auto0.cell(tau, nu) <= 1e-9 * 8);
}

TEST_CASE("comb family built from adjacent rows realizes the generic 4k-area zone") {
  const auto rows = dft_orthogonal_family(4);
  const auto fam = comb_scs_family({rows[0], rows[1]}, 2);
  // zone (-1, 1) x (-k, k): only tau = 0 inside, where orthogonality holds
  const auto cross = periodic_grid(fam.members[0], fam.members[1]);
  CHECK(cross.cell(0, 0) <= 1e-9 * 8);
  CHECK(cross.cell(0, 1) <= 1e-9 * 8);
  const auto auto0 = periodic_grid(fam.members[0], fam.members[0]);
  CHECK(auto0.cell(0, 1) <= 1e-9 * 8);
}

TEST_CASE("comb family rejects non-orthogonal rows") {
  const std::vector<std::vector<cdouble>> rows = {
      {{1.0, 0.0}, {1.0, 0.0}},
      {{1.0, 0.0}, {1.0, 0.0}},
  };
  CHECK_THROWS_AS(comb_scs_family(rows, 2), std::invalid_argument);
}

TEST_CASE("catalog entries all verify with lambda 1") {
  const auto catalog = difference_set_catalog();
  REQUIRE(catalog.size() == 4);
  const std::vector<std::pair<int, int>> expected = {{7, 3}, {13, 4}, {21, 5}, {31, 6}};
  for (size_t i = 0; i < catalog.size(); ++i) {
    CHECK(catalog[i].modulus == expected[i].first);
    CHECK(catalog[i].size == expected[i].second);
    CHECK(catalog[i].lambda == 1);
  }
}

TEST_CASE("embedded binary sequence") {
  const auto s = example5_sequence();
  CHECK(s.n == 128);
  for (int t = 0; t < 128; ++t) {
    CHECK(std::abs(s.values[t].imag()) < 1e-12);
    CHECK(std::abs(std::abs(s.values[t].real()) - 1.0) < 1e-12);
    CHECK((s.exact_phases[t] == 0 || s.exact_phases[t] == 64));
  }
  // spot-check the first and last few signs against the transcription
  const std::vector<double> head = {-1, 1, -1, -1, 1, 1, -1, 1};
  for (size_t t = 0; t < head.size(); ++t)
    CHECK(s.values[t].real() == doctest::Approx(head[t]).epsilon(1e-12));
  const std::vector<double> tail = {1, 1, 1, -1, -1, -1, 1};
  for (size_t i = 0; i < tail.size(); ++i)
    CHECK(s.values[121 + i].real() == doctest::Approx(tail[i]).epsilon(1e-12));
}

TEST_CASE("every construction output validates") {
  CHECK(validate_family(cubic_family(7)).ok());
  CHECK(validate_family(quadratic_family(15, 3, 3)).ok());
  CHECK(validate_family(scs_family_from_difference_set(verify_difference_set(7, {1, 2, 4}))).ok());
  const auto rows = dft_orthogonal_family(3);
  CHECK(validate_family(comb_scs_family(rows, 2)).ok());
  CHECK(validate_family(make_family({example5_sequence()})).ok());
}
