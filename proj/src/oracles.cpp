#include "laz/oracles.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "laz/af_engine.hpp"

namespace laz {

cdouble quadratic_sum_bruteforce(int n, long long x, long long y) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("quadratic_sum_bruteforce: n must be odd");
  cdouble acc{0.0, 0.0};
  for (long long t = 0; t < n; ++t) acc += unit_root(x * t * t + y * t, n);
  return acc;
}

double quadratic_sum_closed(int n, long long x, long long y) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("quadratic_sum_closed: n must be odd");
  const long long g = std::gcd(static_cast<long long>(mod_n(x, n)), static_cast<long long>(n));
  if (mod_n(y, static_cast<int>(g)) != 0) return 0.0;
  return std::sqrt(static_cast<double>(n) * static_cast<double>(g));
}

ZeroDopplerColumnCheck zero_doppler_column_check(const PolyphaseSequence& u) {
  if (!u.unimodular) throw std::invalid_argument("zero_doppler_column_check: input must be unimodular");
  const int n = u.n;
  const AmbiguityGrid g = periodic_grid(u, u);

  ZeroDopplerColumnCheck out;
  for (int nu = 1; nu < n; ++nu) out.max_off_origin = std::max(out.max_off_origin, g.cell(0, nu));

  const double expected = static_cast<double>(n) * n;
  for (int tau = 0; tau < n; ++tau) {
    double energy = 0.0;
    for (int nu = 0; nu < n; ++nu) energy += g.cell(tau, nu) * g.cell(tau, nu);
    out.worst_energy_rel_err =
        std::max(out.worst_energy_rel_err, std::abs(energy - expected) / expected);
  }
  out.pass = out.max_off_origin <= 1e-9 * n && out.worst_energy_rel_err <= 1e-6;
  return out;
}

ScsAfPrediction scs_af_predicted(int n, int set_size) {
  if (set_size < 1 || n < 1) throw std::invalid_argument("scs_af_predicted: bad parameters");
  ScsAfPrediction p;
  p.at_origin = n;
  p.zero_doppler = n * std::sqrt(static_cast<double>(set_size - 1)) / set_size;
  p.elsewhere = static_cast<double>(n) / set_size;
  return p;
}

ScsAfCheck scs_af_check(const DifferenceSet& ds) {
  const ScsConstruction c = scs_from_difference_set(ds);
  const ScsAfPrediction pred = scs_af_predicted(ds.modulus, ds.size);
  const AmbiguityGrid g = periodic_grid(c.time_domain, c.time_domain);

  ScsAfCheck out;
  const int n = ds.modulus;
  for (int tau = 0; tau < n; ++tau) {
    for (int nu = 0; nu < n; ++nu) {
      const double expected = (tau == 0 && nu == 0) ? pred.at_origin
                              : nu == 0             ? pred.zero_doppler
                                                    : pred.elsewhere;
      out.worst_err = std::max(out.worst_err, std::abs(g.cell(tau, nu) - expected));
    }
  }
  out.pass = out.worst_err <= 1e-9 * n;
  return out;
}

WeilCheckResult weil_check(int p, const std::vector<long long>& coeffs) {
  if (!is_prime(p)) throw std::invalid_argument("weil_check: p must be prime");
  int degree = -1;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (mod_n(coeffs[static_cast<size_t>(i)], p) != 0) {
      degree = i;
      break;
    }
  }
  if (degree < 1) throw std::invalid_argument("weil_check: polynomial degree must be >= 1 mod p");
  if (std::gcd(static_cast<long long>(degree), static_cast<long long>(p)) != 1)
    throw std::invalid_argument("weil_check: gcd(deg, p) must be 1");

  cdouble acc{0.0, 0.0};
  for (long long xv = 0; xv < p; ++xv) {
    long long value = 0;
    for (int i = degree; i >= 0; --i) value = mod_n(value * xv + coeffs[static_cast<size_t>(i)], p);
    acc += unit_root(value, p);
  }

  WeilCheckResult out;
  out.measured = std::abs(acc);
  out.ceiling = (degree - 1) * std::sqrt(static_cast<double>(p));
  out.pass = out.measured <= out.ceiling + 1e-9;
  return out;
}

}  // namespace laz
