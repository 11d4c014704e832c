#include "laz/af_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "laz/dft.hpp"

namespace laz {

namespace {

void require_same_period(const PolyphaseSequence& a, const PolyphaseSequence& b) {
  if (a.n != b.n || a.n <= 0)
    throw std::invalid_argument("ambiguity function: sequences must share a positive period");
}

std::vector<cdouble> root_table(int n) {
  std::vector<cdouble> w(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) w[static_cast<size_t>(k)] = unit_root(k, n);
  return w;
}

}  // namespace

cdouble periodic_af(const PolyphaseSequence& a, const PolyphaseSequence& b,
                    long long tau, long long nu) {
  require_same_period(a, b);
  const int n = a.n;
  const int t0 = mod_n(tau, n);
  cdouble acc{0.0, 0.0};
  for (int t = 0; t < n; ++t) {
    const int s = t + t0 < n ? t + t0 : t + t0 - n;
    acc += a.values[static_cast<size_t>(t)] * std::conj(b.values[static_cast<size_t>(s)]) *
           unit_root(nu * t, n);
  }
  return acc;
}

cdouble aperiodic_af(const PolyphaseSequence& a, const PolyphaseSequence& b,
                     long long tau, long long nu) {
  require_same_period(a, b);
  const int n = a.n;
  if (std::llabs(tau) >= n) return {0.0, 0.0};
  cdouble acc{0.0, 0.0};
  if (tau >= 0) {
    for (int t = 0; t + static_cast<int>(tau) < n; ++t)
      acc += a.values[static_cast<size_t>(t)] *
             std::conj(b.values[static_cast<size_t>(t + tau)]) * unit_root(nu * t, n);
  } else {
    for (int t = static_cast<int>(-tau); t < n; ++t)
      acc += a.values[static_cast<size_t>(t)] *
             std::conj(b.values[static_cast<size_t>(t + tau)]) * unit_root(nu * t, n);
  }
  return acc;
}

cdouble frequency_domain_af(const std::vector<cdouble>& a_dual,
                            const std::vector<cdouble>& b_dual,
                            long long tau, long long nu) {
  if (a_dual.size() != b_dual.size() || a_dual.empty())
    throw std::invalid_argument("frequency_domain_af: duals must share a positive length");
  const int n = static_cast<int>(a_dual.size());
  cdouble acc{0.0, 0.0};
  for (int f = 0; f < n; ++f) {
    acc += a_dual[static_cast<size_t>(mod_n(f - nu, n))] *
           std::conj(b_dual[static_cast<size_t>(f)]) * unit_root(-static_cast<long long>(f) * tau, n);
  }
  return acc;
}

AmbiguityGrid periodic_grid_reference(const PolyphaseSequence& a, const PolyphaseSequence& b) {
  require_same_period(a, b);
  const int n = a.n;
  AmbiguityGrid grid(n, GridKind::periodic);
  const std::vector<cdouble> w = root_table(n);
  for (int tau = 0; tau < n; ++tau) {
    for (int nu = 0; nu < n; ++nu) {
      cdouble acc{0.0, 0.0};
      for (int t = 0; t < n; ++t) {
        const int s = t + tau < n ? t + tau : t + tau - n;
        acc += a.values[static_cast<size_t>(t)] * std::conj(b.values[static_cast<size_t>(s)]) *
               w[static_cast<size_t>(mod_n(static_cast<long long>(nu) * t, n))];
      }
      grid.cell(tau, nu) = std::abs(acc);
    }
  }
  return grid;
}

AmbiguityGrid aperiodic_grid_reference(const PolyphaseSequence& a, const PolyphaseSequence& b) {
  require_same_period(a, b);
  const int n = a.n;
  AmbiguityGrid grid(n, GridKind::aperiodic);
  const std::vector<cdouble> w = root_table(n);
  for (int tau = -(n - 1); tau <= n - 1; ++tau) {
    for (int nu = 0; nu < n; ++nu) {
      cdouble acc{0.0, 0.0};
      const int lo = tau >= 0 ? 0 : -tau;
      const int hi = tau >= 0 ? n - tau : n;
      for (int t = lo; t < hi; ++t) {
        acc += a.values[static_cast<size_t>(t)] *
               std::conj(b.values[static_cast<size_t>(t + tau)]) *
               w[static_cast<size_t>(mod_n(static_cast<long long>(nu) * t, n))];
      }
      grid.cell(tau + n - 1, nu) = std::abs(acc);
    }
  }
  return grid;
}

// One Doppler row of the periodic grid is the circular cross-correlation of
// the nu-modulated a against b:
//   row_nu(tau) = (1/n) * F[ F[a .* w^(nu t)] .* conj(F[b]) ](tau)
// with F the unnormalized forward transform.
AmbiguityGrid periodic_grid(const PolyphaseSequence& a, const PolyphaseSequence& b) {
  require_same_period(a, b);
  const int n = a.n;
  AmbiguityGrid grid(n, GridKind::periodic);
  const Dft plan(n);
  const std::vector<cdouble> w = root_table(n);

  std::vector<cdouble> b_hat = b.values;
  plan.forward(b_hat);
  for (cdouble& v : b_hat) v = std::conj(v);

  const double scale = 1.0 / n;
#pragma omp parallel for schedule(static)
  for (int nu = 0; nu < n; ++nu) {
    std::vector<cdouble> row(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t)
      row[static_cast<size_t>(t)] = a.values[static_cast<size_t>(t)] *
                                    w[static_cast<size_t>(mod_n(static_cast<long long>(nu) * t, n))];
    plan.forward(row);
    for (int f = 0; f < n; ++f) row[static_cast<size_t>(f)] *= b_hat[static_cast<size_t>(f)];
    plan.forward(row);
    for (int tau = 0; tau < n; ++tau)
      grid.cell(tau, nu) = std::abs(row[static_cast<size_t>(tau)]) * scale;
  }
  return grid;
}

// Aperiodic rows use the same identity on zero-padded buffers of power-of-two
// length >= 2n-1, where circular and linear correlation agree for |tau| <= n-1.
// The Doppler modulation keeps period n, exactly as in the defining sum.
AmbiguityGrid aperiodic_grid(const PolyphaseSequence& a, const PolyphaseSequence& b) {
  require_same_period(a, b);
  const int n = a.n;
  AmbiguityGrid grid(n, GridKind::aperiodic);
  const int m = next_pow2(2 * n - 1);
  const std::vector<cdouble> w = root_table(n);

  std::vector<cdouble> b_hat(static_cast<size_t>(m), cdouble{0.0, 0.0});
  std::copy(b.values.begin(), b.values.end(), b_hat.begin());
  fft_pow2(b_hat, false);
  for (cdouble& v : b_hat) v = std::conj(v);

  const double scale = 1.0 / m;
#pragma omp parallel for schedule(static)
  for (int nu = 0; nu < n; ++nu) {
    std::vector<cdouble> buf(static_cast<size_t>(m), cdouble{0.0, 0.0});
    for (int t = 0; t < n; ++t)
      buf[static_cast<size_t>(t)] = a.values[static_cast<size_t>(t)] *
                                    w[static_cast<size_t>(mod_n(static_cast<long long>(nu) * t, n))];
    fft_pow2(buf, false);
    for (int f = 0; f < m; ++f) buf[static_cast<size_t>(f)] *= b_hat[static_cast<size_t>(f)];
    fft_pow2(buf, false);
    for (int tau = -(n - 1); tau <= n - 1; ++tau) {
      const int idx = tau >= 0 ? tau : m + tau;
      grid.cell(tau + n - 1, nu) = std::abs(buf[static_cast<size_t>(idx)]) * scale;
    }
  }
  return grid;
}

ThetaStats theta_stats(const SequenceFamily& family) {
  if (family.size() < 1) throw std::invalid_argument("theta_stats: family must be nonempty");
  ThetaStats st;
  const int m = family.size();
  for (int i = 0; i < m; ++i) {
    const AmbiguityGrid g = periodic_grid(family.members[static_cast<size_t>(i)],
                                          family.members[static_cast<size_t>(i)]);
    st.theta_a = std::max(st.theta_a, g.max_mag(/*exclude_origin=*/true));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const AmbiguityGrid g = periodic_grid(family.members[static_cast<size_t>(i)],
                                            family.members[static_cast<size_t>(j)]);
      st.theta_c = std::max(st.theta_c, g.max_mag(/*exclude_origin=*/false));
    }
  }
  st.theta_max = std::max(st.theta_a, st.theta_c);
  return st;
}

FamilyAfScan::FamilyAfScan(const SequenceFamily& family, GridKind kind)
    : n_(family.n), kind_(kind) {
  if (family.size() < 1) throw std::invalid_argument("FamilyAfScan: family must be nonempty");
  const int n = n_;
  const int side = 2 * n - 1;
  signed_.assign(static_cast<size_t>(side) * side, 0.0);

  auto build = [&](const PolyphaseSequence& a, const PolyphaseSequence& b) {
    return kind == GridKind::periodic ? periodic_grid(a, b) : aperiodic_grid(a, b);
  };
  // Cross grids enter under both pair orders: |AF_{b,a}(tau, nu)| equals
  // |AF_{a,b}(-tau, -nu)|, so the reflected magnitude folds into each point.
  auto accumulate = [&](const AmbiguityGrid& g, bool exclude_origin) {
    for (long long tau = -(n - 1); tau <= n - 1; ++tau) {
      for (long long nu = -(n - 1); nu <= n - 1; ++nu) {
        if (exclude_origin && tau == 0 && nu == 0) continue;
        double& slot = signed_[static_cast<size_t>(tau + n - 1) * side +
                               static_cast<size_t>(nu + n - 1)];
        slot = std::max(slot, g.mag(tau, nu));
        if (!exclude_origin) slot = std::max(slot, g.mag(-tau, -nu));
      }
    }
  };

  const int m = family.size();
  for (int i = 0; i < m; ++i)
    accumulate(build(family.members[static_cast<size_t>(i)], family.members[static_cast<size_t>(i)]),
               /*exclude_origin=*/true);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      accumulate(build(family.members[static_cast<size_t>(i)], family.members[static_cast<size_t>(j)]),
                 /*exclude_origin=*/false);

  folded_.assign(static_cast<size_t>(n) * n, 0.0);
  for (long long tau = -(n - 1); tau <= n - 1; ++tau) {
    for (long long nu = -(n - 1); nu <= n - 1; ++nu) {
      double& slot = folded_[static_cast<size_t>(std::llabs(tau)) * n +
                             static_cast<size_t>(std::llabs(nu))];
      slot = std::max(slot, signed_[static_cast<size_t>(tau + n - 1) * side +
                                    static_cast<size_t>(nu + n - 1)]);
    }
  }

  prefix_ = folded_;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = prefix_[static_cast<size_t>(i) * n + j];
      if (i > 0) v = std::max(v, prefix_[static_cast<size_t>(i - 1) * n + j]);
      if (j > 0) v = std::max(v, prefix_[static_cast<size_t>(i) * n + j - 1]);
      prefix_[static_cast<size_t>(i) * n + j] = v;
    }
  }
}

double FamilyAfScan::point_mag(long long tau, long long nu) const {
  const int side = 2 * n_ - 1;
  if (std::llabs(tau) > n_ - 1 || std::llabs(nu) > n_ - 1)
    throw std::out_of_range("FamilyAfScan: point outside the signed lattice");
  return signed_[static_cast<size_t>(tau + n_ - 1) * side + static_cast<size_t>(nu + n_ - 1)];
}

double FamilyAfScan::in_zone_max(const Zone& zone) const {
  if (zone.zx > n_ || zone.zy > n_)
    throw std::invalid_argument("FamilyAfScan: zone exceeds the (-n, n) square");
  return prefix(zone.zx - 1, zone.zy - 1);
}

int FamilyAfScan::max_zy_within(int zx, double theta) const {
  for (int zy = n_; zy >= 1; --zy)
    if (prefix(zx - 1, zy - 1) <= theta) return zy;
  return 0;
}

double f_pi(const SequenceFamily& family, const Zone& zone, GridKind kind) {
  return FamilyAfScan(family, kind).in_zone_max(zone);
}

}  // namespace laz
