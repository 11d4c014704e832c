#pragma once

#include <vector>

#include "laz/seqcore.hpp"

namespace laz {

// Periodic cross-ambiguity value
//   AF_{a,b}(tau, nu) = sum_{t=0}^{n-1} a(t) conj(b(t+tau mod n)) e^{2 pi i nu t / n}.
// Throws on period mismatch. tau, nu are signed and wrap mod n.
cdouble periodic_af(const PolyphaseSequence& a, const PolyphaseSequence& b,
                    long long tau, long long nu);

// Aperiodic cross-ambiguity value: one-sided partial sums, zero for |tau| >= n.
cdouble aperiodic_af(const PolyphaseSequence& a, const PolyphaseSequence& b,
                     long long tau, long long nu);

// Correlation is the nu = 0 slice of the periodic AF, by definition.
inline cdouble correlation(const PolyphaseSequence& a, const PolyphaseSequence& b,
                           long long tau) {
  return periodic_af(a, b, tau, 0);
}

// Frequency-domain form on the symmetric-DFT duals:
//   AF(tau, nu) = sum_f A(f - nu) conj(B(f)) e^{-2 pi i f tau / n}.
// Agrees with periodic_af of the time-domain sequences.
cdouble frequency_domain_af(const std::vector<cdouble>& a_dual,
                            const std::vector<cdouble>& b_dual,
                            long long tau, long long nu);

// Full magnitude grids. The fast path computes each Doppler row as a circular
// (periodic) or zero-padded (aperiodic) cross-correlation via length-n
// transforms, O(n^2 log n) total, parallelized across rows. The *_reference
// builders evaluate the defining sums directly, O(n^3), serial; they are the
// permanent oracles the fast path is tested against.
AmbiguityGrid periodic_grid(const PolyphaseSequence& a, const PolyphaseSequence& b);
AmbiguityGrid periodic_grid_reference(const PolyphaseSequence& a, const PolyphaseSequence& b);
AmbiguityGrid aperiodic_grid(const PolyphaseSequence& a, const PolyphaseSequence& b);
AmbiguityGrid aperiodic_grid_reference(const PolyphaseSequence& a, const PolyphaseSequence& b);

struct ThetaStats {
  double theta_a = 0.0;  // max auto-AF magnitude excluding the origin
  double theta_c = 0.0;  // max cross-AF magnitude (origin included); 0 when M = 1
  double theta_max = 0.0;
};

ThetaStats theta_stats(const SequenceFamily& family);

// Combined family magnitude view over the signed lattice plus folded
// quadrant prefix maxima, shared by the zone machinery. The value at a point
// is the max over all member pairs, with the origin counting cross pairs
// only (the auto origin peak is excluded by definition).
class FamilyAfScan {
 public:
  FamilyAfScan(const SequenceFamily& family, GridKind kind);

  int n() const { return n_; }
  GridKind kind() const { return kind_; }

  double point_mag(long long tau, long long nu) const;

  // Max magnitude over lattice points inside the zone (auto origin excluded).
  double in_zone_max(const Zone& zone) const;

  // Largest zy in [1, n] such that Zone(zx, zy) stays within the threshold,
  // or 0 when none does.
  int max_zy_within(int zx, double theta) const;

 private:
  double folded(int i, int j) const { return folded_[static_cast<size_t>(i) * n_ + j]; }
  double prefix(int i, int j) const { return prefix_[static_cast<size_t>(i) * n_ + j]; }

  int n_;
  GridKind kind_;
  std::vector<double> signed_;  // (2n-1)^2, row tau + n-1, col nu + n-1
  std::vector<double> folded_;  // n x n quadrant max over sign choices
  std::vector<double> prefix_;  // 2-D running max of folded_
};

// Max AF magnitude of the family over the zone, excluding (0, 0) for the
// auto terms only. Builds a FamilyAfScan internally; use the scan directly
// when querying many zones.
double f_pi(const SequenceFamily& family, const Zone& zone,
            GridKind kind = GridKind::periodic);

}  // namespace laz
