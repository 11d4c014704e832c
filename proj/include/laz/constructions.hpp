#pragma once

#include <string>
#include <vector>

#include "laz/seqcore.hpp"

namespace laz {

bool is_prime(int n);

// Cubic family u_j(t) = w_n^(t^3 + j t), j in [0, n); n an odd prime >= 5.
// Emits all n shifts; the pair j = 0 and j = floor(n/2) is the classic
// two-sequence pick.
SequenceFamily cubic_family(int n);

struct CubicParams {
  int a = 1;
  int b = 0;
  int c = 0;
};

// u(t) = w_n^(a t^3 + b t^2 + c t) with a != 0 mod n; n an odd prime >= 5.
// a == 0 is the quadratic case and is rejected here.
PolyphaseSequence generic_cubic(int n, int a, int b, int c);

enum class CubicAfClass { full_peak, sqrt_peak, zero, weil_bounded };

struct CubicAfPrediction {
  CubicAfClass cls = CubicAfClass::zero;
  double value = 0.0;  // exact magnitude, or the 2 sqrt(p) ceiling for weil_bounded
};

// Predicted cross-AF magnitude class between two generic cubics over prime p,
// from x = b1 - 3 a2 tau - b2 and y = c1 - 3 a2 tau^2 - 2 b2 tau - c2 + nu:
// equal leading coefficients give {p, sqrt(p), 0} exactly; distinct leading
// coefficients are only bounded by 2 sqrt(p).
CubicAfPrediction predicted_cubic_cross_af(int p, const CubicParams& s1, const CubicParams& s2,
                                           long long tau, long long nu);

// s(t) = w_n^(a t^2 + b t).
PolyphaseSequence quadratic_sequence(int n, int a, int b);

// Family s_i(t) = w_n^(a t^2 + b_i t) with b_i = i * floor(n/m), 1 <= m <= n.
SequenceFamily quadratic_family(int n, int a, int m);

// Predicted zero auto-ambiguity zone (-n/r, n/r) x (-r, r) of a quadratic
// phase sequence, r = gcd(2a, n). Throws when r = 1 (the CAZAC regime, where
// the zone degenerates to Doppler height 1).
Zone predicted_quadratic_zaz(int n, int a);

// (n_total, k, lambda) cyclic difference set: every nonzero shift eps has
// |(eps + D) n D| = lambda.
struct DifferenceSet {
  int modulus = 0;               // period of the ambient ring
  std::vector<int> elements;     // sorted
  int size = 0;                  // |D|
  int lambda = 0;                // replication value
};

// Computes the difference function over all nonzero shifts and throws if it
// is not constant.
DifferenceSet verify_difference_set(int n, std::vector<int> elements);

// Frequency-domain construction over a lambda = 1 difference set:
// C(f) = sqrt(n/k) (-1)^f on D, 0 elsewhere; c = idft(C) has energy n and is
// not unimodular. The mask forbids everything outside D.
struct ScsConstruction {
  std::vector<cdouble> frequency_dual;
  PolyphaseSequence time_domain;
  SpectralMask mask;
};
ScsConstruction scs_from_difference_set(const DifferenceSet& ds);

// Single-member family wrapper around scs_from_difference_set.
SequenceFamily scs_family_from_difference_set(const DifferenceSet& ds);

// Character rows f -> w_n0^(i f): n0 unimodular, pairwise orthogonal rows.
std::vector<std::vector<cdouble>> dft_orthogonal_family(int n0);

// Comb construction: each frequency-domain row O_i of period n0 spreads to
// T_i(f) = sqrt(k) O_i(f/k) on multiples of k, 0 elsewhere, period k*n0; the
// family holds the time-domain duals plus the comb mask. Rows must be
// unimodular and pairwise orthogonal.
SequenceFamily comb_scs_family(const std::vector<std::vector<cdouble>>& rows, int k);

// Small catalog of lambda = 1 (Singer) difference sets; every entry is
// re-verified on access.
std::vector<DifferenceSet> difference_set_catalog();

// The embedded length-128 binary (+1/-1) sequence with a known aperiodic
// low-ambiguity zone; entries as exact phases {0, 64} mod 128.
PolyphaseSequence example5_sequence();

}  // namespace laz
