#pragma once

#include <complex>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

namespace laz {

using cdouble = std::complex<double>;

// Tolerances shared across the library. Magnitude comparisons on ambiguity
// values scale with the period because an AF sum has n unit-mag terms.
inline constexpr double kUnimodularTol = 1e-12;
inline constexpr double kPhaseReconstructTol = 1e-12;
inline constexpr double kDistinctTol = 1e-9;
inline constexpr double kMaskHoleTol = 1e-18;  // on |C(f)|^2
inline constexpr double kMaskFlatTol = 1e-9;   // on |C(f)|^2 against n/L
inline constexpr double kZoneMagTolPerN = 1e-9;

// exp(2*pi*i * k / n), k taken mod n so the angle stays in [0, 2*pi).
cdouble unit_root(long long k, int n);

// Reduce a signed value into [0, n).
inline int mod_n(long long v, int n) {
  long long r = v % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

// Length-n complex sequence. Construction outputs carry their phases as exact
// integers mod n; the complex values are derived from them and never treated
// as authoritative for constructed sequences. SCS time-domain duals reuse the
// container with the unimodular flag unset (their energy is n, not their
// amplitude).
struct PolyphaseSequence {
  int n = 0;
  std::vector<cdouble> values;
  std::vector<int> exact_phases;  // empty when unknown
  bool unimodular = false;

  bool has_exact_phases() const { return !exact_phases.empty(); }
  const cdouble& operator[](int t) const { return values[static_cast<size_t>(t)]; }
  cdouble at_mod(long long t) const { return values[static_cast<size_t>(mod_n(t, n))]; }
  double energy() const;
};

// values[t] = exp(2*pi*i * phases[t] / n). Throws on length mismatch.
PolyphaseSequence make_polyphase(int n, const std::vector<int>& phases);

// Wrap raw complex values; sets the unimodular flag iff every magnitude is
// within kUnimodularTol of 1.
PolyphaseSequence sequence_from_values(int n, std::vector<cdouble> values);

// Spectral constraint: Omega = forbidden carrier indices, L = n - |Omega|
// admissible ones. A compliant frequency dual vanishes on Omega and is flat
// at n/L elsewhere.
struct SpectralMask {
  int n = 0;
  std::vector<int> forbidden;  // sorted, unique, subset of [0, n)

  int admissible_count() const { return n - static_cast<int>(forbidden.size()); }
  bool is_forbidden(int f) const;
};

SpectralMask make_mask(int n, std::vector<int> forbidden);

struct SequenceFamily {
  int n = 0;
  std::vector<PolyphaseSequence> members;
  std::optional<SpectralMask> mask;

  int size() const { return static_cast<int>(members.size()); }
};

SequenceFamily make_family(std::vector<PolyphaseSequence> members,
                           std::optional<SpectralMask> mask = std::nullopt);

// Origin-centered open rectangle (-zx, zx) x (-zy, zy) on the integer
// delay-Doppler lattice. The lattice points strictly inside are
// |tau| <= zx-1, |nu| <= zy-1; the area is the continuous 4*zx*zy.
struct Zone {
  int zx = 1;
  int zy = 1;

  Zone(int zx_, int zy_);
  bool contains(long long tau, long long nu) const {
    return std::llabs(tau) <= zx - 1 && std::llabs(nu) <= zy - 1;
  }
  long long area() const { return 4LL * zx * zy; }
};

enum class GridKind { periodic, aperiodic };

// Magnitudes of a cross-AF over the signed lattice tau, nu in [-(n-1), n-1].
// Periodic grids are determined by the n x n block tau, nu in [0, n-1] and
// extended by periodicity. Aperiodic grids store |tau| <= n-1 explicitly and
// are exactly n-periodic in nu (integer Doppler); |tau| >= n reads as 0.
class AmbiguityGrid {
 public:
  AmbiguityGrid(int n, GridKind kind);

  int n() const { return n_; }
  GridKind kind() const { return kind_; }

  // Signed lookup, wrapped per kind.
  double mag(long long tau, long long nu) const;

  // Raw storage for builders. Periodic: tau_idx, nu in [0, n).
  // Aperiodic: tau_idx in [0, 2n-1) meaning tau = tau_idx - (n-1); nu in [0, n).
  double& cell(int tau_idx, int nu) { return mags_[static_cast<size_t>(tau_idx) * n_ + nu]; }
  double cell(int tau_idx, int nu) const { return mags_[static_cast<size_t>(tau_idx) * n_ + nu]; }
  int tau_rows() const { return kind_ == GridKind::periodic ? n_ : 2 * n_ - 1; }

  // Max magnitude over the canonical block, optionally skipping (0, 0).
  double max_mag(bool exclude_origin) const;

 private:
  int n_;
  GridKind kind_;
  std::vector<double> mags_;
};

struct ValidationReport {
  bool periods_consistent = true;
  bool pairwise_distinct = true;
  bool phases_consistent = true;          // stored values match exact phases
  std::vector<bool> member_unimodular;    // measured per member
  bool unimodular_flags_consistent = true;
  std::optional<bool> mask_compliant;     // present iff the family has a mask
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Checks period consistency, per-member unimodularity, pairwise distinctness
// and, if a mask is present, mask compliance of every member's frequency
// dual. Never throws; findings land in the report.
ValidationReport validate_family(const SequenceFamily& family);

}  // namespace laz
