#pragma once

#include <optional>
#include <string>

#include "laz/seqcore.hpp"

namespace laz {

// A lower bound on theta (ambiguity) or lambda (correlation) maxima.
// Infeasible parameter regimes clamp the value to 0 with applicable = false
// instead of erroring; the theorems implicitly assume the feasible regime.
struct BoundValue {
  std::string name;
  double value = 0.0;
  bool applicable = true;
  // Formula inputs, 0 when not relevant to the bound.
  int n = 0;
  int m = 0;
  int zx = 0;
  int zy = 0;
  int l = 0;
};

// lambda_max >= n sqrt((m-1)/(nm-1)); 0 when m = 1.
BoundValue welch_bound(int n, int m);

// ((n-1)/(n(m-1))) (lambda_a^2/n) + lambda_c^2/n - 1; valid families give >= 0
// up to round-off. Throws for m = 1 (trade-off undefined).
double sarwate_tradeoff_deficit(int n, int m, double lambda_a, double lambda_c);

// Correlation bound under a spectral mask with l admissible carriers;
// reduces to the Welch bound at l = n.
BoundValue scs_correlation_bound(int n, int m, int l);

// theta_max >= n sqrt((nm-1)/(n^2 m - 1)); degenerate (1,1) reports
// inapplicable.
BoundValue ding_af_bound(int n, int m);

// Zone bound for unimodular families over (-zx, zx) x (-zy, zy):
// theta_max >= (n/sqrt(zy)) sqrt((m zx zy / n - 1)/(m zx - 1)).
// Clamped to 0 when m zx zy <= n (the zero-ambiguity-zone regime).
BoundValue laz_bound_unimodular(int n, int m, int zx, int zy);

// Feasibility limits for a zero ambiguity zone: zx*zy <= floor(n/m) and
// area <= 4n/m.
struct ZazCapacity {
  long long max_product = 0;
  double area_bound = 0.0;
};
ZazCapacity zaz_capacity(int n, int m);

// Global specialization: theta_max >= sqrt(n).
BoundValue global_af_bound(int n);

// ((n-1) theta_a^2)/((mn-1) n) + ((m-1) theta_c^2)/(mn-1) - 1.
double sarwate_af_deficit(int n, int m, double theta_a, double theta_c);

// Zone bound for spectrally constrained families:
// theta_max^2 >= n (m zx zy - n)/(m zx zy - 1), clamped at 0.
BoundValue scs_laz_bound(int n, int m, int zx, int zy);

// Correlation-zone bound for masked families:
// lambda_max^2 >= n^2 (m zx - l)/(l (m zx - 1)), clamped at 0.
BoundValue scs_lcz_bound(int n, int m, int l, int zx);

// Global bounds for masked families with l admissible carriers.
struct ScsGlobalBounds {
  double theta_a = 0.0;  // max{ n sqrt((n-l)/(l(n-1))), n sqrt((l-1)/(l(n-1))) }
  double theta_c = 0.0;  // max{ n/sqrt(l), n sqrt((l-1)/(l(n-1))) }
};
ScsGlobalBounds scs_global_bounds(int n, int l);

// Aperiodic zone bound:
// theta^2 >= n^2 (m zx zy - n - zx + 1)/((n + zx - 1)(m zx - 1) zy), clamped.
BoundValue aperiodic_laz_bound(int n, int m, int zx, int zy);

// zy = 1 specialization of the aperiodic zone bound (correlation-only form).
BoundValue aperiodic_lcz_bound(int n, int m, int zx);

enum class Verdict { optimal, near_optimal, suboptimal };

std::string verdict_name(Verdict v);

struct Certificate {
  double measured = 0.0;
  BoundValue bound;
  double gap = 0.0;  // measured - bound
  Verdict verdict = Verdict::suboptimal;
};

// Verdict thresholds: optimal when |gap| <= 1e-6 * n, near-optimal when
// gap <= 5% of the bound value.
Certificate certify_against(const BoundValue& bound, double measured);

// Selects the applicable bound from family metadata: a mask routes to the
// SCS bounds, an aperiodic grid kind to the aperiodic zone bound, a zone to
// the zone form and its absence to the global form. An explicit name
// overrides the selection; recognized names are welch, scs-correlation,
// ding, laz, global, scs-laz, scs-lcz, scs-global-a, scs-global-c,
// aperiodic-laz.
BoundValue select_bound(const SequenceFamily& family, const std::optional<Zone>& zone,
                        GridKind kind, const std::optional<std::string>& override_name);

Certificate certify(const SequenceFamily& family, const std::optional<Zone>& zone,
                    double measured, GridKind kind = GridKind::periodic,
                    const std::optional<std::string>& override_name = std::nullopt);

}  // namespace laz
