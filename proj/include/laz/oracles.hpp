#pragma once

#include <vector>

#include "laz/constructions.hpp"
#include "laz/seqcore.hpp"

namespace laz {

// The quadratic exponential sum sum_t w_n^(x t^2 + y t), n odd, term by term.
cdouble quadratic_sum_bruteforce(int n, long long x, long long y);

// Closed form of its magnitude: sqrt(n g) when g = gcd(x, n) divides y, else 0.
double quadratic_sum_closed(int n, long long x, long long y);

struct ZeroDopplerColumnCheck {
  double max_off_origin = 0.0;       // max |AF(0, nu)| over nu != 0
  double worst_energy_rel_err = 0.0; // per-tau Doppler energy vs n^2
  bool pass = false;
};

// For unimodular input: the tau = 0 column vanishes away from the origin
// (within 1e-9 n) and every tau row carries Doppler energy exactly n^2
// (within 1e-6 relative).
ZeroDopplerColumnCheck zero_doppler_column_check(const PolyphaseSequence& u);

struct ScsAfPrediction {
  double at_origin = 0.0;     // n
  double zero_doppler = 0.0;  // n sqrt(k-1)/k for tau != 0, nu = 0
  double elsewhere = 0.0;     // n/k
};

// Predicted auto-AF magnitude classes of the difference-set construction
// with period n and set size k.
ScsAfPrediction scs_af_predicted(int n, int set_size);

struct ScsAfCheck {
  bool pass = false;
  double worst_err = 0.0;
};

// Builds the construction over ds and compares every periodic grid point to
// its predicted class within 1e-9 n.
ScsAfCheck scs_af_check(const DifferenceSet& ds);

struct WeilCheckResult {
  double measured = 0.0;
  double ceiling = 0.0;  // (d - 1) sqrt(p)
  bool pass = false;
};

// |sum_x w_p^(f(x))| against the (d-1) sqrt(p) ceiling for the degree-d
// polynomial with the given coefficients (constant term first). Requires
// d >= 1 after reduction mod p and gcd(d, p) = 1.
WeilCheckResult weil_check(int p, const std::vector<long long>& coeffs);

}  // namespace laz
