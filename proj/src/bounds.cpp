#include "laz/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace laz {

namespace {

void require_positive(int v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string("bounds: ") + what + " must be >= 1");
}

BoundValue clamped(std::string name, double radicand_num, double radicand_den,
                   double outer_scale, int n, int m, int zx, int zy, int l) {
  BoundValue b;
  b.name = std::move(name);
  b.n = n;
  b.m = m;
  b.zx = zx;
  b.zy = zy;
  b.l = l;
  if (radicand_den <= 0.0 || radicand_num < 0.0) {
    b.value = 0.0;
    b.applicable = false;
    return b;
  }
  b.value = outer_scale * std::sqrt(radicand_num / radicand_den);
  return b;
}

}  // namespace

BoundValue welch_bound(int n, int m) {
  require_positive(n, "n");
  require_positive(m, "m");
  if (m == 1) {
    BoundValue b{"welch", 0.0, true, n, m, 0, 0, 0};
    return b;
  }
  return clamped("welch", static_cast<double>(m - 1),
                 static_cast<double>(n) * m - 1.0, n, n, m, 0, 0, 0);
}

double sarwate_tradeoff_deficit(int n, int m, double lambda_a, double lambda_c) {
  require_positive(n, "n");
  if (m <= 1) throw std::invalid_argument("sarwate_tradeoff_deficit: undefined for m = 1");
  if (lambda_a < 0.0 || lambda_c < 0.0)
    throw std::invalid_argument("sarwate_tradeoff_deficit: magnitudes must be nonnegative");
  const double term_a =
      (static_cast<double>(n - 1) / (static_cast<double>(n) * (m - 1))) * (lambda_a * lambda_a / n);
  const double term_c = lambda_c * lambda_c / n;
  return term_a + term_c - 1.0;
}

BoundValue scs_correlation_bound(int n, int m, int l) {
  require_positive(n, "n");
  require_positive(m, "m");
  if (l < 1 || l > n) throw std::invalid_argument("scs_correlation_bound: need 1 <= l <= n");
  const double num = static_cast<double>(n) * (m - 1) + n - l;
  const double den = static_cast<double>(l) * (static_cast<double>(n) * m - 1.0);
  return clamped("scs-correlation", num, den, n, n, m, 0, 0, l);
}

BoundValue ding_af_bound(int n, int m) {
  require_positive(n, "n");
  require_positive(m, "m");
  const double num = static_cast<double>(n) * m - 1.0;
  const double den = static_cast<double>(n) * n * m - 1.0;
  if (den <= 0.0) {  // n = m = 1
    BoundValue b{"ding", 0.0, false, n, m, 0, 0, 0};
    return b;
  }
  return clamped("ding", num, den, n, n, m, 0, 0, 0);
}

BoundValue laz_bound_unimodular(int n, int m, int zx, int zy) {
  require_positive(n, "n");
  require_positive(m, "m");
  if (zx < 1 || zx > n || zy < 1 || zy > n)
    throw std::invalid_argument("laz_bound_unimodular: need 1 <= zx, zy <= n");
  const double mzx = static_cast<double>(m) * zx;
  const double num = mzx * zy / n - 1.0;
  const double den = mzx - 1.0;
  return clamped("laz", num, den, static_cast<double>(n) / std::sqrt(static_cast<double>(zy)),
                 n, m, zx, zy, 0);
}

ZazCapacity zaz_capacity(int n, int m) {
  require_positive(n, "n");
  require_positive(m, "m");
  return ZazCapacity{n / m, 4.0 * n / m};
}

BoundValue global_af_bound(int n) {
  require_positive(n, "n");
  BoundValue b{"global", std::sqrt(static_cast<double>(n)), true, n, 0, 0, 0, 0};
  return b;
}

double sarwate_af_deficit(int n, int m, double theta_a, double theta_c) {
  require_positive(n, "n");
  require_positive(m, "m");
  const double mn1 = static_cast<double>(m) * n - 1.0;
  const double term_a = (static_cast<double>(n - 1) * theta_a * theta_a) / (mn1 * n);
  const double term_c = (static_cast<double>(m - 1) * theta_c * theta_c) / mn1;
  return term_a + term_c - 1.0;
}

BoundValue scs_laz_bound(int n, int m, int zx, int zy) {
  require_positive(n, "n");
  require_positive(m, "m");
  if (zx < 1 || zy < 1) throw std::invalid_argument("scs_laz_bound: zone extents must be >= 1");
  const double mzz = static_cast<double>(m) * zx * zy;
  const double num = static_cast<double>(n) * (mzz - n);
  const double den = mzz - 1.0;
  return clamped("scs-laz", num, den, 1.0, n, m, zx, zy, 0);
}

BoundValue scs_lcz_bound(int n, int m, int l, int zx) {
  require_positive(n, "n");
  require_positive(m, "m");
  if (l < 1 || l > n) throw std::invalid_argument("scs_lcz_bound: need 1 <= l <= n");
  if (zx < 1) throw std::invalid_argument("scs_lcz_bound: zx must be >= 1");
  const double mzx = static_cast<double>(m) * zx;
  const double num = static_cast<double>(n) * n * (mzx - l);
  const double den = static_cast<double>(l) * (mzx - 1.0);
  return clamped("scs-lcz", num, den, 1.0, n, m, zx, 0, l);
}

ScsGlobalBounds scs_global_bounds(int n, int l) {
  if (n < 2) throw std::invalid_argument("scs_global_bounds: need n >= 2");
  if (l < 1 || l > n) throw std::invalid_argument("scs_global_bounds: need 1 <= l <= n");
  const double dn = n;
  const double dl = l;
  ScsGlobalBounds b;
  const double a1 = dn * std::sqrt((dn - dl) / (dl * (dn - 1.0)));
  const double a2 = dn * std::sqrt((dl - 1.0) / (dl * (dn - 1.0)));
  b.theta_a = std::max(a1, a2);
  b.theta_c = std::max(dn / std::sqrt(dl), a2);
  return b;
}

BoundValue aperiodic_laz_bound(int n, int m, int zx, int zy) {
  require_positive(n, "n");
  require_positive(m, "m");
  if (zx < 1 || zy < 1)
    throw std::invalid_argument("aperiodic_laz_bound: zone extents must be >= 1");
  const double num = static_cast<double>(n) * n *
                     (static_cast<double>(m) * zx * zy - n - zx + 1.0);
  const double den = (static_cast<double>(n) + zx - 1.0) *
                     (static_cast<double>(m) * zx - 1.0) * zy;
  return clamped("aperiodic-laz", num, den, 1.0, n, m, zx, zy, 0);
}

BoundValue aperiodic_lcz_bound(int n, int m, int zx) {
  BoundValue b = aperiodic_laz_bound(n, m, zx, 1);
  b.name = "aperiodic-lcz";
  return b;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::optimal: return "optimal";
    case Verdict::near_optimal: return "near-optimal";
    case Verdict::suboptimal: return "suboptimal";
  }
  return "suboptimal";
}

Certificate certify_against(const BoundValue& bound, double measured) {
  Certificate c;
  c.measured = measured;
  c.bound = bound;
  c.gap = measured - bound.value;
  const double tol = 1e-6 * std::max(1, bound.n);
  if (std::abs(c.gap) <= tol) {
    c.verdict = Verdict::optimal;
  } else if (bound.value > 0.0 && c.gap <= 0.05 * bound.value) {
    c.verdict = Verdict::near_optimal;
  } else {
    c.verdict = Verdict::suboptimal;
  }
  return c;
}

BoundValue select_bound(const SequenceFamily& family, const std::optional<Zone>& zone,
                        GridKind kind, const std::optional<std::string>& override_name) {
  const int n = family.n;
  const int m = family.size();
  const int l = family.mask ? family.mask->admissible_count() : n;
  const int zx = zone ? zone->zx : n;
  const int zy = zone ? zone->zy : n;

  const std::string name = override_name.value_or(
      kind == GridKind::aperiodic ? "aperiodic-laz"
      : family.mask ? (zone ? "scs-laz" : "scs-global-a")
                    : (zone ? "laz" : "global"));

  if (name == "welch") return welch_bound(n, m);
  if (name == "scs-correlation") return scs_correlation_bound(n, m, l);
  if (name == "ding") return ding_af_bound(n, m);
  if (name == "laz") return laz_bound_unimodular(n, m, zx, zy);
  if (name == "global") return global_af_bound(n);
  if (name == "scs-laz") return scs_laz_bound(n, m, zx, zy);
  if (name == "scs-lcz") return scs_lcz_bound(n, m, l, zx);
  if (name == "aperiodic-laz") return aperiodic_laz_bound(n, m, zx, zy);
  if (name == "scs-global-a" || name == "scs-global-c") {
    const ScsGlobalBounds g = scs_global_bounds(n, l);
    BoundValue b;
    b.name = name;
    b.value = name == "scs-global-a" ? g.theta_a : g.theta_c;
    b.n = n;
    b.m = m;
    b.l = l;
    return b;
  }
  throw std::invalid_argument("select_bound: unknown bound name '" + name + "'");
}

Certificate certify(const SequenceFamily& family, const std::optional<Zone>& zone,
                    double measured, GridKind kind,
                    const std::optional<std::string>& override_name) {
  return certify_against(select_bound(family, zone, kind, override_name), measured);
}

}  // namespace laz
