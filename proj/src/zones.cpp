#include "laz/zones.hpp"

#include <cmath>

#include "laz/bounds.hpp"

namespace laz {

ZoneSearchResult max_zone(const FamilyAfScan& scan, double theta) {
  const int n = scan.n();
  const double tol = kZoneMagTolPerN * n;
  ZoneSearchResult best;
  // The qualifying region is monotone: growing a failing rectangle keeps it
  // failing, so the largest feasible zy is nonincreasing in zx. Results match
  // exhaustive enumeration.
  int zy_cap = n;
  for (int zx = 1; zx <= n && zy_cap >= 1; ++zx) {
    while (zy_cap >= 1 && scan.in_zone_max(Zone(zx, zy_cap)) > theta + tol) --zy_cap;
    if (zy_cap < 1) break;
    const Zone z(zx, zy_cap);
    const long long area = z.area();
    if (!best.found || area > best.area || (area == best.area && zx > best.zone.zx)) {
      best.found = true;
      best.zone = z;
      best.area = area;
      best.in_zone_max = scan.in_zone_max(z);
    }
  }
  return best;
}

ZoneSearchResult max_zone(const SequenceFamily& family, double theta, GridKind kind) {
  return max_zone(FamilyAfScan(family, kind), theta);
}

ZoneCheck is_zone(const FamilyAfScan& scan, const Zone& zone, double theta) {
  const double tol = kZoneMagTolPerN * scan.n();
  ZoneCheck check;
  if (scan.in_zone_max(zone) <= theta + tol) {
    check.ok = true;
    return check;
  }
  check.ok = false;
  for (long long tau = -(zone.zx - 1); tau <= zone.zx - 1; ++tau) {
    for (long long nu = -(zone.zy - 1); nu <= zone.zy - 1; ++nu) {
      const double mag = scan.point_mag(tau, nu);
      if (mag > check.mag) {
        check.mag = mag;
        check.tau = tau;
        check.nu = nu;
      }
    }
  }
  return check;
}

ZoneCheck is_zone(const SequenceFamily& family, const Zone& zone, double theta, GridKind kind) {
  return is_zone(FamilyAfScan(family, kind), zone, theta);
}

ZoneReport zone_report(const SequenceFamily& family, const Zone& zone, GridKind kind) {
  ZoneReport rep;
  rep.zone = zone;
  rep.in_zone_max = f_pi(family, zone, kind);
  rep.area = zone.area();
  rep.capacity_area_bound = zaz_capacity(family.n, family.size()).area_bound;
  rep.capacity_slack = rep.capacity_area_bound - static_cast<double>(rep.area);
  return rep;
}

}  // namespace laz
