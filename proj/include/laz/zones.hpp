#pragma once

#include "laz/af_engine.hpp"
#include "laz/seqcore.hpp"

namespace laz {

struct ZoneSearchResult {
  bool found = false;
  Zone zone{1, 1};
  long long area = 0;
  double in_zone_max = 0.0;
};

// Largest-area origin-centered rectangle whose in-zone AF max stays within
// theta (+ 1e-9 n slack), over all 1 <= zx, zy <= n. Ties break toward larger
// zx, then larger zy. found = false when no rectangle qualifies, which can
// happen for families whose members are not orthogonal at the origin.
ZoneSearchResult max_zone(const SequenceFamily& family, double theta,
                          GridKind kind = GridKind::periodic);
ZoneSearchResult max_zone(const FamilyAfScan& scan, double theta);

struct ZoneCheck {
  bool ok = false;
  // Worst offender when !ok.
  long long tau = 0;
  long long nu = 0;
  double mag = 0.0;
};

ZoneCheck is_zone(const SequenceFamily& family, const Zone& zone, double theta,
                  GridKind kind = GridKind::periodic);
ZoneCheck is_zone(const FamilyAfScan& scan, const Zone& zone, double theta);

struct ZoneReport {
  Zone zone{1, 1};
  double in_zone_max = 0.0;
  long long area = 0;
  double capacity_area_bound = 0.0;  // 4n/m
  double capacity_slack = 0.0;       // 4n/m - area
};

ZoneReport zone_report(const SequenceFamily& family, const Zone& zone,
                       GridKind kind = GridKind::periodic);

}  // namespace laz
