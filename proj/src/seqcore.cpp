#include "laz/seqcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "laz/dft.hpp"

namespace laz {

cdouble unit_root(long long k, int n) {
  const int r = mod_n(k, n);
  return std::polar(1.0, 2.0 * std::numbers::pi * r / n);
}

double PolyphaseSequence::energy() const {
  double e = 0.0;
  for (const cdouble& v : values) e += std::norm(v);
  return e;
}

PolyphaseSequence make_polyphase(int n, const std::vector<int>& phases) {
  if (n <= 0) throw std::invalid_argument("make_polyphase: period must be positive");
  if (static_cast<int>(phases.size()) != n)
    throw std::invalid_argument("make_polyphase: phases length does not match period");
  PolyphaseSequence s;
  s.n = n;
  s.unimodular = true;
  s.exact_phases.reserve(phases.size());
  s.values.reserve(phases.size());
  for (int p : phases) {
    const int r = mod_n(p, n);
    s.exact_phases.push_back(r);
    s.values.push_back(unit_root(r, n));
  }
  return s;
}

PolyphaseSequence sequence_from_values(int n, std::vector<cdouble> values) {
  if (n <= 0) throw std::invalid_argument("sequence_from_values: period must be positive");
  if (static_cast<int>(values.size()) != n)
    throw std::invalid_argument("sequence_from_values: values length does not match period");
  PolyphaseSequence s;
  s.n = n;
  s.values = std::move(values);
  s.unimodular = std::all_of(s.values.begin(), s.values.end(), [](const cdouble& v) {
    return std::abs(std::abs(v) - 1.0) <= kUnimodularTol;
  });
  return s;
}

bool SpectralMask::is_forbidden(int f) const {
  return std::binary_search(forbidden.begin(), forbidden.end(), f);
}

SpectralMask make_mask(int n, std::vector<int> forbidden) {
  if (n <= 0) throw std::invalid_argument("make_mask: period must be positive");
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
  for (int f : forbidden)
    if (f < 0 || f >= n) throw std::invalid_argument("make_mask: carrier index out of range");
  if (static_cast<int>(forbidden.size()) >= n)
    throw std::invalid_argument("make_mask: at least one admissible carrier required");
  return SpectralMask{n, std::move(forbidden)};
}

SequenceFamily make_family(std::vector<PolyphaseSequence> members,
                           std::optional<SpectralMask> mask) {
  if (members.empty()) throw std::invalid_argument("make_family: at least one member required");
  SequenceFamily fam;
  fam.n = members.front().n;
  fam.members = std::move(members);
  fam.mask = std::move(mask);
  for (const auto& m : fam.members)
    if (m.n != fam.n) throw std::invalid_argument("make_family: members disagree on period");
  if (fam.mask && fam.mask->n != fam.n)
    throw std::invalid_argument("make_family: mask period does not match family");
  return fam;
}

Zone::Zone(int zx_, int zy_) : zx(zx_), zy(zy_) {
  if (zx < 1 || zy < 1) throw std::invalid_argument("Zone: half-extents must be >= 1");
}

AmbiguityGrid::AmbiguityGrid(int n, GridKind kind) : n_(n), kind_(kind) {
  if (n <= 0) throw std::invalid_argument("AmbiguityGrid: period must be positive");
  mags_.assign(static_cast<size_t>(tau_rows()) * n_, 0.0);
}

double AmbiguityGrid::mag(long long tau, long long nu) const {
  const int nu_idx = mod_n(nu, n_);
  if (kind_ == GridKind::periodic) {
    return cell(mod_n(tau, n_), nu_idx);
  }
  if (std::llabs(tau) >= n_) return 0.0;
  return cell(static_cast<int>(tau) + n_ - 1, nu_idx);
}

double AmbiguityGrid::max_mag(bool exclude_origin) const {
  double best = 0.0;
  const int origin_row = kind_ == GridKind::periodic ? 0 : n_ - 1;
  for (int i = 0; i < tau_rows(); ++i) {
    for (int j = 0; j < n_; ++j) {
      if (exclude_origin && i == origin_row && j == 0) continue;
      best = std::max(best, cell(i, j));
    }
  }
  return best;
}

namespace {

bool mask_compliant(const PolyphaseSequence& s, const SpectralMask& mask) {
  const std::vector<cdouble> dual = dft(s.values);
  const double flat = static_cast<double>(s.n) / mask.admissible_count();
  for (int f = 0; f < s.n; ++f) {
    const double p = std::norm(dual[static_cast<size_t>(f)]);
    if (mask.is_forbidden(f)) {
      if (p > kMaskHoleTol) return false;
    } else if (std::abs(p - flat) > kMaskFlatTol) {
      return false;
    }
  }
  return true;
}

}  // namespace

ValidationReport validate_family(const SequenceFamily& family) {
  ValidationReport rep;
  const int m = family.size();
  if (m == 0) {
    rep.failures.push_back("family is empty");
    return rep;
  }

  for (int i = 0; i < m; ++i) {
    const auto& s = family.members[static_cast<size_t>(i)];
    if (s.n != family.n || static_cast<int>(s.values.size()) != family.n) {
      rep.periods_consistent = false;
      rep.failures.push_back("member " + std::to_string(i) + ": period mismatch");
    }

    bool uni = true;
    for (const cdouble& v : s.values)
      uni = uni && std::abs(std::abs(v) - 1.0) <= kUnimodularTol;
    rep.member_unimodular.push_back(uni);
    if (s.unimodular && !uni) {
      rep.unimodular_flags_consistent = false;
      rep.failures.push_back("member " + std::to_string(i) +
                             ": flagged unimodular but magnitudes deviate");
    }

    if (s.has_exact_phases()) {
      if (s.exact_phases.size() != s.values.size()) {
        rep.phases_consistent = false;
        rep.failures.push_back("member " + std::to_string(i) + ": phase array length mismatch");
      } else {
        for (size_t t = 0; t < s.values.size(); ++t) {
          if (std::abs(s.values[t] - unit_root(s.exact_phases[t], s.n)) > kPhaseReconstructTol) {
            rep.phases_consistent = false;
            rep.failures.push_back("member " + std::to_string(i) +
                                   ": values drift from exact phases");
            break;
          }
        }
      }
    }
  }

  for (int i = 0; i < m && rep.periods_consistent; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto& a = family.members[static_cast<size_t>(i)];
      const auto& b = family.members[static_cast<size_t>(j)];
      double max_diff = 0.0;
      for (size_t t = 0; t < a.values.size(); ++t)
        max_diff = std::max(max_diff, std::abs(a.values[t] - b.values[t]));
      if (max_diff <= kDistinctTol) {
        rep.pairwise_distinct = false;
        rep.failures.push_back("members " + std::to_string(i) + " and " + std::to_string(j) +
                               " are duplicates");
      }
    }
  }

  if (family.mask && rep.periods_consistent) {
    bool all_ok = true;
    for (int i = 0; i < m; ++i) {
      if (!mask_compliant(family.members[static_cast<size_t>(i)], *family.mask)) {
        all_ok = false;
        rep.failures.push_back("member " + std::to_string(i) + ": violates spectral mask");
      }
    }
    rep.mask_compliant = all_ok;
  }

  return rep;
}

}  // namespace laz
