#include "laz/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "laz/dft.hpp"

namespace laz {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

void require_odd_prime_ge5(int n, const char* who) {
  if (n < 5 || !is_prime(n) || n % 2 == 0)
    throw std::invalid_argument(std::string(who) + ": n must be an odd prime >= 5");
}

}  // namespace

SequenceFamily cubic_family(int n) {
  require_odd_prime_ge5(n, "cubic_family");
  std::vector<PolyphaseSequence> members;
  members.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<int> phases(static_cast<size_t>(n));
    for (long long t = 0; t < n; ++t)
      phases[static_cast<size_t>(t)] = mod_n(t * t * t + static_cast<long long>(j) * t, n);
    members.push_back(make_polyphase(n, phases));
  }
  return make_family(std::move(members));
}

PolyphaseSequence generic_cubic(int n, int a, int b, int c) {
  require_odd_prime_ge5(n, "generic_cubic");
  if (mod_n(a, n) == 0)
    throw std::invalid_argument("generic_cubic: a must be nonzero mod n (use quadratic_sequence)");
  std::vector<int> phases(static_cast<size_t>(n));
  for (long long t = 0; t < n; ++t)
    phases[static_cast<size_t>(t)] =
        mod_n(static_cast<long long>(a) * t * t * t + static_cast<long long>(b) * t * t +
                  static_cast<long long>(c) * t,
              n);
  return make_polyphase(n, phases);
}

CubicAfPrediction predicted_cubic_cross_af(int p, const CubicParams& s1, const CubicParams& s2,
                                           long long tau, long long nu) {
  require_odd_prime_ge5(p, "predicted_cubic_cross_af");
  const double root = std::sqrt(static_cast<double>(p));
  if (mod_n(s1.a - s2.a, p) != 0) return {CubicAfClass::weil_bounded, 2.0 * root};

  const int x = mod_n(s1.b - 3LL * s2.a * tau - s2.b, p);
  const int y = mod_n(s1.c - 3LL * s2.a * tau * tau - 2LL * s2.b * tau - s2.c + nu, p);
  if (x == 0 && y == 0) return {CubicAfClass::full_peak, static_cast<double>(p)};
  if (x != 0) return {CubicAfClass::sqrt_peak, root};
  return {CubicAfClass::zero, 0.0};
}

PolyphaseSequence quadratic_sequence(int n, int a, int b) {
  if (n < 2) throw std::invalid_argument("quadratic_sequence: n must be >= 2");
  std::vector<int> phases(static_cast<size_t>(n));
  for (long long t = 0; t < n; ++t)
    phases[static_cast<size_t>(t)] =
        mod_n(static_cast<long long>(a) * t * t + static_cast<long long>(b) * t, n);
  return make_polyphase(n, phases);
}

SequenceFamily quadratic_family(int n, int a, int m) {
  if (n < 2) throw std::invalid_argument("quadratic_family: n must be >= 2");
  if (m < 1 || m > n)
    throw std::invalid_argument("quadratic_family: need 1 <= m <= n for distinct members");
  const int step = n / m;
  std::vector<PolyphaseSequence> members;
  members.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    members.push_back(quadratic_sequence(n, a, i * step));
  return make_family(std::move(members));
}

Zone predicted_quadratic_zaz(int n, int a) {
  if (n < 2) throw std::invalid_argument("predicted_quadratic_zaz: n must be >= 2");
  const int r = static_cast<int>(std::gcd(2LL * mod_n(a, n), static_cast<long long>(n)));
  if (r <= 1)
    throw std::invalid_argument(
        "predicted_quadratic_zaz: gcd(2a, n) = 1 (CAZAC regime, zone degenerates)");
  return Zone(n / r, r);
}

DifferenceSet verify_difference_set(int n, std::vector<int> elements) {
  if (n < 2) throw std::invalid_argument("verify_difference_set: modulus must be >= 2");
  if (elements.empty()) throw std::invalid_argument("verify_difference_set: set is empty");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int d : elements)
    if (d < 0 || d >= n)
      throw std::invalid_argument("verify_difference_set: element out of range");

  std::vector<char> member(static_cast<size_t>(n), 0);
  for (int d : elements) member[static_cast<size_t>(d)] = 1;

  int lambda = -1;
  for (int eps = 1; eps < n; ++eps) {
    int count = 0;
    for (int d : elements)
      if (member[static_cast<size_t>(mod_n(d + eps, n))]) ++count;
    if (lambda < 0) {
      lambda = count;
    } else if (count != lambda) {
      throw std::invalid_argument(
          "verify_difference_set: difference function is not constant (d(" +
          std::to_string(eps) + ") = " + std::to_string(count) + ", expected " +
          std::to_string(lambda) + ")");
    }
  }
  DifferenceSet ds;
  ds.modulus = n;
  ds.size = static_cast<int>(elements.size());
  ds.elements = std::move(elements);
  ds.lambda = lambda;
  return ds;
}

ScsConstruction scs_from_difference_set(const DifferenceSet& ds) {
  if (ds.lambda != 1)
    throw std::invalid_argument("scs_from_difference_set: requires a lambda = 1 set");
  const int n = ds.modulus;
  const double amp = std::sqrt(static_cast<double>(n) / ds.size);

  ScsConstruction out;
  out.frequency_dual.assign(static_cast<size_t>(n), cdouble{0.0, 0.0});
  for (int f : ds.elements)
    out.frequency_dual[static_cast<size_t>(f)] = cdouble{f % 2 == 0 ? amp : -amp, 0.0};

  out.time_domain = sequence_from_values(n, idft(out.frequency_dual));

  std::vector<int> forbidden;
  for (int f = 0; f < n; ++f)
    if (!std::binary_search(ds.elements.begin(), ds.elements.end(), f)) forbidden.push_back(f);
  out.mask = make_mask(n, std::move(forbidden));
  return out;
}

SequenceFamily scs_family_from_difference_set(const DifferenceSet& ds) {
  ScsConstruction c = scs_from_difference_set(ds);
  return make_family({std::move(c.time_domain)}, std::move(c.mask));
}

std::vector<std::vector<cdouble>> dft_orthogonal_family(int n0) {
  if (n0 < 1) throw std::invalid_argument("dft_orthogonal_family: n0 must be >= 1");
  std::vector<std::vector<cdouble>> rows(static_cast<size_t>(n0));
  for (int i = 0; i < n0; ++i) {
    rows[static_cast<size_t>(i)].resize(static_cast<size_t>(n0));
    for (int f = 0; f < n0; ++f)
      rows[static_cast<size_t>(i)][static_cast<size_t>(f)] =
          unit_root(static_cast<long long>(i) * f, n0);
  }
  return rows;
}

SequenceFamily comb_scs_family(const std::vector<std::vector<cdouble>>& rows, int k) {
  if (rows.empty()) throw std::invalid_argument("comb_scs_family: no rows");
  if (k < 1) throw std::invalid_argument("comb_scs_family: k must be >= 1");
  const int n0 = static_cast<int>(rows.front().size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n0)
      throw std::invalid_argument("comb_scs_family: ragged rows");
    for (const cdouble& v : r)
      if (std::abs(std::abs(v) - 1.0) > kUnimodularTol)
        throw std::invalid_argument("comb_scs_family: rows must be unimodular");
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = i + 1; j < rows.size(); ++j) {
      cdouble ip{0.0, 0.0};
      for (int f = 0; f < n0; ++f)
        ip += rows[i][static_cast<size_t>(f)] * std::conj(rows[j][static_cast<size_t>(f)]);
      if (std::abs(ip) > 1e-9 * n0)
        throw std::invalid_argument("comb_scs_family: rows are not orthogonal");
    }
  }

  const int n = k * n0;
  const double amp = std::sqrt(static_cast<double>(k));
  std::vector<PolyphaseSequence> members;
  members.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<cdouble> dual(static_cast<size_t>(n), cdouble{0.0, 0.0});
    for (int f0 = 0; f0 < n0; ++f0)
      dual[static_cast<size_t>(f0) * k] = amp * r[static_cast<size_t>(f0)];
    members.push_back(sequence_from_values(n, idft(dual)));
  }

  std::vector<int> forbidden;
  for (int f = 0; f < n; ++f)
    if (f % k != 0) forbidden.push_back(f);
  return make_family(std::move(members), make_mask(n, std::move(forbidden)));
}

std::vector<DifferenceSet> difference_set_catalog() {
  static const std::vector<std::pair<int, std::vector<int>>> entries = {
      {7, {1, 2, 4}},
      {13, {4, 5, 8, 10}},
      {21, {3, 6, 7, 12, 14}},
      {31, {1, 5, 11, 24, 25, 27}},
  };
  std::vector<DifferenceSet> out;
  out.reserve(entries.size());
  for (const auto& [n, els] : entries) out.push_back(verify_difference_set(n, els));
  return out;
}

PolyphaseSequence example5_sequence() {
  static const char* kPattern =
      "-+--++-+-++++++---+--++"
      "-+---++-+-++++++--++-+-"
      "---+-+++--+-----++-+-++"
      "++--+---+-+++--+-+++++-"
      "+--+++-+++--+-+++++--+-"
      "+++-+++++---+";
  const int n = 128;
  std::vector<int> phases;
  phases.reserve(static_cast<size_t>(n));
  for (const char* p = kPattern; *p; ++p) phases.push_back(*p == '+' ? 0 : n / 2);
  if (static_cast<int>(phases.size()) != n)
    throw std::logic_error("example5_sequence: embedded literal has wrong length");
  return make_polyphase(n, phases);
}

}  // namespace laz
