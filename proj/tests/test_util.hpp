#pragma once

#include <random>
#include <vector>

#include "laz/seqcore.hpp"

namespace laz::testing {

inline PolyphaseSequence random_unimodular(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  std::vector<cdouble> values(static_cast<size_t>(n));
  for (auto& v : values) v = std::polar(1.0, angle(rng));
  return sequence_from_values(n, std::move(values));
}

inline PolyphaseSequence random_polyphase(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> phase(0, n - 1);
  std::vector<int> phases(static_cast<size_t>(n));
  for (auto& p : phases) p = phase(rng);
  return make_polyphase(n, phases);
}

inline PolyphaseSequence random_binary(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<int> phases(static_cast<size_t>(n));
  for (auto& p : phases) p = bit(rng) ? n / 2 : 0;  // n even: entries +-1
  return make_polyphase(n, phases);
}

inline SequenceFamily random_unimodular_family(int n, int m, std::mt19937& rng) {
  std::vector<PolyphaseSequence> members;
  members.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) members.push_back(random_unimodular(n, rng));
  return make_family(std::move(members));
}

}  // namespace laz::testing
