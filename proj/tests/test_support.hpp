#pragma once

// Test-only brute-force helpers. Deliberately literal; they do not call the
// library's relation code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "eolab/pattern.hpp"

namespace eolab::testing {

inline std::string fixture(const std::string& name) {
  return std::string(EOLAB_FIXTURE_DIR) + "/" + name;
}

inline std::string program_fixture(const std::string& name) {
  return fixture("programs/" + name + ".json");
}

inline std::vector<std::vector<std::uint32_t>> brute_permutations(std::size_t n) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::vector<std::uint32_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// For all i < j: f(i) < f(j) implies g(i) < g(j).
template <typename Seq>
bool literal_leq(const Seq& f, const Seq& g) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (f[i] < f[j] && !(g[i] < g[j])) return false;
    }
  }
  return true;
}

inline OrderPattern as_pattern(const std::vector<std::uint32_t>& ranks) {
  return OrderPattern(ranks);
}

// Random injective sequence of naturals of length n.
inline std::vector<Natural> random_injective(std::mt19937_64& rng, std::size_t n,
                                             Natural max_value = 1000) {
  std::vector<Natural> pool(max_value);
  std::iota(pool.begin(), pool.end(), Natural{0});
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(n);
  return pool;
}

}  // namespace eolab::testing
