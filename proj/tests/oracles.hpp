#pragma once

// Slow reference implementations used only by the tests. None of them
// call into the library's membership, Apéry or enumeration code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "maxprim/generator_set.hpp"

namespace oracle {

using maxprim::Count;
using maxprim::Value;

/// x is a nonnegative combination of gens, by recursive search.
inline bool is_combination(const std::vector<Value>& gens, Value x, std::size_t from = 0) {
  if (x == 0) return true;
  for (std::size_t i = from; i < gens.size(); ++i)
    for (Value k = 1; k * gens[i] <= x; ++k)
      if (is_combination(gens, x - k * gens[i], i + 1)) return true;
  return false;
}

inline std::vector<bool> members(const std::vector<Value>& gens, Value bound) {
  std::vector<bool> out(static_cast<std::size_t>(bound) + 1);
  for (Value x = 0; x <= bound; ++x) out[static_cast<std::size_t>(x)] = is_combination(gens, x);
  return out;
}

/// Largest x <= bound that is not a combination; -1 if none.
inline Value largest_gap(const std::vector<bool>& member) {
  for (auto x = static_cast<Value>(member.size()) - 1; x > 0; --x)
    if (!member[static_cast<std::size_t>(x)]) return x;
  return -1;
}

/// Elements of gens that are not a sum of two nonzero elements of <gens>.
inline std::vector<Value> minimal_generators(std::vector<Value> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const auto member = members(gens, gens.back());
  std::vector<Value> out;
  for (Value x : gens) {
    bool reducible = false;
    for (Value a = 1; a < x && !reducible; ++a)
      reducible = member[static_cast<std::size_t>(a)] && member[static_cast<std::size_t>(x - a)];
    if (!reducible) out.push_back(x);
  }
  return out;
}

/// Subsets of (n/2, n] containing n with gcd 1.
inline Count depth2_subsets(Value n) {
  std::vector<Value> pool;
  for (Value x = n / 2 + 1; x < n; ++x) pool.push_back(x);
  Count total = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << pool.size()); ++s) {
    Value g = n;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if ((s >> i) & 1U) g = std::gcd(g, pool[i]);
    total += g == 1;
  }
  return total;
}

/// Random generator set with gcd 1: min m in [1, max_m], max in [m, max_top]
/// before reduction.
inline std::vector<Value> random_numerical(std::mt19937_64& rng, Value max_m, Value max_top) {
  for (;;) {
    const Value m = std::uniform_int_distribution<Value>(1, max_m)(rng);
    const Value top = std::uniform_int_distribution<Value>(m, std::max(m, max_top))(rng);
    const double density = std::uniform_real_distribution<double>(0.02, 0.5)(rng);
    std::vector<Value> g{m};
    for (Value x = m + 1; x < top; ++x)
      if (std::bernoulli_distribution(density)(rng)) g.push_back(x);
    if (top > m) g.push_back(top);
    Value d = 0;
    for (Value x : g) d = std::gcd(d, x);
    if (d == 1) return g;
  }
}

}  // namespace oracle
