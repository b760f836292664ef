#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "maxprim/enumeration.hpp"
#include "maxprim/semigroup.hpp"

namespace maxprim {

int moebius(Value n);

/// Positive divisors of n in ascending order.
std::vector<Value> divisors(Value n);

/// Number of semigroups with maximum primitive n and primitive depth 2,
/// for n > 2.
Count depth2_count(Value n);

/// A_n(k) = sum over d | n of mu(n/d) N_d(k). `frobenius_counts` maps d to
/// N_d(k) and must cover every divisor of n.
Count depth_refined_inversion(Value n, Value depth, const std::map<Value, Count>& frobenius_counts);

/// N_n = sum over d | n of A_d. `maxprim_counts` maps d to A_d.
Count frobenius_count_from_maxprim(Value n, const std::map<Value, Count>& maxprim_counts);

enum class CountMode { kFull, kFormulaAssisted };

struct DepthCounts {
  Count maxprim = 0;
  /// Filled only when the refinement is known for every divisor.
  std::optional<Count> frobenius;
};

struct CountRecord {
  Value n = 0;
  Count maxprim = 0;
  std::optional<Count> frobenius;
  /// Keyed by (primitive) depth k; zero entries are omitted.
  std::map<Value, DepthCounts> by_depth;
  /// False for seeded values, whose refinement is unknown.
  bool by_depth_known = false;
};

/// A_n and its refinement by primitive depth. Visit-only; uses opt.len and
/// opt.jobs.
CountRecord count_by_max_primitive(Value n, CountMode mode, const TreeOptions& opt = {});

struct CountOptions {
  CountMode mode = CountMode::kFormulaAssisted;
  Value len = 0;
  unsigned jobs = 1;
  /// Previously computed A_n; these are trusted and never enumerated.
  std::map<Value, Count> seeded;
  std::function<void(Value)> on_progress;
};

/// Records for every n in [from, to], with N_n derived from A_d over the
/// divisors d of n (computed on demand when outside the range).
std::vector<CountRecord> count_range(Value from, Value to, const CountOptions& opt = {});

inline constexpr Value kFrobeniusOracleCap = 14;

/// All semigroups with Frobenius number n, optionally only those of depth
/// `depth`, by testing every subset of [1, n-1] for closure.
std::vector<NumericalSemigroup> frobenius_semigroups_oracle(
    Value n, std::optional<Value> depth = std::nullopt, Value cap = kFrobeniusOracleCap);

/// < (left elements and F) / gcd >. Throws UsageError for N.
NumericalSemigroup psi_map(const NumericalSemigroup& s);

}  // namespace maxprim
