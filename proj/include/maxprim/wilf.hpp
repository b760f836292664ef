#pragma once

#include <optional>
#include <span>
#include <vector>

#include "maxprim/enumeration.hpp"
#include "maxprim/semigroup.hpp"

namespace maxprim {

/// e * l >= c.
bool wilf_holds(const NumericalSemigroup& s);

/// Families of semigroups for which Wilf's inequality is a theorem.
struct KnownCaseVector {
  bool e_at_most_3 = false;
  bool c_at_most_3m = false;
  bool e_at_least_m_over_3 = false;
  bool left_at_most_12 = false;
  bool m_at_most_19 = false;
  /// |P ∩ (m, 2m)|^2 >= 3m
  bool many_low_primitives = false;
  bool genus_at_most_100 = false;
  bool arithmetic_progression = false;

  [[nodiscard]] bool any() const {
    return e_at_most_3 || c_at_most_3m || e_at_least_m_over_3 || left_at_most_12 ||
           m_at_most_19 || many_low_primitives || genus_at_most_100 || arithmetic_progression;
  }

  friend bool operator==(const KnownCaseVector&, const KnownCaseVector&) = default;
};

KnownCaseVector classify_known_cases(const NumericalSemigroup& s);

/// Same, from sorted minimal generators and their invariants.
KnownCaseVector classify_known_cases(std::span<const Value> minimal, const SemigroupInvariants& inv);

struct WilfReport {
  Value max_primitive = 0;
  Count total_checked = 0;
  /// Canonically sorted.
  std::vector<GeneratorSet> violations;
  /// Semigroups that satisfy no known-case condition.
  Count novel_count = 0;
  /// The smallest novel semigroups in canonical order, at most
  /// WilfOptions::novel_sample_limit of them.
  std::vector<GeneratorSet> sample_novel;

  friend bool operator==(const WilfReport&, const WilfReport&) = default;
};

struct WilfOptions {
  /// Restrict to T(n, m).
  std::optional<Value> multiplicity;
  /// Check e * l >= c on every semigroup even when a known case applies.
  bool full_check = false;
  std::size_t novel_sample_limit = 10;
  Value len = 0;
  unsigned jobs = 1;
};

WilfReport verify_wilf(Value max_primitive, const WilfOptions& opt = {});

std::vector<WilfReport> verify_wilf_range(Value from, Value to, const WilfOptions& opt = {});

}  // namespace maxprim
