#pragma once

#include <span>
#include <vector>

#include "maxprim/generator_set.hpp"

namespace maxprim {

Value gcd_of_set(std::span<const Value> values);
inline Value gcd_of_set(const GeneratorSet& g) { return gcd_of_set(g.elements()); }

/// Finite window [0, bound] of the monoid generated by a set.
class MembershipTable {
 public:
  MembershipTable(std::span<const Value> generators, Value bound);

  [[nodiscard]] Value bound() const { return static_cast<Value>(member_.size()) - 1; }
  [[nodiscard]] bool contains(Value x) const {
    return x >= 0 && x <= bound() && member_[static_cast<std::size_t>(x)];
  }
  [[nodiscard]] const std::vector<bool>& members() const { return member_; }

 private:
  std::vector<bool> member_;
};

MembershipTable membership_table(const GeneratorSet& g, Value bound);

/// values[i] is the least element of the monoid congruent to i mod modulus.
struct AperySet {
  Value modulus = 1;
  std::vector<Value> values;

  [[nodiscard]] Value max() const;
  [[nodiscard]] Value frobenius() const { return max() - modulus; }
  [[nodiscard]] Value genus() const;
};

AperySet apery_set(std::span<const Value> generators);
inline AperySet apery_set(const GeneratorSet& g) { return apery_set(g.elements()); }

/// Unique minimal generating set of the submonoid <g>; any gcd.
GeneratorSet minimal_submonoid_generators(const GeneratorSet& g);

/// Unique minimal generating set of the numerical semigroup <g>. Throws
/// NotASemigroupError unless gcd(g) = 1.
GeneratorSet minimal_generators(const GeneratorSet& g);

/// True when no element of the sorted set is a combination of the others.
/// Does not require gcd 1.
bool is_minimal_generating_set(std::span<const Value> sorted);

struct SemigroupInvariants {
  Value multiplicity = 1;
  Value max_primitive = 1;
  Value embedding_dimension = 1;
  Value frobenius = -1;
  Value conductor = 0;
  Value genus = 0;
  Value left_count = 0;
  Value depth = 0;
  Value primitive_depth = 1;
  bool wilf_holds = true;

  friend bool operator==(const SemigroupInvariants&, const SemigroupInvariants&) = default;
};

/// Invariants of the semigroup whose minimal generators are `minimal`
/// (sorted, gcd 1). No validation; callers own the precondition.
SemigroupInvariants invariants_from_minimal(std::span<const Value> minimal);

/// A numerical semigroup held by its minimal generators.
class NumericalSemigroup {
 public:
  /// Reduces `generators` to its minimal generating set. Throws
  /// NotASemigroupError if gcd(generators) != 1.
  explicit NumericalSemigroup(const GeneratorSet& generators);

  [[nodiscard]] const GeneratorSet& minimal_generators() const { return gens_; }
  [[nodiscard]] SemigroupInvariants invariants() const;
  [[nodiscard]] AperySet apery() const { return apery_set(gens_); }

  /// Membership for arbitrary x >= 0, via the Apéry set.
  [[nodiscard]] bool contains(Value x) const;

  friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;
  friend auto operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gens_ <=> b.gens_;
  }

 private:
  GeneratorSet gens_;
};

inline SemigroupInvariants invariants(const NumericalSemigroup& s) { return s.invariants(); }

}  // namespace maxprim
