#pragma once

#include <functional>
#include <span>
#include <vector>

#include "maxprim/generator_set.hpp"

namespace maxprim {

/// Largest maximum primitive the enumerators accept; candidate
/// combinations up to M are held in one 64-bit word.
inline constexpr Value kMaxPrimitiveLimit = 63;

using VisitFn = std::function<void(std::span<const Value>)>;

struct TreeOptions {
  /// Subtrees with at most `len` possible large primitives are completed by
  /// the residue-class product step instead of further branching.
  /// Zero selects default_len(M, m).
  Value len = 0;
  /// Store the visited generator sets in the result.
  bool collect = true;
  /// Called once per semigroup with its sorted minimal generators.
  VisitFn on_visit;
  unsigned jobs = 1;
  /// Guard on_visit with a mutex when jobs > 1.
  bool serialize_visits = true;
};

/// max(1, ceil(14 (M - m) / 5)).
Value default_len(Value max_primitive, Value multiplicity);

struct EnumerationResult {
  /// Canonically (lexicographically) sorted when collected.
  std::vector<GeneratorSet> semigroups;
  Count count = 0;
};

/// Every subset Y of (m, M) tested for gcd and minimality of Y u {m, M}.
EnumerationResult enumerate_brute_force(Value max_primitive, Value multiplicity);

/// Subset search with divisors of M and multiples of m excluded and the
/// subset size capped at m - 2; gcd-only when m > M/2.
EnumerationResult enumerate_naive(Value max_primitive, Value multiplicity);

/// Elements of (p_{n-1}, M) not ruled out as further primitives of a
/// semigroup whose primitives contain P.
std::vector<Value> possible_large_primitives(const GeneratorSet& primitives);

/// Semigroups whose primitives extend P by a nonempty set of possible large
/// primitives of P, at most one per residue class mod min(P).
EnumerationResult semigroups_with_given_primitives(const GeneratorSet& primitives,
                                                   const VisitFn& on_visit = {});

/// T(M, m) by exploring the tree of submonoids rooted at <m, M>.
EnumerationResult enumerate_tree(Value max_primitive, Value multiplicity,
                                 const TreeOptions& opt = {});

/// T(M): disjoint union of T(M, m) over m. T(1) = {<1>}.
EnumerationResult enumerate_all(Value max_primitive, const TreeOptions& opt = {});

/// Independent slice of the search for one (M, m). Units of one (M, m)
/// visit disjoint sets of semigroups whose union is T(M, m).
struct WorkUnit {
  enum class Kind {
    kTrivial,  // T(1) = {<1>}
    kDepthTwo,  // m > M/2: gcd-only subset scan
    kSeed,  // the root <m, M> itself
    kBranch,  // the subtree below {m, first, M}
  };
  Kind kind;
  Value max_primitive;
  Value multiplicity;
  Value first = 0;
};

/// Work units covering T(M, m).
std::vector<WorkUnit> tree_work_units(Value max_primitive, Value multiplicity);

/// Runs one unit with cutoff `len` (must be >= 1); returns the number of
/// semigroups visited. `visit` may be empty.
Count run_work_unit(const WorkUnit& unit, Value len, const VisitFn& visit);

}  // namespace maxprim
