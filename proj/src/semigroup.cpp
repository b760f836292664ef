#include "maxprim/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace maxprim {

namespace {

Value ceil_div(Value a, Value b) { return (a + b - 1) / b; }

void require_numerical(std::span<const Value> g) {
  if (gcd_of_set(g) != 1) throw NotASemigroupError("generators have gcd different from 1");
}

}  // namespace

Value gcd_of_set(std::span<const Value> values) {
  if (values.empty()) throw UsageError("gcd of an empty set");
  Value d = 0;
  for (Value v : values) d = std::gcd(d, v);
  return d;
}

MembershipTable::MembershipTable(std::span<const Value> generators, Value bound)
    : member_(static_cast<std::size_t>(std::max<Value>(bound, 0)) + 1, false) {
  if (bound < 0) throw UsageError("membership bound must be nonnegative");
  member_[0] = true;
  // unbounded knapsack reachability, one generator at a time
  for (Value g : generators) {
    for (Value x = g; x <= bound; ++x)
      if (member_[static_cast<std::size_t>(x - g)]) member_[static_cast<std::size_t>(x)] = true;
  }
}

MembershipTable membership_table(const GeneratorSet& g, Value bound) {
  return MembershipTable(g.elements(), bound);
}

Value AperySet::max() const { return *std::max_element(values.begin(), values.end()); }

Value AperySet::genus() const {
  // sum(w_i)/m - (m-1)/2, kept in integers
  Value sum = std::accumulate(values.begin(), values.end(), Value{0});
  return (2 * sum - modulus * (modulus - 1)) / (2 * modulus);
}

AperySet apery_set(std::span<const Value> generators) {
  require_numerical(generators);
  const Value m = *std::min_element(generators.begin(), generators.end());
  constexpr Value kUnreached = std::numeric_limits<Value>::max();
  AperySet ap{m, std::vector<Value>(static_cast<std::size_t>(m), kUnreached)};
  auto& w = ap.values;
  w[0] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Value g : generators) {
      if (g == m) continue;
      const auto step = static_cast<std::size_t>(g % m);
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == kUnreached) continue;
        std::size_t j = i + step;
        if (j >= w.size()) j -= w.size();
        if (w[i] + g < w[j]) {
          w[j] = w[i] + g;
          changed = true;
        }
      }
    }
  }
  return ap;
}

bool is_minimal_generating_set(std::span<const Value> sorted) {
  if (sorted.empty()) return false;
  // x_i can only be a combination of smaller generators
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const MembershipTable below(sorted.first(i), sorted[i]);
    if (below.contains(sorted[i])) return false;
  }
  return true;
}

GeneratorSet minimal_generators(const GeneratorSet& g) {
  require_numerical(g.elements());
  return minimal_submonoid_generators(g);
}

GeneratorSet minimal_submonoid_generators(const GeneratorSet& g) {
  std::vector<Value> kept;
  const Value top = g.max();
  std::vector<bool> member(static_cast<std::size_t>(top) + 1, false);
  member[0] = true;
  for (Value x : g) {
    if (member[static_cast<std::size_t>(x)]) continue;
    kept.push_back(x);
    for (Value y = x; y <= top; ++y)
      if (member[static_cast<std::size_t>(y - x)]) member[static_cast<std::size_t>(y)] = true;
  }
  return GeneratorSet::from_sorted(std::move(kept));
}

SemigroupInvariants invariants_from_minimal(std::span<const Value> minimal) {
  const AperySet ap = apery_set(minimal);
  SemigroupInvariants inv;
  inv.multiplicity = minimal.front();
  inv.max_primitive = minimal.back();
  inv.embedding_dimension = static_cast<Value>(minimal.size());
  inv.frobenius = ap.frobenius();
  inv.conductor = inv.frobenius + 1;
  inv.genus = ap.genus();
  inv.left_count = inv.conductor - inv.genus;
  inv.depth = ceil_div(inv.conductor, inv.multiplicity);
  inv.primitive_depth = ceil_div(inv.max_primitive, inv.multiplicity);
  inv.wilf_holds = inv.embedding_dimension * inv.left_count >= inv.conductor;
  return inv;
}

NumericalSemigroup::NumericalSemigroup(const GeneratorSet& generators)
    : gens_(maxprim::minimal_generators(generators)) {}

SemigroupInvariants NumericalSemigroup::invariants() const {
  return invariants_from_minimal(gens_.elements());
}

bool NumericalSemigroup::contains(Value x) const {
  if (x < 0) return false;
  const AperySet ap = apery();
  return x >= ap.values[static_cast<std::size_t>(x % ap.modulus)];
}

}  // namespace maxprim
