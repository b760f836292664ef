#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "maxprim/counting.hpp"
#include "oracles.hpp"
#include "reference_counts.hpp"

using namespace maxprim;

namespace {

std::map<Value, Count> table_maxprim(Value upto) {
  std::map<Value, Count> a;
  for (Value n = 1; n <= upto; ++n) a[n] = golden::row(n).maxprim;
  return a;
}

// |T_d(k)| for every d | n, from the tree.
std::map<Value, Count> maxprim_by_depth_over_divisors(Value n) {
  std::map<Value, Count> by_depth;
  for (Value d : divisors(n))
    for (const auto& g : enumerate_all(d).semigroups) ++by_depth[(g.max() + g.min() - 1) / g.min()];
  return by_depth;
}

}  // namespace

TEST_CASE("moebius") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(12) == 0);
  CHECK(moebius(30) == -1);
  CHECK(moebius(7) == -1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(49) == 0);
  CHECK_THROWS_AS(moebius(0), UsageError);
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<Value>{1});
  CHECK(divisors(12) == std::vector<Value>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(49) == std::vector<Value>{1, 7, 49});
}

TEST_CASE("depth2_count") {
  CHECK(depth2_count(5) == 3);
  CHECK(depth2_count(6) == 2);
  CHECK(depth2_count(23) == 2047);
  for (Value n = 3; n <= 32; ++n) {
    CAPTURE(n);
    CHECK(depth2_count(n) == oracle::depth2_subsets(n));
  }
  CHECK_THROWS_AS(depth2_count(2), UsageError);
}

TEST_CASE("depth_refined_inversion") {
  CHECK(depth_refined_inversion(6, 2, {{1, 0}, {2, 0}, {3, 1}, {6, 3}}) == 2);
  CHECK(depth_refined_inversion(4, 2, {{1, 0}, {2, 0}, {4, 1}}) == 1);
  CHECK(depth_refined_inversion(13, 3, {{1, 5}, {13, 40}}) == 35);
  CHECK_THROWS_AS(depth_refined_inversion(6, 2, {{1, 0}, {6, 3}}), UsageError);
}

TEST_CASE("frobenius_count_from_maxprim") {
  const auto a = table_maxprim(62);
  CHECK(frobenius_count_from_maxprim(1, a) == 1);
  CHECK(frobenius_count_from_maxprim(6, a) == 4);
  CHECK(frobenius_count_from_maxprim(30, a) == 31822);
  for (Value n = 1; n <= 62; ++n) CHECK(frobenius_count_from_maxprim(n, a) == golden::row(n).frobenius);
  CHECK_THROWS_AS(frobenius_count_from_maxprim(6, {{1, 1}, {6, 2}}), UsageError);
}

TEST_CASE("count_by_max_primitive") {
  for (auto mode : {CountMode::kFull, CountMode::kFormulaAssisted}) {
    CHECK(count_by_max_primitive(5, mode).maxprim == 4);
    CHECK(count_by_max_primitive(1, mode).maxprim == 1);
    CHECK(count_by_max_primitive(2, mode).maxprim == 0);
  }
  CHECK(count_by_max_primitive(24, CountMode::kFormulaAssisted).maxprim == 3530);
  CHECK(count_by_max_primitive(35, CountMode::kFormulaAssisted).maxprim == 292066);

  for (Value n = 1; n <= 24; ++n) {
    CAPTURE(n);
    const auto full = count_by_max_primitive(n, CountMode::kFull);
    const auto assisted = count_by_max_primitive(n, CountMode::kFormulaAssisted);
    CHECK(full.maxprim == assisted.maxprim);
    CHECK(full.by_depth.size() == assisted.by_depth.size());
    for (const auto& [k, c] : full.by_depth) CHECK(assisted.by_depth.at(k).maxprim == c.maxprim);
    Count sum = 0;
    for (const auto& kv : full.by_depth) sum += kv.second.maxprim;
    CHECK(sum == full.maxprim);
  }
}

TEST_CASE("count_range derives N_n") {
  CountOptions opt;
  const auto rows = count_range(1, 12, opt);
  for (const auto& r : rows) {
    CHECK(r.maxprim == golden::row(r.n).maxprim);
    CHECK(r.frobenius == golden::row(r.n).frobenius);
    // refinement N_n(k) = sum over d | n of A_d(k)
    Count sum = 0;
    for (const auto& kv : r.by_depth) sum += kv.second.frobenius.value_or(0);
    CHECK(sum == golden::row(r.n).frobenius);
  }
  // divisor 6 of 12 is outside the range and computed on demand
  CHECK(count_range(12, 12, opt).front().frobenius == 40);

  CountOptions seeded;
  seeded.seeded = table_maxprim(62);
  const auto big = count_range(61, 62, seeded);
  CHECK(big[0].frobenius == 2640706083);
  CHECK(big[1].frobenius == 2606766903);
  CHECK(big[0].by_depth.empty());

  CHECK_THROWS_AS(count_range(3, 2, opt), UsageError);
}

TEST_CASE("frobenius_semigroups_oracle") {
  const auto f1 = frobenius_semigroups_oracle(1);
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].minimal_generators() == GeneratorSet{2, 3});
  CHECK(frobenius_semigroups_oracle(4).size() == 2);
  CHECK(frobenius_semigroups_oracle(6).size() == 4);
  for (Value n = 1; n <= 14; ++n) CHECK(frobenius_semigroups_oracle(n).size() ==
                                        static_cast<std::size_t>(golden::row(n).frobenius));
  for (const auto& s : frobenius_semigroups_oracle(9)) CHECK(s.invariants().frobenius == 9);
  CHECK(frobenius_semigroups_oracle(4, 2).size() == 1);
  CHECK_THROWS_AS(frobenius_semigroups_oracle(15), UsageError);
  CHECK_THROWS_AS(frobenius_semigroups_oracle(0), UsageError);
}

TEST_CASE("psi_map") {
  // {0,3} u [5,inf) = <3,5,7>
  CHECK(psi_map(NumericalSemigroup({3, 5, 7})).minimal_generators() == GeneratorSet{3, 4});
  CHECK(psi_map(NumericalSemigroup({5, 6, 7, 8, 9})).minimal_generators() == GeneratorSet{1});
  // {0,4,5} u [7,inf)
  const NumericalSemigroup s({4, 5, 7});
  REQUIRE(s.invariants().frobenius == 6);
  const auto image = psi_map(s);
  CHECK(image.minimal_generators() == GeneratorSet{4, 5, 6});
  CHECK(image.invariants().primitive_depth == 2);
  CHECK(s.invariants().depth == 2);
  CHECK_THROWS_AS(psi_map(NumericalSemigroup({1})), UsageError);
}

TEST_CASE("divisor-sum identity for depth-refined counts") {
  for (Value n = 1; n <= 14; ++n) {
    const auto expected = maxprim_by_depth_over_divisors(n);
    std::map<Value, Count> observed;
    for (const auto& s : frobenius_semigroups_oracle(n)) ++observed[s.invariants().depth];
    CAPTURE(n);
    CHECK(observed == expected);
    for (const auto& [k, count] : observed)
      CHECK(frobenius_semigroups_oracle(n, k).size() == static_cast<std::size_t>(count));

    std::map<Value, Count> a;
    for (Value d : divisors(n)) a[d] = enumerate_all(d).count;
    CHECK(frobenius_count_from_maxprim(n, a) == static_cast<Count>(frobenius_semigroups_oracle(n).size()));
  }
}

TEST_CASE("psi is a bijection onto the divisor union") {
  for (Value n = 1; n <= 12; ++n) {
    std::map<Value, std::set<GeneratorSet>> target;
    for (Value d : divisors(n))
      for (const auto& g : enumerate_all(d).semigroups) target[(g.max() + g.min() - 1) / g.min()].insert(g);
    std::map<Value, std::set<GeneratorSet>> image;
    std::size_t mapped = 0;
    for (const auto& s : frobenius_semigroups_oracle(n)) {
      const auto inv = s.invariants();
      const auto t = psi_map(s);
      CHECK(n % t.minimal_generators().max() == 0);
      CHECK(t.invariants().primitive_depth == inv.depth);
      image[inv.depth].insert(t.minimal_generators());
      ++mapped;
    }
    CAPTURE(n);
    std::size_t distinct = 0;
    for (const auto& kv : image) distinct += kv.second.size();
    CHECK(distinct == mapped);
    CHECK(image == target);
  }
}
