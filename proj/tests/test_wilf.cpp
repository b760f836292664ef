#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "maxprim/wilf.hpp"
#include "reference_counts.hpp"

using namespace maxprim;

TEST_CASE("wilf_holds") {
  CHECK(wilf_holds(NumericalSemigroup({3, 5})));
  CHECK(wilf_holds(NumericalSemigroup({1})));
  const NumericalSemigroup a({20, 21, 22, 24});
  CHECK(wilf_holds(a));
  const auto inv = a.invariants();
  CHECK(inv.conductor == 120);
  CHECK(inv.left_count == 60);
  CHECK(wilf_holds(NumericalSemigroup({20, 22, 23, 24})));
  CHECK(NumericalSemigroup({20, 22, 23, 24}).invariants().conductor == 122);
}

TEST_CASE("classify_known_cases") {
  CHECK(classify_known_cases(NumericalSemigroup({2, 3})).e_at_most_3);
  CHECK(classify_known_cases(NumericalSemigroup({20, 21, 22, 23})).arithmetic_progression);
  CHECK_FALSE(classify_known_cases(NumericalSemigroup({20, 21, 22, 24})).arithmetic_progression);
  CHECK(classify_known_cases(NumericalSemigroup({7, 9})).arithmetic_progression);

  const NumericalSemigroup s({50, 52, 53, 60});
  const auto inv = s.invariants();
  CHECK(inv.frobenius >= 249);
  CHECK(inv.genus > 100);
  CHECK(inv.conductor >= 150);
  CHECK(inv.embedding_dimension == 4);
  CHECK(3 * inv.embedding_dimension < inv.multiplicity);
  CHECK(classify_known_cases(s) == KnownCaseVector{});
  CHECK_FALSE(classify_known_cases(s).any());
  CHECK(wilf_holds(s));

  // 3 primitives in (20, 40): 9 < 60; 8 of them for m = 20: 64 >= 60
  CHECK_FALSE(classify_known_cases(NumericalSemigroup({20, 21, 22, 24})).many_low_primitives);
  const auto many = classify_known_cases(NumericalSemigroup({20, 21, 22, 23, 25, 26, 27, 29, 31}));
  CHECK(many.many_low_primitives);
}

TEST_CASE("verify_wilf") {
  const auto r5 = verify_wilf(5);
  CHECK(r5.total_checked == 4);
  CHECK(r5.novel_count == 0);
  CHECK(r5.violations.empty());
  for (const auto& r : verify_wilf_range(1, 24)) {
    CHECK(r.violations.empty());
    CHECK(r.total_checked == golden::row(r.max_primitive).maxprim);
    CHECK(r.novel_count == 0);
  }
  CHECK_THROWS_AS(verify_wilf_range(4, 3), UsageError);
  CHECK_THROWS_AS(verify_wilf(0), UsageError);
}

TEST_CASE("the M = 24 witnesses are covered only by the genus bound") {
  for (GeneratorSet g : {GeneratorSet{20, 21, 22, 24}, GeneratorSet{20, 22, 23, 24}}) {
    KnownCaseVector expected;
    expected.genus_at_most_100 = true;
    CHECK(classify_known_cases(NumericalSemigroup(g)) == expected);
  }
  WilfOptions opt;
  opt.novel_sample_limit = 5;
  CHECK(verify_wilf(24, opt).novel_count == 0);
}

TEST_CASE("short-circuits agree with the full check") {
  WilfOptions full;
  full.full_check = true;
  full.novel_sample_limit = 1000;
  WilfOptions quick;
  quick.novel_sample_limit = 1000;
  for (Value n = 1; n <= 26; ++n) {
    const auto a = verify_wilf(n, full);
    const auto b = verify_wilf(n, quick);
    CHECK(a == b);
  }
  // every known case is exactly checked against the inequality
  for (const auto& g : enumerate_all(26).semigroups) {
    const NumericalSemigroup s(g);
    if (classify_known_cases(s).any()) CHECK(wilf_holds(s));
  }
}

TEST_CASE("novel family with primitives in [50, 60]") {
  Count tried = 0;
  for (std::uint32_t mask = 0; mask < (1U << 9); ++mask) {
    std::vector<Value> a{50};
    for (Value i = 0; i < 9; ++i)
      if ((mask >> i) & 1U) a.push_back(51 + i);
    a.push_back(60);
    if (a.size() < 4 || std::reduce(a.begin(), a.end(), Value{0}, [](Value x, Value y) { return std::gcd(x, y); }) != 1)
      continue;
    bool progression = true;
    for (std::size_t i = 2; i < a.size(); ++i) progression = progression && a[i] - a[i - 1] == a[1] - a[0];
    if (progression) continue;
    const NumericalSemigroup s{GeneratorSet(a)};
    CAPTURE(s.minimal_generators().to_string());
    CHECK(s.minimal_generators().size() == a.size());
    CHECK_FALSE(classify_known_cases(s).any());
    CHECK(wilf_holds(s));
    ++tried;
  }
  CHECK(tried > 400);

  WilfOptions opt;
  opt.multiplicity = 50;
  opt.novel_sample_limit = 1000;
  const auto r = verify_wilf(60, opt);
  CHECK(r.novel_count == tried);
  CHECK(std::binary_search(r.sample_novel.begin(), r.sample_novel.end(), GeneratorSet{50, 52, 53, 60}));
}

TEST_CASE("reports do not depend on the worker count") {
  WilfOptions one;
  one.novel_sample_limit = 3;
  WilfOptions four = one;
  four.jobs = 4;
  CHECK(verify_wilf(28, one) == verify_wilf(28, four));
  one.full_check = four.full_check = true;
  CHECK(verify_wilf(27, one) == verify_wilf(27, four));
}
