#include "maxprim/wilf.hpp"

#include <algorithm>

#include "maxprim/parallel.hpp"

namespace maxprim {

namespace {

// Conditions that need only the generators.
struct GeneratorCases {
  bool e_at_most_3;
  bool e_at_least_m_over_3;
  bool m_at_most_19;
  bool many_low_primitives;
  bool arithmetic_progression;

  [[nodiscard]] bool any() const {
    return e_at_most_3 || e_at_least_m_over_3 || m_at_most_19 || many_low_primitives ||
           arithmetic_progression;
  }
};

GeneratorCases generator_cases(std::span<const Value> minimal) {
  const Value m = minimal.front();
  const auto e = static_cast<Value>(minimal.size());
  Value low = 0;
  for (Value x : minimal)
    if (x > m && x < 2 * m) ++low;
  bool progression = true;
  for (std::size_t i = 2; i < minimal.size(); ++i)
    if (minimal[i] - minimal[i - 1] != minimal[1] - minimal[0]) progression = false;
  return {e <= 3, 3 * e >= m, m <= 19, low * low >= 3 * m, progression};
}

// Keeps the `limit` smallest sets seen.
void keep_smallest(std::vector<GeneratorSet>& sample, GeneratorSet g, std::size_t limit) {
  if (limit == 0) return;
  if (sample.size() == limit && !(g < sample.back())) return;
  sample.insert(std::upper_bound(sample.begin(), sample.end(), g), std::move(g));
  if (sample.size() > limit) sample.pop_back();
}

}  // namespace

bool wilf_holds(const NumericalSemigroup& s) { return s.invariants().wilf_holds; }

KnownCaseVector classify_known_cases(std::span<const Value> minimal, const SemigroupInvariants& inv) {
  const GeneratorCases gc = generator_cases(minimal);
  KnownCaseVector k;
  k.e_at_most_3 = gc.e_at_most_3;
  k.c_at_most_3m = inv.conductor <= 3 * inv.multiplicity;
  k.e_at_least_m_over_3 = gc.e_at_least_m_over_3;
  k.left_at_most_12 = inv.left_count <= 12;
  k.m_at_most_19 = gc.m_at_most_19;
  k.many_low_primitives = gc.many_low_primitives;
  k.genus_at_most_100 = inv.genus <= 100;
  k.arithmetic_progression = gc.arithmetic_progression;
  return k;
}

KnownCaseVector classify_known_cases(const NumericalSemigroup& s) {
  return classify_known_cases(s.minimal_generators().elements(), s.invariants());
}

WilfReport verify_wilf(Value max_primitive, const WilfOptions& opt) {
  if (max_primitive < 1) throw UsageError("maximum primitive must be positive");
  std::vector<WorkUnit> units;
  if (opt.multiplicity) {
    if (*opt.multiplicity == max_primitive && max_primitive == 1)
      units.push_back({WorkUnit::Kind::kTrivial, 1, 1});
    else
      units = tree_work_units(max_primitive, *opt.multiplicity);
  } else if (max_primitive == 1) {
    units.push_back({WorkUnit::Kind::kTrivial, 1, 1});
  } else {
    for (Value m = 2; m < max_primitive; ++m) {
      auto u = tree_work_units(max_primitive, m);
      units.insert(units.end(), u.begin(), u.end());
    }
  }

  auto partials = parallel_map<WilfReport>(units.size(), opt.jobs, [&](std::size_t i) {
    WilfReport part;
    const auto& u = units[i];
    const Value len = opt.len > 0 ? opt.len : default_len(u.max_primitive, u.multiplicity);
    VisitFn visit = [&](std::span<const Value> gens) {
      if (!opt.full_check && generator_cases(gens).any()) return;
      const SemigroupInvariants inv = invariants_from_minimal(gens);
      const bool novel = !classify_known_cases(gens, inv).any();
      if (!opt.full_check && !novel) return;
      if (!inv.wilf_holds)
        part.violations.push_back(GeneratorSet::from_sorted({gens.begin(), gens.end()}));
      if (novel) {
        ++part.novel_count;
        keep_smallest(part.sample_novel, GeneratorSet::from_sorted({gens.begin(), gens.end()}),
                      opt.novel_sample_limit);
      }
    };
    part.total_checked = run_work_unit(u, len, visit);
    return part;
  });

  WilfReport report;
  report.max_primitive = max_primitive;
  for (auto& p : partials) {
    report.total_checked += p.total_checked;
    report.novel_count += p.novel_count;
    std::move(p.violations.begin(), p.violations.end(), std::back_inserter(report.violations));
    for (auto& g : p.sample_novel) keep_smallest(report.sample_novel, std::move(g), opt.novel_sample_limit);
  }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

std::vector<WilfReport> verify_wilf_range(Value from, Value to, const WilfOptions& opt) {
  if (from < 1 || from > to) throw UsageError("invalid range");
  std::vector<WilfReport> out;
  for (Value n = from; n <= to; ++n) out.push_back(verify_wilf(n, opt));
  return out;
}

}  // namespace maxprim
