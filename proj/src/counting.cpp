#include "maxprim/counting.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "maxprim/parallel.hpp"

namespace maxprim {

namespace {

Value ceil_div(Value a, Value b) { return (a + b - 1) / b; }

Count lookup(const std::map<Value, Count>& values, Value d) {
  auto it = values.find(d);
  if (it == values.end()) throw UsageError("missing value for divisor " + std::to_string(d));
  return it->second;
}

}  // namespace

int moebius(Value n) {
  if (n < 1) throw UsageError("moebius is defined for n >= 1");
  int sign = 1;
  for (Value p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<Value> divisors(Value n) {
  if (n < 1) throw UsageError("divisors of a nonpositive integer");
  std::vector<Value> small;
  std::vector<Value> large;
  for (Value d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Count depth2_count(Value n) {
  if (n <= 2) throw UsageError("depth2_count needs n > 2");
  if (n > 125) throw UsageError("depth2_count overflows 64 bits beyond n = 125");
  Count total = 0;
  for (Value d : divisors(n)) total += moebius(n / d) * ((Count{1} << ((d - 1) / 2)) - 1);
  return total;
}

Count depth_refined_inversion(Value n, Value depth, const std::map<Value, Count>& frobenius_counts) {
  if (depth < 1) throw UsageError("depth must be positive");
  Count total = 0;
  for (Value d : divisors(n)) total += moebius(n / d) * lookup(frobenius_counts, d);
  return total;
}

Count frobenius_count_from_maxprim(Value n, const std::map<Value, Count>& maxprim_counts) {
  Count total = 0;
  for (Value d : divisors(n)) total += lookup(maxprim_counts, d);
  return total;
}

CountRecord count_by_max_primitive(Value n, CountMode mode, const TreeOptions& opt) {
  if (n < 1) throw UsageError("maximum primitive must be positive");
  CountRecord rec;
  rec.n = n;
  rec.by_depth_known = true;
  if (n == 1) {
    rec.maxprim = 1;
    rec.by_depth[1].maxprim = 1;
    return rec;
  }
  const bool formula = mode == CountMode::kFormulaAssisted && n > 2;
  const Value last_m = formula ? n / 2 : n - 1;
  std::vector<WorkUnit> units;
  for (Value m = 2; m <= last_m; ++m) {
    auto u = tree_work_units(n, m);
    units.insert(units.end(), u.begin(), u.end());
  }
  const auto counts = parallel_map<Count>(units.size(), opt.jobs, [&](std::size_t i) {
    const auto& u = units[i];
    const Value len = opt.len > 0 ? opt.len : default_len(u.max_primitive, u.multiplicity);
    return run_work_unit(u, len, {});
  });
  for (std::size_t i = 0; i < units.size(); ++i) {
    // primitive depth is fixed by (M, m)
    rec.by_depth[ceil_div(n, units[i].multiplicity)].maxprim += counts[i];
    rec.maxprim += counts[i];
  }
  if (formula) {
    const Count d2 = depth2_count(n);
    rec.by_depth[2].maxprim += d2;
    rec.maxprim += d2;
  }
  std::erase_if(rec.by_depth, [](const auto& kv) { return kv.second.maxprim == 0; });
  return rec;
}

std::vector<CountRecord> count_range(Value from, Value to, const CountOptions& opt) {
  if (from < 1 || from > to) throw UsageError("invalid range");
  std::map<Value, CountRecord> cache;
  for (const auto& [n, a] : opt.seeded) {
    if (a < 0) throw UsageError("negative seeded count");
    cache[n] = CountRecord{n, a, std::nullopt, {}, false};
  }
  TreeOptions tree;
  tree.len = opt.len;
  tree.jobs = opt.jobs;
  tree.collect = false;
  auto get = [&](Value n) -> const CountRecord& {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (opt.on_progress) opt.on_progress(n);
    return cache.emplace(n, count_by_max_primitive(n, opt.mode, tree)).first->second;
  };

  std::vector<CountRecord> out;
  for (Value n = from; n <= to; ++n) {
    CountRecord rec = get(n);
    std::map<Value, Count> a_values;
    bool refined = rec.by_depth_known;
    std::set<Value> depths;
    for (Value d : divisors(n)) {
      const auto& r = get(d);
      a_values[d] = r.maxprim;
      refined = refined && r.by_depth_known;
      for (const auto& kv : r.by_depth) depths.insert(kv.first);
    }
    rec.frobenius = frobenius_count_from_maxprim(n, a_values);
    if (refined) {
      for (Value k : depths) {
        Count sum = 0;
        for (Value d : divisors(n)) {
          const auto& bd = get(d).by_depth;
          if (auto it = bd.find(k); it != bd.end()) sum += it->second.maxprim;
        }
        rec.by_depth[k].frobenius = sum;
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<NumericalSemigroup> frobenius_semigroups_oracle(Value n, std::optional<Value> depth,
                                                            Value cap) {
  if (n < 1) throw UsageError("Frobenius number must be positive");
  if (n > cap) throw UsageError("Frobenius oracle refuses n above " + std::to_string(cap));
  std::vector<NumericalSemigroup> out;
  const Value width = n - 1;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << width); ++subset) {
    // bit x-1 of subset <=> x in S, for 1 <= x < n
    auto member = [&](Value x) { return x > n || x == 0 || (x < n && ((subset >> (x - 1)) & 1U)); };
    bool closed = true;
    for (Value a = 1; a < n && closed; ++a) {
      if (!member(a)) continue;
      for (Value b = a; a + b <= n; ++b)
        if (member(b) && !member(a + b)) {
          closed = false;
          break;
        }
    }
    if (!closed) continue;
    std::vector<Value> gens;
    Value multiplicity = n + 1;
    for (Value x = 1; x < n; ++x)
      if (member(x)) {
        gens.push_back(x);
        multiplicity = std::min(multiplicity, x);
      }
    if (depth && ceil_div(n + 1, multiplicity) != *depth) continue;
    for (Value x = n + 1; x <= 2 * n + 1; ++x) gens.push_back(x);
    out.emplace_back(GeneratorSet(std::move(gens)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

NumericalSemigroup psi_map(const NumericalSemigroup& s) {
  const auto inv = s.invariants();
  if (inv.frobenius < 0) throw UsageError("psi is undefined for the semigroup N");
  const MembershipTable table = membership_table(s.minimal_generators(), inv.frobenius);
  std::vector<Value> lifted;
  for (Value x = 1; x < inv.frobenius; ++x)
    if (table.contains(x)) lifted.push_back(x);
  lifted.push_back(inv.frobenius);
  const Value g = gcd_of_set(lifted);
  for (Value& x : lifted) x /= g;
  return NumericalSemigroup(GeneratorSet(std::move(lifted)));
}

}  // namespace maxprim
