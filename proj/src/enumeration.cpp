#include "maxprim/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <string>

#include "maxprim/parallel.hpp"
#include "maxprim/semigroup.hpp"

namespace maxprim {

namespace {

// Bit x set <=> x belongs to the set; only [0, M] is ever populated.
using Mask = std::uint64_t;

Mask window(Value bound) { return bound >= 63 ? ~Mask{0} : (Mask{1} << (bound + 1)) - 1; }

bool has(Mask s, Value x) { return (s >> x) & 1U; }

// Closure of s under adding g, restricted to `lim`. s must contain 0.
Mask add_generator(Mask s, Value g, Mask lim) {
  for (Value shift = g; shift < 64; shift *= 2) s |= (s << shift) & lim;
  return s & lim;
}

Mask reflect(Mask s, Value top) {
  Mask r = 0;
  for (Mask t = s; t; t &= t - 1) {
    const Value x = std::countr_zero(t);
    if (x <= top) r |= Mask{1} << (top - x);
  }
  return r;
}

// Elements of the closure that are a sum of two nonzero elements.
Mask reducible(Mask closure, Mask lim) {
  const Mask positive = closure & ~Mask{1};
  Mask r = 0;
  for (Mask t = positive; t; t &= t - 1) r |= (positive << std::countr_zero(t)) & lim;
  return r;
}

// `lower_closure` is <P \ {M}> within [0, M]; `second` is p_{n-1}.
Mask large_primitive_candidates(Mask lower_closure, Value second, Value top) {
  const Mask lim = window(top);
  const Mask lcombs = lower_closure | (Mask{1} << top);
  const Mask interval = window(top - 1) & ~window(second);
  Mask candidates = interval & ~lcombs & ~reflect(lcombs, top);
  for (Mask t = candidates; t; t &= t - 1) {
    const Value p = std::countr_zero(t);
    if (has(add_generator(lower_closure, p, lim), top)) candidates &= ~(Mask{1} << p);
  }
  return candidates;
}

void check_range(Value max_primitive, Value multiplicity) {
  if (multiplicity < 1 || multiplicity >= max_primitive)
    throw UsageError("need 1 <= multiplicity < max primitive");
}

void check_limit(Value max_primitive) {
  if (max_primitive > kMaxPrimitiveLimit)
    throw UsageError("maximum primitive above " + std::to_string(kMaxPrimitiveLimit) +
                     " is not supported");
}

// Sorted generators under construction; M is kept separately.
class Generators {
 public:
  explicit Generators(Value top) : top_(top) {}
  void push(Value x) {
    buf_[size_++] = x;
    lower_mask_ |= Mask{1} << x;
  }
  void pop() { lower_mask_ &= ~(Mask{1} << buf_[--size_]); }
  [[nodiscard]] Mask lower_mask() const { return lower_mask_; }
  [[nodiscard]] std::size_t lower_size() const { return size_; }

  // Copies lower ∪ extra ∪ {M} in ascending order.
  std::span<const Value> merged(std::span<const Value> extra) {
    auto end = std::merge(buf_.begin(), buf_.begin() + size_, extra.begin(), extra.end(),
                          out_.begin());
    *end++ = top_;
    return {out_.begin(), end};
  }

 private:
  Value top_;
  std::size_t size_ = 0;
  Mask lower_mask_ = 0;
  std::array<Value, 64> buf_{};
  std::array<Value, 65> out_{};
};

class TreeExplorer {
 public:
  TreeExplorer(Value top, Value multiplicity, Value len, const VisitFn& visit)
      : top_(top), m_(multiplicity), len_(len), lim_(window(top)), visit_(visit), gens_(top) {}

  Count seed() {
    if (std::gcd(m_, top_) == 1) {
      gens_.push(m_);
      emit({});
      gens_.pop();
    }
    return count_;
  }

  Count branch(Value first) {
    gens_.push(m_);
    extend(add_generator(1, m_, lim_), std::gcd(m_, top_), first);
    gens_.pop();
    return count_;
  }

  Count depth_two() {
    const Value width = top_ - m_ - 1;
    std::array<Value, 64> picked{};
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << width); ++subset) {
      Value g = std::gcd(m_, top_);
      std::size_t n = 0;
      for (std::uint64_t t = subset; t; t &= t - 1) {
        const Value x = m_ + 1 + std::countr_zero(t);
        g = std::gcd(g, x);
        picked[n++] = x;
      }
      if (g != 1) continue;
      gens_.push(m_);
      emit({picked.data(), n});
      gens_.pop();
    }
    return count_;
  }

  Count complete(std::span<const Value> lower, Mask candidates) {
    Mask closure = 1;
    Value g = top_;
    for (Value x : lower) {
      gens_.push(x);
      closure = add_generator(closure, x, lim_);
      g = std::gcd(g, x);
    }
    with_given_primitives(closure, g, candidates);
    return count_;
  }

 private:
  void emit(std::span<const Value> extra) {
    ++count_;
    if (visit_) visit_(gens_.merged(extra));
  }

  // Adds r to the current generators and explores everything below.
  void extend(Mask closure, Value g, Value r) {
    gens_.push(r);
    const Mask next_closure = add_generator(closure, r, lim_);
    const Value next_gcd = std::gcd(g, r);
    if (next_gcd == 1) emit({});
    const Mask next = large_primitive_candidates(next_closure, r, top_);
    if (std::popcount(next) > len_) {
      for (Mask t = next; t; t &= t - 1) extend(next_closure, next_gcd, std::countr_zero(t));
    } else {
      with_given_primitives(next_closure, next_gcd, next);
    }
    gens_.pop();
  }

  // Residue-class products over `candidates`, one pick per class.
  void with_given_primitives(Mask closure, Value g, Mask candidates) {
    classes_.clear();
    std::array<int, 64> class_of{};
    class_of.fill(-1);
    for (Mask t = candidates; t; t &= t - 1) {
      const Value x = std::countr_zero(t);
      auto& slot = class_of[static_cast<std::size_t>(x % m_)];
      if (slot < 0) {
        slot = static_cast<int>(classes_.size());
        classes_.emplace_back();
      }
      classes_[static_cast<std::size_t>(slot)].push_back(x);
    }
    const Value given = static_cast<Value>(gens_.lower_size()) + 1;
    max_picks_ = static_cast<std::size_t>(std::max<Value>(m_ - given, 0));
    picks_.clear();
    product(0, closure, g);
  }

  void product(std::size_t index, Mask closure, Value g) {
    if (index == classes_.size()) {
      if (picks_.empty() || g != 1) return;
      Mask primitives = gens_.lower_mask() | (Mask{1} << top_);
      for (Value x : picks_) primitives |= Mask{1} << x;
      const Mask full = closure | (Mask{1} << top_);
      if (reducible(full, lim_) & primitives) return;
      sorted_picks_.assign(picks_.begin(), picks_.end());
      std::sort(sorted_picks_.begin(), sorted_picks_.end());
      emit(sorted_picks_);
      return;
    }
    product(index + 1, closure, g);
    if (picks_.size() == max_picks_) return;
    for (Value x : classes_[index]) {
      picks_.push_back(x);
      product(index + 1, add_generator(closure, x, lim_), std::gcd(g, x));
      picks_.pop_back();
    }
  }

  Value top_;
  Value m_;
  Value len_;
  Mask lim_;
  const VisitFn& visit_;
  Generators gens_;
  Count count_ = 0;
  std::vector<std::vector<Value>> classes_;
  std::vector<Value> picks_;
  std::vector<Value> sorted_picks_;
  std::size_t max_picks_ = 0;
};

bool generates_primitively(const std::vector<Value>& sorted) {
  if (gcd_of_set(sorted) != 1) return false;
  return minimal_generators(GeneratorSet::from_sorted(sorted)).size() == sorted.size();
}

EnumerationResult finish(std::vector<GeneratorSet> sets) {
  std::sort(sets.begin(), sets.end());
  EnumerationResult out;
  out.count = static_cast<Count>(sets.size());
  out.semigroups = std::move(sets);
  return out;
}

EnumerationResult run_units(const std::vector<WorkUnit>& units, const TreeOptions& opt) {
  std::mutex visit_mutex;
  struct Partial {
    Count count = 0;
    std::vector<GeneratorSet> sets;
  };
  auto partials = parallel_map<Partial>(units.size(), opt.jobs, [&](std::size_t i) {
    Partial p;
    const auto& u = units[i];
    const Value len = opt.len > 0 ? opt.len : default_len(u.max_primitive, u.multiplicity);
    VisitFn visit;
    if (opt.collect || opt.on_visit) {
      visit = [&](std::span<const Value> gens) {
        if (opt.collect) p.sets.push_back(GeneratorSet::from_sorted({gens.begin(), gens.end()}));
        if (opt.on_visit) {
          if (opt.serialize_visits && opt.jobs > 1) {
            std::lock_guard lock(visit_mutex);
            opt.on_visit(gens);
          } else {
            opt.on_visit(gens);
          }
        }
      };
    }
    p.count = run_work_unit(u, len, visit);
    return p;
  });
  EnumerationResult out;
  for (auto& p : partials) {
    out.count += p.count;
    std::move(p.sets.begin(), p.sets.end(), std::back_inserter(out.semigroups));
  }
  std::sort(out.semigroups.begin(), out.semigroups.end());
  return out;
}

}  // namespace

Value default_len(Value max_primitive, Value multiplicity) {
  return std::max<Value>(1, (14 * (max_primitive - multiplicity) + 4) / 5);
}

EnumerationResult enumerate_brute_force(Value max_primitive, Value multiplicity) {
  check_range(max_primitive, multiplicity);
  const Value lo = multiplicity + 1;
  const Value width = max_primitive - lo;
  if (width > 62) throw UsageError("range too wide for brute force");
  std::vector<GeneratorSet> sets;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << width); ++subset) {
    std::vector<Value> p{multiplicity};
    for (Value i = 0; i < width; ++i)
      if ((subset >> i) & 1U) p.push_back(lo + i);
    p.push_back(max_primitive);
    if (generates_primitively(p)) sets.push_back(GeneratorSet::from_sorted(std::move(p)));
  }
  return finish(std::move(sets));
}

EnumerationResult enumerate_naive(Value max_primitive, Value multiplicity) {
  check_range(max_primitive, multiplicity);
  const Value m = multiplicity;
  const Value top = max_primitive;
  std::vector<GeneratorSet> sets;
  if (2 * m > top) {
    const Value width = top - m - 1;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << width); ++subset) {
      std::vector<Value> p{m};
      for (Value i = 0; i < width; ++i)
        if ((subset >> i) & 1U) p.push_back(m + 1 + i);
      p.push_back(top);
      if (gcd_of_set(p) == 1) sets.push_back(GeneratorSet::from_sorted(std::move(p)));
    }
    return finish(std::move(sets));
  }
  std::vector<Value> candidates;
  for (Value x = m + 1; x < top; ++x)
    if (top % x != 0 && x % m != 0) candidates.push_back(x);
  const auto cap = static_cast<std::size_t>(
      std::min<Value>(std::max<Value>(m - 2, 0), static_cast<Value>(candidates.size())));

  std::vector<Value> chosen;
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    std::vector<Value> p{m};
    p.insert(p.end(), chosen.begin(), chosen.end());
    p.push_back(top);
    if (generates_primitively(p)) sets.push_back(GeneratorSet::from_sorted(std::move(p)));
    if (chosen.size() == cap) return;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      chosen.push_back(candidates[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  if (m >= 2) recurse(recurse, 0);
  return finish(std::move(sets));
}

std::vector<Value> possible_large_primitives(const GeneratorSet& primitives) {
  if (primitives.size() < 2) throw UsageError("need at least two primitives");
  const Value top = primitives.max();
  check_limit(top);
  Mask closure = 1;
  const Mask lim = window(top);
  for (std::size_t i = 0; i + 1 < primitives.size(); ++i)
    closure = add_generator(closure, primitives[i], lim);
  const Mask c = large_primitive_candidates(closure, primitives[primitives.size() - 2], top);
  std::vector<Value> out;
  for (Mask t = c; t; t &= t - 1) out.push_back(std::countr_zero(t));
  return out;
}

EnumerationResult semigroups_with_given_primitives(const GeneratorSet& primitives,
                                                   const VisitFn& on_visit) {
  const auto candidates = possible_large_primitives(primitives);
  Mask cand = 0;
  for (Value x : candidates) cand |= Mask{1} << x;
  std::vector<GeneratorSet> sets;
  VisitFn visit = [&](std::span<const Value> gens) {
    sets.push_back(GeneratorSet::from_sorted({gens.begin(), gens.end()}));
    if (on_visit) on_visit(gens);
  };
  const auto all = primitives.elements();
  TreeExplorer explorer(primitives.max(), primitives.min(), 1, visit);
  explorer.complete(all.first(all.size() - 1), cand);
  return finish(std::move(sets));
}

std::vector<WorkUnit> tree_work_units(Value max_primitive, Value multiplicity) {
  check_range(max_primitive, multiplicity);
  check_limit(max_primitive);
  const Value m = multiplicity;
  const Value top = max_primitive;
  // <1> is the only semigroup with multiplicity 1, and its maximum primitive is 1
  if (m == 1) return {};
  if (2 * m > top) return {{WorkUnit::Kind::kDepthTwo, top, m}};
  std::vector<WorkUnit> units{{WorkUnit::Kind::kSeed, top, m}};
  const Mask first = large_primitive_candidates(add_generator(1, m, window(top)), m, top);
  for (Mask t = first; t; t &= t - 1)
    units.push_back({WorkUnit::Kind::kBranch, top, m, std::countr_zero(t)});
  return units;
}

Count run_work_unit(const WorkUnit& unit, Value len, const VisitFn& visit) {
  if (len < 1) throw UsageError("len must be positive");
  if (unit.kind == WorkUnit::Kind::kTrivial) {
    const Value one = 1;
    if (visit) visit({&one, 1});
    return 1;
  }
  TreeExplorer explorer(unit.max_primitive, unit.multiplicity, len, visit);
  switch (unit.kind) {
    case WorkUnit::Kind::kDepthTwo:
      return explorer.depth_two();
    case WorkUnit::Kind::kSeed:
      return explorer.seed();
    case WorkUnit::Kind::kBranch:
      return explorer.branch(unit.first);
    case WorkUnit::Kind::kTrivial:
      break;
  }
  return 0;
}

EnumerationResult enumerate_tree(Value max_primitive, Value multiplicity, const TreeOptions& opt) {
  return run_units(tree_work_units(max_primitive, multiplicity), opt);
}

EnumerationResult enumerate_all(Value max_primitive, const TreeOptions& opt) {
  if (max_primitive < 1) throw UsageError("maximum primitive must be positive");
  check_limit(max_primitive);
  std::vector<WorkUnit> units;
  if (max_primitive == 1) {
    units.push_back({WorkUnit::Kind::kTrivial, 1, 1});
  } else {
    for (Value m = 1; m < max_primitive; ++m) {
      auto u = tree_work_units(max_primitive, m);
      units.insert(units.end(), u.begin(), u.end());
    }
  }
  return run_units(units, opt);
}

}  // namespace maxprim
