#include "maxprim/generator_set.hpp"

#include <algorithm>

namespace maxprim {

GeneratorSet::GeneratorSet(std::initializer_list<Value> values) : elements_(values) {
  normalize();
}

GeneratorSet::GeneratorSet(std::vector<Value> values) : elements_(std::move(values)) {
  normalize();
}

GeneratorSet::GeneratorSet(std::span<const Value> values)
    : elements_(values.begin(), values.end()) {
  normalize();
}

GeneratorSet GeneratorSet::from_sorted(std::vector<Value> values) {
  return GeneratorSet(Trusted{}, std::move(values));
}

void GeneratorSet::normalize() {
  if (elements_.empty()) throw UsageError("generator set must be nonempty");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.front() < 1) throw UsageError("generators must be positive integers");
}

bool GeneratorSet::contains(Value v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

std::string GeneratorSet::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements_[i]);
  }
  out += '>';
  return out;
}

}  // namespace maxprim
