#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxprim {

using Value = std::int64_t;
using Count = std::int64_t;

/// Raised for calls that violate an operation's preconditions.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a generating set does not generate a cofinite monoid.
class NotASemigroupError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Strictly increasing, nonempty set of positive integers.
///
/// Construction sorts and deduplicates; zero, negative values and the
/// empty set are rejected with UsageError.
class GeneratorSet {
 public:
  GeneratorSet(std::initializer_list<Value> values);
  explicit GeneratorSet(std::vector<Value> values);
  explicit GeneratorSet(std::span<const Value> values);

  /// Wraps values that are already strictly increasing and positive.
  static GeneratorSet from_sorted(std::vector<Value> values);

  [[nodiscard]] std::span<const Value> elements() const { return elements_; }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] Value min() const { return elements_.front(); }
  [[nodiscard]] Value max() const { return elements_.back(); }
  [[nodiscard]] bool contains(Value v) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  Value operator[](std::size_t i) const { return elements_[i]; }

  /// "<a,b,c>" notation.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
  friend auto operator<=>(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  struct Trusted {};
  GeneratorSet(Trusted, std::vector<Value> values) : elements_(std::move(values)) {}
  void normalize();

  std::vector<Value> elements_;
};

}  // namespace maxprim
