#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wsim/scalar.hpp"

namespace wsim {

/// Finite strictly increasing bijection between two distance sets, stored as
/// (argument, value) pairs sorted by argument. In a weak similarity X -> Y the
/// arguments come from D(Y) and the values from D(X).
class ScalingFunction {
 public:
  ScalingFunction() = default;

  /// Throws Error{NotStrictlyIncreasing} unless both coordinates strictly
  /// increase along the list.
  static ScalingFunction from_pairs(std::vector<std::pair<Scalar, Scalar>> pairs);

  const std::vector<std::pair<Scalar, Scalar>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  std::vector<Scalar> domain() const;
  std::vector<Scalar> range() const;

  /// Value at t (tolerance-aware lookup), or nullopt when t is not in the domain.
  std::optional<Scalar> operator()(const Scalar& t) const;

  ScalingFunction inverse() const;
  /// Table of this∘inner; inner's values must lie in this domain.
  ScalingFunction after(const ScalingFunction& inner) const;

  bool is_identity() const;

  /// Entrywise identity of both coordinates.
  friend bool operator==(const ScalingFunction& a, const ScalingFunction& b);

 private:
  std::vector<std::pair<Scalar, Scalar>> pairs_;
};

}  // namespace wsim
