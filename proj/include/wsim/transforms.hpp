#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "wsim/core.hpp"

namespace wsim {

/// Finite function f: A -> R+, entries sorted by argument.
class FunctionTable {
 public:
  FunctionTable() = default;

  /// Throws EmptyDomain for no entries, NotStrictlyIncreasing for unsorted or
  /// repeated arguments, NonPositiveValue for negative arguments or values.
  static FunctionTable from_entries(std::vector<std::pair<Scalar, Scalar>> entries);

  /// t -> c·t on the given domain.
  static FunctionTable linear(const std::vector<Scalar>& domain, const Scalar& slope);
  /// t -> t^p on the given domain; exact where the power is rational.
  static FunctionTable power(const std::vector<Scalar>& domain, const Rational& exponent,
                             double epsilon = kDefaultEpsilon);

  const std::vector<std::pair<Scalar, Scalar>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::optional<Scalar> operator()(const Scalar& a) const;

 private:
  std::vector<std::pair<Scalar, Scalar>> entries_;
};

/// f(x) > Σ f(x_i) although x <= Σ x_i.
struct SubadditivityViolation {
  Scalar x;
  std::vector<Scalar> multiset;  // ascending
  Scalar lhs;
  Scalar rhs;
};

/// Generalized subadditivity: f(x) <= Σ f(x_i) whenever x <= Σ x_i, over all
/// x and nonempty finite multisets in the domain. The reported violation is at
/// the smallest failing x, with a cheapest covering multiset.
Verdict<SubadditivityViolation> check_generalized_subadditivity(const FunctionTable& f);

/// Increasing subadditive extension Ψ(x) = min{Σ f(a_i) : a_i ∈ A\{0}, Σ a_i >= x}, Ψ(0) = 0.
class SubadditiveHull {
 public:
  const FunctionTable& base() const { return base_; }
  const std::vector<std::pair<Scalar, Scalar>>& positive_descending() const { return positive_desc_; }
  const Scalar& best_ratio() const { return best_ratio_; }

 private:
  friend SubadditiveHull hull(const FunctionTable& f);

  FunctionTable base_;
  std::vector<std::pair<Scalar, Scalar>> positive_desc_;  // positive arguments, descending
  Scalar best_ratio_;                                      // min f(a)/a over positive a
};

/// Throws NoPositiveElement, NonzeroAtZero, or NonPositiveValue.
SubadditiveHull hull(const FunctionTable& f);

/// Cheapest covering multiset and its cost.
struct Cover {
  Scalar cost;
  std::vector<Scalar> parts;  // ascending
};

Scalar hull_eval(const SubadditiveHull& h, const Scalar& x);
Cover hull_cover(const SubadditiveHull& h, const Scalar& x);

/// Why a table fails to be metric preserving.
struct MetricPreservingFailure {
  enum class Reason { NonzeroAtZero, NotPositive, NotIncreasing, NotSubadditive };
  Reason reason;
  Scalar at;
  std::optional<SubadditivityViolation> violation;
};

Verdict<MetricPreservingFailure> is_metric_preserving(const FunctionTable& f);

/// Entrywise f∘d. Throws DomainGap, NotPositiveDefinite, NotStrictlyIncreasing.
Space apply_function(const Space& space, const FunctionTable& f);

/// Entrywise d^p. Exact when every power is rational, float backend otherwise.
/// Throws NonpositiveExponent.
Space snowflake(const Space& space, const Rational& p, double epsilon = kDefaultEpsilon);

}  // namespace wsim
