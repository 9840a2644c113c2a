#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wsim/core.hpp"

namespace wsim {

inline constexpr std::size_t kDefaultEnumerationLimit = 10'000;

/// Isometry, Similarity(ratio) with d_Y(Φx,Φy) = ratio * d_X(x,y), or Generic.
struct Classification {
  enum class Kind { Isometry, Similarity, Generic };

  Kind kind = Kind::Generic;
  std::optional<Scalar> ratio;

  static Classification isometry() { return {Kind::Isometry, Scalar(1)}; }
  static Classification similarity(Scalar r) { return {Kind::Similarity, std::move(r)}; }
  static Classification generic() { return {Kind::Generic, std::nullopt}; }

  bool operator==(const Classification& other) const;
};

std::string to_string(const Classification& c);

/// Point bijection source -> target, by index.
using PointMap = std::vector<std::size_t>;

/// A verified weak similarity Φ: source -> target with its scaling function
/// f: D(target) -> D(source), satisfying d_source(x,y) = f(d_target(Φx,Φy)).
class WeakSimilarity {
 public:
  /// Verifies the realization and classifies it; throws
  /// Error{NotWeakSimilarity} when d_X = f∘d_Y∘(Φ×Φ) fails.
  static WeakSimilarity make(Space source, Space target, PointMap map, ScalingFunction scaling);

  const Space& source() const { return source_; }
  const Space& target() const { return target_; }
  const PointMap& map() const { return map_; }
  const ScalingFunction& scaling() const { return scaling_; }
  const Classification& classification() const { return classification_; }

  /// Image label of a source label.
  const std::string& image(const std::string& label) const;

 private:
  WeakSimilarity(Space source, Space target, PointMap map, ScalingFunction scaling, Classification c)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(map)),
        scaling_(std::move(scaling)),
        classification_(std::move(c)) {}

  Space source_;
  Space target_;
  PointMap map_;
  ScalingFunction scaling_;
  Classification classification_;
};

/// Label-keyed map into a PointMap; throws LabelMismatch / NotBijective.
PointMap point_map_from_labels(const Space& source, const Space& target,
                               const std::vector<std::pair<std::string, std::string>>& pairs);

/// Checks d_X(x,y) = f(d_Y(Φx,Φy)) at every pair. Throws DomainMismatch when
/// f's domain is not D(Y) or its range is not D(X), NotBijective for a bad map.
Verdict<PairWitness> verify(const Space& x, const Space& y, const PointMap& map, const ScalingFunction& scaling);

/// Canonical-first weak similarity: smallest map in lexicographic order of
/// images (target labels sorted) over source labels sorted.
std::optional<WeakSimilarity> find_weak_similarity(const Space& x, const Space& y);

/// All weak similarities in canonical order, truncated at `limit`.
std::vector<WeakSimilarity> enumerate_weak_similarities(const Space& x, const Space& y,
                                                        std::optional<std::size_t> limit = kDefaultEnumerationLimit);

Classification classify(const ScalingFunction& scaling);
Classification classify(const WeakSimilarity& ws);

WeakSimilarity invert(const WeakSimilarity& ws);

/// X -> Z from X -> Y and Y -> Z; the scaling is f∘g. Throws SpaceMismatch.
WeakSimilarity compose(const WeakSimilarity& first, const WeakSimilarity& second);

/// ρ_X(x1,x2) := d_Y(Φx1, Φx2) on X's labels.
Space pullback(const Space& x, const Space& y, const PointMap& map);

/// F: X -> X with phi2 = phi1∘F, i.e. F = phi1^-1 ∘ phi2.
WeakSimilarity factorize(const WeakSimilarity& phi1, const WeakSimilarity& phi2);

/// Identity weak similarity of a space onto itself.
WeakSimilarity identity_similarity(const Space& space);

}  // namespace wsim
