#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsim/scalar.hpp"

namespace wsim {

using Matrix = std::vector<std::vector<Scalar>>;

/// A finite semimetric space: labelled points and an exact (or toleranced)
/// distance matrix. Immutable; copies share storage.
class Space {
 public:
  /// Validates the semimetric axioms and converts every entry to `backend`.
  /// Throws NotSemimetricError, or Error{DuplicateLabel | ShapeMismatch}.
  static Space create(std::vector<std::string> labels, const Matrix& matrix,
                      const Backend& backend = Backend::rational());

  std::size_t size() const { return data_->labels.size(); }
  const std::string& label(std::size_t i) const { return data_->labels[i]; }
  std::span<const std::string> labels() const { return data_->labels; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_->entries[i * size() + j]; }
  const Backend& backend() const { return data_->backend; }

  std::optional<std::size_t> index_of(const std::string& label) const;
  /// Point indices ordered by label (lexicographic).
  const std::vector<std::size_t>& sorted_order() const { return data_->sorted_order; }

  Matrix matrix() const;

  /// Same labels in the same order and bitwise-identical entries.
  friend bool operator==(const Space& a, const Space& b);

 private:
  struct Data {
    std::vector<std::string> labels;
    std::vector<Scalar> entries;
    Backend backend;
    std::vector<std::size_t> sorted_order;
  };
  explicit Space(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Sorted distinct distances of a space, 0 first.
struct DistanceSet {
  std::vector<Scalar> values;

  std::size_t size() const { return values.size(); }
  /// Index of `value` (tolerance-aware), or nullopt.
  std::optional<std::size_t> find(const Scalar& value) const;
};

/// Each matrix entry replaced by its index in the DistanceSet.
struct RankMatrix {
  std::size_t n = 0;
  std::vector<std::uint32_t> ranks;

  std::uint32_t at(std::size_t i, std::size_t j) const { return ranks[i * n + j]; }
  bool operator==(const RankMatrix&) const = default;
};

/// Distance set and rank matrix computed together.
struct RankStructure {
  DistanceSet distances;
  RankMatrix ranks;
};

}  // namespace wsim
