#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wsim/scalar.hpp"
#include "wsim/scaling.hpp"
#include "wsim/space.hpp"

namespace wsim {

/// Outcome of a predicate: holds iff no witness was found.
template <typename Witness>
struct Verdict {
  std::optional<Witness> witness;

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w) { return Verdict{std::move(w)}; }

  bool holds() const { return !witness.has_value(); }
  explicit operator bool() const { return holds(); }
};

/// Triple (x, z, y) whose distances violate d(x,y) <= d(x,z) (+|max) d(z,y).
struct TripleWitness {
  std::size_t x;
  std::size_t z;
  std::size_t y;
  bool operator==(const TripleWitness&) const = default;
};

/// Quadruple (x, y, z, w) where d(x,y) <= d(z,w) and rho(x,y) <= rho(z,w)
/// disagree.
struct QuadrupleWitness {
  std::size_t x;
  std::size_t y;
  std::size_t z;
  std::size_t w;
  bool operator==(const QuadrupleWitness&) const = default;
};

struct PairWitness {
  std::size_t x;
  std::size_t y;
  bool operator==(const PairWitness&) const = default;
};

Space new_space(std::vector<std::string> labels, const Matrix& matrix,
                const Backend& backend = Backend::rational());

Verdict<TripleWitness> is_metric(const Space& space);
Verdict<TripleWitness> is_ultrametric(const Space& space);

/// Throws Error{AmbiguousRanking} in the float backend when tolerance
/// grouping is order dependent.
DistanceSet distance_set(const Space& space);
RankMatrix rank_matrix(const Space& space);
RankStructure rank_structure(const Space& space);

/// Space on the point set `values` with d(x,y) = max{x,y} for x != y.
/// Labels are the values' string forms.
Space max_ultrametric_from_set(const std::vector<Scalar>& values);

/// The unique strictly increasing bijection from `from` onto `to`.
ScalingFunction increasing_bijection(const DistanceSet& from, const DistanceSet& to);

/// Whether d and rho induce the same weak order on point pairs. Brute force.
Verdict<QuadrupleWitness> coincreasing(const Space& d, const Space& rho);

}  // namespace wsim
