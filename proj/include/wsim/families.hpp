#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsim/morphisms.hpp"
#include "wsim/transforms.hpp"

namespace wsim {

/// Parameters of a generated family. The sequences are the first n terms
/// (index 1..n) of the strictly decreasing positive sequences r_k and p_k.
struct FamilySpec {
  std::string name;
  std::size_t n = 0;
  std::vector<Rational> r;
  std::vector<Rational> p;
  std::string r_formula;
  std::string p_formula;
  std::string r_limit;  // documentation only
  std::string p_limit;  // documentation only
  std::uint64_t seed = 0;

  /// r_k = 1/k, p_k = 1 + 1/k, k = 1..n.
  static FamilySpec defaults(std::string name, std::size_t n);
};

struct GeneratedPair {
  Space x;
  Space y;
  WeakSimilarity realization;  // x -> y
};

/// Points x_0..x_n and y_0..y_n with d_X(x_i,x_j) = r_max(i,j) when one
/// index is 0 and r_min(i,j) otherwise (p for Y). Realization Φ(x_i) = y_i,
/// f(p_i) = r_i. Throws BadSequence.
GeneratedPair example_2_6(const FamilySpec& spec);

/// Points x_i^1, x_i^2 (i = 1..n): d = p_i within the i-th pair, p_1 across
/// pairs; Y uses r. Realization Φ(x_i^j) = y_i^j, f(r_i) = p_i.
GeneratedPair example_2_6_star(const FamilySpec& spec);

/// Points t_i = i·length/(n-1) on a segment with d = |t_i - t_j|.
Space segment_grid(std::size_t n, const Rational& length);

/// snowflake(segment_grid(n, 1), p) for p in (0, 1].
Space snowflake_segment(std::size_t n, const Rational& p, double epsilon = kDefaultEpsilon);

/// Symmetric positive draws closed under shortest paths.
Space random_metric(std::size_t n, std::uint64_t seed);
/// Heights of a random merge hierarchy.
Space random_ultrametric(std::size_t n, std::uint64_t seed);
/// Symmetric positive draws from a small value set; usually not a metric.
Space random_semimetric(std::size_t n, std::uint64_t seed);

struct PartnerMode {
  enum class Kind { Scaled, Relabeled, Distorted };
  Kind kind = Kind::Relabeled;
  Rational ratio = 1;
  std::uint64_t seed = 0;

  static PartnerMode scaled(Rational r) { return {Kind::Scaled, std::move(r), 0}; }
  static PartnerMode relabeled(std::uint64_t seed) { return {Kind::Relabeled, 1, seed}; }
  static PartnerMode distorted(std::uint64_t seed) { return {Kind::Distorted, 1, seed}; }
};

struct Partner {
  Space space;
  WeakSimilarity realization;  // original -> partner
};

/// A weakly equivalent partner of `space` together with the generating realization.
Partner derive_partner(const Space& space, const PartnerMode& mode);

/// Deterministic permutation of 0..n-1 for a seed.
std::vector<std::size_t> random_permutation(std::size_t n, std::uint64_t seed);

/// Zero-padded point labels prefix0..prefix{n-1} that sort in index order.
std::vector<std::string> indexed_labels(const std::string& prefix, std::size_t n, std::size_t first = 0);

}  // namespace wsim
