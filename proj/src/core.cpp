#include "wsim/core.hpp"

#include <algorithm>
#include <cmath>

#include "wsim/error.hpp"

namespace wsim {

Space new_space(std::vector<std::string> labels, const Matrix& matrix, const Backend& backend) {
  return Space::create(std::move(labels), matrix, backend);
}

namespace {

template <typename Bound>
Verdict<TripleWitness> first_violation(const Space& space, Bound bound) {
  const std::size_t n = space.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      for (std::size_t y = 0; y < n; ++y) {
        if (space.at(x, y) > bound(space.at(x, z), space.at(z, y))) {
          return Verdict<TripleWitness>::fail({x, z, y});
        }
      }
    }
  }
  return Verdict<TripleWitness>::pass();
}

}  // namespace

Verdict<TripleWitness> is_metric(const Space& space) {
  return first_violation(space, [](const Scalar& a, const Scalar& b) { return a + b; });
}

Verdict<TripleWitness> is_ultrametric(const Space& space) {
  return first_violation(space, [](const Scalar& a, const Scalar& b) { return max(a, b); });
}

RankStructure rank_structure(const Space& space) {
  const std::size_t n = space.size();
  struct Entry {
    const Scalar* value;
    std::size_t i;
    std::size_t j;
  };
  std::vector<Entry> entries;
  entries.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) entries.push_back({&space.at(i, j), i, j});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return numeric_less(*a.value, *b.value); });

  RankStructure out;
  out.ranks.n = n;
  out.ranks.ranks.assign(n * n, 0);
  out.distances.values.push_back(space.at(0, 0));

  // Float values are grouped at gaps larger than the tolerance; a group whose
  // span exceeds the tolerance, or a gap within twice the tolerance, means the
  // grouping depends on the order of merging.
  const bool exact = space.backend().is_exact();
  const double eps = space.backend().epsilon;
  auto tolerance = [eps](double a, double b) { return eps * std::max({1.0, std::fabs(a), std::fabs(b)}); };
  std::uint32_t rank = 0;
  for (const auto& e : entries) {
    const Scalar& head = out.distances.values.back();
    bool same = false;
    if (exact) {
      same = head.exact() == e.value->exact();
    } else {
      double a = head.to_double();
      double b = e.value->to_double();
      double gap = b - a;
      double tol = tolerance(a, b);
      if (gap <= tol) {
        same = true;
      } else if (gap <= 2 * tol) {
        throw Error(ErrorKind::AmbiguousRanking, "distances " + head.to_string() + " and " + e.value->to_string() +
                                                     " lie within twice the tolerance");
      }
    }
    if (!same) {
      out.distances.values.push_back(*e.value);
      ++rank;
    }
    out.ranks.ranks[e.i * n + e.j] = rank;
    out.ranks.ranks[e.j * n + e.i] = rank;
  }
  return out;
}

DistanceSet distance_set(const Space& space) { return rank_structure(space).distances; }

RankMatrix rank_matrix(const Space& space) { return rank_structure(space).ranks; }

Space max_ultrametric_from_set(const std::vector<Scalar>& values) {
  std::vector<Scalar> sorted = values;
  std::stable_sort(sorted.begin(), sorted.end(), numeric_less);
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k - 1] == sorted[k]) throw Error(ErrorKind::Duplicates, "value " + sorted[k].to_string() + " repeats");
  }
  bool has_zero = std::any_of(values.begin(), values.end(), [](const Scalar& v) { return v == Scalar(0); });
  if (!has_zero) throw Error(ErrorKind::ZeroMissing, "the value set must contain 0");
  Backend backend = Backend::rational();
  for (const auto& v : values) {
    if (!v.is_exact()) backend = Backend::floating(std::max(backend.epsilon, v.epsilon()));
  }

  const std::size_t n = values.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& v : values) labels.push_back(v.to_string());
  Matrix matrix(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) matrix[i][j] = i == j ? Scalar(0) : max(values[i], values[j]);
  }
  return Space::create(std::move(labels), matrix, backend);
}

ScalingFunction increasing_bijection(const DistanceSet& from, const DistanceSet& to) {
  if (from.size() == 0 || to.size() == 0) throw Error(ErrorKind::EmptyDomain, "distance sets must be nonempty");
  if (from.size() != to.size()) {
    throw Error(ErrorKind::CardinalityMismatch,
                std::to_string(from.size()) + " values cannot map onto " + std::to_string(to.size()));
  }
  std::vector<std::pair<Scalar, Scalar>> pairs;
  pairs.reserve(from.size());
  for (std::size_t k = 0; k < from.size(); ++k) pairs.emplace_back(from.values[k], to.values[k]);
  return ScalingFunction::from_pairs(std::move(pairs));
}

Verdict<QuadrupleWitness> coincreasing(const Space& d, const Space& rho) {
  if (!std::equal(d.labels().begin(), d.labels().end(), rho.labels().begin(), rho.labels().end())) {
    throw Error(ErrorKind::LabelMismatch, "both semimetrics must share one label list");
  }
  const RankMatrix rd = rank_matrix(d);
  const RankMatrix rr = rank_matrix(rho);
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t w = 0; w < n; ++w) {
          if ((rd.at(x, y) <= rd.at(z, w)) != (rr.at(x, y) <= rr.at(z, w))) {
            return Verdict<QuadrupleWitness>::fail({x, y, z, w});
          }
        }
      }
    }
  }
  return Verdict<QuadrupleWitness>::pass();
}

}  // namespace wsim
