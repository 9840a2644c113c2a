#include "wsim/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "wsim/error.hpp"

namespace wsim {

namespace {

// mt19937_64 output is fixed by the standard; distributions are not, so the
// reductions below are done by hand to keep generation identical everywhere.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Rational quarter(std::uint64_t k) {
  Rational q(static_cast<long>(k), 4);
  q.canonicalize();
  return q;
}

void check_sequence(const std::vector<Rational>& seq, std::size_t n, const char* name) {
  if (seq.size() < n) {
    throw Error(ErrorKind::BadSequence, std::string(name) + " has fewer than " + std::to_string(n) + " terms");
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (seq[k] <= 0) throw Error(ErrorKind::BadSequence, std::string(name) + " has a nonpositive term");
    if (k > 0 && !(seq[k] < seq[k - 1])) {
      throw Error(ErrorKind::BadSequence, std::string(name) + " is not strictly decreasing");
    }
  }
}

Matrix zero_matrix(std::size_t n) { return Matrix(n, std::vector<Scalar>(n, Scalar(0))); }

std::string pad(std::size_t value, std::size_t width) {
  std::string digits = std::to_string(value);
  return std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

PointMap identity_map(std::size_t n) {
  PointMap map(n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  return map;
}

}  // namespace

FamilySpec FamilySpec::defaults(std::string name, std::size_t n) {
  FamilySpec spec;
  spec.name = std::move(name);
  spec.n = n;
  for (std::size_t k = 1; k <= n; ++k) {
    spec.r.emplace_back(1, static_cast<long>(k));
    spec.p.push_back(Rational(1) + Rational(1, static_cast<long>(k)));
    spec.r.back().canonicalize();
    spec.p.back().canonicalize();
  }
  spec.r_formula = "1/k";
  spec.p_formula = "1+1/k";
  spec.r_limit = "0";
  spec.p_limit = "1";
  return spec;
}

std::vector<std::string> indexed_labels(const std::string& prefix, std::size_t n, std::size_t first) {
  const std::size_t width = std::to_string(first + (n == 0 ? 0 : n - 1)).size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t k = 0; k < n; ++k) labels.push_back(prefix + pad(first + k, width));
  return labels;
}

GeneratedPair example_2_6(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "the limit-point family needs n >= 2");
  check_sequence(spec.r, n, "r");
  check_sequence(spec.p, n, "p");

  auto distance = [](const std::vector<Rational>& seq, std::size_t i, std::size_t j) -> Scalar {
    if (i == j) return Scalar(0);
    const std::size_t lo = std::min(i, j);
    const std::size_t hi = std::max(i, j);
    return Scalar(lo == 0 ? seq[hi - 1] : seq[lo - 1]);
  };
  Matrix dx = zero_matrix(n + 1);
  Matrix dy = zero_matrix(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      dx[i][j] = distance(spec.r, i, j);
      dy[i][j] = distance(spec.p, i, j);
    }
  }
  Space x = Space::create(indexed_labels("x", n + 1), dx);
  Space y = Space::create(indexed_labels("y", n + 1), dy);

  // f(0) = 0, f(p_i) = r_i, listed by increasing argument.
  std::vector<std::pair<Scalar, Scalar>> table{{Scalar(0), Scalar(0)}};
  for (std::size_t i = n; i >= 1; --i) table.emplace_back(Scalar(spec.p[i - 1]), Scalar(spec.r[i - 1]));
  auto realization = WeakSimilarity::make(x, y, identity_map(n + 1), ScalingFunction::from_pairs(std::move(table)));
  return {std::move(x), std::move(y), std::move(realization)};
}

GeneratedPair example_2_6_star(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "the paired family needs n >= 2");
  check_sequence(spec.r, n, "r");
  check_sequence(spec.p, n, "p");

  const std::size_t width = std::to_string(n).size();
  std::vector<std::string> xl;
  std::vector<std::string> yl;
  for (std::size_t i = 1; i <= n; ++i) {
    for (int j = 1; j <= 2; ++j) {
      xl.push_back("x" + pad(i, width) + "_" + std::to_string(j));
      yl.push_back("y" + pad(i, width) + "_" + std::to_string(j));
    }
  }
  const std::size_t m = 2 * n;
  auto distance = [](const std::vector<Rational>& seq, std::size_t a, std::size_t b) -> Scalar {
    if (a == b) return Scalar(0);
    if (a / 2 == b / 2) return Scalar(seq[a / 2]);
    return Scalar(seq[0]);
  };
  Matrix dx = zero_matrix(m);
  Matrix dy = zero_matrix(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      dx[a][b] = distance(spec.p, a, b);
      dy[a][b] = distance(spec.r, a, b);
    }
  }
  Space x = Space::create(std::move(xl), dx);
  Space y = Space::create(std::move(yl), dy);

  // f(0) = 0, f(r_i) = p_i.
  std::vector<std::pair<Scalar, Scalar>> table{{Scalar(0), Scalar(0)}};
  for (std::size_t i = n; i >= 1; --i) table.emplace_back(Scalar(spec.r[i - 1]), Scalar(spec.p[i - 1]));
  auto realization = WeakSimilarity::make(x, y, identity_map(m), ScalingFunction::from_pairs(std::move(table)));
  return {std::move(x), std::move(y), std::move(realization)};
}

Space segment_grid(std::size_t n, const Rational& length) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "a segment grid needs at least two points");
  if (length <= 0) throw Error(ErrorKind::InvalidArgument, "segment length must be positive");
  const Rational step = length / Rational(static_cast<long>(n - 1));
  Matrix d = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long gap = static_cast<long>(i > j ? i - j : j - i);
      d[i][j] = Scalar(Rational(step * gap));
    }
  }
  return Space::create(indexed_labels("t", n), d);
}

Space snowflake_segment(std::size_t n, const Rational& p, double epsilon) {
  if (p <= 0) throw Error(ErrorKind::NonpositiveExponent, "snowflake exponent must be positive");
  if (p > 1) throw Error(ErrorKind::InvalidArgument, "snowflake segment exponent must lie in (0, 1]");
  return snowflake(segment_grid(n, 1), p, epsilon);
}

Space random_metric(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = quarter(1 + draw_below(rng, 16));
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  Matrix m = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Scalar(d[i][j]);
  }
  return Space::create(indexed_labels("m", n), m);
}

Space random_ultrametric(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> clusters(n);
  for (std::size_t i = 0; i < n; ++i) clusters[i] = {i};
  Matrix m = zero_matrix(n);
  Rational height = 0;
  while (clusters.size() > 1) {
    // Equal consecutive heights are allowed; they produce repeated distances.
    height += quarter(height == 0 ? 1 + draw_below(rng, 4) : draw_below(rng, 4));
    std::size_t a = draw_below(rng, clusters.size());
    std::size_t b = draw_below(rng, clusters.size() - 1);
    if (b >= a) ++b;
    for (std::size_t p : clusters[a]) {
      for (std::size_t q : clusters[b]) m[p][q] = m[q][p] = Scalar(height);
    }
    clusters[a].insert(clusters[a].end(), clusters[b].begin(), clusters[b].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(b));
  }
  return Space::create(indexed_labels("u", n), m);
}

Space random_semimetric(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  std::mt19937_64 rng(seed);
  Matrix m = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m[i][j] = m[j][i] = Scalar(static_cast<long>(1 + draw_below(rng, 4)));
  }
  return Space::create(indexed_labels("s", n), m);
}

std::vector<std::size_t> random_permutation(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t k = n; k > 1; --k) std::swap(perm[k - 1], perm[draw_below(rng, k)]);
  return perm;
}

Partner derive_partner(const Space& space, const PartnerMode& mode) {
  const std::size_t n = space.size();
  std::vector<std::string> labels(space.labels().begin(), space.labels().end());
  switch (mode.kind) {
    case PartnerMode::Kind::Scaled: {
      if (mode.ratio <= 0) throw Error(ErrorKind::InvalidArgument, "scale ratio must be positive");
      const Scalar r(mode.ratio);
      Matrix m = zero_matrix(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = r * space.at(i, j);
      }
      Space partner = Space::create(std::move(labels), m, space.backend());
      auto scaling = increasing_bijection(distance_set(partner), distance_set(space));
      auto realization = WeakSimilarity::make(space, partner, identity_map(n), std::move(scaling));
      return {std::move(partner), std::move(realization)};
    }
    case PartnerMode::Kind::Relabeled: {
      const auto perm = random_permutation(n, mode.seed);
      Matrix m = zero_matrix(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[perm[i]][perm[j]] = space.at(i, j);
      }
      Space partner = Space::create(std::move(labels), m, space.backend());
      const DistanceSet d = distance_set(space);
      auto realization = WeakSimilarity::make(space, partner, perm, increasing_bijection(d, d));
      return {std::move(partner), std::move(realization)};
    }
    case PartnerMode::Kind::Distorted: {
      std::mt19937_64 rng(mode.seed);
      const DistanceSet d = distance_set(space);
      std::vector<std::pair<Scalar, Scalar>> entries;
      Rational value = 0;
      for (std::size_t k = 0; k < d.size(); ++k) {
        if (k > 0) value += quarter(1 + draw_below(rng, 8));
        entries.emplace_back(d.values[k], Scalar(value));
      }
      Space partner = apply_function(space, FunctionTable::from_entries(std::move(entries)));
      auto scaling = increasing_bijection(distance_set(partner), d);
      auto realization = WeakSimilarity::make(space, partner, identity_map(n), std::move(scaling));
      return {std::move(partner), std::move(realization)};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown partner mode");
}

}  // namespace wsim
