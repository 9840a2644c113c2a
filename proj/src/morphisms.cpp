#include "wsim/morphisms.hpp"

#include <algorithm>
#include <map>

#include "wsim/error.hpp"

namespace wsim {

bool Classification::operator==(const Classification& other) const {
  if (kind != other.kind) return false;
  if (kind != Kind::Similarity) return true;
  return ratio.has_value() && other.ratio.has_value() && *ratio == *other.ratio;
}

std::string to_string(const Classification& c) {
  switch (c.kind) {
    case Classification::Kind::Isometry: return "isometry";
    case Classification::Kind::Similarity: return "similarity(" + c.ratio->to_string() + ")";
    case Classification::Kind::Generic: return "generic";
  }
  return "generic";
}

namespace {

void require_bijection(const PointMap& map, std::size_t source_size, std::size_t target_size) {
  if (map.size() != source_size || source_size != target_size) {
    throw Error(ErrorKind::NotBijective, "map of " + std::to_string(map.size()) + " points between spaces of size " +
                                             std::to_string(source_size) + " and " + std::to_string(target_size));
  }
  std::vector<bool> hit(target_size, false);
  for (std::size_t image : map) {
    if (image >= target_size || hit[image]) throw Error(ErrorKind::NotBijective, "map is not a bijection");
    hit[image] = true;
  }
}

bool same_values(const std::vector<Scalar>& table_side, const DistanceSet& set) {
  if (table_side.size() != set.size()) return false;
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (table_side[k] != set.values[k]) return false;
  }
  return true;
}

PointMap inverse_map(const PointMap& map) {
  PointMap inv(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) inv[map[i]] = i;
  return inv;
}

}  // namespace

WeakSimilarity WeakSimilarity::make(Space source, Space target, PointMap map, ScalingFunction scaling) {
  auto verdict = verify(source, target, map, scaling);
  if (!verdict) {
    const auto& w = *verdict.witness;
    throw Error(ErrorKind::NotWeakSimilarity,
                "distance of (" + source.label(w.x) + "," + source.label(w.y) + ") is not reproduced");
  }
  Classification c = classify(scaling);
  return WeakSimilarity(std::move(source), std::move(target), std::move(map), std::move(scaling), std::move(c));
}

const std::string& WeakSimilarity::image(const std::string& label) const {
  auto index = source_.index_of(label);
  if (!index) throw Error(ErrorKind::LabelMismatch, "unknown source label '" + label + "'");
  return target_.label(map_[*index]);
}

PointMap point_map_from_labels(const Space& source, const Space& target,
                               const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (pairs.size() != source.size()) {
    throw Error(ErrorKind::NotBijective, "map must cover every source point");
  }
  PointMap map(source.size(), source.size());
  for (const auto& [from, to] : pairs) {
    auto i = source.index_of(from);
    auto j = target.index_of(to);
    if (!i) throw Error(ErrorKind::LabelMismatch, "unknown source label '" + from + "'");
    if (!j) throw Error(ErrorKind::LabelMismatch, "unknown target label '" + to + "'");
    if (map[*i] != source.size()) throw Error(ErrorKind::NotBijective, "label '" + from + "' mapped twice");
    map[*i] = *j;
  }
  require_bijection(map, source.size(), target.size());
  return map;
}

Verdict<PairWitness> verify(const Space& x, const Space& y, const PointMap& map, const ScalingFunction& scaling) {
  require_bijection(map, x.size(), y.size());
  if (!same_values(scaling.domain(), distance_set(y))) {
    throw Error(ErrorKind::DomainMismatch, "scaling domain differs from the target distance set");
  }
  if (!same_values(scaling.range(), distance_set(x))) {
    throw Error(ErrorKind::DomainMismatch, "scaling range differs from the source distance set");
  }
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto value = scaling(y.at(map[i], map[j]));
      if (!value || *value != x.at(i, j)) return Verdict<PairWitness>::fail({i, j});
    }
  }
  return Verdict<PairWitness>::pass();
}

namespace {

// Backtracking search for rank-preserving bijections. Points of both spaces
// are first colored by iterated refinement on (edge rank, partner color)
// signatures; a source point may only map to a target point of its color.
// Source points are assigned in label order and candidates are tried in
// target label order, so solutions arrive in canonical order.
class Solver {
 public:
  Solver(const Space& x, const Space& y) : x_(x), y_(y) {
    if (x.size() != y.size()) return;
    x_ranks_ = rank_structure(x);
    y_ranks_ = rank_structure(y);
    if (x_ranks_.distances.size() != y_ranks_.distances.size()) return;
    n_ = x.size();
    if (!same_rank_counts()) return;
    if (!refine()) return;
    feasible_ = true;
  }

  bool feasible() const { return feasible_; }

  ScalingFunction scaling() const { return increasing_bijection(y_ranks_.distances, x_ranks_.distances); }

  template <typename OnSolution>
  void run(OnSolution&& on_solution) {
    if (!feasible_) return;
    const auto& order = x_.sorted_order();
    candidates_.assign(n_, {});
    for (std::size_t s = 0; s < n_; ++s) {
      for (std::size_t t : y_.sorted_order()) {
        if (colors_[s] == colors_[n_ + t]) candidates_[s].push_back(t);
      }
    }
    phi_.assign(n_, n_);
    used_.assign(n_, false);
    stop_ = false;
    descend(0, order, on_solution);
  }

 private:
  std::uint32_t rx(std::size_t i, std::size_t j) const { return x_ranks_.ranks.at(i, j); }
  std::uint32_t ry(std::size_t i, std::size_t j) const { return y_ranks_.ranks.at(i, j); }

  bool same_rank_counts() const {
    std::vector<std::size_t> cx(x_ranks_.distances.size(), 0);
    std::vector<std::size_t> cy(cx.size(), 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        ++cx[rx(i, j)];
        ++cy[ry(i, j)];
      }
    }
    return cx == cy;
  }

  // Colors the disjoint union (source points 0..n-1, target points n..2n-1).
  bool refine() {
    colors_.assign(2 * n_, 0);
    std::size_t classes = 1;
    std::vector<std::vector<std::uint64_t>> signatures(2 * n_);
    while (true) {
      for (std::size_t v = 0; v < 2 * n_; ++v) {
        const bool source = v < n_;
        const std::size_t base = source ? 0 : n_;
        const std::size_t p = v - base;
        auto& sig = signatures[v];
        sig.clear();
        for (std::size_t q = 0; q < n_; ++q) {
          if (q == p) continue;
          std::uint64_t rank = source ? rx(p, q) : ry(p, q);
          sig.push_back(rank << 32 | colors_[base + q]);
        }
        std::sort(sig.begin(), sig.end());
        sig.push_back(colors_[v]);
      }
      std::map<std::vector<std::uint64_t>, std::uint32_t> ids;
      for (const auto& sig : signatures) ids.emplace(sig, 0);
      std::uint32_t next = 0;
      for (auto& [sig, id] : ids) id = next++;
      for (std::size_t v = 0; v < 2 * n_; ++v) colors_[v] = ids.at(signatures[v]);
      if (ids.size() == classes) break;
      classes = ids.size();
    }
    std::vector<std::size_t> balance(classes, 0);
    for (std::size_t v = 0; v < n_; ++v) ++balance[colors_[v]];
    for (std::size_t v = n_; v < 2 * n_; ++v) {
      if (balance[colors_[v]]-- == 0) return false;
    }
    return std::all_of(balance.begin(), balance.end(), [](std::size_t b) { return b == 0; });
  }

  template <typename OnSolution>
  void descend(std::size_t depth, const std::vector<std::size_t>& order, OnSolution& on_solution) {
    if (depth == n_) {
      if (!on_solution(phi_)) stop_ = true;
      return;
    }
    const std::size_t s = order[depth];
    for (std::size_t t : candidates_[s]) {
      if (used_[t]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const std::size_t prev = order[k];
        consistent = rx(s, prev) == ry(t, phi_[prev]);
      }
      if (!consistent) continue;
      phi_[s] = t;
      used_[t] = true;
      descend(depth + 1, order, on_solution);
      used_[t] = false;
      phi_[s] = n_;
      if (stop_) return;
    }
  }

  const Space& x_;
  const Space& y_;
  std::size_t n_ = 0;
  bool feasible_ = false;
  RankStructure x_ranks_;
  RankStructure y_ranks_;
  std::vector<std::uint32_t> colors_;
  std::vector<std::vector<std::size_t>> candidates_;
  PointMap phi_;
  std::vector<bool> used_;
  bool stop_ = false;
};

}  // namespace

std::optional<WeakSimilarity> find_weak_similarity(const Space& x, const Space& y) {
  auto found = enumerate_weak_similarities(x, y, 1);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::vector<WeakSimilarity> enumerate_weak_similarities(const Space& x, const Space& y,
                                                        std::optional<std::size_t> limit) {
  std::vector<WeakSimilarity> out;
  if (limit && *limit == 0) return out;
  Solver solver(x, y);
  if (!solver.feasible()) return out;
  const ScalingFunction scaling = solver.scaling();
  solver.run([&](const PointMap& phi) {
    out.push_back(WeakSimilarity::make(x, y, phi, scaling));
    return !limit || out.size() < *limit;
  });
  return out;
}

Classification classify(const ScalingFunction& scaling) {
  std::optional<Scalar> ratio;
  for (const auto& [t, value] : scaling.pairs()) {
    if (t == Scalar(0)) continue;
    Scalar r = t / value;
    if (!ratio) {
      ratio = r;
    } else if (r != *ratio) {
      return Classification::generic();
    }
  }
  if (!ratio || *ratio == Scalar(1)) return Classification::isometry();
  return Classification::similarity(*ratio);
}

Classification classify(const WeakSimilarity& ws) { return classify(ws.scaling()); }

WeakSimilarity invert(const WeakSimilarity& ws) {
  return WeakSimilarity::make(ws.target(), ws.source(), inverse_map(ws.map()), ws.scaling().inverse());
}

WeakSimilarity compose(const WeakSimilarity& first, const WeakSimilarity& second) {
  if (!(first.target() == second.source())) {
    throw Error(ErrorKind::SpaceMismatch, "the first target is not the second source");
  }
  PointMap map(first.map().size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = second.map()[first.map()[i]];
  return WeakSimilarity::make(first.source(), second.target(), std::move(map),
                              first.scaling().after(second.scaling()));
}

Space pullback(const Space& x, const Space& y, const PointMap& map) {
  if (x.size() != y.size() || map.size() != x.size()) {
    throw Error(ErrorKind::LabelMismatch, "map does not pair the two label sets");
  }
  require_bijection(map, x.size(), y.size());
  const std::size_t n = x.size();
  Matrix rho(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rho[i][j] = y.at(map[i], map[j]);
  }
  return Space::create(std::vector<std::string>(x.labels().begin(), x.labels().end()), rho, y.backend());
}

WeakSimilarity factorize(const WeakSimilarity& phi1, const WeakSimilarity& phi2) {
  if (!(phi1.source() == phi2.source()) || !(phi1.target() == phi2.target())) {
    throw Error(ErrorKind::SpaceMismatch, "both weak similarities must share source and target");
  }
  return compose(phi2, invert(phi1));
}

WeakSimilarity identity_similarity(const Space& space) {
  PointMap map(space.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  DistanceSet d = distance_set(space);
  return WeakSimilarity::make(space, space, std::move(map), increasing_bijection(d, d));
}

}  // namespace wsim
