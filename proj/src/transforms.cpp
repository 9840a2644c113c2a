#include "wsim/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "wsim/error.hpp"

namespace wsim {

FunctionTable FunctionTable::from_entries(std::vector<std::pair<Scalar, Scalar>> entries) {
  if (entries.empty()) throw Error(ErrorKind::EmptyDomain, "function table has no entries");
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& [a, fa] = entries[k];
    if (a < Scalar(0) || fa < Scalar(0)) {
      throw Error(ErrorKind::NonPositiveValue, "entry (" + a.to_string() + ", " + fa.to_string() + ") is negative");
    }
    if (k > 0 && !(entries[k - 1].first < a)) {
      throw Error(ErrorKind::NotStrictlyIncreasing, "arguments must strictly increase at " + a.to_string());
    }
  }
  FunctionTable f;
  f.entries_ = std::move(entries);
  return f;
}

FunctionTable FunctionTable::linear(const std::vector<Scalar>& domain, const Scalar& slope) {
  std::vector<std::pair<Scalar, Scalar>> entries;
  for (const auto& a : domain) entries.emplace_back(a, slope * a);
  return from_entries(std::move(entries));
}

FunctionTable FunctionTable::power(const std::vector<Scalar>& domain, const Rational& exponent, double epsilon) {
  std::vector<std::pair<Scalar, Scalar>> entries;
  for (const auto& a : domain) {
    std::optional<Rational> exact = a.is_exact() ? exact_power(a.exact(), exponent) : std::nullopt;
    if (exact) {
      entries.emplace_back(a, Scalar(*exact));
    } else {
      if (exponent <= 0) throw Error(ErrorKind::NonpositiveExponent, "exponent must be positive");
      double eps = a.is_exact() ? epsilon : a.epsilon();
      entries.emplace_back(a, Scalar::approx(std::pow(a.to_double(), exponent.get_d()), eps));
    }
  }
  return from_entries(std::move(entries));
}

std::optional<Scalar> FunctionTable::operator()(const Scalar& a) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), a,
                             [](const auto& e, const Scalar& v) { return compare(e.first, v) < 0; });
  if (it == entries_.end() || it->first != a) return std::nullopt;
  return it->second;
}

namespace {

// Depth-first search over multisets drawn in nonincreasing argument order.
// A branch ends as soon as its sum reaches the target, so every explored
// multiset is minimal; branches that cannot beat the incumbent are cut using
// the smallest cost per unit of argument.
class CoverSearch {
 public:
  CoverSearch(const std::vector<std::pair<Scalar, Scalar>>& items, const Scalar& target,
              std::optional<Scalar> best_ratio)
      : items_(items), target_(target), best_ratio_(std::move(best_ratio)) {}

  /// Cheapest cover strictly below `bound` (if given).
  std::optional<Cover> run(std::optional<Scalar> bound) {
    best_ = std::move(bound);
    found_.reset();
    parts_.clear();
    descend(0, Scalar(0), Scalar(0));
    return found_;
  }

 private:
  void descend(std::size_t start, const Scalar& sum, const Scalar& cost) {
    if (sum >= target_) {
      if (!best_ || cost < *best_) {
        best_ = cost;
        Cover cover{cost, parts_};
        std::reverse(cover.parts.begin(), cover.parts.end());
        found_ = std::move(cover);
      }
      return;
    }
    if (best_) {
      if (!(cost < *best_)) return;
      if (best_ratio_ && !(cost + *best_ratio_ * (target_ - sum) < *best_)) return;
    }
    for (std::size_t k = start; k < items_.size(); ++k) {
      parts_.push_back(items_[k].first);
      descend(k, sum + items_[k].first, cost + items_[k].second);
      parts_.pop_back();
    }
  }

  const std::vector<std::pair<Scalar, Scalar>>& items_;
  Scalar target_;
  std::optional<Scalar> best_ratio_;
  std::optional<Scalar> best_;
  std::optional<Cover> found_;
  std::vector<Scalar> parts_;
};

std::vector<std::pair<Scalar, Scalar>> positive_descending(const FunctionTable& f) {
  std::vector<std::pair<Scalar, Scalar>> items;
  for (const auto& e : f.entries()) {
    if (e.first > Scalar(0)) items.push_back(e);
  }
  std::reverse(items.begin(), items.end());
  return items;
}

std::optional<Scalar> min_ratio(const std::vector<std::pair<Scalar, Scalar>>& items) {
  std::optional<Scalar> best;
  for (const auto& [a, fa] : items) {
    Scalar r = fa / a;
    if (!best || numeric_less(r, *best)) best = r;
  }
  return best;
}

}  // namespace

Verdict<SubadditivityViolation> check_generalized_subadditivity(const FunctionTable& f) {
  if (f.size() == 0) throw Error(ErrorKind::EmptyDomain, "function table has no entries");
  const auto items = positive_descending(f);
  const auto ratio = min_ratio(items);
  for (const auto& [x, fx] : f.entries()) {
    if (x == Scalar(0)) {
      // Every nonempty multiset covers 0; the cheapest is a single element.
      const auto& entries = f.entries();
      auto cheapest = std::min_element(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return numeric_less(a.second, b.second);
      });
      if (cheapest->second < fx) {
        return Verdict<SubadditivityViolation>::fail({x, {cheapest->first}, fx, cheapest->second});
      }
      continue;
    }
    CoverSearch search(items, x, ratio);
    if (auto cover = search.run(fx)) {
      return Verdict<SubadditivityViolation>::fail({x, cover->parts, fx, cover->cost});
    }
  }
  return Verdict<SubadditivityViolation>::pass();
}

SubadditiveHull hull(const FunctionTable& f) {
  bool has_positive = false;
  for (const auto& [a, fa] : f.entries()) {
    if (a == Scalar(0)) {
      if (fa != Scalar(0)) throw Error(ErrorKind::NonzeroAtZero, "f(0) = " + fa.to_string());
      continue;
    }
    has_positive = true;
    if (!(fa > Scalar(0))) {
      throw Error(ErrorKind::NonPositiveValue, "f(" + a.to_string() + ") = " + fa.to_string() + " is not positive");
    }
  }
  if (!has_positive) throw Error(ErrorKind::NoPositiveElement, "domain has no positive element");
  SubadditiveHull h;
  h.base_ = f;
  h.positive_desc_ = positive_descending(f);
  h.best_ratio_ = *min_ratio(h.positive_desc_);
  return h;
}

Cover hull_cover(const SubadditiveHull& h, const Scalar& x) {
  if (!(x > Scalar(0))) return Cover{Scalar(0), {}};
  CoverSearch search(h.positive_descending(), x, h.best_ratio());
  return *search.run(std::nullopt);
}

Scalar hull_eval(const SubadditiveHull& h, const Scalar& x) { return hull_cover(h, x).cost; }

Verdict<MetricPreservingFailure> is_metric_preserving(const FunctionTable& f) {
  using Reason = MetricPreservingFailure::Reason;
  using V = Verdict<MetricPreservingFailure>;
  if (f.size() == 0) throw Error(ErrorKind::EmptyDomain, "function table has no entries");
  const auto& entries = f.entries();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& [a, fa] = entries[k];
    if (a == Scalar(0) && fa != Scalar(0)) return V::fail({Reason::NonzeroAtZero, a, std::nullopt});
    if (a > Scalar(0) && !(fa > Scalar(0))) return V::fail({Reason::NotPositive, a, std::nullopt});
    if (k > 0 && fa < entries[k - 1].second) return V::fail({Reason::NotIncreasing, a, std::nullopt});
  }
  auto subadditive = check_generalized_subadditivity(f);
  if (!subadditive) {
    Scalar at = subadditive.witness->x;
    return V::fail({Reason::NotSubadditive, at, std::move(subadditive.witness)});
  }
  return V::pass();
}

Space apply_function(const Space& space, const FunctionTable& f) {
  const RankStructure rs = rank_structure(space);
  std::vector<Scalar> images;
  images.reserve(rs.distances.size());
  Backend backend = space.backend();
  for (const auto& d : rs.distances.values) {
    auto value = f(d);
    if (!value) throw Error(ErrorKind::DomainGap, "distance " + d.to_string() + " is outside the table domain");
    if (d == Scalar(0) ? *value != Scalar(0) : !(*value > Scalar(0))) {
      throw Error(ErrorKind::NotPositiveDefinite, "f(" + d.to_string() + ") = " + value->to_string());
    }
    if (!images.empty() && !(images.back() < *value)) {
      throw Error(ErrorKind::NotStrictlyIncreasing, "f is not strictly increasing at " + d.to_string());
    }
    if (!value->is_exact()) {
      backend = Backend::floating(std::max(backend.is_exact() ? 0.0 : backend.epsilon, value->epsilon()));
    }
    images.push_back(*value);
  }
  const std::size_t n = space.size();
  Matrix matrix(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) matrix[i][j] = images[rs.ranks.at(i, j)];
  }
  return Space::create(std::vector<std::string>(space.labels().begin(), space.labels().end()), matrix, backend);
}

Space snowflake(const Space& space, const Rational& p, double epsilon) {
  if (p <= 0) throw Error(ErrorKind::NonpositiveExponent, "snowflake exponent must be positive");
  if (p == 1) return space;
  const std::size_t n = space.size();
  Matrix matrix(n, std::vector<Scalar>(n));
  bool exact = space.backend().is_exact();
  if (exact) {
    for (std::size_t i = 0; i < n && exact; ++i) {
      for (std::size_t j = 0; j < n && exact; ++j) {
        auto power = exact_power(space.at(i, j).exact(), p);
        if (power) {
          matrix[i][j] = Scalar(*power);
        } else {
          exact = false;
        }
      }
    }
  }
  Backend backend = Backend::rational();
  if (!exact) {
    backend = Backend::floating(space.backend().is_exact() ? epsilon : space.backend().epsilon);
    const double exponent = p.get_d();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        matrix[i][j] = Scalar::approx(std::pow(space.at(i, j).to_double(), exponent), backend.epsilon);
      }
    }
  }
  return Space::create(std::vector<std::string>(space.labels().begin(), space.labels().end()), matrix, backend);
}

}  // namespace wsim
