#include "wsim/scaling.hpp"

#include <algorithm>

#include "wsim/error.hpp"

namespace wsim {

ScalingFunction ScalingFunction::from_pairs(std::vector<std::pair<Scalar, Scalar>> pairs) {
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    if (!(pairs[k - 1].first < pairs[k].first) || !(pairs[k - 1].second < pairs[k].second)) {
      throw Error(ErrorKind::NotStrictlyIncreasing,
                  "scaling table is not strictly increasing at " + pairs[k].first.to_string() + " -> " +
                      pairs[k].second.to_string());
    }
  }
  ScalingFunction f;
  f.pairs_ = std::move(pairs);
  return f;
}

std::vector<Scalar> ScalingFunction::domain() const {
  std::vector<Scalar> out;
  out.reserve(pairs_.size());
  for (const auto& p : pairs_) out.push_back(p.first);
  return out;
}

std::vector<Scalar> ScalingFunction::range() const {
  std::vector<Scalar> out;
  out.reserve(pairs_.size());
  for (const auto& p : pairs_) out.push_back(p.second);
  return out;
}

std::optional<Scalar> ScalingFunction::operator()(const Scalar& t) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), t,
                             [](const auto& p, const Scalar& v) { return compare(p.first, v) < 0; });
  if (it == pairs_.end() || it->first != t) return std::nullopt;
  return it->second;
}

ScalingFunction ScalingFunction::inverse() const {
  ScalingFunction g;
  g.pairs_.reserve(pairs_.size());
  for (const auto& [t, v] : pairs_) g.pairs_.emplace_back(v, t);
  return g;
}

ScalingFunction ScalingFunction::after(const ScalingFunction& inner) const {
  std::vector<std::pair<Scalar, Scalar>> pairs;
  pairs.reserve(inner.size());
  for (const auto& [t, mid] : inner.pairs_) {
    auto value = (*this)(mid);
    if (!value) {
      throw Error(ErrorKind::DomainMismatch, "value " + mid.to_string() + " is outside the outer scaling domain");
    }
    pairs.emplace_back(t, *value);
  }
  return from_pairs(std::move(pairs));
}

bool ScalingFunction::is_identity() const {
  return std::all_of(pairs_.begin(), pairs_.end(), [](const auto& p) { return p.first == p.second; });
}

bool operator==(const ScalingFunction& a, const ScalingFunction& b) {
  return a.pairs_.size() == b.pairs_.size() &&
         std::equal(a.pairs_.begin(), a.pairs_.end(), b.pairs_.begin(),
                    [](const auto& p, const auto& q) { return p.first == q.first && p.second == q.second; });
}

}  // namespace wsim
