#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace wsim::oracle {

namespace {

std::optional<std::vector<std::pair<Rational, Rational>>> induced_function(const Space& x, const Space& y,
                                                                           const std::vector<std::size_t>& map) {
  std::map<Rational, Rational> f;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& dy = y.at(map[i], map[j]).exact();
      const Rational& dx = x.at(i, j).exact();
      auto [it, inserted] = f.emplace(dy, dx);
      if (!inserted && it->second != dx) return std::nullopt;
    }
  }
  std::vector<std::pair<Rational, Rational>> table(f.begin(), f.end());
  for (std::size_t k = 1; k < table.size(); ++k) {
    if (!(table[k - 1].second < table[k].second)) return std::nullopt;
  }
  // f must also be onto D(X); it is, since every d_X value is hit above.
  return table;
}

}  // namespace

bool is_weak_similarity(const Space& x, const Space& y, const std::vector<std::size_t>& map) {
  return induced_function(x, y, map).has_value();
}

std::vector<BruteMorphism> weak_similarities(const Space& x, const Space& y) {
  std::vector<BruteMorphism> out;
  if (x.size() != y.size()) return out;
  const std::size_t n = x.size();
  std::vector<std::size_t> xs(n);
  std::vector<std::size_t> ys(n);
  std::iota(xs.begin(), xs.end(), std::size_t{0});
  std::iota(ys.begin(), ys.end(), std::size_t{0});
  std::sort(xs.begin(), xs.end(), [&](auto a, auto b) { return x.label(a) < x.label(b); });
  std::sort(ys.begin(), ys.end(), [&](auto a, auto b) { return y.label(a) < y.label(b); });
  std::vector<std::size_t> positions(n);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  do {
    std::vector<std::size_t> map(n);
    for (std::size_t k = 0; k < n; ++k) map[xs[k]] = ys[positions[k]];
    if (auto f = induced_function(x, y, map)) out.push_back({map, *f});
  } while (std::next_permutation(positions.begin(), positions.end()));
  return out;
}

std::optional<Rational> first_subadditivity_violation(const std::vector<std::pair<Rational, Rational>>& table) {
  Rational max_a = 0;
  std::vector<std::pair<Rational, Rational>> positive;
  for (const auto& e : table) {
    max_a = std::max(max_a, e.first);
    if (e.first > 0) positive.push_back(e);
  }
  for (const auto& [x, fx] : table) {
    bool violated = false;
    // Singletons, including 0 and x itself.
    for (const auto& [a, fa] : table) {
      if (x <= a && fx > fa) violated = true;
    }
    // Multisets of positive arguments with sum below x + max(A).
    std::function<void(std::size_t, Rational, Rational)> walk = [&](std::size_t start, Rational sum, Rational cost) {
      if (violated) return;
      if (sum >= x && sum > 0 && fx > cost) {
        violated = true;
        return;
      }
      for (std::size_t k = start; k < positive.size(); ++k) {
        Rational next = sum + positive[k].first;
        if (next < x + max_a) walk(k, next, cost + positive[k].second);
      }
    };
    walk(0, 0, 0);
    if (violated) return x;
  }
  return std::nullopt;
}

Rational hull_value(const std::vector<std::pair<Rational, Rational>>& table, const Rational& x) {
  if (x <= 0) return 0;
  Rational max_a = 0;
  std::vector<std::pair<Rational, Rational>> positive;
  for (const auto& e : table) {
    max_a = std::max(max_a, e.first);
    if (e.first > 0) positive.push_back(e);
  }
  std::optional<Rational> best;
  std::function<void(std::size_t, Rational, Rational)> walk = [&](std::size_t start, Rational sum, Rational cost) {
    if (sum >= x) {
      if (!best || cost < *best) best = cost;
    }
    for (std::size_t k = start; k < positive.size(); ++k) {
      Rational next = sum + positive[k].first;
      if (next < x + max_a) walk(k, next, cost + positive[k].second);
    }
  };
  walk(0, 0, 0);
  return *best;
}

std::vector<std::vector<Rational>> shortest_paths(std::vector<std::vector<Rational>> d) {
  const std::size_t n = d.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

}  // namespace wsim::oracle
