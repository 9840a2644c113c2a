#include <cmath>
#include <functional>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "wsim/error.hpp"
#include "wsim/families.hpp"

using namespace wsim;
using wsim::test::q;
using wsim::test::rat;
using wsim::test::space_of;
using wsim::test::strings;
using wsim::test::triangle;

namespace {

using Pairs = std::vector<std::pair<Rational, Rational>>;

FunctionTable table_of(const std::vector<std::pair<const char*, const char*>>& entries) {
  std::vector<std::pair<Scalar, Scalar>> out;
  for (const auto& [a, fa] : entries) out.emplace_back(q(a), q(fa));
  return FunctionTable::from_entries(std::move(out));
}

Pairs exact_pairs(const FunctionTable& f) {
  Pairs out;
  for (const auto& [a, fa] : f.entries()) out.emplace_back(a.exact(), fa.exact());
  return out;
}

/// Random table with f(0) = 0, positive quarter-step arguments and values.
FunctionTable random_table(std::mt19937_64& rng) {
  const std::size_t size = 2 + rng() % 5;
  std::vector<std::pair<Scalar, Scalar>> entries{{Scalar(0), Scalar(0)}};
  Rational a = 0;
  for (std::size_t k = 1; k < size; ++k) {
    a += rat(static_cast<long>(1 + rng() % 8), 4);
    Rational fa(static_cast<long>(1 + rng() % 12), 4);
    entries.emplace_back(Scalar(a), Scalar(fa));
  }
  return FunctionTable::from_entries(std::move(entries));
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("function tables") {
  auto f = table_of({{"0", "0"}, {"1", "2"}, {"2", "3"}});
  CHECK(*f(q("1")) == q("2"));
  CHECK_FALSE(f(q("3/2")).has_value());
  CHECK(kind_of([] { FunctionTable::from_entries({}); }) == ErrorKind::EmptyDomain);
  CHECK(kind_of([] { table_of({{"1", "1"}, {"1", "2"}}); }) == ErrorKind::NotStrictlyIncreasing);
  CHECK(kind_of([] { table_of({{"-1", "1"}}); }) == ErrorKind::NonPositiveValue);
  auto sq = FunctionTable::power({q("0"), q("2"), q("4")}, Rational(1, 2));
  CHECK(identical(sq.entries()[2].second, q("2")));
  CHECK_FALSE(sq.entries()[1].second.is_exact());
}

TEST_CASE("generalized subadditivity on small tables") {
  CHECK(check_generalized_subadditivity(table_of({{"0", "0"}, {"1", "1"}, {"2", "2"}})));
  CHECK(check_generalized_subadditivity(table_of({{"0", "0"}, {"1", "1"}, {"2", "1"}})));
  SUBCASE("square fails at 2 with 1 + 1") {
    auto v = check_generalized_subadditivity(table_of({{"0", "0"}, {"1", "1"}, {"2", "4"}}));
    REQUIRE_FALSE(v);
    CHECK(v.witness->x == q("2"));
    CHECK(strings(v.witness->multiset) == std::vector<std::string>{"1", "1"});
    CHECK(v.witness->lhs == q("4"));
    CHECK(v.witness->rhs == q("2"));
  }
  SUBCASE("decreasing values fail through a singleton") {
    auto v = check_generalized_subadditivity(table_of({{"0", "0"}, {"1", "3"}, {"2", "1"}}));
    REQUIRE_FALSE(v);
    CHECK(v.witness->x == q("1"));
    CHECK(strings(v.witness->multiset) == std::vector<std::string>{"2"});
  }
  SUBCASE("positive value at 0 fails against a cheaper element") {
    auto v = check_generalized_subadditivity(table_of({{"0", "2"}, {"1", "1"}}));
    REQUIRE_FALSE(v);
    CHECK(v.witness->x == q("0"));
  }
  SUBCASE("covers may overshoot") {
    // f(3) = 5 > f(2) + f(2) = 4 although 2 + 2 > 3.
    auto v = check_generalized_subadditivity(table_of({{"0", "0"}, {"2", "2"}, {"3", "5"}}));
    REQUIRE_FALSE(v);
    CHECK(v.witness->x == q("3"));
    CHECK(strings(v.witness->multiset) == std::vector<std::string>{"2", "2"});
  }
}

TEST_CASE("subadditivity check agrees with the brute-force oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    FunctionTable f = random_table(rng);
    auto got = check_generalized_subadditivity(f);
    auto expected = oracle::first_subadditivity_violation(exact_pairs(f));
    REQUIRE(got.holds() == !expected.has_value());
    if (expected) {
      CHECK(got.witness->x.exact() == *expected);
      Rational sum = 0;
      Rational cost = 0;
      for (const auto& a : got.witness->multiset) {
        sum += a.exact();
        cost += f(a)->exact();
      }
      CHECK(sum >= *expected);
      CHECK(cost == got.witness->rhs.exact());
      CHECK(got.witness->lhs.exact() > cost);
    }
  }
}

TEST_CASE("subadditive hull") {
  auto f = table_of({{"0", "0"}, {"1", "1"}, {"3", "2"}});
  auto h = hull(f);
  CHECK(hull_eval(h, q("0")) == q("0"));
  CHECK(hull_eval(h, q("1/2")) == q("1"));
  CHECK(hull_eval(h, q("2")) == q("2"));
  CHECK(hull_eval(h, q("4")) == q("3"));
  CHECK(hull_eval(h, q("6")) == q("4"));
  CHECK(hull_eval(h, q("7")) == q("5"));
  auto cover = hull_cover(h, q("4"));
  CHECK(strings(cover.parts) == std::vector<std::string>{"1", "3"});

  CHECK(kind_of([] { hull(table_of({{"0", "1"}, {"1", "1"}})); }) == ErrorKind::NonzeroAtZero);
  CHECK(kind_of([] { hull(table_of({{"0", "0"}})); }) == ErrorKind::NoPositiveElement);
  CHECK(kind_of([] { hull(table_of({{"0", "0"}, {"1", "0"}})); }) == ErrorKind::NonPositiveValue);
}

TEST_CASE("hull matches the oracle, restricts to subadditive tables, and is monotone and subadditive") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    FunctionTable f = random_table(rng);
    auto h = hull(f);
    auto pairs = exact_pairs(f);
    for (int k = 0; k < 10; ++k) {
      Rational x(static_cast<long>(rng() % 60), 4);
      CHECK(hull_eval(h, Scalar(x)).exact() == oracle::hull_value(pairs, x));
    }
    if (check_generalized_subadditivity(f)) {
      for (const auto& [a, fa] : f.entries()) CHECK(hull_eval(h, a) == fa);
    }
    for (int k = 0; k < 10; ++k) {
      Scalar x(rat(static_cast<long>(rng() % 40), 4));
      Scalar y(rat(static_cast<long>(rng() % 40), 4));
      Scalar hx = hull_eval(h, x);
      Scalar hy = hull_eval(h, y);
      if (x <= y) CHECK(hx <= hy);
      CHECK(hull_eval(h, x + y) <= hx + hy);
    }
  }
}

TEST_CASE("metric-preserving predicate") {
  using Reason = MetricPreservingFailure::Reason;
  CHECK(is_metric_preserving(table_of({{"0", "0"}, {"1", "1"}, {"2", "3/2"}})));
  CHECK(is_metric_preserving(table_of({{"0", "1"}, {"1", "1"}})).witness->reason == Reason::NonzeroAtZero);
  CHECK(is_metric_preserving(table_of({{"0", "0"}, {"1", "0"}})).witness->reason == Reason::NotPositive);
  CHECK(is_metric_preserving(table_of({{"0", "0"}, {"1", "2"}, {"2", "1"}})).witness->reason == Reason::NotIncreasing);
  auto v = is_metric_preserving(table_of({{"0", "0"}, {"1", "1"}, {"2", "4"}}));
  CHECK(v.witness->reason == Reason::NotSubadditive);
  CHECK(v.witness->at == q("2"));
  CHECK(v.witness->violation.has_value());
}

TEST_CASE("square of a path breaks the triangle inequality") {
  Space path = space_of({"a", "b", "c"}, {{"0", "1", "2"}, {"1", "0", "1"}, {"2", "1", "0"}});
  CHECK(is_metric(path));
  Space squared = apply_function(path, FunctionTable::power({q("0"), q("1"), q("2")}, 2));
  auto v = is_metric(squared);
  REQUIRE_FALSE(v);
  const auto& w = *v.witness;
  CHECK(squared.at(w.x, w.z) == q("1"));
  CHECK(squared.at(w.z, w.y) == q("1"));
  CHECK(squared.at(w.x, w.y) == q("4"));
}

TEST_CASE("apply_function errors") {
  Space t = triangle("1", "2", "3");
  CHECK(kind_of([&] { apply_function(t, table_of({{"0", "0"}, {"1", "1"}, {"2", "2"}})); }) == ErrorKind::DomainGap);
  CHECK(kind_of([&] { apply_function(t, table_of({{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}})); }) ==
        ErrorKind::NotPositiveDefinite);
  CHECK(kind_of([&] { apply_function(t, table_of({{"0", "0"}, {"1", "2"}, {"2", "2"}, {"3", "4"}})); }) ==
        ErrorKind::NotStrictlyIncreasing);
  Space id = apply_function(t, FunctionTable::linear(distance_set(t).values, q("3")));
  CHECK(id.at(1, 2) == q("9"));
}

TEST_CASE("snowflake") {
  Space t = triangle("1", "4", "9");
  Space half = snowflake(t, Rational(1, 2));
  CHECK(half.backend().is_exact());
  CHECK(half.at(1, 2) == q("3"));
  CHECK(snowflake(t, Rational(1)) == t);
  Space irr = snowflake(triangle("1", "2", "2"), Rational(1, 2));
  CHECK_FALSE(irr.backend().is_exact());
  CHECK(std::abs(irr.at(0, 2).to_double() - std::sqrt(2.0)) < 1e-12);
  CHECK(kind_of([&] { snowflake(t, Rational(0)); }) == ErrorKind::NonpositiveExponent);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Space m = random_metric(6, seed);
    Space s = snowflake(m, Rational(1, 3));
    CHECK(is_metric(s));
    CHECK(coincreasing(m, s));
    Space u = random_ultrametric(6, seed);
    CHECK(is_ultrametric(snowflake(u, Rational(5, 2))));
  }
}
