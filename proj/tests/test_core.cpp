#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "wsim/error.hpp"
#include "wsim/families.hpp"

using namespace wsim;
using wsim::test::q;
using wsim::test::space_of;
using wsim::test::strings;
using wsim::test::triangle;

TEST_CASE("scalar parsing is exact") {
  CHECK(q("3/6").to_string() == "1/2");
  CHECK(q("0.125").to_string() == "1/8");
  CHECK(q("1e-3").to_string() == "1/1000");
  CHECK(q("2.5E2").to_string() == "250");
  CHECK(q("1.5/0.5").to_string() == "3");
  CHECK_THROWS_AS(q("abc"), Error);
  CHECK_THROWS_AS(q("1/0"), Error);
}

TEST_CASE("float scalars compare within relative tolerance") {
  Scalar a = Scalar::approx(1.0, 1e-9);
  Scalar b = Scalar::approx(1.0 + 1e-12, 1e-9);
  Scalar c = Scalar::approx(1.0 + 1e-6, 1e-9);
  CHECK(a == b);
  CHECK(a < c);
  CHECK(Scalar::approx(1e6, 1e-9) == Scalar::approx(1e6 + 1e-4, 1e-9));
}

TEST_CASE("exact powers") {
  CHECK(*exact_power(Rational(9, 4), Rational(1, 2)) == Rational(3, 2));
  CHECK(*exact_power(Rational(8), Rational(2, 3)) == Rational(4));
  CHECK_FALSE(exact_power(Rational(2), Rational(1, 2)).has_value());
}

TEST_CASE("new_space validates the semimetric axioms") {
  SUBCASE("smallest nondegenerate case") {
    Space s = space_of({"a", "b"}, {{"0", "1"}, {"1", "0"}});
    CHECK(s.size() == 2);
    CHECK(s.at(0, 1) == Scalar(1));
  }
  SUBCASE("asymmetric matrix") {
    try {
      space_of({"a", "b"}, {{"0", "1"}, {"2", "0"}});
      FAIL("expected NotSemimetric");
    } catch (const NotSemimetricError& e) {
      CHECK(e.row() == 0);
      CHECK(e.col() == 1);
    }
  }
  SUBCASE("zero off-diagonal distance") {
    try {
      space_of({"a", "b"}, {{"0", "0"}, {"0", "0"}});
      FAIL("expected NotSemimetric");
    } catch (const NotSemimetricError& e) {
      CHECK(e.row() == 0);
      CHECK(e.col() == 1);
    }
  }
  SUBCASE("nonzero diagonal") {
    CHECK_THROWS_AS(space_of({"a", "b"}, {{"1", "1"}, {"1", "0"}}), NotSemimetricError);
  }
  SUBCASE("duplicate labels") {
    try {
      space_of({"a", "a"}, {{"0", "1"}, {"1", "0"}});
      FAIL("expected DuplicateLabel");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DuplicateLabel);
    }
  }
  SUBCASE("shape mismatch") {
    CHECK_THROWS_AS(space_of({"a", "b", "c"}, {{"0", "1"}, {"1", "0"}}), Error);
  }
  SUBCASE("one point") {
    Space s = space_of({"p"}, {{"0"}});
    CHECK(strings(distance_set(s).values) == std::vector<std::string>{"0"});
    CHECK(is_metric(s));
    CHECK(is_ultrametric(s));
  }
}

TEST_CASE("is_metric") {
  CHECK(is_metric(triangle("1", "1", "1")));
  auto v = is_metric(triangle("1", "1", "3"));
  REQUIRE_FALSE(v);
  CHECK(*v.witness == TripleWitness{1, 0, 2});  // (b, a, c): 3 > 1 + 1

  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(is_metric(random_metric(6, seed)));
}

TEST_CASE("random_metric agrees with an independent shortest-path closure") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Space s = random_metric(6, seed);
    std::vector<std::vector<Rational>> d(6, std::vector<Rational>(6));
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) d[i][j] = s.at(i, j).exact();
    }
    CHECK(oracle::shortest_paths(d) == d);
  }
}

TEST_CASE("is_ultrametric") {
  CHECK(is_ultrametric(triangle("1", "1", "1")));
  auto v = is_ultrametric(triangle("2", "1", "1"));
  REQUIRE_FALSE(v);
  CHECK(*v.witness == TripleWitness{0, 2, 1});  // (a, c, b): 2 > max(1, 1)
  CHECK(is_ultrametric(max_ultrametric_from_set({q("0"), q("1"), q("2")})));
}

TEST_CASE("ultrametric implies metric") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Space u = random_ultrametric(1 + seed % 8, seed);
    CHECK(is_ultrametric(u));
    CHECK(is_metric(u));
    Space s = random_semimetric(5, seed);
    if (is_ultrametric(s)) CHECK(is_metric(s));
  }
}

TEST_CASE("distance_set") {
  CHECK(strings(distance_set(triangle("1", "1", "1")).values) == std::vector<std::string>{"0", "1"});
  CHECK(strings(distance_set(triangle("1", "2", "3")).values) == std::vector<std::string>{"0", "1", "2", "3"});
  auto pair = example_2_6(FamilySpec::defaults("2_6", 3));
  CHECK(strings(distance_set(pair.x).values) == std::vector<std::string>{"0", "1/3", "1/2", "1"});
}

TEST_CASE("rank_matrix") {
  RankMatrix eq = rank_matrix(triangle("1", "1", "1"));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(eq.at(i, j) == (i == j ? 0u : 1u));
  }
  RankMatrix r = rank_matrix(triangle("1", "2", "3"));
  CHECK(r.at(0, 1) == 1);
  CHECK(r.at(0, 2) == 2);
  CHECK(r.at(1, 2) == 3);

  Backend fb = Backend::floating(1e-9);
  Space f = space_of({"a", "b", "c"}, {{"0", "1.0", "1.000000000001"}, {"1.0", "0", "2"}, {"1.000000000001", "2", "0"}}, fb);
  RankMatrix rf = rank_matrix(f);
  CHECK(rf.at(0, 1) == 1);
  CHECK(rf.at(0, 2) == 1);
  CHECK(rf.at(1, 2) == 2);
}

TEST_CASE("float rank grouping reports order-dependent groups") {
  Backend fb = Backend::floating(1e-9);
  // 1 and 1 + 1.5e-9 are neither clearly equal nor clearly apart.
  Space s = space_of({"a", "b", "c"}, {{"0", "1", "1.0000000015"}, {"1", "0", "3"}, {"1.0000000015", "3", "0"}}, fb);
  try {
    rank_matrix(s);
    FAIL("expected AmbiguousRanking");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AmbiguousRanking);
  }
}

TEST_CASE("rank matrix round-trips the matrix and puts rank 0 on the diagonal only") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Space s = seed % 2 ? random_metric(7, seed) : random_semimetric(7, seed);
    RankStructure rs = rank_structure(s);
    CHECK(rs.distances.values.front() == Scalar(0));
    for (std::size_t k = 1; k < rs.distances.size(); ++k) CHECK(rs.distances.values[k - 1] < rs.distances.values[k]);
    std::uint32_t max_rank = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        CHECK(identical(rs.distances.values[rs.ranks.at(i, j)], s.at(i, j)));
        CHECK((rs.ranks.at(i, j) == 0) == (i == j));
        CHECK(rs.ranks.at(i, j) == rs.ranks.at(j, i));
        max_rank = std::max(max_rank, rs.ranks.at(i, j));
      }
    }
    CHECK(max_rank + 1 == rs.distances.size());
  }
}

TEST_CASE("max_ultrametric_from_set") {
  Space s = max_ultrametric_from_set({q("0"), q("1"), q("2")});
  CHECK(s.at(0, 1) == Scalar(1));
  CHECK(s.at(0, 2) == Scalar(2));
  CHECK(s.at(1, 2) == Scalar(2));
  CHECK(strings(distance_set(s).values) == std::vector<std::string>{"0", "1", "2"});

  Space one = max_ultrametric_from_set({q("0")});
  CHECK(one.size() == 1);

  Space mixed = max_ultrametric_from_set({q("7"), q("1/2"), q("0"), q("1")});
  CHECK(strings(distance_set(mixed).values) == std::vector<std::string>{"0", "1/2", "1", "7"});
  CHECK(is_ultrametric(mixed));

  try {
    max_ultrametric_from_set({q("1"), q("2")});
    FAIL("expected ZeroMissing");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroMissing);
  }
  try {
    max_ultrametric_from_set({q("0"), q("1"), q("2/2")});
    FAIL("expected Duplicates");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Duplicates);
  }
}

TEST_CASE("increasing_bijection") {
  DistanceSet a{{q("0"), q("1"), q("2")}};
  DistanceSet b{{q("0"), q("10"), q("20")}};
  ScalingFunction f = increasing_bijection(a, b);
  CHECK(*f(q("1")) == q("10"));
  CHECK(*f(q("2")) == q("20"));
  CHECK_FALSE(f(q("3")).has_value());
  try {
    increasing_bijection(DistanceSet{{q("0"), q("1")}}, a);
    FAIL("expected CardinalityMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CardinalityMismatch);
  }

  auto pair = example_2_6(FamilySpec::defaults("2_6", 4));
  ScalingFunction g = increasing_bijection(distance_set(pair.y), distance_set(pair.x));
  auto spec = FamilySpec::defaults("2_6", 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(*g(Scalar(spec.p[i])) == Scalar(spec.r[i]));
}

TEST_CASE("coincreasing") {
  Space d = triangle("1", "2", "3");
  CHECK(coincreasing(d, triangle("2", "4", "6")));
  CHECK(coincreasing(d, triangle("1", "4", "9")));
  auto v = coincreasing(d, triangle("2", "1", "3"));
  REQUIRE_FALSE(v);
  CHECK(*v.witness == QuadrupleWitness{0, 1, 0, 2});  // pairs (a,b) and (a,c) swap order
  Space other = space_of({"a", "b", "x"}, {{"0", "1", "1"}, {"1", "0", "1"}, {"1", "1", "0"}});
  CHECK_THROWS_AS(coincreasing(d, other), Error);
}

TEST_CASE("coincreasing is an equivalence relation") {
  const std::vector<std::string> labels{"a", "b", "c", "d"};
  auto draw = [&](std::uint64_t seed) {
    Space s = random_semimetric(4, seed);
    return Space::create(labels, s.matrix());
  };
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Space a = draw(seed);
    Space b = draw(seed + 1000);
    Space c = draw(seed + 2000);
    CHECK(coincreasing(a, a));
    CHECK(bool(coincreasing(a, b)) == bool(coincreasing(b, a)));
    if (coincreasing(a, b) && coincreasing(b, c)) CHECK(coincreasing(a, c));
  }
}
