#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinlattice/lattice.hpp"

using namespace spinlattice;

TEST_CASE("manhattan distance") {
  Metric m = Metric::manhattan();
  CHECK(distance(m, Site{0, 0}, Site{2, 3}) == 5);
  CHECK(distance(m, Site{4, -1}, Site{4, -1}) == 0);
  CHECK_THROWS_AS(distance(m, Site{0}, Site{0, 0}), std::invalid_argument);
}

TEST_CASE("torus distance wraps per axis") {
  Metric m = Metric::torus({6});
  // minimum over wrapped images: |0-5| vs 6-5
  CHECK(distance(m, Site{0}, Site{5}) == 1);
  CHECK(distance(m, Site{0}, Site{3}) == 3);
  Metric m2 = Metric::torus({6, 4});
  CHECK(distance(m2, Site{0, 0}, Site{5, 3}) == 2);
}

TEST_CASE("metric axioms on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Coord> coord(-20, 20);
  std::uniform_int_distribution<Coord> torus_coord(0, 6);
  Metric open = Metric::manhattan();
  Metric torus = Metric::torus({7, 7, 7});
  for (int it = 0; it < 500; ++it) {
    Site x{coord(rng), coord(rng), coord(rng)};
    Site y{coord(rng), coord(rng), coord(rng)};
    Site z{coord(rng), coord(rng), coord(rng)};
    CHECK(distance(open, x, y) == distance(open, y, x));
    CHECK(distance(open, x, z) <= distance(open, x, y) + distance(open, y, z));
    CHECK((distance(open, x, y) == 0) == (x == y));

    Site tx{torus_coord(rng), torus_coord(rng), torus_coord(rng)};
    Site ty{torus_coord(rng), torus_coord(rng), torus_coord(rng)};
    Site tz{torus_coord(rng), torus_coord(rng), torus_coord(rng)};
    CHECK(distance(torus, tx, ty) == distance(torus, ty, tx));
    CHECK(distance(torus, tx, tz) <= distance(torus, tx, ty) + distance(torus, ty, tz));
    CHECK((distance(torus, tx, ty) == 0) == (tx == ty));
    if (tx != ty) CHECK(distance(torus, tx, ty) >= 1);
  }
}

TEST_CASE("region canonical ordering and lookup") {
  Region r = Region::open({Site{1, 0}, Site{0, 1}, Site{0, 0}, Site{1, 0}});
  REQUIRE(r.size() == 3);  // duplicate dropped
  CHECK(r.sites()[0] == Site{0, 0});
  CHECK(r.sites()[1] == Site{0, 1});
  CHECK(r.sites()[2] == Site{1, 0});
  CHECK(r.index_of(Site{0, 1}) == 1);
  CHECK(!r.index_of(Site{5, 5}).has_value());
  CHECK(r.contains(Region::open({Site{0, 0}, Site{1, 0}})));
  CHECK_THROWS_AS(Region::on_torus({Site{0, 6}}, {6, 6}), std::invalid_argument);
}

TEST_CASE("region set operations") {
  Region a = Region::line(0, 3);
  Region b = Region::line(2, 5);
  CHECK(region_union(a, b) == Region::line(0, 5));
  CHECK(region_intersection(a, b) == Region::line(2, 3));
  CHECK(region_difference(a, b) == Region::line(0, 1));
  CHECK(a.intersects(b));
  CHECK(!a.intersects(Region::line(7, 9)));
}

TEST_CASE("region_distance") {
  Metric m = Metric::manhattan();
  Region a = Region::open({Site{0}, Site{1}});
  CHECK(region_distance(m, a, a) == 0);
  CHECK(region_distance(m, Region::open({Site{0}}), Region::open({Site{4}})) == 4);
  // brute force over the 4 pairs: |1-3| = 2 is minimal
  CHECK(region_distance(m, a, Region::open({Site{3}, Site{7}})) == 2);
  CHECK_THROWS_AS(region_distance(m, a, Region()), std::invalid_argument);
}

TEST_CASE("ball") {
  Metric m = Metric::manhattan();
  Region line = Region::line(-4, 4);
  CHECK(ball(m, Site{0}, 0, line) == Region::open({Site{0}}));
  CHECK(ball(m, Site{0}, 2, line) == Region::line(-2, 2));
  Region plane = Region::box({-2, -2}, {2, 2});
  CHECK(ball(m, Site{0, 0}, 1, plane).size() == 5);
  // monotone in radius
  for (std::int64_t r = 0; r < 4; ++r)
    CHECK(ball(m, Site{0, 0}, r + 1, plane).contains(ball(m, Site{0, 0}, r, plane)));
}

TEST_CASE("diameter") {
  Metric m = Metric::manhattan();
  CHECK(diameter(m, Region::open({Site{3}})) == 0);
  CHECK(diameter(m, Region::line(0, 2)) == 2);
  CHECK(diameter(m, Region::box({0, 0}, {1, 1})) == 2);
  CHECK_THROWS_AS(diameter(m, Region()), std::invalid_argument);
}

TEST_CASE("fattening") {
  Metric m = Metric::manhattan();
  Region line = Region::line(-6, 6);
  Region a = Region::open({Site{0}});
  CHECK(fattening(a, 0, line, m) == a);
  CHECK(fattening(a, 1, line, m) == Region::line(-1, 1));
  Region two = Region::open({Site{0}, Site{2}});
  CHECK(fattening(two, 1, line, m) == Region::line(-1, 3));

  // fattening(a, r1+r2) contains fattening(fattening(a, r1), r2)
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Coord> coord(-3, 3);
  std::uniform_int_distribution<std::int64_t> rad(0, 2);
  for (int it = 0; it < 100; ++it) {
    Region seed = Region::open({Site{coord(rng)}, Site{coord(rng)}});
    std::int64_t r1 = rad(rng), r2 = rad(rng);
    Region twice = fattening(fattening(seed, r1, line, m), r2, line, m);
    CHECK(fattening(seed, r1 + r2, line, m).contains(twice));
  }
}

TEST_CASE("serialization preserves order bit-exactly") {
  Region r = Region::on_torus({Site{1, 0, 1}, Site{0, 1, 1}, Site{0, 0, 0}}, {2, 2, 2});
  Region back = Region::from_json(r.to_json());
  REQUIRE(back == r);
  for (std::size_t i = 0; i < r.size(); ++i) CHECK(back.sites()[i] == r.sites()[i]);
  CHECK(back.to_json().dump() == r.to_json().dump());

  Region open = Region::line(-2, 2);
  CHECK(Region::from_json(open.to_json()) == open);
}
