#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "paco/geo.hpp"
#include "paco/rng.hpp"

using namespace paco;

TEST_CASE("haversine identity and frozen distances") {
  const GeoCoord a{-122.39488, 37.75134};
  CHECK(haversine_distance(a, a) == 0.0);

  // One degree of latitude at the equator: 2*pi*R / 360.
  CHECK(haversine_distance({0.0, 0.0}, {0.0, 1.0}) == doctest::Approx(111194.92664455873).epsilon(1e-9));
  CHECK(std::fabs(haversine_distance({0.0, 0.0}, {0.0, 1.0}) - 111194.9) < 0.1);

  // Antipodal along the equator: pi*R.
  CHECK(std::fabs(haversine_distance({0.0, 0.0}, {-180.0, 0.0}) - 20015086.8) < 1.0);
}

TEST_CASE("haversine symmetry and triangle inequality") {
  SeededRng rng(11);
  const GeoBox region{{-180.0, -80.0}, {179.0, 80.0}};
  for (int i = 0; i < 200; ++i) {
    const GeoCoord a{rng.uniform(region.min.lon, region.max.lon),
                     rng.uniform(region.min.lat, region.max.lat)};
    const GeoCoord b{rng.uniform(region.min.lon, region.max.lon),
                     rng.uniform(region.min.lat, region.max.lat)};
    const GeoCoord c{rng.uniform(region.min.lon, region.max.lon),
                     rng.uniform(region.min.lat, region.max.lat)};
    CHECK(haversine_distance(a, b) == haversine_distance(b, a));
    const double ab = haversine_distance(a, b);
    const double bc = haversine_distance(b, c);
    const double ac = haversine_distance(a, c);
    CHECK(ac <= (ab + bc) * (1.0 + 1e-6) + 1e-6);
    CHECK(ab >= 0.0);
  }
}

TEST_CASE("normalize_lon wraps into [-180, 180)") {
  CHECK(normalize_lon(180.0) == -180.0);
  CHECK(normalize_lon(-180.0) == -180.0);
  CHECK(normalize_lon(190.0) == doctest::Approx(-170.0));
  CHECK(normalize_lon(-190.0) == doctest::Approx(170.0));
  CHECK(normalize_lon(540.0) == -180.0);
  CHECK(normalize_lon(12.5) == 12.5);
}

TEST_CASE("expand_box degenerate and derived spans") {
  const GeoCoord c{10.0, 20.0};
  const GeoBox zero = expand_box(c, 0.0);
  CHECK(zero.min == c);
  CHECK(zero.max == c);

  // 111194.9 m at the equator is one degree of latitude.
  const GeoBox one_deg = expand_box({0.0, 0.0}, 111194.9);
  CHECK(one_deg.min.lat == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(one_deg.max.lat == doctest::Approx(1.0).epsilon(1e-6));

  // At 60N the longitude half-span doubles (1/cos 60 = 2).
  const double d = 1000.0;
  const GeoBox eq = expand_box({0.0, 0.0}, d);
  const GeoBox north = expand_box({0.0, 60.0}, d);
  const double eq_half = eq.max.lon - 0.0;
  const double north_half = north.max.lon - 0.0;
  CHECK(north_half / eq_half == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("expand_box covers the cap and caps the corner distance") {
  SeededRng rng(7);
  for (int i = 0; i < 200; ++i) {
    const GeoCoord c{rng.uniform(-170.0, 170.0), rng.uniform(-65.0, 65.0)};
    const double h = rng.uniform(1.0, 20000.0);
    const GeoBox box = expand_box(c, h);

    // Every point within h of c lies inside the box.
    const double bearing = rng.uniform(0.0, 2.0 * kPi);
    const double dist = rng.uniform(0.0, h);
    const GeoCoord p = destination_point(c, bearing, dist);
    CHECK(box.contains(p));

    // And box members stay within the corner bound.
    const GeoCoord q{rng.uniform(box.min.lon, box.max.lon),
                     rng.uniform(box.min.lat, box.max.lat)};
    CHECK(haversine_distance(c, q) <= h * std::sqrt(2.0) * (1.0 + 1e-3));
  }
}

TEST_CASE("expand_box clamps at the poles") {
  const GeoBox polar = expand_box({0.0, 89.9}, 100000.0);
  CHECK(polar.max.lat == 90.0);
  CHECK(polar.min.lon == -180.0);
  CHECK(polar.max.lon == 180.0);
}

TEST_CASE("closest_point_in_box") {
  const GeoBox box{{-1.0, -1.0}, {1.0, 1.0}};
  const GeoCoord inside{0.25, -0.5};
  CHECK(closest_point_in_box(box, inside) == inside);
  CHECK(haversine_distance(closest_point_in_box(box, inside), inside) == 0.0);

  // Due east of the box: clamp to the east edge, same latitude.
  const GeoCoord east{3.0, 0.5};
  const GeoCoord ce = closest_point_in_box(box, east);
  CHECK(ce.lon == 1.0);
  CHECK(ce.lat == doctest::Approx(0.5).epsilon(1e-9));

  // The returned point is never farther than any sampled member.
  SeededRng rng(3);
  for (int i = 0; i < 100; ++i) {
    const GeoCoord q{rng.uniform(-40.0, 40.0), rng.uniform(-40.0, 40.0)};
    const GeoCoord close = closest_point_in_box(box, q);
    const double d = haversine_distance(q, close);
    for (int j = 0; j < 20; ++j) {
      const GeoCoord member{rng.uniform(box.min.lon, box.max.lon),
                            rng.uniform(box.min.lat, box.max.lat)};
      CHECK(d <= haversine_distance(q, member) * (1.0 + 1e-12) + 1e-9);
    }
  }
}

TEST_CASE("destination_point agrees with haversine") {
  SeededRng rng(5);
  for (int i = 0; i < 100; ++i) {
    const GeoCoord start{rng.uniform(-170.0, 170.0), rng.uniform(-80.0, 80.0)};
    const double dist = rng.uniform(0.0, 50000.0);
    const GeoCoord end = destination_point(start, rng.uniform(0.0, 2.0 * kPi), dist);
    CHECK(haversine_distance(start, end) == doctest::Approx(dist).epsilon(1e-9));
  }
}

TEST_CASE("coordinate validity") {
  CHECK(valid_coord({0.0, 0.0}));
  CHECK(valid_coord({-180.0, -90.0}));
  CHECK_FALSE(valid_coord({180.0, 0.0}));
  CHECK_FALSE(valid_coord({0.0, 90.5}));
  CHECK(valid_box({{-1.0, -1.0}, {1.0, 1.0}}));
  CHECK_FALSE(valid_box({{1.0, -1.0}, {-1.0, 1.0}}));
}
