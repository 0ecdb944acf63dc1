#include "support.hpp"

#include <doctest.h>

using namespace polyfold;
using namespace polyfold::testing;

namespace {

/// Random star-shaped polygon around the origin.
Polygon random_star_polygon(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> r(0.5, 2.0), jitter(0.1, 0.9);
  std::vector<Vec2> pts;
  for (int k = 0; k < n; ++k) {
    const double t = 2 * kPi * (k + jitter(rng)) / n;
    pts.push_back(r(rng) * Vec2(std::cos(t), std::sin(t)));
  }
  return Polygon::from_points(pts);
}

/// Even-odd ray casting along +x, written independently of contains_point.
bool ray_cast_inside(const Ring& ring, const Vec2& p) {
  bool inside = false;
  for (size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    const Vec2& a = ring[i];
    const Vec2& b = ring[j];
    if ((a.y() > p.y()) != (b.y() > p.y()) &&
        p.x() < (b.x() - a.x()) * (p.y() - a.y()) / (b.y() - a.y()) + a.x())
      inside = !inside;
  }
  return inside;
}

Ring square_at(double x, double y) { return {{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}}; }

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("unit square metrics") {
    const auto m = polygon_metrics(unit_square());
    CHECK(m.area == doctest::Approx(1));
    CHECK(m.perimeter == doctest::Approx(4));
    CHECK(m.diameter == doctest::Approx(std::sqrt(2.0)));
    REQUIRE(m.angles.size() == 4);
    for (double a : m.angles) CHECK(a == doctest::Approx(90));
  }

  TEST_CASE("latin cross metrics") {
    const auto m = polygon_metrics(latin_cross());
    CHECK(m.area == doctest::Approx(6));
    CHECK(m.perimeter == doctest::Approx(14));
    int right = 0, reflex = 0;
    for (double a : m.angles) {
      right += std::abs(a - 90) < 1e-9;
      reflex += std::abs(a - 270) < 1e-9;
    }
    CHECK(right == 8);
    CHECK(reflex == 4);
  }

  TEST_CASE("canonicalization") {
    // clockwise input with a repeated point and a straight vertex
    const Polygon p = Polygon::from_points({{0, 0}, {0, 1}, {1, 1}, {1, 0.5}, {1, 0}, {1, 0}});
    CHECK(p.size() == 4);
    CHECK(signed_area(p.vertices()) > 0);
  }

  TEST_CASE("invalid polygons") {
    auto code_of = [](std::vector<Vec2> pts) {
      try {
        Polygon::from_points(std::move(pts));
      } catch (const GeometryError& e) {
        return static_cast<int>(e.code());
      }
      return -1;
    };
    CHECK(code_of({{0, 0}, {1, 0}}) == static_cast<int>(GeometryErrc::TooFewVertices));
    CHECK(code_of({{0, 0}, {1, 0}, {2, 0}}) != -1);
    CHECK(code_of({{0, 0}, {1, 1}, {1, 0}, {0, 1}}) == static_cast<int>(GeometryErrc::ZeroArea));
    CHECK(code_of({{0, 0}, {4, 0}, {4, 2}, {1, -1}, {0, 2}}) == static_cast<int>(GeometryErrc::NonSimplePolygon));
    CHECK(code_of({{0, 0}, {1, 0}, {std::nan(""), 1}}) == static_cast<int>(GeometryErrc::NonFinite));
  }

  TEST_CASE("point location") {
    const Polygon sq = unit_square();
    CHECK(contains_point(sq, {0.5, 0.5}) == Location::Interior);
    CHECK(contains_point(sq, {1, 0.5}) == Location::Boundary);
    CHECK(contains_point(sq, {2, 0}) == Location::Exterior);
  }

  TEST_CASE("clip a face inside the cross") {
    const auto comps = intersect_face(square_at(1, 0), latin_cross());
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].area == doctest::Approx(1));
    CHECK(comps[0].ring.size() == 4);
  }

  TEST_CASE("clip a disjoint face") { CHECK(intersect_face(square_at(10, 10), latin_cross()).empty()); }

  TEST_CASE("clip across the mouth of a U") {
    const Polygon u = Polygon::from_points({{0, 0}, {3, 0}, {3, 2}, {2, 2}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
    // unit square turned 45 degrees: its diagonal spans the notch, its lower tip stays above the base
    const Vec2 c(1.5, 1.8);
    const double h = std::sqrt(0.5);
    const Ring face{c + Vec2(0, -h), c + Vec2(h, 0), c + Vec2(0, h), c + Vec2(-h, 0)};
    const auto comps = intersect_face(face, u);
    CHECK(comps.size() == 2);
  }

  TEST_CASE("exterior angles of random polygons sum to 360") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
      const Polygon p = random_star_polygon(rng, 3 + t % 12);
      double sum = 0;
      for (int i = 0; i < p.size(); ++i) sum += 180 - p.interior_angle(i);
      CHECK(std::abs(sum - 360) <= p.tolerance().eps_angle);
    }
  }

  TEST_CASE("point location agrees with ray casting") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-2.5, 2.5);
    for (const Polygon& p : {latin_cross(), random_star_polygon(rng, 9), random_star_polygon(rng, 17)}) {
      int disagreements = 0;
      for (int k = 0; k < 1000; ++k) {
        const Vec2 pt(u(rng) + (p.area() > 5 ? 1.5 : 0), u(rng) + (p.area() > 5 ? 2 : 0));
        const Location loc = contains_point(p, pt);
        if (loc == Location::Boundary) continue;
        disagreements += (loc == Location::Interior) != ray_cast_inside(p.vertices(), pt);
      }
      CHECK(disagreements == 0);
    }
  }

  TEST_CASE("clipped components stay within both inputs") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.5, 1.5), ang(0, 2 * kPi);
    for (int t = 0; t < 100; ++t) {
      const Polygon p = random_star_polygon(rng, 12);
      const Mat2 r = rotation(ang(rng));
      const Vec2 s(u(rng), u(rng));
      Ring face;
      for (const auto& v : square_at(-0.5, -0.5)) face.push_back(r * v + s);
      std::vector<ClipComponent> comps;
      try {
        comps = intersect_face(face, p);
      } catch (const GeometryError&) {
        continue;  // only slivers
      }
      double sum = 0;
      const double eps = 1e-7;
      for (const auto& c : comps) {
        sum += c.area;
        for (const auto& v : c.ring) {
          double d = 1e300;
          for (size_t k = 0; k < face.size(); ++k)
            d = std::min(d, point_segment_distance(v, face[k], face[(k + 1) % face.size()]));
          for (int k = 0; k < p.size(); ++k) d = std::min(d, point_segment_distance(v, p.vertex(k), p.vertex(k + 1)));
          CHECK(d <= eps);
        }
      }
      CHECK(sum <= std::min(1.0, p.area()) + eps);
    }
  }
}
