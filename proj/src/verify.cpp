#include "polyfold/verify.hpp"

// Without this, Boost 1.7x snaps overlay input to an integer grid (errors near 1e-7).
#define BOOST_GEOMETRY_NO_ROBUSTNESS
#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>

#include <cmath>
#include <sstream>

namespace polyfold {

namespace bg = boost::geometry;

namespace {

using BPoint = bg::model::d2::point_xy<double>;
using BPolygon = bg::model::polygon<BPoint, false, false>;  // counterclockwise, open
using BMulti = bg::model::multi_polygon<BPolygon>;

BPolygon to_boost(const Ring& ring) {
  BPolygon poly;
  for (const auto& p : ring) bg::append(poly.outer(), BPoint(p.x(), p.y()));
  bg::correct(poly);
  return poly;
}

double overlap_area(const BPolygon& a, const BPolygon& b) {
  BMulti out;
  bg::intersection(a, b, out);
  return bg::area(out);
}

double outside_distance(const BPolygon& piece, const Ring& chart) {
  double worst = 0;
  for (const auto& v : piece.outer()) {
    const Vec2 x(v.x(), v.y());
    for (size_t k = 0; k < chart.size(); ++k) {
      const Vec2 e = chart[(k + 1) % chart.size()] - chart[k];
      worst = std::max(worst, -cross2(e, x - chart[k]) / e.norm());
    }
  }
  return worst;
}

std::string fmt(const std::string& what, double v) {
  std::ostringstream s;
  s << what << " (" << v << ")";
  return s.str();
}

}  // namespace

VerifyReport verify_certificate(const Polygon& p, const SolidModel& q, const FoldingCertificate& cert,
                                const VerifyLimits& limits) {
  VerifyReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.problems.push_back(std::move(msg));
  };
  const BPolygon sheet = to_boost(p.vertices());

  std::vector<std::vector<BPolygon>> pieces(static_cast<size_t>(q.num_faces()));
  double total = 0;
  for (const auto& r : cert.region_map) {
    if (r.placement.face < 0 || r.placement.face >= q.num_faces()) {
      fail("region refers to a missing face");
      continue;
    }
    const BPolygon plane = to_boost(r.shape);
    const double a = bg::area(plane);
    total += a;
    if (a - overlap_area(plane, sheet) > limits.overlap_rel * p.area()) fail(fmt("region leaves the polygon", a - overlap_area(plane, sheet)));
    Ring local;
    for (const auto& v : r.shape) local.push_back(r.placement.inverse(v));
    pieces[static_cast<size_t>(r.placement.face)].push_back(to_boost(local));
  }
  rep.area_error = std::abs(total - p.area()) / p.area();
  if (rep.area_error > limits.face_area_rel) fail(fmt("regions do not cover the polygon", rep.area_error));

  for (int f = 0; f < q.num_faces(); ++f) {
    const auto& list = pieces[static_cast<size_t>(f)];
    const double fa = q.face_area(f);
    const Ring& chart = q.chart(f);
    double sum = 0;
    for (size_t i = 0; i < list.size(); ++i) {
      const double a = bg::area(list[i]);
      sum += a;
      // the chart is convex, so containment reduces to per-vertex edge tests
      const double outside = outside_distance(list[i], chart);
      if (outside > limits.position_abs) fail(fmt("pushed region leaves its face", outside));
      for (size_t j = i + 1; j < list.size(); ++j) {
        if (!bg::intersects(list[i], list[j])) continue;
        const double ov = overlap_area(list[i], list[j]) / fa;
        rep.max_overlap = std::max(rep.max_overlap, ov);
        if (ov > limits.overlap_rel) fail(fmt("pushed regions overlap", ov));
      }
    }
    const double err = std::abs(sum - fa) / fa;
    rep.max_face_area_error = std::max(rep.max_face_area_error, err);
    if (err > limits.face_area_rel) fail(fmt("face " + std::to_string(f) + " is not covered exactly", err));
  }

  auto lift = [&](const RegionRecord& r, const Vec2& pt) {
    return q.to_3d(r.placement.face, r.placement.inverse(pt));
  };
  for (const auto& c : cert.creases) {
    if (c.region_a < 0 || c.region_b < 0 || c.region_a >= static_cast<int>(cert.region_map.size()) ||
        c.region_b >= static_cast<int>(cert.region_map.size())) {
      fail("crease refers to a missing region");
      continue;
    }
    const auto& ra = cert.region_map[static_cast<size_t>(c.region_a)];
    const auto& rb = cert.region_map[static_cast<size_t>(c.region_b)];
    for (const Vec2& pt : {c.a, c.b})
      if ((lift(ra, pt) - lift(rb, pt)).norm() > limits.position_abs) fail("crease sides map to different points");
  }

  // boundary points are lifted through any region that touches them
  auto lift_boundary = [&](const Vec2& pt, Vec3& out) {
    double best = 1e300;
    for (const auto& r : cert.region_map) {
      for (size_t k = 0; k < r.shape.size(); ++k) {
        const double d = point_segment_distance(pt, r.shape[k], r.shape[(k + 1) % r.shape.size()]);
        if (d < best) {
          best = d;
          out = lift(r, pt);
        }
      }
    }
    return best <= limits.position_abs;
  };
  for (const auto& bp : cert.boundary_pairing) {
    Vec3 x0, x1, y0, y1;
    if (!lift_boundary(bp.a0, x0) || !lift_boundary(bp.a1, x1) || !lift_boundary(bp.b0, y0) ||
        !lift_boundary(bp.b1, y1)) {
      fail("glued boundary piece is not on any region");
      continue;
    }
    if ((x0 - y0).norm() > limits.position_abs || (x1 - y1).norm() > limits.position_abs)
      fail("glued boundary pieces map to different places");
  }
  return rep;
}

}  // namespace polyfold
