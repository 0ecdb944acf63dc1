#include "polyfold/solid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace polyfold {

namespace {

constexpr double kMeshEps = 1e-9;
constexpr double kAngleEps = 1e-7;

Mat2 mirror_x() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

double angle_of(const Vec2& v) { return std::atan2(v.y(), v.x()); }

// Faces of the convex hull of `pts`, each as an unordered vertex set.
std::vector<std::vector<int>> hull_faces(const std::vector<Vec3>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<int>> faces;
  std::map<std::vector<int>, bool> seen;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec3 nrm = (pts[j] - pts[i]).cross(pts[k] - pts[i]);
        if (nrm.norm() < 1e-9) continue;
        nrm.normalize();
        int pos = 0, neg = 0;
        std::vector<int> on;
        for (int m = 0; m < n; ++m) {
          const double d = nrm.dot(pts[m] - pts[i]);
          if (d > 1e-9) ++pos;
          else if (d < -1e-9) ++neg;
          else on.push_back(m);
        }
        if (pos > 0 && neg > 0) continue;
        if (seen.count(on)) continue;
        seen[on] = true;
        faces.push_back(on);
      }
  return faces;
}

SolidModel platonic(SolidKind kind, std::vector<Vec3> pts) {
  double edge = 1e300;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) edge = std::min(edge, (pts[i] - pts[j]).norm());
  for (auto& p : pts) p /= edge;
  auto faces = hull_faces(pts);
  return build_from_mesh(kind, std::move(pts), std::move(faces));
}

}  // namespace

const Vec2& SolidModel::chart_point(int f, int corner) const {
  const Ring& c = charts_[static_cast<size_t>(f)];
  const int m = static_cast<int>(c.size());
  return c[static_cast<size_t>(((corner % m) + m) % m)];
}

double SolidModel::corner_angle(int f, int corner) const {
  const Vec2& p = chart_point(f, corner);
  return ccw_angle_deg(chart_point(f, corner + 1) - p, chart_point(f, corner - 1) - p);
}

Vec3 SolidModel::to_3d(int f, const Vec2& local) const {
  const auto i = static_cast<size_t>(f);
  return origin_[i] + local.x() * e1_[i] + local.y() * e2_[i];
}

Vec2 SolidModel::to_chart(int f, const Vec3& p) const {
  const auto i = static_cast<size_t>(f);
  const Vec3 d = p - origin_[i];
  return Vec2(d.dot(e1_[i]), d.dot(e2_[i]));
}

SolidModel build_from_mesh(SolidKind kind, std::vector<Vec3> verts,
                           std::vector<std::vector<int>> faces) {
  const int nv = static_cast<int>(verts.size());
  if (nv < 4 || faces.size() < 4) throw SolidError(SolidErrc::InvalidMesh, "solid needs at least 4 vertices and faces");
  for (const auto& v : verts)
    if (!v.allFinite()) throw SolidError(SolidErrc::InvalidMesh, "non-finite solid vertex");
  Vec3 center = Vec3::Zero();
  for (const auto& v : verts) center += v;
  center /= nv;

  SolidModel q;
  q.kind_ = kind;
  for (auto& f : faces) {
    if (f.size() < 3) throw SolidError(SolidErrc::InvalidMesh, "face with fewer than 3 vertices");
    for (int v : f)
      if (v < 0 || v >= nv) throw SolidError(SolidErrc::InvalidMesh, "face references a missing vertex");
    Vec3 fc = Vec3::Zero();
    for (int v : f) fc += verts[static_cast<size_t>(v)];
    fc /= static_cast<double>(f.size());
    // Newell normal; fall back to sorting around the centroid when unordered
    Vec3 outward = (fc - center);
    if (outward.norm() < kMeshEps) throw SolidError(SolidErrc::NonConvexSolid, "face passes through the centroid");
    outward.normalize();
    const Vec3 ref = (verts[static_cast<size_t>(f[0])] - fc).normalized();
    const Vec3 ref2 = outward.cross(ref);
    std::sort(f.begin(), f.end(), [&](int a, int b) {
      const Vec3 da = verts[static_cast<size_t>(a)] - fc, db = verts[static_cast<size_t>(b)] - fc;
      return std::atan2(da.dot(ref2), da.dot(ref)) < std::atan2(db.dot(ref2), db.dot(ref));
    });
    // rotate so the smallest index comes first (stable chart origin)
    std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
  }

  q.vertices_ = verts;
  q.faces_ = faces;
  const size_t nf = faces.size();
  q.charts_.resize(nf);
  q.origin_.resize(nf);
  q.e1_.resize(nf);
  q.e2_.resize(nf);
  q.face_area_.resize(nf);
  double min_edge = 1e300;
  for (size_t f = 0; f < nf; ++f) {
    const auto& fv = faces[f];
    const Vec3 o = verts[static_cast<size_t>(fv[0])];
    const Vec3 e1 = (verts[static_cast<size_t>(fv[1])] - o).normalized();
    Vec3 nrm = Vec3::Zero();
    for (size_t k = 0; k < fv.size(); ++k)
      nrm += verts[static_cast<size_t>(fv[k])].cross(verts[static_cast<size_t>(fv[(k + 1) % fv.size()])]);
    nrm.normalize();
    const Vec3 e2 = nrm.cross(e1);
    q.origin_[f] = o;
    q.e1_[f] = e1;
    q.e2_[f] = e2;
    Ring chart;
    for (int v : fv) {
      const Vec3 d = verts[static_cast<size_t>(v)] - o;
      if (std::abs(d.dot(nrm)) > kMeshEps * 10) throw SolidError(SolidErrc::NonConvexSolid, "non-planar face");
      chart.emplace_back(d.dot(e1), d.dot(e2));
    }
    for (size_t k = 0; k < chart.size(); ++k) {
      min_edge = std::min(min_edge, (chart[(k + 1) % chart.size()] - chart[k]).norm());
      const Vec2 a = chart[(k + chart.size() - 1) % chart.size()], b = chart[k], c = chart[(k + 1) % chart.size()];
      if (cross2(b - a, c - b) < -kMeshEps) throw SolidError(SolidErrc::NonConvexSolid, "non-convex face");
    }
    q.face_area_[f] = signed_area(chart);
    if (q.face_area_[f] <= 0) throw SolidError(SolidErrc::InvalidMesh, "degenerate face");
    q.charts_[f] = std::move(chart);
    // convexity of the solid: every vertex on the inner side of every face plane
    for (const auto& v : verts)
      if (nrm.dot(v - o) > kMeshEps * 10) throw SolidError(SolidErrc::NonConvexSolid, "solid is not convex");
  }
  q.min_edge_ = min_edge;

  std::map<std::pair<int, int>, EdgeLink> directed;
  for (size_t f = 0; f < nf; ++f) {
    const auto& fv = faces[f];
    for (size_t k = 0; k < fv.size(); ++k) {
      const std::pair<int, int> key{fv[k], fv[(k + 1) % fv.size()]};
      if (directed.count(key)) throw SolidError(SolidErrc::InvalidMesh, "edge used twice in one direction");
      directed[key] = {static_cast<int>(f), static_cast<int>(k)};
    }
  }
  q.adjacency_.resize(nf);
  for (size_t f = 0; f < nf; ++f) {
    const auto& fv = faces[f];
    for (size_t k = 0; k < fv.size(); ++k) {
      auto it = directed.find({fv[(k + 1) % fv.size()], fv[k]});
      if (it == directed.end()) throw SolidError(SolidErrc::InvalidMesh, "edge not shared by exactly two faces");
      q.adjacency_[f].push_back(it->second);
    }
  }

  q.vertex_corners_.assign(static_cast<size_t>(nv), {});
  q.co_curvature_.assign(static_cast<size_t>(nv), 0.0);
  for (size_t f = 0; f < nf; ++f)
    for (size_t k = 0; k < faces[f].size(); ++k) {
      const int v = faces[f][k];
      q.vertex_corners_[static_cast<size_t>(v)].push_back({static_cast<int>(f), static_cast<int>(k)});
      q.co_curvature_[static_cast<size_t>(v)] += q.corner_angle(static_cast<int>(f), static_cast<int>(k));
    }
  double total = 0;
  for (int v = 0; v < nv; ++v) {
    if (q.vertex_corners_[static_cast<size_t>(v)].empty())
      throw SolidError(SolidErrc::InvalidMesh, "isolated vertex");
    const double co = q.co_curvature_[static_cast<size_t>(v)];
    if (co >= 360.0 - kAngleEps) throw SolidError(SolidErrc::NonConvexSolid, "flat or saddle vertex");
    total += 360.0 - co;
  }
  if (std::abs(total - 720.0) > kAngleEps)
    throw SolidError(SolidErrc::GaussBonnetViolation, "total curvature differs from 720 degrees");
  q.surface_area_ = std::accumulate(q.face_area_.begin(), q.face_area_.end(), 0.0);
  return q;
}

SolidModel build_solid(const SolidSpec& spec) {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  switch (spec.kind) {
    case SolidKind::RegularTetrahedron: {
      SolidModel q = build_solid(SolidSpec::tetramonohedron(1, 1, 1));
      q.kind_ = SolidKind::RegularTetrahedron;
      return q;
    }
    case SolidKind::Tetramonohedron: {
      const double a = spec.a, b = spec.b, c = spec.c;
      if (!(a > 0 && b > 0 && c > 0)) throw SolidError(SolidErrc::NonAcuteTriangle, "side lengths must be positive");
      const double x2 = (b * b + c * c - a * a) / 8, y2 = (a * a + c * c - b * b) / 8,
                   z2 = (a * a + b * b - c * c) / 8;
      const double scale = std::max({a, b, c});
      if (x2 <= kMeshEps * scale * scale || y2 <= kMeshEps * scale * scale || z2 <= kMeshEps * scale * scale)
        throw SolidError(SolidErrc::NonAcuteTriangle, "tetramonohedron faces must be acute triangles");
      const double x = std::sqrt(x2), y = std::sqrt(y2), z = std::sqrt(z2);
      std::vector<Vec3> v{{x, y, z}, {x, -y, -z}, {-x, y, -z}, {-x, -y, z}};
      return build_from_mesh(SolidKind::Tetramonohedron, v, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    }
    case SolidKind::Cube:
    case SolidKind::Box: {
      const double a = spec.kind == SolidKind::Cube ? 1 : spec.a;
      const double b = spec.kind == SolidKind::Cube ? 1 : spec.b;
      const double c = spec.kind == SolidKind::Cube ? 1 : spec.c;
      for (double s : {a, b, c})
        if (!(s >= 1 - 1e-7) || std::abs(s - std::round(s)) > 1e-7)
          throw SolidError(SolidErrc::NonIntegerBox, "box sides must be positive integers");
      std::vector<Vec3> v;
      for (int i = 0; i < 8; ++i) v.emplace_back((i & 1) ? std::round(a) : 0, (i & 2) ? std::round(b) : 0, (i & 4) ? std::round(c) : 0);
      std::vector<std::vector<int>> f{{0, 2, 6, 4}, {1, 3, 7, 5}, {0, 1, 5, 4}, {2, 3, 7, 6}, {0, 1, 3, 2}, {4, 5, 7, 6}};
      return build_from_mesh(spec.kind, v, f);
    }
    case SolidKind::Octahedron:
      return platonic(spec.kind, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    case SolidKind::Icosahedron: {
      std::vector<Vec3> v;
      for (double s1 : {-1.0, 1.0})
        for (double s2 : {-phi, phi}) {
          v.emplace_back(0, s1, s2);
          v.emplace_back(s1, s2, 0);
          v.emplace_back(s2, 0, s1);
        }
      return platonic(spec.kind, v);
    }
    case SolidKind::Dodecahedron: {
      std::vector<Vec3> v;
      for (double s1 : {-1.0, 1.0})
        for (double s2 : {-1.0, 1.0}) {
          for (double s3 : {-1.0, 1.0}) v.emplace_back(s1, s2, s3);
          v.emplace_back(0, s1 / phi, s2 * phi);
          v.emplace_back(s1 / phi, s2 * phi, 0);
          v.emplace_back(s2 * phi, 0, s1 / phi);
        }
      return platonic(spec.kind, v);
    }
    case SolidKind::Deltahedron: {
      SolidModel q = build_from_mesh(SolidKind::Deltahedron, spec.vertices, spec.faces);
      for (int f = 0; f < q.num_faces(); ++f)
        for (int k = 0; k < q.face_size(f); ++k) {
          const double len = (q.chart_point(f, k + 1) - q.chart_point(f, k)).norm();
          if (std::abs(len - std::round(len)) > 1e-7 || std::round(len) < 1)
            throw SolidError(SolidErrc::InvalidMesh, "deltahedron edges must have integer length");
          const double ang = q.corner_angle(f, k) / 60.0;
          if (std::abs(ang - std::round(ang)) > 1e-7 / 60.0)
            throw SolidError(SolidErrc::InvalidMesh, "deltahedron faces must be polyiamonds");
        }
      int anchors = 0;
      for (int v = 0; v < q.num_vertices(); ++v)
        if (std::abs(q.curvature(v) - 180.0) > kAngleEps) ++anchors;
      if (anchors < 2)
        throw SolidError(SolidErrc::TooFewAnchorVertices,
                         "deltahedron needs two vertices of curvature other than 180 degrees; use the "
                         "tetramonohedron target instead");
      return q;
    }
  }
  throw SolidError(SolidErrc::InvalidMesh, "unknown solid kind");
}

Ring Placement::placed_face(const SolidModel& q) const {
  Ring r;
  for (const auto& p : q.chart(face)) r.push_back(apply(p));
  return r;
}

Placement place_segment(int face, const Vec2& from, const Vec2& to, const Vec2& pf, const Vec2& pt,
                        bool mirrored) {
  Placement pl;
  pl.face = face;
  pl.mirrored = mirrored;
  const double theta = angle_of(pt - pf);
  const double phi = angle_of(to - from);
  pl.rot = mirrored ? Mat2(rotation(theta) * mirror_x() * rotation(-phi)) : rotation(theta - phi);
  pl.shift = pf - pl.rot * from;
  return pl;
}

Placement place_corner(const SolidModel& q, int face, int corner, const Vec2& p, double theta,
                       bool mirrored) {
  const Vec2& c = q.chart_point(face, corner);
  const Vec2& first = mirrored ? q.chart_point(face, corner - 1) : q.chart_point(face, corner + 1);
  const Vec2 dir(std::cos(theta), std::sin(theta));
  return place_segment(face, c, first, p, p + dir * (first - c).norm(), mirrored);
}

Placement roll(const SolidModel& q, const Placement& pl, int edge) {
  const Vec2 a = pl.apply(q.chart_point(pl.face, edge));
  const Vec2 b = pl.apply(q.chart_point(pl.face, edge + 1));
  const EdgeLink nb = q.neighbor(pl.face, edge);
  // the neighbor traverses the shared edge in the opposite direction
  const Vec2& na = q.chart_point(nb.face, nb.edge);
  const Vec2& nbp = q.chart_point(nb.face, nb.edge + 1);
  return place_segment(nb.face, na, nbp, b, a, pl.mirrored);
}

SurfacePoint surface_point(const SolidModel& q, const Placement& pl, const Vec2& pt, double eps) {
  const Vec2 local = pl.inverse(pt);
  const Ring& chart = q.chart(pl.face);
  const int m = static_cast<int>(chart.size());
  for (int k = 0; k < m; ++k)
    if (cross2(chart[static_cast<size_t>((k + 1) % m)] - chart[static_cast<size_t>(k)],
               local - chart[static_cast<size_t>(k)]) /
            (chart[static_cast<size_t>((k + 1) % m)] - chart[static_cast<size_t>(k)]).norm() <
        -eps)
      throw SolidError(SolidErrc::PointOutsideFace, "point is not on the placed face");

  SurfacePoint sp;
  for (int k = 0; k < m; ++k) {
    if ((local - chart[static_cast<size_t>(k)]).norm() <= eps) {
      const int v = q.face(pl.face)[static_cast<size_t>(k)];
      sp.vertex = v;
      sp.charts.emplace_back(pl.face, chart[static_cast<size_t>(k)]);
      for (const auto& c : q.corners_at(v))
        if (c.face != pl.face) sp.charts.emplace_back(c.face, q.chart_point(c.face, c.corner));
      return sp;
    }
  }
  sp.charts.emplace_back(pl.face, local);
  for (int k = 0; k < m; ++k) {
    const Vec2& a = chart[static_cast<size_t>(k)];
    const Vec2& b = chart[static_cast<size_t>((k + 1) % m)];
    if (point_segment_distance(local, a, b) <= eps) {
      const double t = std::clamp((local - a).dot(b - a) / (b - a).squaredNorm(), 0.0, 1.0);
      const EdgeLink nb = q.neighbor(pl.face, k);
      const Vec2& na = q.chart_point(nb.face, nb.edge);
      const Vec2& nbp = q.chart_point(nb.face, nb.edge + 1);
      sp.charts.emplace_back(nb.face, nbp + t * (na - nbp));
      break;
    }
  }
  return sp;
}

Vec3 position(const SolidModel& q, const SurfacePoint& sp) {
  return q.to_3d(sp.charts.front().first, sp.charts.front().second);
}

}  // namespace polyfold
