#include "polyfold/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace polyfold {

Tolerance Tolerance::for_diameter(double diameter) {
  Tolerance tol;
  tol.eps_len = 1e-9 * std::max(1.0, diameter);
  return tol;
}

double ccw_angle_deg(const Vec2& from, const Vec2& to) {
  double a = std::atan2(cross2(from, to), from.dot(to));
  double d = deg(a);
  if (d < 0) d += 360.0;
  if (d >= 360.0) d -= 360.0;
  return d;
}

double signed_area(std::span<const Vec2> ring) {
  double s = 0;
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) s += cross2(ring[i], ring[(i + 1) % n]);
  return 0.5 * s;
}

double ring_perimeter(std::span<const Vec2> ring) {
  double s = 0;
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) s += (ring[(i + 1) % n] - ring[i]).norm();
  return s;
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 d = b - a;
  const double len2 = d.squaredNorm();
  if (len2 == 0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(d) / len2, 0.0, 1.0);
  return (p - (a + t * d)).norm();
}

Mat2 rotation(double radians) {
  Mat2 r;
  const double c = std::cos(radians), s = std::sin(radians);
  r << c, -s, s, c;
  return r;
}

Box2 bounding_box(std::span<const Vec2> ring) {
  Box2 b;
  for (const auto& p : ring) b.extend(p);
  return b;
}

namespace {

bool segments_cross(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  const double d1 = cross2(b - a, c - a), d2 = cross2(b - a, d - a);
  const double d3 = cross2(d - c, a - c), d4 = cross2(d - c, b - c);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

double segment_distance(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  if (segments_cross(a, b, c, d)) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

double max_pair_distance(std::span<const Vec2> pts) {
  double best = 0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, (pts[i] - pts[j]).norm());
  return best;
}

// Removes near-duplicate consecutive points and straight (180 degree) vertices.
void canonicalize(Ring& pts, const Tolerance& tol) {
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    for (size_t i = 0; i < pts.size() && pts.size() >= 3; ++i) {
      const size_t n = pts.size();
      const Vec2& prev = pts[(i + n - 1) % n];
      const Vec2& cur = pts[i];
      const Vec2& next = pts[(i + 1) % n];
      if ((cur - next).norm() <= tol.eps_len) {
        pts.erase(pts.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      const double turn = ccw_angle_deg(cur - prev, next - cur);
      if (turn <= tol.eps_angle || turn >= 360.0 - tol.eps_angle) {
        pts.erase(pts.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
}

}  // namespace

bool is_simple(std::span<const Vec2> ring, double eps_len) {
  const int n = static_cast<int>(ring.size());
  if (n < 3) return false;
  for (int i = 0; i < n; ++i) {
    const Vec2& a = ring[i];
    const Vec2& b = ring[(i + 1) % n];
    for (int j = i + 1; j < n; ++j) {
      const Vec2& c = ring[j];
      const Vec2& d = ring[(j + 1) % n];
      const bool adjacent_next = (j == i + 1);
      const bool adjacent_prev = (i == 0 && j == n - 1);
      if (adjacent_next) {
        // shared vertex b == c; the far endpoints must not fold back onto the other edge
        if (point_segment_distance(d, a, b) <= eps_len || point_segment_distance(a, c, d) <= eps_len)
          return false;
        continue;
      }
      if (adjacent_prev) {
        // shared vertex a == d
        if (point_segment_distance(c, a, b) <= eps_len || point_segment_distance(b, c, d) <= eps_len)
          return false;
        continue;
      }
      if (segment_distance(a, b, c, d) <= eps_len) return false;
    }
  }
  return true;
}

Polygon Polygon::from_points(std::vector<Vec2> points) {
  return from_points(points, Tolerance::for_diameter(max_pair_distance(points)));
}

Polygon Polygon::from_points(std::vector<Vec2> points, const Tolerance& tol) {
  if (!tol.valid()) throw std::invalid_argument("tolerances must be strictly positive");
  for (const auto& p : points)
    if (!p.allFinite()) throw GeometryError(GeometryErrc::NonFinite, "non-finite coordinate");
  if (points.size() < 3) throw GeometryError(GeometryErrc::TooFewVertices, "polygon needs 3 vertices");
  canonicalize(points, tol);
  if (points.size() < 3) throw GeometryError(GeometryErrc::ZeroArea, "polygon collapses to a segment");
  double a = signed_area(points);
  if (std::abs(a) <= tol.eps_len * tol.eps_len)
    throw GeometryError(GeometryErrc::ZeroArea, "polygon has zero area");
  if (a < 0) {
    std::reverse(points.begin(), points.end());
    a = -a;
  }
  if (!is_simple(points, tol.eps_len))
    throw GeometryError(GeometryErrc::NonSimplePolygon, "polygon boundary self-intersects");

  Polygon poly;
  poly.vertices_ = std::move(points);
  poly.area_ = a;
  poly.perimeter_ = ring_perimeter(poly.vertices_);
  poly.diameter_ = max_pair_distance(poly.vertices_);
  poly.tol_ = tol;
  return poly;
}

const Vec2& Polygon::vertex(int i) const {
  const int n = size();
  return vertices_[static_cast<size_t>(((i % n) + n) % n)];
}

double Polygon::longest_edge() const {
  double best = 0;
  for (int i = 0; i < size(); ++i) best = std::max(best, edge_length(i));
  return best;
}

double Polygon::interior_angle(int i) const {
  return ccw_angle_deg(vertex(i + 1) - vertex(i), vertex(i - 1) - vertex(i));
}

PolygonMetrics polygon_metrics(const Polygon& poly) {
  PolygonMetrics m{poly.area(), poly.perimeter(), poly.diameter(), {}};
  m.angles.reserve(static_cast<size_t>(poly.size()));
  for (int i = 0; i < poly.size(); ++i) m.angles.push_back(poly.interior_angle(i));
  return m;
}

Polygon transformed(const Polygon& poly, const Mat2& rot, const Vec2& shift) {
  Ring pts;
  pts.reserve(poly.vertices().size());
  for (const auto& p : poly.vertices()) pts.push_back(rot * p + shift);
  return Polygon::from_points(std::move(pts), poly.tolerance());
}

Location contains_point(std::span<const Vec2> ring, const Vec2& pt, double eps_len) {
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i)
    if (point_segment_distance(pt, ring[i], ring[(i + 1) % n]) <= eps_len) return Location::Boundary;
  int winding = 0;
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = ring[i];
    const Vec2& b = ring[(i + 1) % n];
    if (a.y() <= pt.y()) {
      if (b.y() > pt.y() && cross2(b - a, pt - a) > 0) ++winding;
    } else if (b.y() <= pt.y() && cross2(b - a, pt - a) < 0) {
      --winding;
    }
  }
  return winding != 0 ? Location::Interior : Location::Exterior;
}

Location contains_point(const Polygon& poly, const Vec2& pt) {
  return contains_point(poly.vertices(), pt, poly.tolerance().eps_len);
}

Vec2 interior_point(std::span<const Vec2> ring, double eps_len) {
  const size_t n = ring.size();
  for (double frac : {1e-2, 1e-4, 1e-6}) {
    for (size_t i = 0; i < n; ++i) {
      const Vec2 d = ring[(i + 1) % n] - ring[i];
      const double len = d.norm();
      if (len <= 4 * eps_len) continue;
      const Vec2 mid = ring[i] + 0.5 * d;
      const double step = std::max(frac * len, 4 * eps_len);
      const Vec2 cand = mid + step * perp(d) / len;
      if (contains_point(ring, cand, eps_len) == Location::Interior) return cand;
    }
  }
  Vec2 c = Vec2::Zero();
  for (const auto& p : ring) c += p;
  return c / static_cast<double>(n);
}

// ---------------------------------------------------------------------------
// Convex face ∩ simple polygon.
//
// Both boundaries are split at every mutual intersection or touching point
// (points closer than eps_len are merged into one node). Polygon pieces inside
// the face and face pieces inside the polygon become directed edges; pieces
// that appear in both boundaries with opposite orientation bound a zero-width
// contact and are discarded. Components are traced by taking the sharpest
// left turn at every node, which separates components touching at a point.

namespace {

struct NodeSet {
  double eps;
  std::vector<Vec2> pts;
  int add(const Vec2& p) {
    for (size_t i = 0; i < pts.size(); ++i)
      if ((pts[i] - p).norm() <= eps) return static_cast<int>(i);
    pts.push_back(p);
    return static_cast<int>(pts.size() - 1);
  }
};

struct DirEdge {
  int u, v;
  ClipEdgeSource src;
  bool alive = true;
};

// Splits segment a->b at all nodes lying on it; returns consecutive node pairs.
std::vector<std::pair<int, int>> split_segment(const Vec2& a, const Vec2& b, int ia, int ib,
                                               const NodeSet& nodes) {
  const Vec2 d = b - a;
  const double len = d.norm();
  std::vector<std::pair<double, int>> hits{{0.0, ia}, {len, ib}};
  if (len > 0) {
    const Vec2 dir = d / len;
    for (size_t k = 0; k < nodes.pts.size(); ++k) {
      const int id = static_cast<int>(k);
      if (id == ia || id == ib) continue;
      const Vec2& p = nodes.pts[k];
      const double t = (p - a).dot(dir);
      if (t <= 0 || t >= len) continue;
      if (std::abs(cross2(dir, p - a)) <= nodes.eps) hits.emplace_back(t, id);
    }
  }
  std::sort(hits.begin(), hits.end());
  std::vector<std::pair<int, int>> pieces;
  for (size_t k = 0; k + 1 < hits.size(); ++k) {
    const int u = hits[k].second, v = hits[k + 1].second;
    if (u != v) pieces.emplace_back(u, v);
  }
  return pieces;
}

Location locate_in_convex(std::span<const Vec2> face, const Vec2& p, double eps) {
  const size_t m = face.size();
  double min_d = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < m; ++k) {
    const Vec2 d = face[(k + 1) % m] - face[k];
    const double len = d.norm();
    if (len == 0) continue;
    const double sd = cross2(d, p - face[k]) / len;
    if (sd < -eps) return Location::Exterior;
    min_d = std::min(min_d, sd);
  }
  return min_d <= eps ? Location::Boundary : Location::Interior;
}

}  // namespace

std::vector<ClipComponent> intersect_face(std::span<const Vec2> face_in,
                                          std::span<const Vec2> polygon, double eps_len) {
  const int m = static_cast<int>(face_in.size());
  const int n = static_cast<int>(polygon.size());
  std::vector<Vec2> face(face_in.begin(), face_in.end());
  std::vector<int> face_edge_id(static_cast<size_t>(m));
  if (signed_area(face) < 0) {
    std::reverse(face.begin(), face.end());
    for (int k = 0; k < m; ++k) face_edge_id[static_cast<size_t>(k)] = ((m - 2 - k) % m + m) % m;
  } else {
    for (int k = 0; k < m; ++k) face_edge_id[static_cast<size_t>(k)] = k;
  }

  const Box2 fbox = bounding_box(face);
  NodeSet nodes{eps_len, {}};
  std::vector<int> fnode(static_cast<size_t>(m)), pnode(static_cast<size_t>(n));
  for (int k = 0; k < m; ++k) fnode[static_cast<size_t>(k)] = nodes.add(face[static_cast<size_t>(k)]);
  for (int i = 0; i < n; ++i) pnode[static_cast<size_t>(i)] = nodes.add(polygon[static_cast<size_t>(i)]);

  std::vector<char> relevant(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const Vec2& a = polygon[static_cast<size_t>(i)];
    const Vec2& b = polygon[static_cast<size_t>((i + 1) % n)];
    Box2 eb;
    eb.extend(a);
    eb.extend(b);
    if (!eb.overlaps(fbox, eps_len)) continue;
    relevant[static_cast<size_t>(i)] = 1;
    const Vec2 d1 = b - a;
    for (int k = 0; k < m; ++k) {
      const Vec2& c = face[static_cast<size_t>(k)];
      const Vec2 d2 = face[static_cast<size_t>((k + 1) % m)] - c;
      const double den = cross2(d1, d2);
      if (std::abs(den) <= 1e-14 * d1.norm() * d2.norm()) continue;
      const double t = cross2(c - a, d2) / den;
      const double u = cross2(c - a, d1) / den;
      if (t < -1e-12 || t > 1 + 1e-12 || u < -1e-12 || u > 1 + 1e-12) continue;
      nodes.add(a + t * d1);
    }
  }

  std::vector<DirEdge> edges;
  std::map<std::pair<int, int>, size_t> index;
  auto add_edge = [&](int u, int v, ClipEdgeSource src) {
    auto it = index.find({u, v});
    if (it != index.end()) {
      auto& e = edges[it->second];
      if (src.polygon_edge >= 0) e.src.polygon_edge = src.polygon_edge;
      if (src.face_edge >= 0) e.src.face_edge = src.face_edge;
      return;
    }
    index[{u, v}] = edges.size();
    edges.push_back({u, v, src, true});
  };

  for (int i = 0; i < n; ++i) {
    if (!relevant[static_cast<size_t>(i)]) continue;
    const int ia = pnode[static_cast<size_t>(i)], ib = pnode[static_cast<size_t>((i + 1) % n)];
    for (auto [u, v] : split_segment(nodes.pts[static_cast<size_t>(ia)], nodes.pts[static_cast<size_t>(ib)], ia, ib, nodes)) {
      const Vec2 mid = 0.5 * (nodes.pts[static_cast<size_t>(u)] + nodes.pts[static_cast<size_t>(v)]);
      if (locate_in_convex(face, mid, eps_len) != Location::Exterior) add_edge(u, v, {i, -1});
    }
  }
  for (int k = 0; k < m; ++k) {
    const int ia = fnode[static_cast<size_t>(k)], ib = fnode[static_cast<size_t>((k + 1) % m)];
    for (auto [u, v] : split_segment(nodes.pts[static_cast<size_t>(ia)], nodes.pts[static_cast<size_t>(ib)], ia, ib, nodes)) {
      const Vec2 mid = 0.5 * (nodes.pts[static_cast<size_t>(u)] + nodes.pts[static_cast<size_t>(v)]);
      if (contains_point(polygon, mid, eps_len) != Location::Exterior)
        add_edge(u, v, {-1, face_edge_id[static_cast<size_t>(k)]});
    }
  }
  for (auto& e : edges) {
    auto it = index.find({e.v, e.u});
    if (it != index.end()) {
      e.alive = false;
      edges[it->second].alive = false;
    }
  }

  std::vector<std::vector<int>> out(nodes.pts.size());
  for (size_t e = 0; e < edges.size(); ++e)
    if (edges[e].alive) out[static_cast<size_t>(edges[e].u)].push_back(static_cast<int>(e));

  std::vector<char> used(edges.size(), 0);
  std::vector<ClipComponent> result;
  int slivers = 0;
  for (size_t e0 = 0; e0 < edges.size(); ++e0) {
    if (!edges[e0].alive || used[e0]) continue;
    std::vector<int> cycle;
    int cur = static_cast<int>(e0);
    bool ok = true;
    while (true) {
      used[static_cast<size_t>(cur)] = 1;
      cycle.push_back(cur);
      const auto& ce = edges[static_cast<size_t>(cur)];
      const Vec2 din = nodes.pts[static_cast<size_t>(ce.v)] - nodes.pts[static_cast<size_t>(ce.u)];
      int best = -1;
      double best_turn = -1e300;
      for (int c : out[static_cast<size_t>(ce.v)]) {
        const Vec2 dout = nodes.pts[static_cast<size_t>(edges[static_cast<size_t>(c)].v)] -
                          nodes.pts[static_cast<size_t>(ce.v)];
        double turn = std::atan2(cross2(din, dout), din.dot(dout));
        if (turn > kPi - 1e-12) turn = -kPi;
        if (turn > best_turn) {
          best_turn = turn;
          best = c;
        }
      }
      if (best < 0) {
        ok = false;
        break;
      }
      if (best == static_cast<int>(e0)) break;
      if (used[static_cast<size_t>(best)] || cycle.size() > edges.size()) {
        ok = false;
        break;
      }
      cur = best;
    }
    if (!ok) continue;
    ClipComponent comp;
    for (int c : cycle) {
      comp.ring.push_back(nodes.pts[static_cast<size_t>(edges[static_cast<size_t>(c)].u)]);
      comp.sources.push_back(edges[static_cast<size_t>(c)].src);
    }
    comp.area = signed_area(comp.ring);
    if (comp.area <= eps_len * ring_perimeter(comp.ring)) {
      ++slivers;
      continue;
    }
    result.push_back(std::move(comp));
  }
  if (result.empty() && slivers > 0)
    throw GeometryError(GeometryErrc::DegenerateIntersection, "face meets polygon only in slivers");
  return result;
}

std::vector<ClipComponent> intersect_face(std::span<const Vec2> face, const Polygon& poly) {
  return intersect_face(face, poly.vertices(), poly.tolerance().eps_len);
}

}  // namespace polyfold
