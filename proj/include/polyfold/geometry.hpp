// Planar primitives, tolerance-aware predicates and convex-face clipping.
#pragma once

#include <Eigen/Dense>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyfold {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Ring = std::vector<Vec2>;

/// Numeric slack used by every comparison in the library.
///
/// eps_len is an absolute length in plane units, eps_angle is in degrees and
/// eps_int bounds how far a computed value may sit from an integer.
struct Tolerance {
  double eps_len = 1e-9;
  double eps_angle = 1e-7;
  double eps_int = 1e-7;

  /// Default triple for an input whose diameter is `diameter`.
  static Tolerance for_diameter(double diameter);
  bool valid() const { return eps_len > 0 && eps_angle > 0 && eps_int > 0; }
};

enum class GeometryErrc {
  TooFewVertices,
  NonFinite,
  NonSimplePolygon,
  ZeroArea,
  DegenerateIntersection,
};

class GeometryError : public std::runtime_error {
 public:
  GeometryError(GeometryErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  GeometryErrc code() const { return code_; }

 private:
  GeometryErrc code_;
};

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }
inline Vec2 perp(const Vec2& v) { return Vec2(-v.y(), v.x()); }

constexpr double kPi = 3.14159265358979323846;
inline double deg(double rad) { return rad * 180.0 / kPi; }
inline double rad(double degrees) { return degrees * kPi / 180.0; }

/// Counterclockwise angle from direction `from` to direction `to`, in [0, 360).
double ccw_angle_deg(const Vec2& from, const Vec2& to);

double signed_area(std::span<const Vec2> ring);
double ring_perimeter(std::span<const Vec2> ring);
double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);

/// Rotation by `radians` about the origin.
Mat2 rotation(double radians);

/// A simple polygon in counterclockwise order with collinear vertices merged.
class Polygon {
 public:
  Polygon() = default;

  /// Canonicalizes and validates `points`. Throws GeometryError.
  static Polygon from_points(std::vector<Vec2> points, const Tolerance& tol);
  /// As above with the default tolerance derived from the point set.
  static Polygon from_points(std::vector<Vec2> points);

  const Ring& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const Vec2& vertex(int i) const;  // cyclic index
  double edge_length(int i) const { return (vertex(i + 1) - vertex(i)).norm(); }

  double area() const { return area_; }
  double perimeter() const { return perimeter_; }
  double diameter() const { return diameter_; }
  double longest_edge() const;
  /// Interior angle at vertex i in degrees, in (0, 360).
  double interior_angle(int i) const;
  const Tolerance& tolerance() const { return tol_; }

 private:
  Ring vertices_;
  double area_ = 0;
  double perimeter_ = 0;
  double diameter_ = 0;
  Tolerance tol_;
};

struct PolygonMetrics {
  double area;
  double perimeter;
  double diameter;
  std::vector<double> angles;
};

PolygonMetrics polygon_metrics(const Polygon& poly);

/// Applies `transform` (x -> rot * x + shift) to every vertex and re-validates.
Polygon transformed(const Polygon& poly, const Mat2& rot, const Vec2& shift);

enum class Location { Interior, Boundary, Exterior };

Location contains_point(std::span<const Vec2> ring, const Vec2& pt, double eps_len);
Location contains_point(const Polygon& poly, const Vec2& pt);

/// Checks simplicity of a closed ring within eps_len.
bool is_simple(std::span<const Vec2> ring, double eps_len);

/// Provenance of one edge of a clipped component.
struct ClipEdgeSource {
  int polygon_edge = -1;  // edge index of the clipped polygon, or -1
  int face_edge = -1;     // edge index of the convex face, or -1
};

/// One connected piece of face ∩ polygon, counterclockwise.
struct ClipComponent {
  Ring ring;
  std::vector<ClipEdgeSource> sources;  // sources[k] describes ring[k] -> ring[k+1]
  double area = 0;
};

/// Intersection of a convex polygon with a simple polygon, split into
/// interior-disjoint simple components. Sliver components (area at most
/// eps_len times their perimeter) are dropped; if every component was a sliver
/// the call throws DegenerateIntersection.
std::vector<ClipComponent> intersect_face(std::span<const Vec2> face,
                                          std::span<const Vec2> polygon,
                                          double eps_len);
std::vector<ClipComponent> intersect_face(std::span<const Vec2> face, const Polygon& poly);

/// A point strictly inside a counterclockwise simple ring.
Vec2 interior_point(std::span<const Vec2> ring, double eps_len);

struct Box2 {
  Vec2 lo{1e300, 1e300};
  Vec2 hi{-1e300, -1e300};
  void extend(const Vec2& p) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  bool overlaps(const Box2& o, double eps) const {
    return lo.x() <= o.hi.x() + eps && o.lo.x() <= hi.x() + eps && lo.y() <= o.hi.y() + eps &&
           o.lo.y() <= hi.y() + eps;
  }
};
Box2 bounding_box(std::span<const Vec2> ring);

}  // namespace polyfold
