// Target polyhedra: 3D model, per-face charts, adjacency, curvature and rolling.
#pragma once

#include "polyfold/geometry.hpp"

#include <string>
#include <vector>

namespace polyfold {

enum class SolidKind {
  RegularTetrahedron,
  Tetramonohedron,
  Cube,
  Box,
  Octahedron,
  Icosahedron,
  Dodecahedron,
  Deltahedron,
};

/// Input to build_solid. Side lengths are used by Tetramonohedron and Box;
/// vertices/faces only by Deltahedron.
struct SolidSpec {
  SolidKind kind = SolidKind::Cube;
  double a = 1, b = 1, c = 1;
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;

  static SolidSpec make(SolidKind kind, double a = 1, double b = 1, double c = 1) {
    SolidSpec s;
    s.kind = kind;
    s.a = a;
    s.b = b;
    s.c = c;
    return s;
  }
  static SolidSpec regular_tetrahedron() { return make(SolidKind::RegularTetrahedron); }
  static SolidSpec tetramonohedron(double a, double b, double c) {
    return make(SolidKind::Tetramonohedron, a, b, c);
  }
  static SolidSpec cube() { return make(SolidKind::Cube); }
  static SolidSpec box(double a, double b, double c) { return make(SolidKind::Box, a, b, c); }
  static SolidSpec octahedron() { return make(SolidKind::Octahedron); }
  static SolidSpec icosahedron() { return make(SolidKind::Icosahedron); }
  static SolidSpec dodecahedron() { return make(SolidKind::Dodecahedron); }
  static SolidSpec deltahedron(std::vector<Vec3> v, std::vector<std::vector<int>> f) {
    SolidSpec s = make(SolidKind::Deltahedron);
    s.vertices = std::move(v);
    s.faces = std::move(f);
    return s;
  }
};

enum class SolidErrc {
  NonAcuteTriangle,
  NonIntegerBox,
  NonConvexSolid,
  GaussBonnetViolation,
  TooFewAnchorVertices,
  InvalidMesh,
  PointOutsideFace,
};

class SolidError : public std::runtime_error {
 public:
  SolidError(SolidErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  SolidErrc code() const { return code_; }

 private:
  SolidErrc code_;
};

/// Neighbor across an edge: face index and the index of the shared edge in
/// that face. Edge e of a face runs from corner e to corner e+1.
struct EdgeLink {
  int face = -1;
  int edge = -1;
};

struct Corner {
  int face;
  int corner;
};

class SolidModel {
 public:
  SolidKind kind() const { return kind_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  const Vec3& vertex(int v) const { return vertices_[static_cast<size_t>(v)]; }
  const std::vector<int>& face(int f) const { return faces_[static_cast<size_t>(f)]; }
  int face_size(int f) const { return static_cast<int>(faces_[static_cast<size_t>(f)].size()); }
  /// Local 2D coordinates of face f, counterclockwise, corner 0 at the origin
  /// and corner 1 on the positive x axis.
  const Ring& chart(int f) const { return charts_[static_cast<size_t>(f)]; }
  const Vec2& chart_point(int f, int corner) const;
  double face_area(int f) const { return face_area_[static_cast<size_t>(f)]; }
  double corner_angle(int f, int corner) const;

  EdgeLink neighbor(int f, int e) const { return adjacency_[static_cast<size_t>(f)][static_cast<size_t>(e)]; }
  const std::vector<Corner>& corners_at(int v) const { return vertex_corners_[static_cast<size_t>(v)]; }

  /// Sum of face angles at v, in degrees.
  double co_curvature(int v) const { return co_curvature_[static_cast<size_t>(v)]; }
  double curvature(int v) const { return 360.0 - co_curvature(v); }
  double surface_area() const { return surface_area_; }
  double min_edge_length() const { return min_edge_; }

  Vec3 to_3d(int f, const Vec2& local) const;
  Vec2 to_chart(int f, const Vec3& p) const;

 private:
  friend SolidModel build_solid(const SolidSpec& spec);
  friend SolidModel build_from_mesh(SolidKind kind, std::vector<Vec3> verts,
                                    std::vector<std::vector<int>> faces);

  SolidKind kind_ = SolidKind::Cube;
  std::vector<Vec3> vertices_;
  std::vector<std::vector<int>> faces_;
  std::vector<Ring> charts_;
  std::vector<Vec3> origin_, e1_, e2_;
  std::vector<double> face_area_;
  std::vector<std::vector<EdgeLink>> adjacency_;
  std::vector<std::vector<Corner>> vertex_corners_;
  std::vector<double> co_curvature_;
  double surface_area_ = 0;
  double min_edge_ = 0;
};

/// Builds and validates a target. Throws SolidError.
SolidModel build_solid(const SolidSpec& spec);

/// Builds a convex solid from an arbitrary mesh; faces are reoriented to be
/// counterclockwise seen from outside. Throws SolidError.
SolidModel build_from_mesh(SolidKind kind, std::vector<Vec3> verts,
                           std::vector<std::vector<int>> faces);

/// A face chart laid onto the plane: x -> rot * x + shift.
struct Placement {
  int face = 0;
  Mat2 rot = Mat2::Identity();
  Vec2 shift = Vec2::Zero();
  bool mirrored = false;

  Vec2 apply(const Vec2& local) const { return rot * local + shift; }
  Vec2 inverse(const Vec2& plane) const { return rot.transpose() * (plane - shift); }
  /// The placed face as a plane ring (clockwise when mirrored).
  Ring placed_face(const SolidModel& q) const;
};

/// Places face f so that chart points from/to land on plane points pf/pt.
/// |pt - pf| must equal |to - from|; only the direction of pt - pf is used.
Placement place_segment(int face, const Vec2& from, const Vec2& to, const Vec2& pf,
                        const Vec2& pt, bool mirrored);

/// Places corner k of face f at p so that the face's wedge at p starts at
/// direction angle theta (radians) and opens counterclockwise.
Placement place_corner(const SolidModel& q, int face, int corner, const Vec2& p, double theta,
                       bool mirrored);

/// Rolls across edge `edge` of the placed face onto its neighbor.
Placement roll(const SolidModel& q, const Placement& placement, int edge);

/// A point on the surface of Q with all of its local coordinates.
struct SurfacePoint {
  std::vector<std::pair<int, Vec2>> charts;
  int vertex = -1;  // solid vertex index when the point is a vertex of Q
};

/// Throws SolidError(PointOutsideFace) when pt is not on the placed face.
SurfacePoint surface_point(const SolidModel& q, const Placement& placement, const Vec2& pt,
                           double eps_len);
Vec3 position(const SolidModel& q, const SurfacePoint& sp);

}  // namespace polyfold
