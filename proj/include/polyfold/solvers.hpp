// Per-target search drivers producing folding certificates.
#pragma once

#include "polyfold/gluing.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace polyfold {

struct SolveOptions {
  bool first_only = true;  // stop at the first certificate
};

struct SolveStats {
  long candidates = 0;  // initial placements considered
  long stampings = 0;   // stamp() invocations
  double seconds = 0;
};

struct SolveResult {
  std::vector<FoldingCertificate> certificates;
  SolveStats stats;
  std::vector<std::string> warnings;
  bool yes() const { return !certificates.empty(); }
};

/// Builds the target and dispatches to the matching solver.
SolveResult fold(const Polygon& p, const SolidSpec& target, const SolveOptions& options = {});
SolveResult fold(const Polygon& p, const SolidModel& q, const SolveOptions& options = {});

SolveResult fold_tetramonohedron(const Polygon& p, double a, double b, double c,
                                 const SolveOptions& options = {});
SolveResult fold_box(const Polygon& p, double a, double b, double c, const SolveOptions& options = {});
SolveResult fold_dodecahedron(const Polygon& p, const SolveOptions& options = {});
SolveResult fold_deltahedron(const Polygon& p, const SolidModel& q, const SolveOptions& options = {});

/// |area(P) − area(Q)| within max(10·eps_len·L, 1e-9·area(Q)).
bool area_matches(const Polygon& p, double surface_area);

struct LatticeCandidate {
  double rotation = 0;  // radians; applied to the canonical basis
  bool mirrored = false;
  Vec2 anchor;
  Vec2 va, vb;
  int ka = 0, kb = 0;
};

/// Lattices of the (a,b,c) triangle tiling through m whose points include m2.
std::vector<LatticeCandidate> enumerate_lattices(const Vec2& m, const Vec2& m2, double a, double b,
                                                 double c, double perimeter, double eps_len = 1e-9,
                                                 double eps_int = 1e-7);

/// All (X, Y) with X, Y ≥ 0 integers and X² + Y² = ell.
std::vector<std::pair<int, int>> decompose_integer_xy(double ell, double eps_int = 1e-7);

using CoefficientTuple = std::vector<int>;

/// Integer tuples B with |Σ B_k basis_k| = |delta|. The basis is either the
/// four pentagon vectors or the two triangle vectors.
std::vector<CoefficientTuple> enumerate_decompositions(const Vec2& delta, std::span<const Vec2> basis,
                                                       int bound, double eps_int = 1e-7);

std::array<Vec2, 4> pentagon_basis();
std::array<Vec2, 2> triangle_basis();

/// ⌈L⌉ + 4n + 16.
int coefficient_bound(const Polygon& p);

/// Placements of face f onto the plane triangle t whose side lengths match.
std::vector<Placement> place_on_triangle(const SolidModel& q, int face, const std::array<Vec2, 3>& t,
                                         double eps_len);

}  // namespace polyfold
