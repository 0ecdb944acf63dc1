#include "polyfold/solvers.hpp"

#include "polyfold/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <tuple>

namespace polyfold {

namespace {

double angle_of(const Vec2& v) { return std::atan2(v.y(), v.x()); }

double wrap_deg(double d) {
  d = std::fmod(d, 360.0);
  if (d < 0) d += 360.0;
  return d;
}

/// Runs stamp + glue + verify for candidate initial placements and collects
/// distinct certificates.
class Search {
 public:
  Search(const Polygon& p, const SolidModel& q, const SolveOptions& opts)
      : p_(p), q_(q), opts_(opts), start_(std::chrono::steady_clock::now()) {}

  bool done() const { return opts_.first_only && !res_.certificates.empty(); }

  /// Returns true when the search should stop.
  bool attempt(const Placement& pl, const Vec2& seed) {
    if (done()) return true;
    ++res_.stats.candidates;
    const auto comps = seed_components(p_, q_, pl, seed);
    for (size_t c = 0; c < comps.size(); ++c) {
      if (!seen_.insert(key(pl, comps[c].ring)).second) continue;
      ++res_.stats.stampings;
      const auto out = stamp(p_, q_, pl, seed, static_cast<int>(c));
      const auto* st = std::get_if<StampResult>(&out);
      if (!st) continue;
      for (const auto& r : st->tree.regions) seen_.insert(key(r.placement, r.shape));
      const auto glued = glue_check(*st, q_, p_);
      const auto* cert = std::get_if<FoldingCertificate>(&glued);
      if (!cert) continue;
      if (!verify_certificate(p_, q_, *cert).ok) continue;
      const double tol = 1e3 * p_.tolerance().eps_len;
      const bool dup = std::any_of(res_.certificates.begin(), res_.certificates.end(),
                                   [&](const FoldingCertificate& o) { return same_creases(o, *cert, tol); });
      if (!dup) res_.certificates.push_back(*cert);
      if (done()) return true;
    }
    return false;
  }

  SolveResult& result() { return res_; }

  SolveResult finish() {
    res_.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(res_);
  }

 private:
  using Key = std::tuple<int, int, long, long, long, long, long, long>;

  static long q6(double v) { return std::lround(v * 1e6); }

  static Key key(const Placement& pl, const Ring& shape) {
    Vec2 c = Vec2::Zero();
    for (const auto& v : shape) c += v;
    c /= static_cast<double>(shape.size());
    return {pl.face, pl.mirrored ? 1 : 0, q6(pl.rot(0, 0)), q6(pl.rot(1, 0)), q6(pl.shift.x()),
            q6(pl.shift.y()), q6(c.x()), q6(c.y())};
  }

  const Polygon& p_;
  const SolidModel& q_;
  SolveOptions opts_;
  std::chrono::steady_clock::time_point start_;
  SolveResult res_;
  std::set<Key> seen_;
};

/// Whether the wedge [phi, phi + width] at vertex i lies inside P.
bool wedge_inside(const Polygon& p, int i, double phi_rad, double width_deg) {
  const double tol = 1e-6;
  const double out = deg(angle_of(p.vertex(i + 1) - p.vertex(i)));
  double rel = wrap_deg(deg(phi_rad) - out);
  if (rel > 360.0 - tol) rel = 0;
  return rel + width_deg <= p.interior_angle(i) + tol;
}

std::vector<int> anchors_with_angle(const Polygon& p, double angle) {
  std::vector<int> out;
  for (int i = 0; i < p.size(); ++i)
    if (std::abs(p.interior_angle(i) - angle) <= p.tolerance().eps_angle) out.push_back(i);
  return out;
}

/// Frames already tried at one anchor, compared modulo `period` radians.
class FrameSet {
 public:
  explicit FrameSet(double period) : period_(period) {}
  bool insert(int anchor, double theta) {
    double t = std::fmod(theta, period_);
    if (t < 0) t += period_;
    for (const auto& [a, v] : seen_)
      if (a == anchor) {
        const double d = std::abs(v - t);
        if (std::min(d, period_ - d) < 1e-9) return false;
      }
    seen_.emplace_back(anchor, t);
    return true;
  }

 private:
  double period_;
  std::vector<std::pair<int, double>> seen_;
};

// ---------------------------------------------------------------------------
// tetramonohedra

struct TriangleFrame {
  double a, b, c;
};

/// The six lattice triangles having m as a corner.
std::vector<std::array<Vec2, 3>> tiles_around(const Vec2& m, const Vec2& va, const Vec2& vb) {
  auto t1 = [&](const Vec2& o) { return std::array<Vec2, 3>{o, o + va, o + vb}; };
  auto t2 = [&](const Vec2& o) { return std::array<Vec2, 3>{o + va, o + va + vb, o + vb}; };
  return {t1(m), t1(m - va), t1(m - vb), t2(m - va), t2(m - vb), t2(m - va - vb)};
}

bool lattice_stamp(Search& s, const Polygon& p, const SolidModel& q, const TriangleFrame& t,
                   const Vec2& m, const Vec2& m2) {
  if ((m - m2).norm() <= 10 * p.tolerance().eps_len) return false;
  for (const auto& cand : enumerate_lattices(m, m2, t.a, t.b, t.c, p.perimeter(), p.tolerance().eps_len,
                                             p.tolerance().eps_int)) {
    for (const auto& tile : tiles_around(m, cand.va, cand.vb))
      for (const auto& pl : place_on_triangle(q, 0, tile, 1e-7))
        if (s.attempt(pl, m)) return true;
  }
  return false;
}

Vec2 midpoint(const Polygon& p, int i) { return 0.5 * (p.vertex(i) + p.vertex(i + 1)); }

// Boundary from the end of edge i to the start of edge j is the translate by
// the vector of edge i of the reversed boundary from the end of j to the start of i.
bool cylinder_match(const Polygon& p, int i, int j, double tol) {
  const int n = p.size();
  const Vec2 ei = p.vertex(i + 1) - p.vertex(i);
  const Vec2 ej = p.vertex(j + 1) - p.vertex(j);
  if ((ei + ej).norm() > tol) return false;
  const int len_a = ((j - (i + 1)) % n + n) % n + 1;
  const int len_b = ((i - (j + 1)) % n + n) % n + 1;
  if (len_a != len_b) return false;
  for (int k = 0; k < len_a; ++k)
    if ((p.vertex(i + 1 + k) - (p.vertex(i - k) + ei)).norm() > tol) return false;
  return true;
}

SolveResult fold_tetra_impl(const Polygon& p, const SolidModel& q, const TriangleFrame& t,
                            const SolveOptions& opts) {
  Search s(p, q, opts);
  if (!area_matches(p, q.surface_area())) return s.finish();
  const int n = p.size();
  const double tol = 1e3 * p.tolerance().eps_len;

  // Type 1: two edge midpoints are lattice points
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (lattice_stamp(s, p, q, t, midpoint(p, i), midpoint(p, j))) return s.finish();

  // Type 2: parallel edges of equal length joined by a cylinder
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!cylinder_match(p, i, j, tol)) continue;
      const size_t before = s.result().certificates.size();
      const bool stop = lattice_stamp(s, p, q, t, midpoint(p, i), p.vertex(i));
      if (s.result().certificates.size() > before)
        s.result().warnings.push_back("rolling belt: edges " + std::to_string(i) + " and " + std::to_string(j) +
                                      " admit a one-parameter family of foldings; one representative reported");
      if (stop) return s.finish();
    }

  // Type 3: zip symmetrically from an edge midpoint to the first length mismatch,
  // then look for the second lattice point on the longer edge.
  std::vector<double> norms;
  {
    const double d = p.diameter();
    const int k = static_cast<int>(std::ceil(d / std::min(t.a, t.b))) + 1;
    const double cg = (t.a * t.a + t.b * t.b - t.c * t.c) / (2 * t.a * t.b);
    for (int ka = -k; ka <= k; ++ka)
      for (int kb = -k; kb <= k; ++kb) {
        const double n2 = ka * ka * t.a * t.a + kb * kb * t.b * t.b + 2.0 * ka * kb * t.a * t.b * cg;
        if (n2 > 1e-12 && n2 <= d * d + 1e-9) norms.push_back(n2);
      }
    std::sort(norms.begin(), norms.end());
    norms.erase(std::unique(norms.begin(), norms.end(), [](double x, double y) { return std::abs(x - y) < 1e-9; }),
                norms.end());
  }
  for (int e0 = 0; e0 < n; ++e0) {
    const Vec2 v3 = midpoint(p, e0);
    int longer = -1;
    for (int k = 1; 2 * k < n; ++k) {
      const int left_vertex = e0 - k + 1, right_vertex = e0 + k;
      if (std::abs(p.interior_angle(left_vertex) + p.interior_angle(right_vertex) - 360.0) > 1e-6) break;
      const int le = e0 - k, re = e0 + k;
      const double ll = p.edge_length(le), rl = p.edge_length(re);
      if (std::abs(ll - rl) <= tol) continue;
      longer = ll > rl ? ((le % n) + n) % n : re % n;
      break;
    }
    if (longer < 0) continue;
    const Vec2 base = p.vertex(longer);
    const Vec2 u = (p.vertex(longer + 1) - base).normalized();
    const double len = p.edge_length(longer);
    const Vec2 w = base - v3;
    for (double n2 : norms) {
      const double bq = w.dot(u), cq = w.squaredNorm() - n2;
      const double disc = bq * bq - cq;
      if (disc < 0) continue;
      for (double sgn : {-1.0, 1.0}) {
        const double sp = -bq + sgn * std::sqrt(disc);
        if (sp <= tol || sp >= len - tol) continue;
        if (lattice_stamp(s, p, q, t, v3, base + sp * u)) return s.finish();
      }
    }
  }
  return s.finish();
}

TriangleFrame frame_of(const SolidModel& q) {
  const Ring& c = q.chart(0);
  return {(c[1] - c[0]).norm(), (c[2] - c[1]).norm(), (c[0] - c[2]).norm()};
}

// ---------------------------------------------------------------------------
// lattice-frame solvers shared by boxes, dodecahedra and deltahedra

bool try_frame(Search& s, const Polygon& p, const SolidModel& q, int i, double theta, double step,
               int directions, const std::vector<Corner>& corners) {
  for (int k = 0; k < directions; ++k) {
    const double phi = theta + k * step;
    for (const auto& c : corners) {
      if (!wedge_inside(p, i, phi, q.corner_angle(c.face, c.corner))) continue;
      for (bool mir : {false, true})
        if (s.attempt(place_corner(q, c.face, c.corner, p.vertex(i), phi, mir), p.vertex(i))) return true;
    }
  }
  return false;
}

}  // namespace

bool area_matches(const Polygon& p, double surface_area) {
  const double tol = std::max(10 * p.tolerance().eps_len * p.perimeter(), 1e-9 * surface_area);
  return std::abs(p.area() - surface_area) <= tol;
}

int coefficient_bound(const Polygon& p) {
  return static_cast<int>(std::ceil(p.perimeter())) + 4 * p.size() + 16;
}

std::array<Vec2, 4> pentagon_basis() {
  std::array<Vec2, 4> b;
  for (int k = 0; k < 4; ++k) b[static_cast<size_t>(k)] = Vec2(std::cos(k * kPi / 5), std::sin(k * kPi / 5));
  return b;
}

std::array<Vec2, 2> triangle_basis() { return {Vec2(1, 0), Vec2(0.5, std::sqrt(3.0) / 2)}; }

std::vector<std::pair<int, int>> decompose_integer_xy(double ell, double eps_int) {
  std::vector<std::pair<int, int>> out;
  if (!(ell > 0)) return out;
  const int xmax = static_cast<int>(std::floor(std::sqrt(ell) + eps_int));
  for (int x = 0; x <= xmax; ++x) {
    const double y2 = ell - static_cast<double>(x) * x;
    const double y = std::sqrt(std::max(0.0, y2));
    if (y2 < -eps_int * std::max(1.0, ell)) continue;
    if (std::abs(y - std::round(y)) <= eps_int) out.emplace_back(x, static_cast<int>(std::lround(y)));
  }
  return out;
}

std::vector<LatticeCandidate> enumerate_lattices(const Vec2& m, const Vec2& m2, double a, double b, double c,
                                                 double perimeter, double eps_len, double eps_int) {
  std::vector<LatticeCandidate> out;
  const Vec2 d = m2 - m;
  const double dl = d.norm();
  if (dl <= eps_len) return out;
  const double cg = (a * a + b * b - c * c) / (2 * a * b);
  const double sg = std::sqrt(std::max(0.0, 1 - cg * cg));
  const int kmax = static_cast<int>(std::ceil(perimeter / a));
  for (int ka = -kmax; ka <= kmax; ++ka) {
    // b² kb² + 2 ka a b cosγ kb + ka² a² − d² = 0
    const double B = ka * a * cg;
    const double disc = B * B - ka * ka * a * a + dl * dl;
    if (disc < -eps_len) continue;
    const double root = std::sqrt(std::max(0.0, disc));
    std::vector<int> kbs;
    for (double sgn : {-1.0, 1.0}) {
      const double kb = (-B + sgn * root) / b;
      const long r = std::lround(kb);
      if (std::abs(kb - static_cast<double>(r)) > eps_int) continue;
      if (std::find(kbs.begin(), kbs.end(), static_cast<int>(r)) == kbs.end()) kbs.push_back(static_cast<int>(r));
    }
    for (int kb : kbs) {
      for (bool mir : {false, true}) {
        const Vec2 va0(a, 0);
        const Vec2 vb0(b * cg, mir ? -b * sg : b * sg);
        const Vec2 w = ka * va0 + kb * vb0;
        if (std::abs(w.norm() - dl) > 1e3 * eps_len * std::max(1.0, dl)) continue;
        LatticeCandidate cand;
        cand.rotation = angle_of(d) - angle_of(w);
        cand.mirrored = mir;
        cand.anchor = m;
        const Mat2 r = rotation(cand.rotation);
        cand.va = r * va0;
        cand.vb = r * vb0;
        cand.ka = ka;
        cand.kb = kb;
        out.push_back(cand);
      }
    }
  }
  return out;
}

std::vector<CoefficientTuple> enumerate_decompositions(const Vec2& delta, std::span<const Vec2> basis, int bound,
                                                       double eps_int) {
  std::vector<CoefficientTuple> out;
  const double d = delta.norm();
  auto solve_last = [&](const Vec2& v, const Vec2& last, auto&& emit) {
    // |v + B last|² = d², last is a unit vector
    const double bq = v.dot(last);
    const double disc = bq * bq - v.squaredNorm() + d * d;
    if (disc < -1e-9) return;
    const double root = std::sqrt(std::max(0.0, disc));
    long prev = std::numeric_limits<long>::min();
    for (double sgn : {-1.0, 1.0}) {
      const double x = -bq + sgn * root;
      const long r = std::lround(x);
      if (std::abs(x - static_cast<double>(r)) > eps_int || std::labs(r) > bound || r == prev) continue;
      prev = r;
      emit(static_cast<int>(r));
    }
  };
  if (basis.size() == 2) {
    for (int b0 = -bound; b0 <= bound; ++b0)
      solve_last(b0 * basis[0], basis[1], [&](int b1) { out.push_back({b0, b1}); });
    return out;
  }
  if (basis.size() != 4) return out;
  const Vec2 n3 = perp(basis[3]).normalized();
  const double s2 = basis[2].dot(n3);
  for (int b0 = -bound; b0 <= bound; ++b0)
    for (int b1 = -bound; b1 <= bound; ++b1) {
      const Vec2 u = b0 * basis[0] + b1 * basis[1];
      const double un = u.dot(n3);
      double lo = (-d - un) / s2, hi = (d - un) / s2;
      if (lo > hi) std::swap(lo, hi);
      const int from = std::max(-bound, static_cast<int>(std::ceil(lo - 1e-9)));
      const int to = std::min(bound, static_cast<int>(std::floor(hi + 1e-9)));
      for (int b2 = from; b2 <= to; ++b2)
        solve_last(u + b2 * basis[2], basis[3], [&](int b3) { out.push_back({b0, b1, b2, b3}); });
    }
  return out;
}

std::vector<Placement> place_on_triangle(const SolidModel& q, int face, const std::array<Vec2, 3>& t,
                                         double eps_len) {
  std::vector<Placement> out;
  if (q.face_size(face) != 3) return out;
  const Ring& c = q.chart(face);
  const bool plane_ccw = cross2(t[1] - t[0], t[2] - t[0]) > 0;
  int perm[3] = {0, 1, 2};
  do {
    const Vec2& c0 = c[static_cast<size_t>(perm[0])];
    const Vec2& c1 = c[static_cast<size_t>(perm[1])];
    const Vec2& c2 = c[static_cast<size_t>(perm[2])];
    if (std::abs((c1 - c0).norm() - (t[1] - t[0]).norm()) > eps_len) continue;
    if (std::abs((c2 - c0).norm() - (t[2] - t[0]).norm()) > eps_len) continue;
    if (std::abs((c2 - c1).norm() - (t[2] - t[1]).norm()) > eps_len) continue;
    const bool chart_ccw = cross2(c1 - c0, c2 - c0) > 0;
    const Placement pl = place_segment(face, c0, c1, t[0], t[1], chart_ccw != plane_ccw);
    if ((pl.apply(c2) - t[2]).norm() > eps_len * 10) continue;
    out.push_back(pl);
  } while (std::next_permutation(perm, perm + 3));
  return out;
}

SolveResult fold_tetramonohedron(const Polygon& p, double a, double b, double c, const SolveOptions& options) {
  const SolidModel q = build_solid(SolidSpec::tetramonohedron(a, b, c));
  return fold_tetra_impl(p, q, {a, b, c}, options);
}

SolveResult fold_box(const Polygon& p, double a, double b, double c, const SolveOptions& options) {
  const SolidModel q = build_solid(SolidSpec::box(a, b, c));
  Search s(p, q, options);
  if (!area_matches(p, q.surface_area())) return s.finish();
  // one vertex suffices: the box's mirror symmetries act transitively on its corners
  const auto& corners = q.corners_at(0);
  const auto anchors = anchors_with_angle(p, 270.0);
  FrameSet frames(kPi / 2);
  for (int i : anchors)
    for (int j : anchors) {
      if (i == j) continue;
      const Vec2 d = p.vertex(j) - p.vertex(i);
      for (auto [x, y] : decompose_integer_xy(d.squaredNorm(), p.tolerance().eps_int)) {
        const double theta = angle_of(d) - std::atan2(static_cast<double>(y), static_cast<double>(x));
        if (!frames.insert(i, theta)) continue;
        if (try_frame(s, p, q, i, theta, kPi / 2, 4, corners)) return s.finish();
      }
    }
  return s.finish();
}

SolveResult fold_dodecahedron(const Polygon& p, const SolveOptions& options) {
  const SolidModel q = build_solid(SolidSpec::dodecahedron());
  Search s(p, q, options);
  if (!area_matches(p, q.surface_area())) return s.finish();
  const std::vector<Corner> corners{q.corners_at(0).front()};
  const auto basis = pentagon_basis();
  const int bound = coefficient_bound(p);
  const auto anchors = anchors_with_angle(p, 324.0);
  FrameSet frames(kPi / 5);
  for (int i : anchors)
    for (int j : anchors) {
      if (i == j) continue;
      const Vec2 d = p.vertex(j) - p.vertex(i);
      for (const auto& bt : enumerate_decompositions(d, basis, bound, p.tolerance().eps_int)) {
        Vec2 w = Vec2::Zero();
        for (size_t k = 0; k < 4; ++k) w += bt[k] * basis[k];
        if (std::abs(w.norm() - d.norm()) > 1e3 * p.tolerance().eps_len) continue;
        const double theta = angle_of(d) - angle_of(w);
        if (!frames.insert(i, theta)) continue;
        if (try_frame(s, p, q, i, theta, kPi / 5, 10, corners)) return s.finish();
      }
    }
  return s.finish();
}

SolveResult fold_deltahedron(const Polygon& p, const SolidModel& q, const SolveOptions& options) {
  Search s(p, q, options);
  if (!area_matches(p, q.surface_area())) return s.finish();
  const bool regular = q.kind() == SolidKind::Octahedron || q.kind() == SolidKind::Icosahedron;
  const auto basis = triangle_basis();
  const int bound = coefficient_bound(p);

  // anchor candidates: P vertices whose angle equals the co-curvature of a
  // solid vertex of curvature other than 180°
  std::vector<std::vector<Corner>> anchor_corners(static_cast<size_t>(p.size()));
  std::vector<int> anchors;
  for (int i = 0; i < p.size(); ++i) {
    const double ang = p.interior_angle(i);
    for (int v = 0; v < q.num_vertices(); ++v) {
      if (std::abs(q.curvature(v) - 180.0) <= 1e-7) continue;
      if (std::abs(q.co_curvature(v) - ang) > p.tolerance().eps_angle) continue;
      auto& list = anchor_corners[static_cast<size_t>(i)];
      if (regular) {
        if (list.empty()) list.push_back(q.corners_at(v).front());
      } else {
        list.insert(list.end(), q.corners_at(v).begin(), q.corners_at(v).end());
      }
    }
    if (!anchor_corners[static_cast<size_t>(i)].empty()) anchors.push_back(i);
  }
  FrameSet frames(kPi / 3);
  for (int i : anchors)
    for (int j : anchors) {
      if (i == j) continue;
      const Vec2 d = p.vertex(j) - p.vertex(i);
      for (const auto& bt : enumerate_decompositions(d, basis, bound, p.tolerance().eps_int)) {
        const Vec2 w = bt[0] * basis[0] + bt[1] * basis[1];
        if (std::abs(w.norm() - d.norm()) > 1e3 * p.tolerance().eps_len) continue;
        const double theta = angle_of(d) - angle_of(w);
        if (!frames.insert(i, theta)) continue;
        if (try_frame(s, p, q, i, theta, kPi / 3, 6, anchor_corners[static_cast<size_t>(i)])) return s.finish();
      }
    }
  return s.finish();
}

namespace {

SolveResult dispatch(const Polygon& p, const SolidModel& q, const SolveOptions& options) {
  switch (q.kind()) {
    case SolidKind::RegularTetrahedron:
    case SolidKind::Tetramonohedron:
      return fold_tetra_impl(p, q, frame_of(q), options);
    case SolidKind::Cube:
    case SolidKind::Box: {
      const Vec3 ext = q.vertex(7) - q.vertex(0);
      return fold_box(p, ext.x(), ext.y(), ext.z(), options);
    }
    case SolidKind::Dodecahedron:
      return fold_dodecahedron(p, options);
    case SolidKind::Octahedron:
    case SolidKind::Icosahedron:
    case SolidKind::Deltahedron:
      return fold_deltahedron(p, q, options);
  }
  return {};
}

}  // namespace

SolveResult fold(const Polygon& p, const SolidModel& q, const SolveOptions& options) {
  SolveResult res = dispatch(p, q, options);
  double shortest = 1e300;
  for (int i = 0; i < p.size(); ++i) shortest = std::min(shortest, p.edge_length(i));
  if (p.tolerance().eps_len >= 1e-3 * shortest)
    res.warnings.push_back("length tolerance is not small against the shortest edge; decisions may be unreliable");
  return res;
}

SolveResult fold(const Polygon& p, const SolidSpec& target, const SolveOptions& options) {
  return fold(p, build_solid(target), options);
}

}  // namespace polyfold
