// Fixtures and brute-force oracles shared by the unit tests and the acceptance run.
#pragma once

#include "polyfold/netgen.hpp"
#include "polyfold/solvers.hpp"
#include "polyfold/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace polyfold::testing {

inline Polygon unit_square() { return Polygon::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

/// Six unit squares: a column of four with arms on the third cell.
inline Polygon latin_cross() {
  return Polygon::from_points(
      {{1, 0}, {2, 0}, {2, 2}, {3, 2}, {3, 3}, {2, 3}, {2, 4}, {1, 4}, {1, 3}, {0, 3}, {0, 2}, {1, 2}});
}

inline Polygon rectangle(double w, double h) { return Polygon::from_points({{0, 0}, {w, 0}, {w, h}, {0, h}}); }

inline Polygon equilateral(double side) {
  return Polygon::from_points({{0, 0}, {side, 0}, {side / 2, side * std::sqrt(3.0) / 2}});
}

// ---------------------------------------------------------------------------
// polyominoes

using Cell = std::pair<int, int>;
using Cells = std::vector<Cell>;

inline Cells normalized(Cells cells) {
  int mx = 1 << 30, my = 1 << 30;
  for (auto [x, y] : cells) {
    mx = std::min(mx, x);
    my = std::min(my, y);
  }
  for (auto& [x, y] : cells) {
    x -= mx;
    y -= my;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

/// Canonical form under the eight symmetries of the square grid.
inline Cells free_canonical(const Cells& cells) {
  Cells best;
  for (int s = 0; s < 8; ++s) {
    Cells t;
    for (auto [x, y] : cells) {
      int u = x, v = y;
      for (int r = 0; r < (s & 3); ++r) std::tie(u, v) = std::make_pair(-v, u);
      if (s & 4) u = -u;
      t.emplace_back(u, v);
    }
    t = normalized(t);
    if (best.empty() || t < best) best = t;
  }
  return best;
}

/// Free polyominoes with `size` cells, grown cell by cell.
inline std::vector<Cells> free_polyominoes(int size) {
  std::set<Cells> level{Cells{{0, 0}}};
  for (int n = 1; n < size; ++n) {
    std::set<Cells> next;
    for (const auto& shape : level)
      for (auto [x, y] : shape)
        for (auto [dx, dy] : {Cell{1, 0}, Cell{-1, 0}, Cell{0, 1}, Cell{0, -1}}) {
          const Cell c{x + dx, y + dy};
          if (std::find(shape.begin(), shape.end(), c) != shape.end()) continue;
          Cells grown = shape;
          grown.push_back(c);
          next.insert(free_canonical(grown));
        }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

/// Outline of a simply connected polyomino as a polygon. Returns nothing when
/// the outline pinches at a vertex.
inline std::optional<Polygon> polyomino_polygon(const Cells& cells) {
  std::map<Cell, Cell> next;  // directed boundary edges, interior on the left
  std::set<std::pair<Cell, Cell>> edges;
  for (auto [x, y] : cells) {
    const Cell c[4] = {{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}};
    for (int k = 0; k < 4; ++k) {
      const auto e = std::make_pair(c[k], c[(k + 1) % 4]);
      const auto rev = std::make_pair(e.second, e.first);
      if (edges.count(rev))
        edges.erase(rev);
      else
        edges.insert(e);
    }
  }
  for (const auto& [a, b] : edges) {
    if (next.count(a)) return std::nullopt;
    next[a] = b;
  }
  std::vector<Vec2> ring;
  Cell cur = next.begin()->first;
  for (size_t k = 0; k < next.size(); ++k) {
    ring.emplace_back(cur.first, cur.second);
    cur = next.at(cur);
  }
  if (cur != next.begin()->first) return std::nullopt;
  return Polygon::from_points(ring);
}

// ---------------------------------------------------------------------------
// random inputs

/// Sides (a, b, c) of a random acute triangle with a in [0.5, 1.5].
inline std::array<double, 3> random_acute(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.5, 1.5);
  while (true) {
    std::array<double, 3> s{u(rng), u(rng), u(rng)};
    const double a2 = s[0] * s[0], b2 = s[1] * s[1], c2 = s[2] * s[2];
    // keep a margin from right angles so the triangle is clearly acute
    if (a2 + b2 > 1.05 * c2 && b2 + c2 > 1.05 * a2 && a2 + c2 > 1.05 * b2) return s;
  }
}

/// Moves one vertex by `dist` along the chord of its neighbours, which keeps
/// the area unchanged, so the area precheck alone cannot reject the result.
/// Returns nothing when the moved polygon is not simple.
inline std::optional<Polygon> perturb_vertex(const Polygon& p, int i, double dist, double sign = 1) {
  const Vec2 chord = p.vertex(i + 1) - p.vertex(i - 1);
  std::vector<Vec2> pts = p.vertices();
  pts[static_cast<size_t>(i)] += sign * dist * chord.normalized();
  try {
    return Polygon::from_points(pts);
  } catch (const GeometryError&) {
    return std::nullopt;
  }
}

/// First simple area-preserving perturbation, scanning vertices from a random start.
inline std::optional<Polygon> perturbed(const Polygon& p, double dist, std::mt19937_64& rng) {
  const int start = static_cast<int>(rng() % static_cast<std::uint64_t>(p.size()));
  for (int k = 0; k < p.size(); ++k)
    for (double sign : {1.0, -1.0})
      if (auto out = perturb_vertex(p, start + k, dist, sign)) return out;
  return std::nullopt;
}

/// Moves one random vertex by `dist` in a random direction that is not nearly
/// parallel to its neighbours' chord, so the area changes.
inline Polygon displaced(const Polygon& p, double dist, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(0, 2 * kPi);
  while (true) {
    const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(p.size()));
    const double t = ang(rng);
    const Vec2 dir(std::cos(t), std::sin(t));
    if (std::abs(cross2(dir, (p.vertex(i + 1) - p.vertex(i - 1)).normalized())) < 0.2) continue;
    std::vector<Vec2> pts = p.vertices();
    pts[static_cast<size_t>(i)] += dist * dir;
    try {
      return Polygon::from_points(pts);
    } catch (const GeometryError&) {
    }
  }
}

/// Random rotation, translation and optional reflection, followed by a cyclic
/// relabelling of the vertex list.
inline Polygon random_motion(const Polygon& p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(0, 2 * kPi), off(-10, 10);
  Mat2 m = rotation(ang(rng));
  if (rng() & 1) m = m * Vec2(1, -1).asDiagonal();
  const Vec2 t(off(rng), off(rng));
  const int shift = static_cast<int>(rng() % static_cast<std::uint64_t>(p.size()));
  std::vector<Vec2> pts;
  for (int k = 0; k < p.size(); ++k) pts.push_back(m * p.vertex(k + shift) + t);
  if (m.determinant() < 0) std::reverse(pts.begin(), pts.end());
  return Polygon::from_points(pts);
}

/// Simple random edge unfoldings of q, skipping overlapping cut trees.
inline std::vector<Polygon> random_nets(const SolidModel& q, int count, std::uint64_t seed) {
  std::vector<Polygon> out;
  for (std::uint64_t s = seed; static_cast<int>(out.size()) < count && s < seed + 100000; ++s) {
    auto net = random_edge_unfolding(q, s);
    if (auto* p = std::get_if<Polygon>(&net)) out.push_back(std::move(*p));
  }
  return out;
}

/// Bipyramid over a regular k-gon (k = 3, 4 or 5) with unit edges.
inline SolidSpec bipyramid(int k) {
  const double r = 1 / (2 * std::sin(kPi / k));
  const double h = std::sqrt(1 - r * r);
  std::vector<Vec3> v{{0, 0, h}, {0, 0, -h}};
  std::vector<std::vector<int>> f;
  for (int i = 0; i < k; ++i) {
    v.emplace_back(r * std::cos(2 * kPi * i / k), r * std::sin(2 * kPi * i / k), 0);
    f.push_back({0, 2 + i, 2 + (i + 1) % k});
    f.push_back({1, 2 + (i + 1) % k, 2 + i});
  }
  return SolidSpec::deltahedron(v, f);
}

// ---------------------------------------------------------------------------
// oracles

/// Re-runs the stamping that produced `cert` from its first region.
inline std::optional<StampResult> restamp(const Polygon& p, const SolidModel& q, const FoldingCertificate& cert) {
  const auto& r0 = cert.region_map.front();
  for (const auto& seed : r0.shape) {
    const auto comps = seed_components(p, q, r0.placement, seed);
    for (size_t c = 0; c < comps.size(); ++c) {
      auto out = stamp(p, q, r0.placement, seed, static_cast<int>(c));
      if (auto* st = std::get_if<StampResult>(&out))
        if (st->tree.regions.size() == cert.region_map.size() && std::holds_alternative<FoldingCertificate>(glue_check(*st, q, p)))
          return *st;
    }
  }
  return std::nullopt;
}

/// Smallest width of any face of q.
inline double min_face_width(const SolidModel& q) {
  double best = 1e300;
  for (int f = 0; f < q.num_faces(); ++f) {
    const Ring& c = q.chart(f);
    for (size_t k = 0; k < c.size(); ++k) {
      const Vec2 e = (c[(k + 1) % c.size()] - c[k]).normalized();
      double w = 0;
      for (const auto& v : c) w = std::max(w, std::abs(cross2(e, v - c[k])));
      best = std::min(best, w);
    }
  }
  return best;
}

/// Regions whose boundary runs along edge i of P, against ⌈2ℓ/w⌉ + 2.
inline bool traverse_bound_holds(const Polygon& p, const SolidModel& q, const ContactTree& tree) {
  const double w = min_face_width(q);
  for (int i = 0; i < p.size(); ++i) {
    int count = 0;
    for (const auto& r : tree.regions)
      if (std::any_of(r.sources.begin(), r.sources.end(), [&](const ClipEdgeSource& s) { return s.polygon_edge == i; }))
        ++count;
    if (count > static_cast<int>(std::ceil(2 * p.edge_length(i) / w)) + 2) return false;
  }
  return true;
}

/// Links form a spanning tree on the regions (duplicate links between the same
/// pair count once).
inline bool is_contact_tree(const ContactTree& tree) {
  const int n = static_cast<int>(tree.regions.size());
  std::set<std::pair<int, int>> pairs;
  for (const auto& l : tree.links) pairs.insert(std::minmax(l.parent, l.child));
  if (static_cast<int>(pairs.size()) != n - 1) return false;
  std::vector<int> root(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) root[static_cast<size_t>(i)] = i;
  auto find = [&](int x) {
    while (root[static_cast<size_t>(x)] != x) x = root[static_cast<size_t>(x)];
    return x;
  };
  for (auto [a, b] : pairs) {
    const int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    root[static_cast<size_t>(ra)] = rb;
  }
  return true;
}

inline double region_area_sum(const ContactTree& tree) {
  double s = 0;
  for (const auto& r : tree.regions) s += std::abs(signed_area(r.shape));
  return s;
}

}  // namespace polyfold::testing
