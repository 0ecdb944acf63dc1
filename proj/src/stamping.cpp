#include "polyfold/stamping.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace polyfold {

namespace {

double ring_distance(const Ring& ring, const Vec2& p) {
  double best = 1e300;
  for (size_t k = 0; k < ring.size(); ++k)
    best = std::min(best, point_segment_distance(p, ring[k], ring[(k + 1) % ring.size()]));
  return best;
}

bool same_placement(const Placement& a, const Placement& b, double tol) {
  return a.face == b.face && a.mirrored == b.mirrored && (a.rot - b.rot).cwiseAbs().maxCoeff() < 1e-7 &&
         (a.shift - b.shift).norm() < tol;
}

struct OpenPiece {
  int face_edge;
  Vec2 a, b;
};

// Maximal runs of shape edges that lie on the face boundary but not on ∂P.
std::vector<OpenPiece> open_pieces(const Region& r, double min_len) {
  const size_t m = r.shape.size();
  std::vector<OpenPiece> raw;
  std::vector<size_t> start_index;
  for (size_t k = 0; k < m; ++k) {
    const auto& s = r.sources[k];
    if (s.polygon_edge >= 0 || s.face_edge < 0) continue;
    raw.push_back({s.face_edge, r.shape[k], r.shape[(k + 1) % m]});
    start_index.push_back(k);
  }
  if (raw.empty()) return {};
  // merge cyclically contiguous pieces on the same face edge
  std::vector<OpenPiece> merged;
  const size_t n = raw.size();
  size_t first = 0;
  for (size_t j = 0; j < n; ++j) {
    const size_t prev = (j + n - 1) % n;
    const bool continues = raw[prev].face_edge == raw[j].face_edge &&
                           (start_index[prev] + 1) % m == start_index[j];
    if (!continues) {
      first = j;
      break;
    }
  }
  for (size_t c = 0; c < n; ++c) {
    const size_t j = (first + c) % n;
    const size_t prev = (j + n - 1) % n;
    const bool continues = c > 0 && raw[prev].face_edge == raw[j].face_edge &&
                           (start_index[prev] + 1) % m == start_index[j];
    if (continues) merged.back().b = raw[j].b;
    else merged.push_back(raw[j]);
  }
  std::vector<OpenPiece> out;
  for (const auto& p : merged)
    if ((p.b - p.a).norm() >= min_len) out.push_back(p);
  return out;
}

bool vertex_inside(const Polygon& p, const Ring& placed_face, const Ring& shape, double eps) {
  for (const auto& v : placed_face)
    if (contains_point(shape, v, eps) != Location::Exterior && contains_point(p, v) == Location::Interior)
      return true;
  return false;
}

bool overlaps(const Ring& new_face, const Ring& new_shape, const Region& other, double eps) {
  const Box2 a = bounding_box(new_shape), b = bounding_box(other.shape);
  if (!a.overlaps(b, -eps)) return false;
  std::vector<ClipComponent> comps;
  try {
    comps = intersect_face(new_face, other.shape, eps);
  } catch (const GeometryError&) {
    return false;
  }
  for (const auto& c : comps) {
    if (c.area <= 1e3 * eps * ring_perimeter(c.ring)) continue;
    const Vec2 ip = interior_point(c.ring, eps);
    if (contains_point(new_shape, ip, eps) == Location::Interior) return true;
  }
  return false;
}

}  // namespace

const char* to_string(StampRejectReason r) {
  switch (r) {
    case StampRejectReason::SeedNotFound: return "SeedNotFound";
    case StampRejectReason::VertexInsideP: return "VertexInsideP";
    case StampRejectReason::ContactCycle: return "ContactCycle";
    case StampRejectReason::StampBudgetExceeded: return "StampBudgetExceeded";
    case StampRejectReason::UnassignedBoundaryPoint: return "UnassignedBoundaryPoint";
  }
  return "?";
}

int RefinedBoundary::gluing_count() const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const BoundaryNode& n) { return n.gluing; }));
}

int stamp_budget(const Polygon& p) {
  return static_cast<int>(4 * (p.perimeter() + 4 * p.size()) + 16);
}

std::vector<ClipComponent> seed_components(const Polygon& p, const SolidModel& q,
                                           const Placement& initial, const Vec2& seed) {
  const double eps = p.tolerance().eps_len;
  std::vector<ClipComponent> out;
  std::vector<ClipComponent> comps;
  try {
    comps = intersect_face(initial.placed_face(q), p);
  } catch (const GeometryError&) {
    return out;
  }
  for (auto& c : comps)
    if (ring_distance(c.ring, seed) <= 1e3 * eps) out.push_back(std::move(c));
  return out;
}

StampOutcome stamp(const Polygon& p, const SolidModel& q, const Placement& initial, const Vec2& seed,
                   int component) {
  const double eps = p.tolerance().eps_len;
  const double loose = 1e3 * eps;
  auto seeds = seed_components(p, q, initial, seed);
  if (component < 0 || component >= static_cast<int>(seeds.size()))
    return StampReject{StampRejectReason::SeedNotFound, "seed is not on the initial face ∩ P"};

  ContactTree tree;
  const int budget = stamp_budget(p);
  {
    Region r0;
    r0.index = 0;
    r0.placement = initial;
    r0.shape = std::move(seeds[static_cast<size_t>(component)].ring);
    r0.sources = std::move(seeds[static_cast<size_t>(component)].sources);
    r0.area = signed_area(r0.shape);
    if (vertex_inside(p, initial.placed_face(q), r0.shape, eps))
      return StampReject{StampRejectReason::VertexInsideP, "initial face puts a vertex of Q inside P"};
    tree.regions.push_back(std::move(r0));
  }

  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    const Region current = tree.regions[static_cast<size_t>(cur)];
    for (const auto& piece : open_pieces(current, 10 * eps)) {
      const Placement next = roll(q, current.placement, piece.face_edge);
      const Vec2 mid = 0.5 * (piece.a + piece.b);

      bool handled = false;
      for (auto& r : tree.regions) {
        if (!same_placement(r.placement, next, loose) || ring_distance(r.shape, mid) > loose) continue;
        handled = true;
        if (r.index == current.parent) break;
        if (r.parent == cur) {
          tree.links.push_back({cur, r.index, piece.a, piece.b});
          break;
        }
        return StampReject{StampRejectReason::ContactCycle,
                           "region " + std::to_string(r.index) + " reached from two parents"};
      }
      if (handled) continue;

      const Ring face = next.placed_face(q);
      std::vector<ClipComponent> comps;
      try {
        comps = intersect_face(face, p);
      } catch (const GeometryError&) {
        return StampReject{StampRejectReason::ContactCycle, "rolled face meets P only in slivers"};
      }
      int pick = -1;
      for (size_t c = 0; c < comps.size(); ++c)
        if (ring_distance(comps[c].ring, mid) <= loose) {
          pick = static_cast<int>(c);
          break;
        }
      if (pick < 0) return StampReject{StampRejectReason::ContactCycle, "rolled face lost its contact segment"};

      Region child;
      child.index = static_cast<int>(tree.regions.size());
      child.placement = next;
      child.shape = std::move(comps[static_cast<size_t>(pick)].ring);
      child.sources = std::move(comps[static_cast<size_t>(pick)].sources);
      child.area = signed_area(child.shape);
      child.parent = cur;
      if (vertex_inside(p, face, child.shape, eps))
        return StampReject{StampRejectReason::VertexInsideP,
                           "region " + std::to_string(child.index) + " puts a vertex of Q inside P"};
      for (const auto& r : tree.regions)
        if (overlaps(face, child.shape, r, eps))
          return StampReject{StampRejectReason::ContactCycle,
                             "region " + std::to_string(child.index) + " overlaps region " + std::to_string(r.index)};
      if (child.index >= budget)
        return StampReject{StampRejectReason::StampBudgetExceeded, "too many regions"};
      tree.links.push_back({cur, child.index, piece.a, piece.b});
      queue.push_back(child.index);
      tree.regions.push_back(std::move(child));
    }
  }

  StampResult result;
  try {
    result.boundary = refine_boundary(p, tree, q);
  } catch (const StampError& e) {
    return StampReject{StampRejectReason::UnassignedBoundaryPoint, e.what()};
  } catch (const SolidError& e) {
    return StampReject{StampRejectReason::UnassignedBoundaryPoint, e.what()};
  }
  result.tree = std::move(tree);
  return result;
}

RefinedBoundary refine_boundary(const Polygon& p, const ContactTree& tree, const SolidModel& q) {
  const double eps = p.tolerance().eps_len;
  const double loose = 1e3 * eps;
  const int n = p.size();

  struct Interval {
    double t0, t1;
    int region;
  };
  std::vector<std::vector<Interval>> per_edge(static_cast<size_t>(n));
  for (const auto& r : tree.regions) {
    const size_t m = r.shape.size();
    for (size_t k = 0; k < m; ++k) {
      const int i = r.sources[k].polygon_edge;
      if (i < 0) continue;
      const Vec2 base = p.vertex(i);
      const Vec2 dir = (p.vertex(i + 1) - base).normalized();
      double t0 = (r.shape[k] - base).dot(dir), t1 = (r.shape[(k + 1) % m] - base).dot(dir);
      if (t1 < t0) std::swap(t0, t1);
      per_edge[static_cast<size_t>(i)].push_back({t0, t1, r.index});
    }
  }

  RefinedBoundary out;
  for (int i = 0; i < n; ++i) {
    auto& ivs = per_edge[static_cast<size_t>(i)];
    std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) { return a.t0 < b.t0; });
    const double len = p.edge_length(i);
    const Vec2 base = p.vertex(i);
    const Vec2 dir = (p.vertex(i + 1) - base) / len;
    double cur = 0;
    for (const auto& iv : ivs) {
      if (iv.t0 > cur + loose)
        throw StampError("boundary of P near edge " + std::to_string(i) + " is covered by no region");
      if (iv.t0 < cur - loose) throw StampError("boundary of P near edge " + std::to_string(i) + " is covered twice");
      cur = std::max(cur, iv.t1);
    }
    if (ivs.empty() || std::abs(cur - len) > loose)
      throw StampError("boundary of P near edge " + std::to_string(i) + " is covered by no region");

    std::vector<double> breaks{0.0};
    for (size_t k = 1; k < ivs.size(); ++k)
      if (ivs[k].region != ivs[k - 1].region) breaks.push_back(ivs[k].t0);
    for (const auto& iv : ivs) {
      const auto& pl = tree.regions[static_cast<size_t>(iv.region)].placement;
      for (const auto& c : q.chart(pl.face)) {
        const Vec2 v = pl.apply(c);
        const double t = (v - base).dot(dir);
        if (t <= iv.t0 + loose || t >= iv.t1 - loose) continue;
        if (std::abs(cross2(dir, v - base)) <= loose) breaks.push_back(t);
      }
    }
    std::sort(breaks.begin(), breaks.end());
    std::vector<double> uniq;
    for (double t : breaks)
      if (uniq.empty() || t - uniq.back() > loose) uniq.push_back(t);

    for (size_t k = 0; k < uniq.size(); ++k) {
      const double t = uniq[k];
      const double t_next = k + 1 < uniq.size() ? uniq[k + 1] : len;
      const double t_mid = 0.5 * (t + t_next);
      int region = -1;
      for (const auto& iv : ivs)
        if (iv.t0 - loose <= t_mid && t_mid <= iv.t1 + loose) {
          region = iv.region;
          break;
        }
      if (region < 0) throw StampError("boundary segment on edge " + std::to_string(i) + " has no region");
      const auto& pl = tree.regions[static_cast<size_t>(region)].placement;

      BoundaryNode node;
      node.point = k == 0 ? base : Vec2(base + t * dir);
      const Vec2 next_point = k + 1 < uniq.size() ? Vec2(base + t_next * dir) : p.vertex(i + 1);
      node.angle = k == 0 ? p.interior_angle(i) : 180.0;
      node.surface = surface_point(q, pl, node.point, loose);
      node.position = position(q, node.surface);
      node.co_curvature = node.surface.vertex >= 0 ? q.co_curvature(node.surface.vertex) : 360.0;
      node.gluing = std::abs(node.angle - node.co_curvature) <= p.tolerance().eps_angle;
      node.region = region;
      node.length = (next_point - node.point).norm();
      node.seg_from = q.to_3d(pl.face, pl.inverse(node.point));
      node.seg_to = q.to_3d(pl.face, pl.inverse(next_point));
      out.nodes.push_back(std::move(node));
    }
  }
  return out;
}

}  // namespace polyfold
