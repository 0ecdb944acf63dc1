#include "polyfold/gluing.hpp"

#include <cmath>
#include <iterator>
#include <random>
#include <set>

namespace polyfold {

namespace {

struct Seg {
  double len;
  Vec3 a3, b3;
  Vec2 a2, b2;

  Vec3 at3(double s) const { return len > 0 ? Vec3(a3 + (b3 - a3) * (s / len)) : a3; }
  Vec2 at2(double s) const { return len > 0 ? Vec2(a2 + (b2 - a2) * (s / len)) : a2; }
  Seg sub(double s0, double s1) const { return {s1 - s0, at3(s0), at3(s1), at2(s0), at2(s1)}; }
};

}  // namespace

const char* to_string(GlueFailure f) {
  switch (f) {
    case GlueFailure::NoGluingPoint: return "NoGluingPoint";
    case GlueFailure::LengthMismatch: return "LengthMismatch";
    case GlueFailure::SurfaceMismatch: return "SurfaceMismatch";
    case GlueFailure::AngleOverflow: return "AngleOverflow";
  }
  return "?";
}

GlueOutcome glue_check(const StampResult& stamping, const SolidModel& q, const Polygon& p,
                       const GlueOptions& options) {
  const auto& nodes = stamping.boundary.nodes;
  const int n = static_cast<int>(nodes.size());
  const double eps_angle = p.tolerance().eps_angle;
  const double len_tol = 1e3 * p.tolerance().eps_len;
  const double pos_tol = 1e3 * p.tolerance().eps_len;

  std::vector<int> prev(static_cast<size_t>(n)), next(static_cast<size_t>(n));
  std::vector<double> angle(static_cast<size_t>(n)), cocurv(static_cast<size_t>(n));
  std::vector<Seg> seg(static_cast<size_t>(n));
  std::set<int> gluing;
  for (int k = 0; k < n; ++k) {
    const auto& nd = nodes[static_cast<size_t>(k)];
    const auto u = static_cast<size_t>(k);
    prev[u] = (k + n - 1) % n;
    next[u] = (k + 1) % n;
    angle[u] = nd.angle;
    cocurv[u] = nd.co_curvature;
    seg[u] = {nd.length, nd.seg_from, nd.seg_to, nd.point, nodes[static_cast<size_t>((k + 1) % n)].point};
    if (nd.gluing) gluing.insert(k);
  }

  FoldingCertificate cert;
  std::mt19937_64 rng(options.shuffle_seed.value_or(0));
  int alive = n;
  int live = 0;  // some node that is still on the boundary

  auto retest = [&](int c) -> bool {
    const auto u = static_cast<size_t>(c);
    if (angle[u] > cocurv[u] + eps_angle) return false;
    if (std::abs(angle[u] - cocurv[u]) <= eps_angle) gluing.insert(c);
    return true;
  };

  while (alive > 2) {
    if (gluing.empty()) return GlueFailure::NoGluingPoint;
    auto it = gluing.begin();
    if (options.shuffle_seed) {
      std::uniform_int_distribution<size_t> pick(0, gluing.size() - 1);
      std::advance(it, static_cast<long>(pick(rng)));
    }
    const int i = *it;
    gluing.erase(it);
    const int pv = prev[static_cast<size_t>(i)], nx = next[static_cast<size_t>(i)];
    const Seg sp = seg[static_cast<size_t>(pv)], sn = seg[static_cast<size_t>(i)];
    const double m = std::min(sp.len, sn.len);
    if ((sp.at3(sp.len - m) - sn.at3(m)).norm() > pos_tol || (sp.b3 - sn.a3).norm() > pos_tol)
      return GlueFailure::SurfaceMismatch;
    cert.boundary_pairing.push_back({sn.a2, sn.at2(m), sp.b2, sp.at2(sp.len - m)});

    int changed;
    if (std::abs(sp.len - sn.len) <= len_tol) {
      if (alive == 3) return GlueFailure::LengthMismatch;
      const int nn = next[static_cast<size_t>(nx)];
      angle[static_cast<size_t>(pv)] += angle[static_cast<size_t>(nx)];
      seg[static_cast<size_t>(pv)] = seg[static_cast<size_t>(nx)];
      next[static_cast<size_t>(pv)] = nn;
      prev[static_cast<size_t>(nn)] = pv;
      gluing.erase(nx);
      alive -= 2;
      changed = pv;
    } else if (sp.len < sn.len) {
      angle[static_cast<size_t>(pv)] += 180.0;
      seg[static_cast<size_t>(pv)] = sn.sub(sp.len, sn.len);
      next[static_cast<size_t>(pv)] = nx;
      prev[static_cast<size_t>(nx)] = pv;
      alive -= 1;
      changed = pv;
    } else {
      angle[static_cast<size_t>(nx)] += 180.0;
      seg[static_cast<size_t>(pv)] = sp.sub(0, sp.len - sn.len);
      next[static_cast<size_t>(pv)] = nx;
      prev[static_cast<size_t>(nx)] = pv;
      alive -= 1;
      changed = nx;
    }
    live = changed;
    gluing.erase(changed);
    if (!retest(changed)) return GlueFailure::AngleOverflow;
  }

  if (alive == 2) {
    const int u = live;
    const int v = next[static_cast<size_t>(u)];
    const Seg& su = seg[static_cast<size_t>(u)];
    const Seg& sv = seg[static_cast<size_t>(v)];
    if (std::abs(su.len - sv.len) > len_tol) return GlueFailure::LengthMismatch;
    if ((su.a3 - sv.b3).norm() > pos_tol || (su.b3 - sv.a3).norm() > pos_tol) return GlueFailure::SurfaceMismatch;
    for (int c : {u, v}) {
      const auto k = static_cast<size_t>(c);
      if (angle[k] > cocurv[k] + eps_angle) return GlueFailure::AngleOverflow;
      if (std::abs(angle[k] - cocurv[k]) > eps_angle) return GlueFailure::LengthMismatch;
    }
    cert.boundary_pairing.push_back({su.a2, su.b2, sv.b2, sv.a2});
  } else {
    return GlueFailure::LengthMismatch;
  }

  const auto& tree = stamping.tree;
  const double eps = 1e3 * p.tolerance().eps_len;
  for (const auto& link : tree.links) {
    const auto& pa = tree.regions[static_cast<size_t>(link.parent)].placement;
    const auto& ch = tree.regions[static_cast<size_t>(link.child)].placement;
    cert.creases.push_back({link.a, link.b, link.parent, link.child, pa.face, ch.face,
                            surface_point(q, pa, link.a, eps), surface_point(q, pa, link.b, eps)});
  }
  for (const auto& r : tree.regions) cert.region_map.push_back({r.placement, r.shape});
  return cert;
}

bool same_creases(const FoldingCertificate& x, const FoldingCertificate& y, double eps_len) {
  if (x.creases.size() != y.creases.size()) return false;
  std::vector<char> used(y.creases.size(), 0);
  for (const auto& c : x.creases) {
    bool found = false;
    for (size_t k = 0; k < y.creases.size() && !found; ++k) {
      if (used[k]) continue;
      const auto& d = y.creases[k];
      const bool same = ((c.a - d.a).norm() <= eps_len && (c.b - d.b).norm() <= eps_len) ||
                        ((c.a - d.b).norm() <= eps_len && (c.b - d.a).norm() <= eps_len);
      if (same) {
        used[k] = 1;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace polyfold
