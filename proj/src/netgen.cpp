#include "polyfold/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace polyfold {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(a)] = b;
    return true;
  }
};

bool is_spanning_tree(const SolidModel& q, const CutTree& tree) {
  if (static_cast<int>(tree.size()) != q.num_vertices() - 1) return false;
  UnionFind uf(q.num_vertices());
  for (auto [u, v] : tree) {
    if (u < 0 || v < 0 || u >= q.num_vertices() || v >= q.num_vertices()) return false;
    if (!uf.unite(u, v)) return false;
  }
  return true;
}

std::pair<int, int> ordered(int u, int v) { return u < v ? std::make_pair(u, v) : std::make_pair(v, u); }

}  // namespace

const char* to_string(NetErrc e) {
  return e == NetErrc::NotSpanningTree ? "NotSpanningTree" : "OverlapFailure";
}

CutTree solid_edges(const SolidModel& q) {
  std::set<std::pair<int, int>> edges;
  for (int f = 0; f < q.num_faces(); ++f) {
    const auto& fv = q.face(f);
    for (size_t k = 0; k < fv.size(); ++k) edges.insert(ordered(fv[k], fv[(k + 1) % fv.size()]));
  }
  return {edges.begin(), edges.end()};
}

NetOutcome edge_unfolding(const SolidModel& q, const CutTree& tree) {
  std::set<std::pair<int, int>> cut;
  for (auto [u, v] : tree) cut.insert(ordered(u, v));
  if (cut.size() != tree.size() || !is_spanning_tree(q, tree))
    return NetError{NetErrc::NotSpanningTree, "cut edges do not form a spanning tree of the vertices"};

  auto is_cut = [&](int f, int e) {
    const auto& fv = q.face(f);
    return cut.count(ordered(fv[static_cast<size_t>(e)], fv[static_cast<size_t>((e + 1) % fv.size())])) > 0;
  };

  std::vector<Placement> placed(static_cast<size_t>(q.num_faces()));
  std::vector<char> done(static_cast<size_t>(q.num_faces()), 0);
  std::deque<int> queue{0};
  done[0] = 1;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (int e = 0; e < q.face_size(f); ++e) {
      if (is_cut(f, e)) continue;
      const EdgeLink nb = q.neighbor(f, e);
      if (done[static_cast<size_t>(nb.face)]) continue;
      done[static_cast<size_t>(nb.face)] = 1;
      placed[static_cast<size_t>(nb.face)] = roll(q, placed[static_cast<size_t>(f)], e);
      queue.push_back(nb.face);
    }
  }

  struct Seg {
    Vec2 a, b;
  };
  std::vector<Seg> segs;
  for (int f = 0; f < q.num_faces(); ++f)
    for (int e = 0; e < q.face_size(f); ++e)
      if (is_cut(f, e)) {
        const auto& pl = placed[static_cast<size_t>(f)];
        segs.push_back({pl.apply(q.chart_point(f, e)), pl.apply(q.chart_point(f, e + 1))});
      }

  const double tol = 1e-7;
  std::vector<char> used(segs.size(), 0);
  Ring ring;
  size_t cur = 0;
  for (size_t step = 0; step < segs.size(); ++step) {
    used[cur] = 1;
    ring.push_back(segs[cur].a);
    size_t next = segs.size();
    int matches = 0;
    for (size_t k = 0; k < segs.size(); ++k)
      if ((segs[k].a - segs[cur].b).norm() < tol) {
        ++matches;
        next = k;
      }
    if (matches != 1) return NetError{NetErrc::OverlapFailure, "development touches itself at a vertex"};
    if (step + 1 == segs.size()) {
      if (next != 0) return NetError{NetErrc::OverlapFailure, "boundary does not close"};
      break;
    }
    if (used[next]) return NetError{NetErrc::OverlapFailure, "boundary splits into several loops"};
    cur = next;
  }
  try {
    return Polygon::from_points(ring);
  } catch (const GeometryError& e) {
    return NetError{NetErrc::OverlapFailure, e.what()};
  }
}

CutTree random_cut_tree(const SolidModel& q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  auto edges = solid_edges(q);
  std::vector<std::pair<double, std::pair<int, int>>> weighted;
  for (const auto& e : edges) weighted.emplace_back(weight(rng), e);
  std::sort(weighted.begin(), weighted.end());
  UnionFind uf(q.num_vertices());
  CutTree tree;
  for (const auto& [w, e] : weighted)
    if (uf.unite(e.first, e.second)) tree.push_back(e);
  return tree;
}

NetOutcome random_edge_unfolding(const SolidModel& q, std::uint64_t seed) {
  return edge_unfolding(q, random_cut_tree(q, seed));
}

std::vector<CutTree> all_cut_trees(const SolidModel& q) {
  const auto edges = solid_edges(q);
  const int m = static_cast<int>(edges.size());
  const int k = q.num_vertices() - 1;
  std::vector<CutTree> out;
  std::vector<int> pick(static_cast<size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    CutTree t;
    for (int i : pick) t.push_back(edges[static_cast<size_t>(i)]);
    if (is_spanning_tree(q, t)) out.push_back(std::move(t));
    int i = k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

std::string congruence_key(const Polygon& p, double quantum) {
  const int n = p.size();
  auto token = [&](double len, double ang) {
    return std::make_pair(std::llround(len / quantum), std::llround(ang / quantum));
  };
  using Seq = std::vector<std::pair<long long, long long>>;
  Seq fwd, rev;
  for (int i = 0; i < n; ++i) fwd.push_back(token(p.edge_length(i), p.interior_angle(i + 1)));
  for (int i = n - 1; i >= 0; --i) rev.push_back(token(p.edge_length(i), p.interior_angle(i)));
  Seq best;
  for (const Seq* s : {&fwd, &rev})
    for (int r = 0; r < n; ++r) {
      Seq rot(s->begin() + r, s->end());
      rot.insert(rot.end(), s->begin(), s->begin() + r);
      if (best.empty() || rot < best) best = std::move(rot);
    }
  std::ostringstream out;
  for (auto [l, a] : best) out << l << ':' << a << ';';
  return out.str();
}

std::vector<Polygon> enumerate_nets(const SolidModel& q) {
  std::vector<Polygon> nets;
  std::set<std::string> keys;
  for (const auto& t : all_cut_trees(q)) {
    auto r = edge_unfolding(q, t);
    if (auto* poly = std::get_if<Polygon>(&r))
      if (keys.insert(congruence_key(*poly)).second) nets.push_back(std::move(*poly));
  }
  return nets;
}

Polygon star_unfolding_tetramonohedron(double a, double b, double c) {
  build_solid(SolidSpec::tetramonohedron(a, b, c));  // validates acuteness
  const double cx = (a * a + b * b - c * c) / a;
  const double cy = std::sqrt(4 * b * b - cx * cx);
  return Polygon::from_points({Vec2(0, 0), Vec2(2 * a, 0), Vec2(cx, cy)});
}

}  // namespace polyfold
