// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace polyfold;
using namespace polyfold::testing;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

/// Verifier metrics over every YES produced by criteria 1 to 4.
struct Metrics {
  long certificates = 0;
  long rejected = 0;
  double face_area_error = 0;
  double overlap = 0;

  void record(const Polygon& p, const SolidModel& q, const SolveResult& r) {
    for (const auto& c : r.certificates) {
      const VerifyReport rep = verify_certificate(p, q, c);
      ++certificates;
      if (!rep.ok) ++rejected;
      face_area_error = std::max(face_area_error, rep.max_face_area_error);
      overlap = std::max(overlap, rep.max_overlap);
    }
  }
} metrics;

SolveResult solve(const Polygon& p, const SolidModel& q) {
  SolveResult r = fold(p, q);
  metrics.record(p, q, r);
  return r;
}

/// Every vertex of P, every axis direction, every corner of Q, both mirror
/// settings: the unrestricted candidate space for unit-square lattices.
bool exhaustive_box_search(const Polygon& p, const SolidModel& q) {
  for (int i = 0; i < p.size(); ++i)
    for (int k = 0; k < 4; ++k)
      for (int f = 0; f < q.num_faces(); ++f)
        for (int c = 0; c < q.face_size(f); ++c)
          for (bool mir : {false, true}) {
            const Placement pl = place_corner(q, f, c, p.vertex(i), k * kPi / 2, mir);
            const auto comps = seed_components(p, q, pl, p.vertex(i));
            for (size_t m = 0; m < comps.size(); ++m) {
              const auto out = stamp(p, q, pl, p.vertex(i), static_cast<int>(m));
              const auto* st = std::get_if<StampResult>(&out);
              if (!st) continue;
              const auto glued = glue_check(*st, q, p);
              const auto* cert = std::get_if<FoldingCertificate>(&glued);
              if (cert && verify_certificate(p, q, *cert).ok) return true;
            }
          }
  return false;
}

Outcome criterion1() {
  Outcome o;
  const SolidModel cube = build_solid(SolidSpec::cube());
  const auto t0 = Clock::now();
  const SolveResult r = solve(latin_cross(), cube);
  const double t = since(t0);
  o.require(r.yes(), "decision YES");
  o.require(!r.certificates.empty() && verify_certificate(latin_cross(), cube, r.certificates[0]).ok,
            "verifier accepts the certificate");
  o.require(t < 1.0, "under 1 s");
  o.detail << "certificates=" << r.certificates.size() << " time=" << t << "s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = Clock::now();
  const SolidModel cube = build_solid(SolidSpec::cube());
  const auto nets = enumerate_nets(cube);
  o.require(nets.size() == 11, "11 congruence classes of nets");
  std::set<std::string> net_keys;
  int accepted = 0;
  for (const auto& n : nets) {
    net_keys.insert(congruence_key(n));
    accepted += solve(n, cube).yes();
  }
  o.require(accepted == static_cast<int>(nets.size()), "every net accepted");

  const auto hexominoes = free_polyominoes(6);
  o.require(hexominoes.size() == 35, "35 free hexominoes");
  int non_nets = 0, rejected = 0, cross_checked = 0, net_cells_yes = 0;
  for (const auto& cells : hexominoes) {
    const auto poly = polyomino_polygon(cells);
    o.require(poly.has_value(), "hexomino outline is simple");
    if (!poly) continue;
    const bool is_net = net_keys.count(congruence_key(*poly)) > 0;
    const bool yes = solve(*poly, cube).yes();
    if (is_net) {
      net_cells_yes += yes;
      continue;
    }
    ++non_nets;
    rejected += !yes;
    cross_checked += !exhaustive_box_search(*poly, cube);
  }
  const double t = since(t0);
  o.require(net_cells_yes == 11, "the 11 net hexominoes accepted");
  o.require(non_nets == 24 && rejected == 24, "the 24 other hexominoes rejected");
  o.require(cross_checked == 24, "exhaustive candidate scan agrees on all 24");
  o.require(t < 60, "under 60 s");
  o.detail << "nets=" << nets.size() << " accepted=" << accepted << " non-nets=" << non_nets
           << " rejected=" << rejected << " cross-checked=" << cross_checked << " time=" << t << "s";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = Clock::now();
  const SolidModel tetra = build_solid(SolidSpec::regular_tetrahedron());
  o.require(solve(equilateral(2), tetra).yes(), "side-2 triangle folds to the regular tetrahedron");
  std::mt19937_64 rng(2024);
  int yes = 0, no_after = 0;
  for (int k = 0; k < 50; ++k) {
    const auto [a, b, c] = random_acute(rng);
    const SolidModel q = build_solid(SolidSpec::tetramonohedron(a, b, c));
    const Polygon star = star_unfolding_tetramonohedron(a, b, c);
    yes += solve(star, q).yes();
    no_after += !solve(displaced(star, 0.05 * a, rng), q).yes();
  }
  const double t = since(t0);
  o.require(yes == 50, "all 50 star unfoldings accepted");
  o.require(no_after == 50, "all 50 perturbed triangles rejected");
  o.require(t < 120, "under 120 s");
  o.detail << "stars accepted=" << yes << "/50 perturbed rejected=" << no_after << "/50 time=" << t << "s";
  return o;
}

Outcome criterion4() {
  Outcome o;
  struct Target {
    const char* name;
    SolidSpec spec;
    bool slide_must_fail;  // area-preserving slides; tetramonohedra have genuine belt foldings
  };
  const std::vector<Target> targets{{"cube", SolidSpec::cube(), true},
                                    {"tetra", SolidSpec::tetramonohedron(1, 1, 1), false},
                                    {"octa", SolidSpec::octahedron(), true},
                                    {"icosa", SolidSpec::icosahedron(), true},
                                    {"dodeca", SolidSpec::dodecahedron(), true}};
  std::mt19937_64 rng(77);
  for (const auto& t : targets) {
    const SolidModel q = build_solid(t.spec);
    const auto nets = random_nets(q, 25, 1000);
    int yes = 0, moved_no = 0, slid = 0, slid_no = 0;
    double worst = 0;
    for (const auto& n : nets) {
      const auto r = solve(n, q);
      yes += r.yes();
      worst = std::max(worst, r.stats.seconds);
      const auto r2 = fold(displaced(n, 0.05, rng), q);
      moved_no += !r2.yes();
      worst = std::max(worst, r2.stats.seconds);
      if (const auto s = perturbed(n, 0.05, rng)) {
        const auto r3 = fold(*s, q);
        metrics.record(*s, q, r3);
        ++slid;
        slid_no += !r3.yes();
        worst = std::max(worst, r3.stats.seconds);
      }
    }
    o.require(nets.size() == 25, std::string(t.name) + ": 25 nets generated");
    o.require(yes == 25, std::string(t.name) + ": every net accepted");
    o.require(moved_no == 25, std::string(t.name) + ": every displaced net rejected");
    if (t.slide_must_fail) o.require(slid_no == slid, std::string(t.name) + ": every area-preserving slide rejected");
    if (std::string(t.name) == "dodeca") o.require(worst < 300, "dodecahedron cases under 5 min each");
    o.detail << t.name << " yes=" << yes << " displaced-no=" << moved_no << " slide-no=" << slid_no << "/" << slid
             << " worst=" << worst << "s; ";
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::vector<SolidSpec> specs{SolidSpec::cube(),        SolidSpec::box(1, 2, 3),  SolidSpec::box(2, 2, 1),
                               SolidSpec::regular_tetrahedron(), SolidSpec::octahedron(), SolidSpec::icosahedron(),
                               SolidSpec::dodecahedron(), bipyramid(3),            bipyramid(5)};
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const auto [a, b, c] = random_acute(rng);
    specs.push_back(SolidSpec::tetramonohedron(a, b, c));
  }
  double worst = 0;
  for (const auto& s : specs) {
    const SolidModel q = build_solid(s);
    double total = 0;
    for (int v = 0; v < q.num_vertices(); ++v) total += q.curvature(v);
    worst = std::max(worst, std::abs(total - 720.0));
  }
  o.require(worst <= 1e-7, "total curvature 720 within 1e-7 degrees");
  o.detail << "solids=" << specs.size() << " max deviation=" << worst << " deg";
  return o;
}

Outcome criterion6() {
  Outcome o;
  struct Case {
    Polygon p;
    SolidModel q;
  };
  std::vector<Case> yes_cases, no_cases;
  std::mt19937_64 rng(66);
  const SolidModel cube = build_solid(SolidSpec::cube());
  yes_cases.push_back({latin_cross(), cube});
  for (const auto& n : enumerate_nets(cube)) yes_cases.push_back({n, cube});
  for (const auto& spec : {SolidSpec::tetramonohedron(1, 1, 1), SolidSpec::octahedron(), SolidSpec::icosahedron(),
                           SolidSpec::dodecahedron(), bipyramid(5)}) {
    const SolidModel q = build_solid(spec);
    for (const auto& n : random_nets(q, 3, 500)) yes_cases.push_back({n, q});
  }
  for (int k = 0; k < 3; ++k) {
    const auto [a, b, c] = random_acute(rng);
    yes_cases.push_back({star_unfolding_tetramonohedron(a, b, c), build_solid(SolidSpec::tetramonohedron(a, b, c))});
  }
  for (size_t k = 0; k < 12; ++k)
    if (auto s = perturbed(yes_cases[k].p, 0.05, rng)) no_cases.push_back({*s, cube});
  no_cases.push_back({rectangle(1, 6), cube});

  int stampings = 0, trees = 0, areas = 0, bounds = 0, orders = 0, motions = 0, runs = 0;
  for (const auto& c : yes_cases) {
    const SolveResult r = fold(c.p, c.q);
    if (!r.yes()) {
      o.require(false, "a test net is rejected");
      continue;
    }
    const auto st = restamp(c.p, c.q, r.certificates.front());
    if (!st) {
      o.require(false, "certificate stamping reproduced");
      continue;
    }
    ++stampings;
    trees += is_contact_tree(st->tree);
    areas += std::abs(region_area_sum(st->tree) - c.p.area()) <= c.p.tolerance().eps_len * c.p.perimeter();
    bounds += traverse_bound_holds(c.p, c.q, st->tree);
    bool same = true;
    for (std::uint64_t s = 0; s < 20; ++s) {
      GlueOptions go;
      go.shuffle_seed = s;
      same = same && std::holds_alternative<FoldingCertificate>(glue_check(*st, c.q, c.p, go));
    }
    orders += same;
  }
  // rejected stampings must stay rejected in every order
  int rejected_stampings = 0, rejected_orders = 0;
  for (const auto& c : yes_cases) {
    for (int i = 0; i < c.p.size() && rejected_stampings < 60; ++i)
      for (int k = 0; k < 4; ++k) {
        const Placement pl = place_corner(c.q, 0, 0, c.p.vertex(i), k * kPi / 2, false);
        const auto out = stamp(c.p, c.q, pl, c.p.vertex(i));
        const auto* st = std::get_if<StampResult>(&out);
        if (!st || std::holds_alternative<FoldingCertificate>(glue_check(*st, c.q, c.p))) continue;
        ++rejected_stampings;
        bool same = true;
        for (std::uint64_t s = 0; s < 20; ++s) {
          GlueOptions go;
          go.shuffle_seed = s;
          same = same && std::holds_alternative<GlueFailure>(glue_check(*st, c.q, c.p, go));
        }
        rejected_orders += same;
      }
  }
  for (const auto* list : {&yes_cases, &no_cases})
    for (const auto& c : *list) {
      const bool expected = list == &yes_cases;
      for (int k = 0; k < 20; ++k) {
        ++runs;
        motions += fold(random_motion(c.p, rng), c.q).yes() == expected;
      }
    }
  const int n = static_cast<int>(yes_cases.size());
  o.require(stampings == n, "stampings reproduced");
  o.require(trees == stampings, "contact trees acyclic and spanning");
  o.require(areas == stampings, "region areas sum to area(P)");
  o.require(bounds == stampings, "traverse bound");
  o.require(orders == stampings, "gluing order independence (accepted)");
  o.require(rejected_orders == rejected_stampings, "gluing order independence (rejected)");
  o.require(motions == runs, "rigid-motion and relabelling invariance");
  o.detail << "stampings=" << stampings << " trees=" << trees << " areas=" << areas << " bounds=" << bounds
           << " orders=" << orders << " rejected-orders=" << rejected_orders << "/" << rejected_stampings
           << " motions=" << motions << "/" << runs;
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto lat = enumerate_lattices(Vec2(0, 0), Vec2(2, 0), 1, 1, 1, 6);
  std::set<std::pair<int, int>> pairs;
  for (const auto& c : lat) pairs.insert({c.ka, c.kb});
  const auto xy = decompose_integer_xy(25);
  const auto b = pentagon_basis();
  const Vec2 lhs(std::cos(rad(144)), std::sin(rad(144)));
  const double err = (lhs - (-b[0] + b[1] - b[2] + b[3])).norm();
  o.require(pairs.size() == 6, "6 coefficient pairs for |m - m'| = 2");
  o.require(xy.size() == 4, "4 decompositions of 25");
  o.require(err <= 1e-12, "pentagon identity");
  o.detail << "lattice pairs=" << pairs.size() << " decompositions(25)=" << xy.size() << " identity error=" << err;
  return o;
}

Outcome criterion8() {
  Outcome o;
  o.require(metrics.certificates > 0, "certificates collected");
  o.require(metrics.rejected == 0, "verifier accepts every certificate");
  o.require(metrics.face_area_error <= 1e-6, "face area sums within 1e-6");
  o.require(metrics.overlap <= 1e-9, "overlaps within 1e-9");
  o.detail << "certificates=" << metrics.certificates << " max face area error=" << metrics.face_area_error
           << " max overlap=" << metrics.overlap;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 latin cross folds to the cube", criterion1},
      {"2 hexomino census", criterion2},
      {"3 tetramonohedron star unfoldings", criterion3},
      {"4 random edge unfoldings round-trip", criterion4},
      {"5 total curvature", criterion5},
      {"6 stamping and decision invariants", criterion6},
      {"7 enumeration counts", criterion7},
      {"8 verifier metrics", criterion8},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << "criterion " << name << ": " << o.detail.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
