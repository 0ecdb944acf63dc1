#include "support.hpp"

#include <doctest.h>

using namespace polyfold;
using namespace polyfold::testing;

TEST_SUITE("netgen") {
  TEST_CASE("some cut tree of the cube gives the latin cross") {
    const SolidModel q = build_solid(SolidSpec::cube());
    const std::string want = congruence_key(latin_cross());
    int found = 0;
    for (const auto& t : all_cut_trees(q)) {
      const auto net = edge_unfolding(q, t);
      if (const auto* p = std::get_if<Polygon>(&net)) found += congruence_key(*p) == want;
    }
    CHECK(found > 0);
  }

  TEST_CASE("eleven cube nets") {
    const SolidModel q = build_solid(SolidSpec::cube());
    CHECK(all_cut_trees(q).size() == 384);  // spanning trees of the cube graph
    const auto nets = enumerate_nets(q);
    CHECK(nets.size() == 11);
    // independent count: hexominoes whose outline matches a net
    std::set<std::string> keys;
    for (const auto& n : nets) keys.insert(congruence_key(n));
    int matches = 0;
    for (const auto& cells : free_polyominoes(6))
      if (const auto p = polyomino_polygon(cells)) matches += keys.count(congruence_key(*p)) > 0;
    CHECK(matches == 11);
  }

  TEST_CASE("cut sets that are not spanning trees") {
    const SolidModel q = build_solid(SolidSpec::cube());
    auto code = [&](const CutTree& t) {
      const auto r = edge_unfolding(q, t);
      return std::holds_alternative<NetError>(r) ? std::get<NetError>(r).code : NetErrc::OverlapFailure;
    };
    const CutTree edges = solid_edges(q);
    CHECK(code(CutTree(edges.begin(), edges.begin() + 3)) == NetErrc::NotSpanningTree);
    CHECK(code(CutTree(edges.begin(), edges.begin() + 7)) == NetErrc::NotSpanningTree);
  }

  TEST_CASE("star unfoldings") {
    const Polygon t = star_unfolding_tetramonohedron(1, 1, 1);
    CHECK(t.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(t.edge_length(i) == doctest::Approx(2));
    const Polygon s = star_unfolding_tetramonohedron(0.5, 0.6, 0.7);
    std::vector<double> sides{s.edge_length(0), s.edge_length(1), s.edge_length(2)};
    std::sort(sides.begin(), sides.end());
    CHECK(sides[0] == doctest::Approx(1.0));
    CHECK(sides[1] == doctest::Approx(1.2));
    CHECK(sides[2] == doctest::Approx(1.4));
    CHECK_THROWS_AS(star_unfolding_tetramonohedron(3, 4, 5), SolidError);
  }

  TEST_CASE("nets have the solid's area and fold back") {
    for (const auto& spec : {SolidSpec::cube(), SolidSpec::regular_tetrahedron(), SolidSpec::octahedron(),
                             SolidSpec::icosahedron(), SolidSpec::box(1, 2, 1)}) {
      const SolidModel q = build_solid(spec);
      for (const auto& n : random_nets(q, 4, 11)) {
        CHECK(std::abs(n.area() - q.surface_area()) <= n.tolerance().eps_len * n.perimeter());
        CHECK(fold(n, q).yes());
      }
    }
  }

  TEST_CASE("congruence keys ignore rigid motions and relabelling") {
    std::mt19937_64 rng(12);
    const std::string key = congruence_key(latin_cross());
    for (int k = 0; k < 10; ++k) CHECK(congruence_key(random_motion(latin_cross(), rng)) == key);
    CHECK(congruence_key(rectangle(1, 6)) != key);
  }
}
