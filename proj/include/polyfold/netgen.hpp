// Edge unfoldings and star unfoldings, used as test oracles.
#pragma once

#include "polyfold/solid.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace polyfold {

/// Edges of Q as vertex index pairs (smaller index first).
using CutTree = std::vector<std::pair<int, int>>;

enum class NetErrc { NotSpanningTree, OverlapFailure };

struct NetError {
  NetErrc code;
  std::string detail;
};

using NetOutcome = std::variant<Polygon, NetError>;

const char* to_string(NetErrc e);

CutTree solid_edges(const SolidModel& q);

/// Cuts Q along `tree` and develops the faces by rolling across the other edges.
NetOutcome edge_unfolding(const SolidModel& q, const CutTree& tree);

/// Minimum spanning tree under random edge weights.
CutTree random_cut_tree(const SolidModel& q, std::uint64_t seed);
NetOutcome random_edge_unfolding(const SolidModel& q, std::uint64_t seed);

/// Every spanning tree of Q's edge graph (brute force; small solids only).
std::vector<CutTree> all_cut_trees(const SolidModel& q);

/// All simple edge unfoldings of Q, one per congruence class.
std::vector<Polygon> enumerate_nets(const SolidModel& q);

/// Identical for congruent polygons (rotation, translation, reflection).
std::string congruence_key(const Polygon& p, double quantum = 1e-6);

/// Triangle with sides (2a, 2b, 2c). Throws SolidError(NonAcuteTriangle).
Polygon star_unfolding_tetramonohedron(double a, double b, double c);

}  // namespace polyfold
