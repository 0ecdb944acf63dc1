// Rolling a solid over a polygon: regions, contact tree and refined boundary.
#pragma once

#include "polyfold/geometry.hpp"
#include "polyfold/solid.hpp"

#include <string>
#include <variant>
#include <vector>

namespace polyfold {

struct Region {
  int index = 0;
  Placement placement;
  Ring shape;                            // counterclockwise, inside P and the placed face
  std::vector<ClipEdgeSource> sources;   // per shape edge
  int parent = -1;
  double area = 0;
};

/// An open segment shared by two regions; the child was reached by rolling
/// across it from the parent.
struct ContactLink {
  int parent;
  int child;
  Vec2 a, b;
};

struct ContactTree {
  std::vector<Region> regions;
  std::vector<ContactLink> links;  // several links may join the same pair
};

struct BoundaryNode {
  Vec2 point;
  double angle = 180;        // interior angle of P at the node, degrees
  SurfacePoint surface;
  Vec3 position;
  double co_curvature = 360; // of the corresponding surface point
  bool gluing = false;
  // the boundary segment from this node to the next one
  int region = -1;
  double length = 0;
  Vec3 seg_from, seg_to;
};

/// P subdivided at every crossing with a placed edge or vertex of Q.
struct RefinedBoundary {
  std::vector<BoundaryNode> nodes;  // circular, counterclockwise along P
  int gluing_count() const;
};

struct StampResult {
  ContactTree tree;
  RefinedBoundary boundary;
};

enum class StampRejectReason {
  SeedNotFound,
  VertexInsideP,
  ContactCycle,
  StampBudgetExceeded,
  UnassignedBoundaryPoint,
};

struct StampReject {
  StampRejectReason reason;
  std::string detail;
};

using StampOutcome = std::variant<StampResult, StampReject>;

const char* to_string(StampRejectReason r);

/// Components of the placed initial face ∩ P whose boundary passes through seed.
std::vector<ClipComponent> seed_components(const Polygon& p, const SolidModel& q,
                                           const Placement& initial, const Vec2& seed);

/// Rolls Q over P starting with component `component` of seed_components().
StampOutcome stamp(const Polygon& p, const SolidModel& q, const Placement& initial,
                   const Vec2& seed, int component = 0);

/// Largest number of regions stamp() creates before rejecting.
int stamp_budget(const Polygon& p);

class StampError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds P' from a finished contact tree. Throws StampError when some part of
/// the boundary of P is covered by no region.
RefinedBoundary refine_boundary(const Polygon& p, const ContactTree& tree, const SolidModel& q);

}  // namespace polyfold
