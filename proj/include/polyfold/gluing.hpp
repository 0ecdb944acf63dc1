// Zip gluing of the refined boundary and folding certificates.
#pragma once

#include "polyfold/stamping.hpp"

#include <cstdint>
#include <optional>
#include <variant>

namespace polyfold {

struct Crease {
  Vec2 a, b;
  int region_a, region_b;  // parent and child region
  int face_a, face_b;      // faces of Q on either side
  SurfacePoint image_a, image_b;
};

struct RegionRecord {
  Placement placement;
  Ring shape;
};

/// Two boundary pieces of P that are glued to each other.
struct BoundaryPair {
  Vec2 a0, a1;  // first piece, a0 is the zip start
  Vec2 b0, b1;  // second piece, b0 glued to a0
};

struct FoldingCertificate {
  std::vector<Crease> creases;
  std::vector<RegionRecord> region_map;
  std::vector<BoundaryPair> boundary_pairing;
};

enum class GlueFailure {
  NoGluingPoint,
  LengthMismatch,
  SurfaceMismatch,
  AngleOverflow,
};

const char* to_string(GlueFailure f);

struct GlueOptions {
  /// When set, gluing points are taken in a random order drawn from this seed
  /// instead of lowest index first.
  std::optional<std::uint64_t> shuffle_seed;
};

using GlueOutcome = std::variant<FoldingCertificate, GlueFailure>;

GlueOutcome glue_check(const StampResult& stamping, const SolidModel& q, const Polygon& p,
                       const GlueOptions& options = {});

/// Canonical comparison key: crease segments as an unordered set.
bool same_creases(const FoldingCertificate& x, const FoldingCertificate& y, double eps_len);

}  // namespace polyfold
