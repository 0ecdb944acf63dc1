// Independent certificate check: pushes every region onto Q and tests the tiling.
#pragma once

#include "polyfold/gluing.hpp"

#include <string>
#include <vector>

namespace polyfold {

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> problems;
  double max_face_area_error = 0;  // relative to the face area
  double max_overlap = 0;          // relative to the face area
  double area_error = 0;           // |Σ region areas − area(P)| / area(P)
};

struct VerifyLimits {
  double face_area_rel = 1e-6;
  double overlap_rel = 1e-9;
  double position_abs = 1e-6;
};

VerifyReport verify_certificate(const Polygon& p, const SolidModel& q, const FoldingCertificate& cert,
                                const VerifyLimits& limits = {});

}  // namespace polyfold
