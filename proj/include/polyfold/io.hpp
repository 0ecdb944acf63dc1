// JSON and SVG serialization for polygons, solids, reports and certificates.
#pragma once

#include "polyfold/solvers.hpp"

#include <stdexcept>
#include <string>

namespace polyfold {

/// Malformed or semantically invalid input document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"vertices": [[x,y], ...]}. Throws FormatError or GeometryError.
Polygon parse_polygon(const std::string& json_text);
Polygon parse_polygon(const std::string& json_text, const Tolerance& tol);
std::string polygon_to_json(const Polygon& p);

/// {"vertices": [[x,y,z], ...], "faces": [[i0,i1,...], ...]} as a deltahedron spec.
SolidSpec parse_deltahedron(const std::string& json_text);

std::string certificate_to_json(const FoldingCertificate& cert, int indent = -1);
FoldingCertificate parse_certificate(const std::string& json_text);

/// Report document: decision, certificates, stats and warnings.
std::string report_to_json(const SolveResult& result, int indent = 2);

/// SVG 1.1 crease pattern: boundary solid, creases dashed and labelled with
/// their face pair. 100 user units per plane unit.
std::string crease_pattern_svg(const Polygon& p, const FoldingCertificate& cert);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace polyfold
