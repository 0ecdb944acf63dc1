#include "polyfold/io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace polyfold {

using nlohmann::json;

namespace {

json point(const Vec2& v) { return json::array({v.x(), v.y()}); }

json ring(const Ring& r) {
  json out = json::array();
  for (const auto& v : r) out.push_back(point(v));
  return out;
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw FormatError(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw FormatError(std::string(what) + ": non-finite value");
  return v;
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + ": expected an integer");
  return j.get<int>();
}

Vec2 read_point(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw FormatError(std::string(what) + ": expected [x, y]");
  return {number(j[0], what), number(j[1], what)};
}

Ring read_ring(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + ": expected a list of points");
  Ring r;
  for (const auto& p : j) r.push_back(read_point(p, what));
  return r;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json certificate_json(const FoldingCertificate& cert) {
  json creases = json::array();
  for (const auto& c : cert.creases)
    creases.push_back(json::array({point(c.a), point(c.b),
                                   {{"faces", {c.face_a, c.face_b}}, {"regions", {c.region_a, c.region_b}}}}));
  json regions = json::array();
  for (const auto& r : cert.region_map) {
    const Mat2& m = r.placement.rot;
    regions.push_back({{"face", r.placement.face},
                       {"rotation", {{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}},
                       {"shift", point(r.placement.shift)},
                       {"mirrored", r.placement.mirrored},
                       {"shape", ring(r.shape)}});
  }
  json pairs = json::array();
  for (const auto& bp : cert.boundary_pairing)
    pairs.push_back(json::array({point(bp.a0), point(bp.a1), point(bp.b0), point(bp.b1)}));
  return {{"creases", creases}, {"region_map", regions}, {"boundary_pairing", pairs}};
}

FoldingCertificate certificate_from(const json& j) {
  FoldingCertificate cert;
  for (const auto& r : field(j, "region_map")) {
    RegionRecord rec;
    rec.placement.face = integer(field(r, "face"), "face");
    const auto& m = field(r, "rotation");
    if (!m.is_array() || m.size() != 2) throw FormatError("rotation: expected a 2x2 matrix");
    for (int i = 0; i < 2; ++i) {
      const Vec2 row = read_point(m[static_cast<size_t>(i)], "rotation");
      rec.placement.rot(i, 0) = row.x();
      rec.placement.rot(i, 1) = row.y();
    }
    rec.placement.shift = read_point(field(r, "shift"), "shift");
    if (!field(r, "mirrored").is_boolean()) throw FormatError("mirrored: expected a boolean");
    rec.placement.mirrored = field(r, "mirrored").get<bool>();
    rec.shape = read_ring(field(r, "shape"), "shape");
    cert.region_map.push_back(std::move(rec));
  }
  for (const auto& c : field(j, "creases")) {
    if (!c.is_array() || c.size() != 3) throw FormatError("crease: expected [[x,y],[x,y],{...}]");
    Crease cr;
    cr.a = read_point(c[0], "crease");
    cr.b = read_point(c[1], "crease");
    const auto& faces = field(c[2], "faces");
    const auto& regions = field(c[2], "regions");
    if (faces.size() != 2 || regions.size() != 2) throw FormatError("crease: expected face and region pairs");
    cr.face_a = integer(faces[0], "faces");
    cr.face_b = integer(faces[1], "faces");
    cr.region_a = integer(regions[0], "regions");
    cr.region_b = integer(regions[1], "regions");
    cert.creases.push_back(std::move(cr));
  }
  if (j.contains("boundary_pairing"))
    for (const auto& bp : j.at("boundary_pairing")) {
      if (!bp.is_array() || bp.size() != 4) throw FormatError("boundary_pairing: expected four points");
      cert.boundary_pairing.push_back({read_point(bp[0], "boundary_pairing"), read_point(bp[1], "boundary_pairing"),
                                       read_point(bp[2], "boundary_pairing"), read_point(bp[3], "boundary_pairing")});
    }
  return cert;
}

}  // namespace

Polygon parse_polygon(const std::string& json_text, const Tolerance& tol) {
  return Polygon::from_points(read_ring(field(parse(json_text), "vertices"), "vertices"), tol);
}

Polygon parse_polygon(const std::string& json_text) {
  return Polygon::from_points(read_ring(field(parse(json_text), "vertices"), "vertices"));
}

std::string polygon_to_json(const Polygon& p) { return json{{"vertices", ring(p.vertices())}}.dump(); }

SolidSpec parse_deltahedron(const std::string& json_text) {
  const json j = parse(json_text);
  std::vector<Vec3> verts;
  for (const auto& v : field(j, "vertices")) {
    if (!v.is_array() || v.size() != 3) throw FormatError("vertices: expected [x, y, z]");
    verts.emplace_back(number(v[0], "vertices"), number(v[1], "vertices"), number(v[2], "vertices"));
  }
  std::vector<std::vector<int>> faces;
  for (const auto& f : field(j, "faces")) {
    if (!f.is_array()) throw FormatError("faces: expected index lists");
    std::vector<int> face;
    for (const auto& i : f) face.push_back(integer(i, "faces"));
    faces.push_back(std::move(face));
  }
  return SolidSpec::deltahedron(std::move(verts), std::move(faces));
}

std::string certificate_to_json(const FoldingCertificate& cert, int indent) {
  return certificate_json(cert).dump(indent);
}

FoldingCertificate parse_certificate(const std::string& json_text) {
  try {
    return certificate_from(parse(json_text));
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad certificate: ") + e.what());
  }
}

std::string report_to_json(const SolveResult& result, int indent) {
  json certs = json::array();
  for (const auto& c : result.certificates) certs.push_back(certificate_json(c));
  const json doc{{"decision", result.yes() ? "YES" : "NO"},
                 {"certificates", certs},
                 {"stats",
                  {{"candidates", result.stats.candidates},
                   {"stampings", result.stats.stampings},
                   {"seconds", result.stats.seconds}}},
                 {"warnings", result.warnings}};
  return doc.dump(indent);
}

std::string crease_pattern_svg(const Polygon& p, const FoldingCertificate& cert) {
  constexpr double kScale = 100;
  constexpr double kMargin = 20;
  const Box2 box = bounding_box(p.vertices());
  // SVG y grows downward, so plane points are flipped
  auto sx = [&](const Vec2& v) { return (v.x() - box.lo.x()) * kScale + kMargin; };
  auto sy = [&](const Vec2& v) { return (box.hi.y() - v.y()) * kScale + kMargin; };
  const double w = (box.hi.x() - box.lo.x()) * kScale + 2 * kMargin;
  const double h = (box.hi.y() - box.lo.y()) * kScale + 2 * kMargin;

  std::ostringstream s;
  s << std::setprecision(10);
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
    << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  s << "  <polygon class=\"boundary\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (size_t i = 0; i < p.vertices().size(); ++i)
    s << (i ? " " : "") << sx(p.vertices()[i]) << ',' << sy(p.vertices()[i]);
  s << "\"/>\n";
  for (const auto& c : cert.creases) {
    const Vec2 mid = 0.5 * (c.a + c.b);
    s << "  <g class=\"crease\" data-faces=\"" << c.face_a << ' ' << c.face_b << "\">\n"
      << "    <line x1=\"" << sx(c.a) << "\" y1=\"" << sy(c.a) << "\" x2=\"" << sx(c.b) << "\" y2=\"" << sy(c.b)
      << "\" stroke=\"red\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n"
      << "    <text x=\"" << sx(mid) << "\" y=\"" << sy(mid) << "\" font-size=\"10\" fill=\"red\">" << c.face_a
      << '/' << c.face_b << "</text>\n"
      << "  </g>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents)) throw FormatError("cannot write " + path);
}

}  // namespace polyfold
