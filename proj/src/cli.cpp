#include "polyfold/cli.hpp"

#include "polyfold/io.hpp"
#include "polyfold/netgen.hpp"
#include "polyfold/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>

namespace polyfold {

namespace {

struct TargetArgs {
  std::string target;
  double a = 1, b = 1, c = 1;
  std::string solid_file;
};

void add_target_options(CLI::App* cmd, TargetArgs& t) {
  static const std::vector<std::string> kTargets{"cube", "box", "tetra", "tetramono",
                                                 "octa", "icosa", "dodeca", "delta"};
  cmd->add_option("--target", t.target, "Target solid")->required()->check(CLI::IsMember(kTargets));
  cmd->add_option("--a", t.a, "First side length (box, tetramono)");
  cmd->add_option("--b", t.b, "Second side length (box, tetramono)");
  cmd->add_option("--c", t.c, "Third side length (box, tetramono)");
  cmd->add_option("--solid", t.solid_file, "Deltahedron JSON (delta only)");
}

SolidSpec target_spec(const TargetArgs& t) {
  if (t.target == "cube") return SolidSpec::cube();
  if (t.target == "box") return SolidSpec::box(t.a, t.b, t.c);
  if (t.target == "tetra") return SolidSpec::regular_tetrahedron();
  if (t.target == "tetramono") return SolidSpec::tetramonohedron(t.a, t.b, t.c);
  if (t.target == "octa") return SolidSpec::octahedron();
  if (t.target == "icosa") return SolidSpec::icosahedron();
  if (t.target == "dodeca") return SolidSpec::dodecahedron();
  if (t.solid_file.empty()) throw FormatError("--target delta needs --solid <file>");
  return parse_deltahedron(read_file(t.solid_file));
}

Polygon load_polygon(const std::string& path, std::optional<double> eps_len) {
  const std::string text = read_file(path);
  if (!eps_len) return parse_polygon(text);
  if (!(*eps_len > 0)) throw FormatError("--tolerance must be positive");
  Tolerance tol;
  tol.eps_len = *eps_len;
  return parse_polygon(text, tol);
}

std::string svg_path(const std::string& base, size_t k) {
  if (k == 0) return base;
  const std::filesystem::path p(base);
  std::ostringstream name;
  name << p.stem().string() << '_' << k << p.extension().string();
  return (p.parent_path() / name.str()).string();
}

/// Certificates from either a bare certificate or a fold report.
std::vector<FoldingCertificate> load_certificates(const std::string& path) {
  const std::string text = read_file(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  std::vector<FoldingCertificate> out;
  if (doc.is_object() && doc.contains("certificates")) {
    for (const auto& c : doc.at("certificates")) out.push_back(parse_certificate(c.dump()));
  } else {
    out.push_back(parse_certificate(text));
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide whether a polygon folds onto a convex solid", "polyfold"};
  app.require_subcommand(1);

  TargetArgs fold_t, net_t, ver_t;
  std::string polygon_file, json_out, svg_out;
  bool all = false, first = false;
  std::optional<double> tolerance;
  auto* fold_cmd = app.add_subcommand("fold", "Search for foldings of a polygon");
  fold_cmd->add_option("--polygon", polygon_file, "Polygon JSON")->required();
  add_target_options(fold_cmd, fold_t);
  auto* all_flag = fold_cmd->add_flag("--all", all, "Collect every certificate");
  fold_cmd->add_flag("--first", first, "Stop at the first certificate (default)")->excludes(all_flag);
  fold_cmd->add_option("--tolerance", tolerance, "Absolute length tolerance");
  fold_cmd->add_option("--svg", svg_out, "Crease pattern output; extra certificates get a numeric suffix");
  fold_cmd->add_option("--json", json_out, "Report output (stdout when omitted)");

  std::uint64_t seed = 0;
  bool enumerate = false;
  std::string out_dir;
  auto* net_cmd = app.add_subcommand("netgen", "Generate edge unfoldings of a solid");
  add_target_options(net_cmd, net_t);
  net_cmd->add_option("--seed", seed, "Random cut tree seed");
  net_cmd->add_flag("--enumerate", enumerate, "Every congruence class of simple nets");
  net_cmd->add_option("--out-dir", out_dir, "Directory for net files (stdout when omitted)");

  std::string cert_file, ver_polygon;
  auto* ver_cmd = app.add_subcommand("verify", "Check certificates with the tiling verifier");
  ver_cmd->add_option("--certificate", cert_file, "Certificate or report JSON")->required();
  ver_cmd->add_option("--polygon", ver_polygon, "Polygon JSON")->required();
  add_target_options(ver_cmd, ver_t);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*fold_cmd) {
      const Polygon p = load_polygon(polygon_file, tolerance);
      const SolidModel q = build_solid(target_spec(fold_t));
      SolveOptions opts;
      opts.first_only = !all;
      const SolveResult res = fold(p, q, opts);
      const std::string report = report_to_json(res);
      if (json_out.empty())
        out << report << '\n';
      else
        write_file(json_out, report + "\n");
      if (!svg_out.empty())
        for (size_t k = 0; k < res.certificates.size(); ++k)
          write_file(svg_path(svg_out, k), crease_pattern_svg(p, res.certificates[k]));
      for (const auto& w : res.warnings) err << "warning: " << w << '\n';
      return res.yes() ? kExitYes : kExitNo;
    }

    if (*net_cmd) {
      const SolidModel q = build_solid(target_spec(net_t));
      std::vector<Polygon> nets;
      if (enumerate) {
        nets = enumerate_nets(q);
      } else {
        // random cut trees may self-overlap; try successive seeds
        for (std::uint64_t s = seed; s < seed + 1000 && nets.empty(); ++s) {
          auto net = random_edge_unfolding(q, s);
          if (auto* p = std::get_if<Polygon>(&net)) nets.push_back(std::move(*p));
        }
        if (nets.empty()) throw FormatError("no simple edge unfolding found");
      }
      if (out_dir.empty()) {
        for (const auto& n : nets) out << polygon_to_json(n) << '\n';
      } else {
        std::filesystem::create_directories(out_dir);
        for (size_t k = 0; k < nets.size(); ++k) {
          std::ostringstream name;
          name << "net_" << std::setw(3) << std::setfill('0') << k << ".json";
          write_file((std::filesystem::path(out_dir) / name.str()).string(), polygon_to_json(nets[k]) + "\n");
        }
        out << nets.size() << " nets written to " << out_dir << '\n';
      }
      return kExitYes;
    }

    const Polygon p = load_polygon(ver_polygon, std::nullopt);
    const SolidModel q = build_solid(target_spec(ver_t));
    const auto certs = load_certificates(cert_file);
    if (certs.empty()) throw FormatError("no certificates in " + cert_file);
    bool ok = true;
    for (size_t k = 0; k < certs.size(); ++k) {
      const VerifyReport rep = verify_certificate(p, q, certs[k]);
      out << "certificate " << k << ": " << (rep.ok ? "ok" : "FAILED") << " (face area error "
          << rep.max_face_area_error << ", overlap " << rep.max_overlap << ")\n";
      for (const auto& msg : rep.problems) out << "  " << msg << '\n';
      ok = ok && rep.ok;
    }
    return ok ? kExitYes : kExitNo;
  } catch (const std::exception& e) {
    // FormatError, GeometryError and SolidError all mean unusable input
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace polyfold
