// mapsym: flag-system analysis of maps on surfaces.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mapsym/catalog.hpp"
#include "mapsym/generators.hpp"
#include "mapsym/json_io.hpp"
#include "mapsym/report.hpp"
#include "mapsym/symmetry.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

bool use_colour() {
  const char* env = std::getenv("MAPSYM_COLOR");
  if (env && std::string(env) == "always") return true;
  if (env && std::string(env) == "never") return false;
  return false;  // default: plain output, byte-identical everywhere
}

void emit_error(const std::string& message, bool as_json) {
  if (as_json)
    std::cout << nlohmann::json{{"error", message}}.dump() << "\n";
  else
    std::cerr << "error: " << message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flag systems, symmetry type graphs and 4-orbit map classification"};
  app.require_subcommand(1);

  std::string file;
  bool strict = false, as_json = false;

  auto* cmd_validate = app.add_subcommand("validate", "check the monodromy axioms of a flag system");
  cmd_validate->add_option("file", file, "flag-system JSON (\"-\" for stdin)")->required();
  cmd_validate->add_flag("--strict", strict, "also require a simple graph of minimum degree 3");
  cmd_validate->add_flag("--json", as_json, "machine-readable report");

  auto* cmd_analyze = app.add_subcommand("analyze", "orbit structure, types and characteristic systems");
  cmd_analyze->add_option("file", file)->required();
  cmd_analyze->add_flag("--json", as_json, "machine-readable report");

  auto* cmd_classify = app.add_subcommand("classify", "name the 4-orbit symmetry type class");
  cmd_classify->add_option("file", file)->required();

  auto* cmd_generate = app.add_subcommand("generate", "emit a generated flag system as JSON");
  std::string kind, solid_name, input_file;
  int gen_n = 0, rows = 0, cols = 0;
  cmd_generate->add_option("kind", kind,
                           "antiprism|prism|platonic|torus-grid|medial|truncation|dual")
      ->required();
  cmd_generate->add_option("--n", gen_n, "polygon parameter for prism/antiprism");
  cmd_generate->add_option("--name", solid_name, "platonic solid name");
  cmd_generate->add_option("--rows", rows);
  cmd_generate->add_option("--cols", cols);
  cmd_generate->add_option("--input", input_file, "flag-system JSON input for medial/truncation/dual");

  auto* cmd_types = app.add_subcommand("enumerate-types", "candidate symmetry type graphs on k vertices");
  int k = 4;
  cmd_types->add_option("--k", k, "number of flag orbits")->required();

  auto* cmd_maps = app.add_subcommand("enumerate-maps", "census of flag systems up to isomorphism");
  int n_flags = 0;
  cmd_maps->add_option("--flags", n_flags, "flag count (multiple of 4, at most 16)")->required();

  auto* cmd_catalog = app.add_subcommand("catalog", "the 22 four-orbit symmetry type graph classes");
  bool catalog_dot = false;
  cmd_catalog->add_flag("--dot", catalog_dot, "DOT instead of JSON");

  auto* cmd_dot = app.add_subcommand("export-dot", "DOT of the symmetry type graph of a map");
  cmd_dot->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_validate) {
      auto fs = mapsym::flag_system_from_json(read_input(file));
      auto report = mapsym::validate(fs, strict);
      if (as_json) {
        nlohmann::json out{{"valid", report.valid()}, {"violations", report.violations}};
        std::cout << out.dump() << "\n";
      } else {
        for (const auto& violation : report.violations) std::cout << violation << "\n";
        if (report.valid()) std::cout << "valid\n";
      }
      return report.valid() ? kExitOk : kExitDataError;
    }
    if (*cmd_analyze) {
      auto fs = mapsym::flag_system_from_json(read_input(file));
      auto report = mapsym::analyze(fs);
      std::cout << (as_json ? mapsym::analysis_to_json(report)
                            : mapsym::analysis_to_text(report, use_colour()));
      if (as_json) std::cout << "\n";
      return kExitOk;
    }
    if (*cmd_classify) {
      auto fs = mapsym::flag_system_from_json(read_input(file));
      try {
        std::cout << mapsym::classify_4orbit(fs).name << "\n";
      } catch (const mapsym::WrongOrbitCountError& e) {
        std::cout << "k=" << e.k << " (not 4-orbit)\n";
      }
      return kExitOk;
    }
    if (*cmd_generate) {
      mapsym::FlagSystem fs;
      if (kind == "antiprism")
        fs = mapsym::antiprism(gen_n);
      else if (kind == "prism")
        fs = mapsym::prism(gen_n);
      else if (kind == "platonic")
        fs = mapsym::platonic(solid_name);
      else if (kind == "torus-grid")
        fs = mapsym::torus_grid(rows, cols);
      else if (kind == "medial" || kind == "truncation" || kind == "dual") {
        if (input_file.empty()) {
          emit_error("--input required for " + kind, false);
          return kExitUsage;
        }
        auto base = mapsym::flag_system_from_json(read_input(input_file));
        fs = kind == "medial" ? mapsym::medial(base)
                              : kind == "truncation" ? mapsym::truncation(base) : mapsym::dual(base);
      } else {
        emit_error("unknown generate kind: " + kind, false);
        return kExitUsage;
      }
      std::cout << mapsym::flag_system_to_json(fs) << "\n";
      return kExitOk;
    }
    if (*cmd_types) {
      for (const auto& p : mapsym::enumerate_candidates(k))
        std::cout << mapsym::pregraph_to_json(p) << "\n";
      return kExitOk;
    }
    if (*cmd_maps) {
      for (const auto& fs : mapsym::enumerate_flag_systems(n_flags))
        std::cout << mapsym::flag_system_to_json(fs) << "\n";
      return kExitOk;
    }
    if (*cmd_catalog) {
      for (const auto& entry : mapsym::catalog()) {
        if (catalog_dot)
          std::cout << mapsym::to_dot(entry.pregraph, "class_" + entry.name.substr(2));
        else
          std::cout << entry.name << " " << mapsym::pregraph_to_json(entry.pregraph) << "\n";
      }
      return kExitOk;
    }
    if (*cmd_dot) {
      auto fs = mapsym::flag_system_from_json(read_input(file));
      std::cout << mapsym::to_dot(mapsym::symmetry_type_graph(fs), "symmetry_type_graph");
      return kExitOk;
    }
  } catch (const std::exception& e) {
    emit_error(e.what(), as_json);
    return kExitDataError;
  }
  return kExitUsage;
}
