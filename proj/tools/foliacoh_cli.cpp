// foliacoh command-line front end. Talks to the engine only through the C API.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "foliacoh/foliacoh.h"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitInvariant = 2;

struct Failure {
  int code;
  std::string message;
};

int exit_code(fc_status s) { return s == FC_INPUT_ERROR ? kExitInput : kExitInvariant; }

void check(fc_status s) {
  if (s != FC_OK) throw Failure{exit_code(s), fc_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitInput, "cannot open " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out(s);
  fc_string_free(s);
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Failure{kExitInput, "cannot write " + out_path};
  out << text;
  if (!out) throw Failure{kExitInput, "write failed for " + out_path};
}

struct LeafMapHandle {
  fc_leaf_map* h = nullptr;
  ~LeafMapHandle() { fc_leaf_map_free(h); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertical cohomology of discrete foliations and the spherical pendulum analyzer"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fc_version()));

  std::string out_path;

  auto* coh = app.add_subcommand("cohomology", "vertical, total and Cech-row cohomology of a model");
  std::string model_path;
  std::optional<std::string> cover_spec;
  coh->add_option("model", model_path, "model JSON (product or cover model)")->required();
  coh->add_option("--cover", cover_spec, "base cover, e.g. \"0,1;1,2\"");
  coh->add_option("--out", out_path, "output file (stdout if omitted)");

  auto* les = app.add_subcommand("les", "long exact sequence of a leaf-to-leaf map");
  std::string map_path;
  std::uint64_t seed = 0;
  auto* map_opt = les->add_option("--map", map_path, "leaf map JSON");
  les->add_option("--seed", seed, "seed for a random map (default 0)")->excludes(map_opt);
  les->add_option("--out", out_path, "output file (stdout if omitted)");

  auto* pend = app.add_subcommand("pendulum", "spherical pendulum analyzer");
  pend->require_subcommand(1);
  double energy = 0;
  std::string alpha_range = "1:3:100";
  std::size_t grid = 5;

  auto* bif = pend->add_subcommand("bifurcation", "bifurcation curve CSV (alpha,E,I)");
  bif->add_option("--alpha-range", alpha_range, "start:end:count");
  bif->add_option("--out", out_path, "output file");

  auto* crit = pend->add_subcommand("critical", "critical circles JSON");
  crit->add_option("--energy", energy, "energy level")->required();
  crit->add_option("--out", out_path, "output file");

  auto* mol = pend->add_subcommand("molecule", "labelled molecule DOT");
  mol->add_option("--energy", energy, "energy level")->required();
  mol->add_option("--grid", grid, "nodes per edge (unused for DOT)");
  mol->add_option("--out", out_path, "output file");

  auto* h0 = pend->add_subcommand("h0", "H0 of the Liouville partition JSON");
  h0->add_option("--energy", energy, "energy level")->required();
  h0->add_option("--grid", grid, "interior nodes per molecule edge");
  h0->add_option("--out", out_path, "output file");

  auto* disc = pend->add_subcommand("discrepancy", "general closed form against the numeric solver, CSV");
  std::vector<double> energies{-0.9, -0.5, 0.0, 0.5, 2.0, 5.0};
  disc->add_option("--energy", energies, "energy levels");
  disc->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    char* text = nullptr;
    if (*coh) {
      const std::string doc = read_file(model_path);
      check(fc_cohomology_report(doc.c_str(), cover_spec ? cover_spec->c_str() : nullptr, &text));
    } else if (*les) {
      LeafMapHandle h;
      if (*map_opt) {
        check(fc_leaf_map_from_json(read_file(map_path).c_str(), &h.h));
      } else {
        check(fc_leaf_map_random(seed, &h.h));
      }
      check(fc_leaf_map_les_report(h.h, &text));
    } else if (*bif) {
      check(fc_pendulum_bifurcation_csv(alpha_range.c_str(), &text));
    } else if (*crit) {
      check(fc_pendulum_critical_json(energy, &text));
    } else if (*mol) {
      check(fc_pendulum_molecule_dot(energy, &text));
    } else if (*h0) {
      check(fc_pendulum_h0_json(energy, grid, &text));
    } else if (*disc) {
      check(fc_pendulum_discrepancy_csv(energies.data(), energies.size(), &text));
    }
    emit(take(text), out_path);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return 0;
}
