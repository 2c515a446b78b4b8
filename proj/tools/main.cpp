// cpmp command line: Casimir-Polder multipole potentials above a dielectric
// half-space. Subcommands: potential, verify, ratio, asymptote.
//
// Exit codes: 0 success, 2 usage error, 3 data error, 4 numerical
// nonconvergence.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "cpmp/cli.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_data = 3;
constexpr int exit_numerics = 4;

struct ModelFlags {
  std::optional<double> epsilon;
  std::vector<double> drude_lorentz;
  bool perfect_mirror = false;

  cpmp::PermittivityModel build() const {
    const int given = (epsilon.has_value() ? 1 : 0) + (drude_lorentz.empty() ? 0 : 1) +
                      (perfect_mirror ? 1 : 0);
    if (given != 1)
      throw CLI::ValidationError(
          "exactly one of --epsilon, --drude-lorentz, --perfect-mirror is required");
    if (perfect_mirror)
      return cpmp::PermittivityModel::perfect_mirror();
    if (epsilon.has_value())
      return cpmp::PermittivityModel::constant(*epsilon);
    if (drude_lorentz.size() != 3)
      throw CLI::ValidationError("--drude-lorentz expects WP,W0,GAMMA");
    return cpmp::PermittivityModel::drude_lorentz(drude_lorentz[0], drude_lorentz[1],
                                                  drude_lorentz[2]);
  }
};

void add_model_flags(CLI::App *cmd, ModelFlags &mf) {
  cmd->add_option("--epsilon", mf.epsilon, "constant permittivity (>= 1)");
  cmd->add_option("--drude-lorentz", mf.drude_lorentz,
                  "Drude-Lorentz parameters WP,W0,GAMMA (atomic units)")
      ->delimiter(',')
      ->expected(3);
  cmd->add_flag("--perfect-mirror", mf.perfect_mirror, "perfectly reflecting half-space");
}

std::ostream &open_output(const std::string &path, std::ofstream &file) {
  if (path.empty())
    return std::cout;
  file.open(path);
  if (!file)
    throw cpmp::DatasetError("cannot open output file '" + path + "'");
  return file;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Casimir-Polder multipole potentials near a dielectric half-space"};
  app.require_subcommand(1);

  // --- potential ---
  auto *pot = app.add_subcommand("potential", "sweep U(z) per channel, emit CSV");
  std::string pot_data, pot_channels = "dd,qq,od,do", pot_units = "natural", pot_out;
  ModelFlags pot_model;
  double zmin = 0.0, zmax = 0.0, tol = 1e-8;
  int points = 61;
  bool log_grid = false;
  pot->add_option("--data", pot_data, "dataset JSON path")->required();
  add_model_flags(pot, pot_model);
  pot->add_option("--zmin", zmin, "smallest atom-surface distance")->required();
  pot->add_option("--zmax", zmax, "largest atom-surface distance")->required();
  pot->add_option("--points", points, "number of grid points");
  pot->add_flag("--log", log_grid, "logarithmic z grid");
  pot->add_option("--channels", pot_channels, "comma list of dd,qq,od,do");
  pot->add_option("--tol", tol, "relative quadrature tolerance");
  pot->add_option("--units", pot_units, "unit system: si, au or natural");
  pot->add_option("--out", pot_out, "output CSV path (default stdout)");

  // --- verify ---
  auto *ver = app.add_subcommand("verify", "run the invariant suites, report residuals");
  std::string ver_out;
  bool flip_dyad = false;
  ver->add_option("--out", ver_out, "output JSON path (default stdout)");
  ver->add_flag("--debug-flip-p-dyad", flip_dyad,
                "inject a sign error into the p dyad (negative control)");

  // --- ratio ---
  auto *rat = app.add_subcommand("ratio", "octupole-trace vs quadrupole channel ratio");
  std::string rat_data, rat_out;
  rat->add_option("--data", rat_data, "dataset JSON path")->required();
  rat->add_option("--out", rat_out, "output JSON path (default stdout)");

  // --- asymptote ---
  auto *asy = app.add_subcommand("asymptote", "retarded coefficients: analytic vs fitted");
  std::string asy_data, asy_channels = "dd,qq,od,do", asy_out;
  ModelFlags asy_model;
  double asy_tol = 1e-8;
  asy->add_option("--data", asy_data, "dataset JSON path")->required();
  add_model_flags(asy, asy_model);
  asy->add_option("--channels", asy_channels, "comma list of dd,qq,od,do");
  asy->add_option("--tol", asy_tol, "relative quadrature tolerance");
  asy->add_option("--out", asy_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (pot->parsed()) {
      cpmp::cli::RunConfig cfg;
      cfg.model = pot_model.build();
      cfg.zmin = zmin;
      cfg.zmax = zmax;
      cfg.points = points;
      cfg.log_grid = log_grid;
      cfg.channels = cpmp::cli::parse_channels(pot_channels);
      cfg.rel_tol = tol;
      cfg.unit_system = cpmp::units::parse_unit_system(pot_units);
      const auto ds = cpmp::load_dataset(pot_data);
      std::ofstream file;
      std::ostream &out = open_output(pot_out, file);
      const bool ok = cpmp::cli::cmd_potential(cfg, ds, out);
      if (!ok) {
        std::cerr << "cpmp: some points did not converge (nan cells in output)\n";
        return exit_numerics;
      }
      return exit_ok;
    }

    if (ver->parsed()) {
      cpmp::cli::VerifyOptions vopts;
      vopts.flip_p_dyad_sign = flip_dyad;
      const auto report = cpmp::cli::cmd_verify(vopts);
      std::ofstream file;
      std::ostream &out = open_output(ver_out, file);
      out << report.to_json() << "\n";
      return report.all_pass() ? exit_ok : exit_numerics;
    }

    if (rat->parsed()) {
      const auto ds = cpmp::load_dataset(rat_data);
      const auto report = cpmp::cli::cmd_ratio(ds);
      std::ofstream file;
      std::ostream &out = open_output(rat_out, file);
      out << report.to_json() << "\n";
      return exit_ok;
    }

    if (asy->parsed()) {
      cpmp::cli::RunConfig cfg;
      cfg.model = asy_model.build();
      cfg.channels = cpmp::cli::parse_channels(asy_channels);
      cfg.rel_tol = asy_tol;
      const auto ds = cpmp::load_dataset(asy_data);
      const auto report = cpmp::cli::cmd_asymptote(cfg, ds);
      std::ofstream file;
      std::ostream &out = open_output(asy_out, file);
      out << report.to_text();
      return exit_ok;
    }
  } catch (const CLI::ValidationError &e) {
    std::cerr << "cpmp: " << e.what() << "\n";
    return exit_usage;
  } catch (const cpmp::DatasetError &e) {
    std::cerr << "cpmp: " << e.what() << "\n";
    return exit_data;
  } catch (const cpmp::NonconvergenceError &e) {
    std::cerr << "cpmp: " << e.what() << "\n";
    return exit_numerics;
  } catch (const std::invalid_argument &e) {
    std::cerr << "cpmp: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_ok;
}
