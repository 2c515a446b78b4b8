#pragma once
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cpmp/asymptotics.hpp"
#include "cpmp/dataset.hpp"
#include "cpmp/potentials.hpp"
#include "cpmp/units.hpp"

//! Command implementations behind the cpmp executable. Each cmd_* function
//! is a pure library entry point; main() only parses flags and maps errors
//! to exit codes (0 ok, 2 usage, 3 data error, 4 numerical nonconvergence).

namespace cpmp::cli {

//==============================================================================
struct RunConfig {
  PermittivityModel model = PermittivityModel::perfect_mirror();
  double zmin = 1.0;
  double zmax = 1000.0;
  int points = 61;
  bool log_grid = false;
  std::vector<Channel> channels = {Channel::DipoleDipole, Channel::QuadQuad,
                                   Channel::OctupoleDipoleTrace, Channel::DipoleOctupoleTrace};
  double rel_tol = 1e-8;
  units::UnitSystem unit_system = units::UnitSystem::Natural;

  //! z grid in the configured input units.
  std::vector<double> make_grid() const;
};

std::vector<Channel> parse_channels(const std::string &list);
std::string channel_name(Channel c);

//==============================================================================
//! Potential sweep as CSV. Header is always
//!   z,U_dd,U_qq,U_od,U_do,U_total,err_dd,err_qq,err_od,err_do
//! with unselected channels left blank and failed points recorded as nan.
//! Returns false if any point failed to converge.
bool cmd_potential(const RunConfig &config, const AtomDataset &dataset, std::ostream &out);

//==============================================================================
struct CheckResult {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::string to_json() const;
};

struct VerifyOptions {
  bool flip_p_dyad_sign = false; //!< negative-control debug hook
};

//! Invariant suites: per-mode transversality, integrated Helmholtz residual,
//! trace identities, the xi^5 integral identity, and the cos^3 spherical
//! reconstruction. All residuals are reported; exit is pass iff all pass.
VerifyReport cmd_verify(const VerifyOptions &opts = {});

//==============================================================================
struct RatioReport {
  double alpha_ratio = 0.0;     //!< (alpha_od0 + alpha_do0) / alpha_qq0
  double prefactor = 2.0 / 15.0;
  double potential_ratio = 0.0; //!< retarded (U_od + U_do)/U_qq
  std::string to_json() const;
};

//! Requires quadrupole and octupole data; throws DatasetError otherwise.
RatioReport cmd_ratio(const AtomDataset &dataset);

//==============================================================================
struct AsymptoteRow {
  Channel channel{};
  double analytic = 0.0;  //!< retarded coefficient U z^n
  double fitted = 0.0;    //!< numerical U(z) z^n at the far end of the window
  double rel_deviation = 0.0;
  double exponent = 0.0;  //!< fitted log-log slope
  //! estimated order p of the finite-distance correction U z^n / C - 1 ~ z^-p
  double correction_order = 0.0;
};

struct AsymptoteReport {
  std::vector<AsymptoteRow> rows;
  std::string to_text() const;
};

//! Retarded-window comparison of numerical potentials against the
//! closed-form coefficients, per requested channel.
AsymptoteReport cmd_asymptote(const RunConfig &config, const AtomDataset &dataset);

} // namespace cpmp::cli
