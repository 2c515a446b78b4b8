#pragma once
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpmp/halfspace_green.hpp"
#include "cpmp/response.hpp"

//! Casimir-Polder potentials of a ground-state atom above the half-space,
//! per interaction channel, by adaptive quadrature over imaginary frequency.
//!
//! Channel weights (natural units, hbar = c = eps0 = mu0 = 1):
//!   dd:      U = (1/2pi)  int dxi xi^2  alpha_dd(i xi) : G
//!   qq:      U = (1/2pi)  int dxi xi^2  alpha_qq(i xi) : (grad x G x grad')
//!   od, do:  U = (1/10pi) int dxi xi^4  Tr[ alpha(i xi) . G ]
//! The xi^4 weight of the octupole-trace channels kills the static pole, so
//! they vanish in the electrostatic limit and emerge only with retardation.

namespace cpmp {

//==============================================================================
enum class Channel { DipoleDipole, QuadQuad, OctupoleDipoleTrace, DipoleOctupoleTrace };

//! Quadrupole-channel contraction mode. Isotropic applies the rotational
//! average (1/10)(Qt:Qt) sum_i d_i G_jj d'_i and is the CLI default;
//! ExplicitTensor contracts the full rank-4 polarizability with the
//! double-gradient block for oriented moments.
enum class QuadMode { Isotropic, ExplicitTensor };

struct PotentialOptions {
  double rel_tol = 1e-8;       //!< outer xi-quadrature
  double green_rel_tol = 1e-10; //!< inner radial quadrature
  QuadMode quad_mode = QuadMode::Isotropic;
};

struct UResult {
  double value = 0.0;
  double error = 0.0; //!< outer quadrature error estimate
  int nodes = 0;      //!< outer quadrature evaluations
  bool converged = true;
};

//! Thrown when a quadrature fails to reach its tolerance.
class NonconvergenceError : public std::runtime_error {
public:
  NonconvergenceError(const std::string &what, double error, int nodes)
      : std::runtime_error(what), error_estimate(error), nodes(nodes) {}
  double error_estimate;
  int nodes;
};

//==============================================================================
UResult u_dipole(std::span<const TransitionRecord> records, const PermittivityModel &model,
                 double z_A, const PotentialOptions &opts = {});

UResult u_quad(std::span<const TransitionRecord> records, const PermittivityModel &model,
               double z_A, const PotentialOptions &opts = {});

UResult u_od_trace(std::span<const TransitionRecord> records, const PermittivityModel &model,
                   double z_A, const PotentialOptions &opts = {});

UResult u_do_trace(std::span<const TransitionRecord> records, const PermittivityModel &model,
                   double z_A, const PotentialOptions &opts = {});

//! Octupole-trace channel evaluated with the order of integration exchanged
//! (outer integral over v = b/xi, inner over xi). Agrees with u_od_trace to
//! quadrature tolerance; kept as an independent route for verification.
UResult u_od_trace_swapped(std::span<const TransitionRecord> records,
                           const PermittivityModel &model, double z_A,
                           const PotentialOptions &opts = {});

//==============================================================================
//! Sampled potential curves per channel with per-point diagnostics.
//! Failed points carry NaN and set ok = false rather than aborting the sweep.
struct PotentialCurve {
  Channel channel{};
  std::vector<double> z;
  std::vector<double> u;
  std::vector<double> quad_error;
  std::vector<bool> ok;
};

struct PotentialCurveSet {
  std::vector<PotentialCurve> curves;
  std::vector<double> z;
  std::vector<double> total; //!< sum over requested channels
  bool all_converged = true;
};

PotentialCurveSet total_potential(std::span<const TransitionRecord> records,
                                  const PermittivityModel &model, std::span<const double> z_grid,
                                  std::span<const Channel> channels,
                                  const PotentialOptions &opts = {});

//! Smallest grid z at which |U_od + U_do| / |U_qq| has reached the given
//! fraction of its large-z plateau (taken from the last grid point).
//! Requires od/do and qq curves in the set.
double trace_crossover_z(const PotentialCurveSet &set, double fraction = 0.9);

//! Diagnostic onset of the retarded regime: one decade beyond the longest
//! transition wavelength scale, z > 10 c / min_k(omega_k).
double retarded_onset_z(std::span<const TransitionRecord> records);

} // namespace cpmp
