#pragma once
#include <span>

#include "cpmp/halfspace_green.hpp"

//! Closed-form retarded-limit coefficients and the channel-ratio analysis.
//! These serve as golden references for the numerical potentials: in the
//! retarded regime U(z) ~ C / z^n with n = 4 (dd) or 6 (qq, od, do), and the
//! coefficients C below are exact for a perfect mirror. For finite eps the
//! remaining v-integral is evaluated numerically at the static permittivity.
//!
//! Scalar conventions match response::isotropic_scalars: the od/do inputs
//! are full traces Tr alpha(0) and the qq input is the full Frobenius
//! strength; with those, the closed forms read
//!   C_dd = -(3/32pi^2) alpha_dd(0)         C_qq = -(5/64pi^2) alpha_qq(0)
//!   C_od = -(1/96pi^2) alpha_od(0)         C_do = -(1/96pi^2) alpha_do(0)
//! (hbar = c = eps0 = 1). The anisotropic octupole-trace form is
//!   C_od = -(1/160pi^2) Tr[ alpha_od(0) . diag(2,2,1) ],
//! which reduces to the isotropic form when alpha_od(0) is proportional to
//! the identity; sm_scalar_from_matrix is the bridge between the two.

namespace cpmp {

//==============================================================================
//! Retarded coefficient of the octupole-trace channel for an arbitrary
//! static polarizability matrix: U(z) -> C / z^6.
double retarded_od_trace(const Mat3 &alpha_od0, const PermittivityModel &model);

//! Retarded coefficient of the (isotropically averaged) quadrupole channel
//! from the static scalar strength: U(z) -> C / z^6.
double retarded_qq(double alpha_qq0, const PermittivityModel &model);

//! Retarded coefficient of the (isotropically averaged) dipole channel from
//! the static scalar polarizability: U(z) -> C / z^4.
double retarded_dd(double alpha_dd0, const PermittivityModel &model);

//! Perfect-mirror isotropic coefficients for the two trace channels, from
//! full-trace static scalars.
struct OdDoCoefficients {
  double od = 0.0;
  double do_ = 0.0;
};
OdDoCoefficients retarded_od_do_isotropic(double alpha_od0, double alpha_do0);

//! Conversion between the matrix form of the octupole-trace coefficient and
//! the isotropic scalar convention: the scalar entering the -1/96pi^2 form
//! is the full trace of the static matrix.
double sm_scalar_from_matrix(const Mat3 &alpha0);

//! (U_od + U_do) / U_qq in the retarded limit:
//! (2/15) (alpha_od0 + alpha_do0) / alpha_qq0. Rejects alpha_qq0 <= 0.
double ratio_od_do_over_qq(double alpha_od0, double alpha_do0, double alpha_qq0);

//==============================================================================
//! Least-squares slope of log|U| against log z over the given window.
//! Requires at least five points in the window, all of the same sign.
double fit_scaling_exponent(std::span<const double> z, std::span<const double> u, double z_lo,
                            double z_hi);

} // namespace cpmp
