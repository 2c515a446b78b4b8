#pragma once
#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>

#include "cpmp/tensors.hpp"

//! Scattering dyadic Green tensor of a planar dielectric half-space at
//! coincidence, evaluated on the imaginary frequency axis via the Weyl
//! (angular-spectrum) expansion, including double-gradient blocks.
//!
//! Geometry: interface at z = 0, atom at height z_A > 0 on the vacuum side.
//! Units: natural, hbar = c = eps0 = mu0 = 1.
//!
//! Radial integration runs over the vacuum decay constant b in [xi, inf)
//! with b^2 = q^2 + xi^2; the azimuthal integral is always done in closed
//! form (only moments of cos^m(phi) sin^n(phi) appear), which enforces the
//! planar selection rules exactly.

namespace cpmp {

//==============================================================================
//! Frequency-dependent permittivity eps(i xi) of the half-space.
class PermittivityModel {
public:
  enum class Kind { Constant, DrudeLorentz, PerfectMirror };

  static PermittivityModel constant(double eps) {
    if (!(eps >= 1.0))
      throw std::invalid_argument("PermittivityModel: eps must be >= 1");
    PermittivityModel m;
    m.kind_ = Kind::Constant;
    m.eps_ = eps;
    return m;
  }

  //! eps(i xi) = 1 + wp^2 / (w0^2 + xi^2 + gamma xi); real, >= 1, monotone
  //! nonincreasing in xi.
  static PermittivityModel drude_lorentz(double wp, double w0, double gamma) {
    if (wp < 0.0 || w0 <= 0.0 || gamma < 0.0)
      throw std::invalid_argument("PermittivityModel: require wp >= 0, w0 > 0, gamma >= 0");
    PermittivityModel m;
    m.kind_ = Kind::DrudeLorentz;
    m.wp_ = wp;
    m.w0_ = w0;
    m.gamma_ = gamma;
    return m;
  }

  //! r_s = -1, r_p = +1 identically.
  static PermittivityModel perfect_mirror() {
    PermittivityModel m;
    m.kind_ = Kind::PerfectMirror;
    return m;
  }

  Kind kind() const { return kind_; }
  bool is_mirror() const { return kind_ == Kind::PerfectMirror; }

  double eps_i_xi(double xi) const {
    switch (kind_) {
    case Kind::Constant:
      return eps_;
    case Kind::DrudeLorentz:
      return 1.0 + wp_ * wp_ / (w0_ * w0_ + xi * xi + gamma_ * xi);
    case Kind::PerfectMirror:
      return std::numeric_limits<double>::infinity();
    }
    return 1.0;
  }

private:
  Kind kind_ = Kind::Constant;
  double eps_ = 1.0, wp_ = 0.0, w0_ = 0.0, gamma_ = 0.0;
};

//==============================================================================
struct FresnelPair {
  double rs = 0.0;
  double rp = 0.0;
};

//! Reflection coefficients on the imaginary axis in terms of v = b/xi >= 1:
//!   r_s = (v - sqrt(eps-1+v^2)) / (v + sqrt(eps-1+v^2))
//!   r_p = (eps v - sqrt(eps-1+v^2)) / (eps v + sqrt(eps-1+v^2))
//! with eps = eps(i xi). PerfectMirror returns (-1, +1) for any argument.
FresnelPair fresnel(const PermittivityModel &model, double xi, double v);

//==============================================================================
struct GreenOptions {
  double rel_tol = 1e-10;
  //! Debug hook for negative-control tests: flips the sign of the (z,x) and
  //! (z,y) entries of the p-polarization dyad, which breaks transversality.
  bool flip_p_dyad_sign = false;
};

//! Evaluation of the scattering Green tensor at coincidence, with optional
//! derivative blocks and quadrature diagnostics.
struct GreenEval {
  Mat3 g{};                     //!< G(r_A, r_A, i xi); diagonal, g_xx = g_yy
  std::optional<Tensor4> grad2; //!< d_i G_jk d'_m at coincidence
  std::optional<Mat3> lap_left; //!< sum_i d_i d_i G
  double quad_error = 0.0;
  int nodes = 0;
  bool converged = true;
};

//! Coincidence Green tensor; requires z_A > 0 and xi > 0 (the xi = 0
//! endpoint is served by static_green, which avoids the removable 1/xi^2
//! structure of the integrand).
GreenEval green_coincidence(const PermittivityModel &model, double z_A, double xi,
                            const GreenOptions &opts = {});

//! Static limit Gamma = lim_{w->0} (w^2/c^2) G; for constant eps this is
//! -[(eps-1)/(eps+1)] diag(1,1,2) / (32 pi z^3).
Mat3 static_green(const PermittivityModel &model, double z_A);

//! Double-gradient block d_i G_jk d'_m (plus the plain tensor) at coincidence.
GreenEval green_grad2(const PermittivityModel &model, double z_A, double xi,
                      const GreenOptions &opts = {});

//! Trace kernel sum_i d_i G_jj d'_i, the only derivative combination that
//! survives the isotropic reduction of the quadrupole channel. Dedicated
//! scalar path; agrees with the contraction of green_grad2.
struct TraceKernelResult {
  double value = 0.0;
  double quad_error = 0.0;
  int nodes = 0;
  bool converged = true;
};
TraceKernelResult green_trace_kernel(const PermittivityModel &model, double z_A, double xi,
                                     const GreenOptions &opts = {});

//==============================================================================
//! One Fourier mode of the Weyl expansion: transverse wavenumber q >= 0,
//! azimuth phi, decay constant b = sqrt(q^2 + xi^2), polarization s or p.
struct WeylMode {
  enum class Pol { s, p };
  double q = 0.0;
  double phi = 0.0;
  double xi = 1.0;
  Pol pol = Pol::s;

  double b() const { return std::hypot(q, xi); }
};

using CVec3 = std::array<std::complex<double>, 3>;
using CMat3 = std::array<std::complex<double>, 9>;

//! Polarization dyad of a mode (the phi-dependent matrix under the Weyl
//! integral, without reflection coefficient or exponential).
CMat3 weyl_mode_dyad(const WeylMode &mode, bool flip_p_dyad_sign = false);

//! Per-mode derivative factor vectors: left (i q cos, i q sin, -b) and
//! right (-i q cos, -i q sin, -b).
CVec3 weyl_mode_grad_left(const WeylMode &mode);
CVec3 weyl_mode_grad_right(const WeylMode &mode);

//! Max residual of double-sided transversality for one mode: the left
//! derivative contracted with the dyad's first index and the right
//! derivative with its second index must both vanish.
double verify_mode_transversality(const WeylMode &mode, const GreenOptions &opts = {});

//! Relative residual || lap G - xi^2 G || / || xi^2 G || of the homogeneous
//! Helmholtz property on the vacuum side, assembled by quadrature with the
//! per-mode second-derivative factor b^2 - q^2.
double verify_helmholtz(const PermittivityModel &model, double z_A, double xi,
                        const GreenOptions &opts = {});

} // namespace cpmp
