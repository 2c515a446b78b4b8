#pragma once
#include <span>
#include <string>
#include <vector>

#include "cpmp/tensors.hpp"

//! Atomic response tensors (polarizabilities) on the imaginary frequency
//! axis, built from ground-state transition data.
//!
//! Conventions: moments are real matrix elements; each record is one term of
//! the resonance sums (magnetic-sublevel summation is done upstream in the
//! data file). Operator normalizations are Q = e (r x r)/2 for the
//! quadrupole and O = e (r x r x r)/6 for the octupole; the trace vector
//! T_i = O_ill follows the same 1/6 normalization.

namespace cpmp {

//==============================================================================
//! One ground-to-excited transition: frequency plus multipole moments.
//! Any moment may be absent (zero). omega must be > 0 for a ground-state
//! atom, so the resonance denominators never vanish on xi >= 0.
struct TransitionRecord {
  std::string label;
  double omega = 0.0;
  Vec3 d{};        //!< dipole matrix element
  SymTensor2 Q{};  //!< quadrupole matrix element
  SymTensor3 O{};  //!< octupole matrix element
};

//==============================================================================
// Polarizabilities at imaginary frequency xi >= 0. All are real there.

//! Dipole-dipole: sum_k d x d * 2 w_k / (w_k^2 + xi^2). Symmetric, positive
//! semidefinite at xi = 0.
Mat3 alpha_dd(std::span<const TransitionRecord> records, double xi);

//! Quadrupole-quadrupole rank-4: sum_k Q x Q * 2 w_k / (w_k^2 + xi^2),
//! index order (i,j,k,m) = (Q_ij, Q_km).
Tensor4 alpha_qq(std::span<const TransitionRecord> records, double xi);

//! Octupole(trace)-dipole: the trace vector T couples like an effective
//! dipole. On the imaginary axis the symmetric (real) part is
//!   sum_k w_k (d x T + T x d) / (w_k^2 + xi^2);
//! the antisymmetric i*xi part drops out of every trace against the
//! symmetric Green tensor and is not represented.
Mat3 alpha_od(std::span<const TransitionRecord> records, double xi);

//! Dipole-octupole counterpart; equals the transpose of alpha_od for real
//! moments (and hence alpha_od itself).
Mat3 alpha_do(std::span<const TransitionRecord> records, double xi);

//==============================================================================
//! Static scalar reductions, in the conventions under which the closed-form
//! retarded coefficients hold verbatim:
//!   dd:  (1/3) Tr alpha_dd(0)                      (standard scalar)
//!   qq:  sum_k 2 (Qt:Qt)/w_k with Qt the traceless part of Q
//!   od:  Tr alpha_od(0) = sum_k 2 (d.T)/w_k        (full trace)
//!   do:  Tr alpha_do(0)
//! The qq and od/do channels deliberately carry no 1/10 or 1/3 averaging
//! weight; those factors live in the potential-side kernel reductions.
struct IsotropicScalars {
  double dd = 0.0;
  double qq = 0.0;
  double od = 0.0;
  double do_ = 0.0;
};
IsotropicScalars isotropic_scalars(std::span<const TransitionRecord> records);

//! Frequency-dependent isotropic quadrupole strength
//! sum_k 2 w_k (Qt:Qt) / (w_k^2 + xi^2), used by the isotropic-mode
//! quadrupole potential.
double isotropic_qq_strength(std::span<const TransitionRecord> records, double xi);

} // namespace cpmp
