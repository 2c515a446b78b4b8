#pragma once
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

//! Unit systems and conversion constants.
//!
//! Internally everything is in natural units hbar = c = eps0 = mu0 = 1 with
//! the Hartree as the energy unit, so the length unit is hbar*c/E_h (about
//! 137 Bohr radii, 7.25 nm) and atomic-unit frequencies pass through
//! unchanged. Moments convert from atomic units with e = sqrt(4 pi alpha)
//! and a0 = alpha (fine-structure constant alpha).

namespace cpmp::units {

inline constexpr double fine_structure = 7.2973525693e-3;
inline constexpr double bohr_radius_m = 5.29177210903e-11;
inline constexpr double hartree_J = 4.3597447222071e-18;
inline constexpr double hartree_eV = 27.211386245988;

//! Internal length unit in metres: a0 / alpha.
inline constexpr double length_unit_m = bohr_radius_m / fine_structure;

//! Moment conversion factors, atomic units -> internal natural units.
inline double dipole_au_to_internal() {
  const double e = std::sqrt(4.0 * std::numbers::pi * fine_structure);
  return e * fine_structure;
}
inline double quadrupole_au_to_internal() { return dipole_au_to_internal() * fine_structure; }
inline double octupole_au_to_internal() {
  return dipole_au_to_internal() * fine_structure * fine_structure;
}

enum class UnitSystem { SI, Atomic, Natural };

inline UnitSystem parse_unit_system(const std::string &s) {
  if (s == "si")
    return UnitSystem::SI;
  if (s == "au")
    return UnitSystem::Atomic;
  if (s == "natural")
    return UnitSystem::Natural;
  throw std::invalid_argument("unknown unit system: " + s);
}

//! Length in the given system -> internal natural units.
inline double length_to_internal(double value, UnitSystem u) {
  switch (u) {
  case UnitSystem::SI:
    return value / length_unit_m;
  case UnitSystem::Atomic:
    return value * fine_structure;
  case UnitSystem::Natural:
    return value;
  }
  return value;
}

inline double length_from_internal(double value, UnitSystem u) {
  switch (u) {
  case UnitSystem::SI:
    return value * length_unit_m;
  case UnitSystem::Atomic:
    return value / fine_structure;
  case UnitSystem::Natural:
    return value;
  }
  return value;
}

//! Energy in internal units (Hartree) -> the given system.
inline double energy_from_internal(double value, UnitSystem u) {
  return u == UnitSystem::SI ? value * hartree_J : value;
}

} // namespace cpmp::units
