#pragma once
#include <string>
#include <vector>

#include "cpmp/response.hpp"

//! Atom transition datasets on disk.
//!
//! A dataset is a single JSON document:
//! {
//!   "atom": "Cs",
//!   "provenance": "...",
//!   "transitions": [
//!     { "label": "6P1/2 m=+1/2",
//!       "omega_au": 0.0536,
//!       "dipole_au": [dx, dy, dz],
//!       "quadrupole_au": [xx, yy, zz, xy, xz, yz],
//!       "octupole_au": [xxx, yyy, zzz, xxy, xxz, xyy, yyz, xzz, yzz, xyz] }
//!   ]
//! }
//! Moments are matrix elements in atomic units (e a0^n) with operator
//! normalizations Q = e(r x r)/2 and O = e(r x r x r)/6; symmetric tensors
//! are stored as independent components in the order shown, which removes
//! any symmetrization ambiguity at the file boundary. Any moment array may
//! be omitted (zero). Frequencies are in Hartree/hbar and must be positive.

namespace cpmp {

//==============================================================================
//! Parsed dataset; moments still in atomic units.
struct AtomDataset {
  std::string atom;
  std::string provenance;
  std::vector<TransitionRecord> transitions_au;

  //! Records converted to internal natural units (ready for response/).
  std::vector<TransitionRecord> to_internal() const;
};

//! Thrown on schema violations; the message names the offending field.
class DatasetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

AtomDataset load_dataset(const std::string &path);
AtomDataset parse_dataset(const std::string &json_text);

//! Serialize back to the schema above (used for round-trip checks).
std::string write_dataset(const AtomDataset &ds);
void save_dataset(const AtomDataset &ds, const std::string &path);

//==============================================================================
//! Shortest round-trip decimal formatting for reproducible CSV output.
std::string format_double(double v);

} // namespace cpmp
