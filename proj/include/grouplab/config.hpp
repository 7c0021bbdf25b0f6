#pragma once

namespace grouplab {

// Size guards for the exponential-ish machinery. Full element enumeration is
// allowed up to element_cap; the multiplication table and everything built on
// it (subgroup lattices, set products, series) up to lattice_cap.
struct Caps {
  long long element_cap = 5000;
  long long lattice_cap = 500;
};

}  // namespace grouplab
