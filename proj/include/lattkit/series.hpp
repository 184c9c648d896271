#pragma once

#include "lattkit/core.hpp"

namespace lattkit {

/// Ordinal-free series container for finite lattices. Descending orientation
/// holds the Loewy radical series r_0 = top, r_{i+1} = radical of
/// [bottom, r_i]; ascending orientation the socle series from the bottom.
/// `steps` runs up to and including the first repeated value, which is the
/// hyper-radical (resp. hyper-socle); `stabilized_at` is its index.
struct RadicalSeries {
  bool ascending = false;
  std::vector<Elem> steps;
  int stabilized_at = 0;

  Elem limit() const { return steps.back(); }
};

/// Meet of all coatoms; the top element when there are none.
Elem radical(const FiniteLattice& L);
/// Join of all atoms; the bottom element when there are none.
Elem socle(const FiniteLattice& L);

/// Radical of the interval [bottom, h], computed in place.
Elem radical_below(const FiniteLattice& L, Elem h);
/// Socle of the interval [h, top], computed in place.
Elem socle_above(const FiniteLattice& L, Elem h);

RadicalSeries loewy_radical_series(const FiniteLattice& L);
RadicalSeries loewy_socle_series(const FiniteLattice& L);

Elem hyper_radical(const FiniteLattice& L);
Elem hyper_socle(const FiniteLattice& L);
int radical_length(const FiniteLattice& L);

bool is_radical_free(const FiniteLattice& L);
bool is_hyper_radical_free(const FiniteLattice& L);
bool is_semiatomic(const FiniteLattice& L);
bool is_hyper_semiatomic(const FiniteLattice& L);

}  // namespace lattkit
