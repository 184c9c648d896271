#pragma once

#include <array>
#include <optional>

#include "lattkit/core.hpp"

namespace lattkit {

/// Triple (x, y, z) with x <= z witnessing a failure of the modular law.
using ModularTriple = std::array<Elem, 3>;

/// Pentagon sublattice (z0, x, y1, y2, z1): z0 < x < y2 < z1, z0 < y1 < z1,
/// x and y2 both meet y1 at z0 and join y1 at z1.
using PentagonWitness = std::array<Elem, 5>;

struct ModularityReport {
  bool is_modular = true;
  std::optional<ModularTriple> violating_triple;
  std::optional<PentagonWitness> pentagon;
};

struct DistributivityReport {
  bool is_distributive = true;
  std::optional<ModularTriple> violating_triple;
};

/// Direct test of the modular law over all triples. On failure the
/// lexicographically first violating (x, y, z) is reported.
ModularityReport check_modular_triples(const FiniteLattice& L);

/// Pentagon-sublattice search; returns the lexicographically least witness
/// tuple. A pentagon exists iff the lattice is non-modular, which makes this
/// an independent second route to the same answer.
std::optional<PentagonWitness> find_pentagon(const FiniteLattice& L);

DistributivityReport is_distributive(const FiniteLattice& L);

/// Runs both modularity methods and combines the witnesses.
ModularityReport modularity_report(const FiniteLattice& L);

}  // namespace lattkit
