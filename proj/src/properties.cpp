#include "lattkit/properties.hpp"

namespace lattkit {

ModularityReport check_modular_triples(const FiniteLattice& L) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (!L.leq(x, z)) continue;
        if (L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z))
          return {false, ModularTriple{x, y, z}, std::nullopt};
      }
  return {};
}

std::optional<PentagonWitness> find_pentagon(const FiniteLattice& L) {
  const int n = L.size();
  std::optional<PentagonWitness> best;
  for (Elem x = 0; x < n; ++x)
    for (Elem y2 = 0; y2 < n; ++y2) {
      if (!L.lt(x, y2)) continue;
      for (Elem y1 = 0; y1 < n; ++y1) {
        const Elem z0 = L.meet(x, y1);
        if (z0 != L.meet(y2, y1)) continue;
        const Elem z1 = L.join(x, y1);
        if (z1 != L.join(y2, y1)) continue;
        if (z0 == x || z1 == y2 || y1 == z0 || y1 == z1) continue;
        PentagonWitness w{z0, x, y1, y2, z1};
        if (!best || w < *best) best = w;
      }
    }
  return best;
}

DistributivityReport is_distributive(const FiniteLattice& L) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
          return {false, ModularTriple{x, y, z}};
  return {};
}

ModularityReport modularity_report(const FiniteLattice& L) {
  ModularityReport r = check_modular_triples(L);
  r.pentagon = find_pentagon(L);
  return r;
}

}  // namespace lattkit
