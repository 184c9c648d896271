#pragma once

// Hand-built lattices used across the test suites. These are constructed
// from explicit cover lists, independently of the generators in the
// instances module, so the two can cross-check each other.

#include <string>
#include <vector>

#include "lattkit/core.hpp"

namespace testsupport {

using lattkit::CoverRelation;
using lattkit::Elem;
using lattkit::FiniteLattice;

inline FiniteLattice two_chain() {
  return FiniteLattice::from_covers({{{0, 1}}}, 2);
}

inline FiniteLattice chain_n(int n) {
  CoverRelation c;
  for (int i = 0; i + 1 < n; ++i) c.pairs.emplace_back(i, i + 1);
  return FiniteLattice::from_covers(c, n);
}

// 0 < a,b < 1 with ids 0,1,2,3
inline FiniteLattice b2() {
  return FiniteLattice::from_covers({{{0, 1}, {0, 2}, {1, 3}, {2, 3}}}, 4,
                                    {"0", "a", "b", "1"});
}

// pentagon: 0 < a < c < 1 and 0 < b < 1, ids 0,1,2,3,4
inline FiniteLattice n5() {
  return FiniteLattice::from_covers({{{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}}, 5,
                                    {"0", "a", "b", "c", "1"});
}

// diamond: three incomparable atoms, ids 0,1,2,3,4
inline FiniteLattice m3() {
  return FiniteLattice::from_covers({{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}}, 5,
                                    {"0", "a", "b", "c", "1"});
}

// boolean lattice on 3 atoms; id = subset bitmask
inline FiniteLattice b3() {
  CoverRelation c;
  for (int s = 0; s < 8; ++s)
    for (int b = 0; b < 3; ++b)
      if (!(s & (1 << b))) c.pairs.emplace_back(s, s | (1 << b));
  return FiniteLattice::from_covers(c, 8);
}

// divisors of 12 under divisibility, from the cover list 1<2 1<3 2<4 2<6 3<6 4<12 6<12
inline FiniteLattice divisor12_by_hand() {
  return FiniteLattice::from_covers(
      {{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}}, 6,
      {"1", "2", "3", "4", "6", "12"});
}

// bounded poset that is not a lattice: 0 < a,b < c,d < 1 (a,b have no join)
inline CoverRelation bowtie_covers() {
  return {{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}};
}

}  // namespace testsupport
