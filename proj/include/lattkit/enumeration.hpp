#pragma once

#include <functional>

#include "lattkit/core.hpp"

namespace lattkit {

/// Soft size cap for lattice enumeration; callers may raise it explicitly.
inline constexpr int kEnumerationCap = 8;

struct CorpusSpec {
  enum class Filter { all, modular, distributive };
  int max_n = 7;
  Filter filter = Filter::all;
};

/// Yields one representative per isomorphism class of n-element lattices, in
/// a canonical order (sorted by encoded cover matrix). Generation inserts
/// elements along a linear extension, pruning partial orders that can no
/// longer extend to a lattice; duplicates are removed with the isomorphism
/// search. Throws SizeLimitError when n exceeds the cap.
void enumerate_lattices(int n, const std::function<void(const FiniteLattice&)>& yield,
                        int cap = kEnumerationCap);
std::vector<FiniteLattice> enumerate_lattices(int n, int cap = kEnumerationCap);

std::vector<FiniteLattice> enumerate_filtered(int n, CorpusSpec::Filter filter,
                                              int cap = kEnumerationCap);

/// All lattices with 1..max_n elements under the spec's filter, concatenated
/// in canonical per-size order.
std::vector<FiniteLattice> corpus_upto(const CorpusSpec& spec, int cap = kEnumerationCap);

}  // namespace lattkit
