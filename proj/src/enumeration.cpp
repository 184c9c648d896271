#include "lattkit/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "lattkit/properties.hpp"

namespace lattkit {

namespace {

using Mask = std::uint32_t;

// Elements are inserted one at a time along a linear extension: element 0 is
// the bottom, element n-1 the top, and a new element is never below an older
// one. Two consequences drive the pruning:
//   * the lower bounds of a pair are frozen as soon as both are inserted, so
//     a missing meet can be rejected immediately;
//   * a new element can only add an incomparable minimal common upper bound
//     to a pair below it, and once a pair has two of those its join can
//     never exist again.
struct Generator {
  int n;
  const std::function<void(const FiniteLattice&)>& sink;
  std::vector<Mask> down;  // strict down-sets
  std::vector<Mask> up;    // strict up-sets among inserted elements

  // dedup bookkeeping: invariant key -> representatives
  std::map<std::vector<int>, std::vector<size_t>> buckets;
  std::vector<FiniteLattice> reps;

  Generator(int n_, const std::function<void(const FiniteLattice&)>& sink_)
      : n(n_), sink(sink_), down(size_t(n_), 0), up(size_t(n_), 0) {}

  bool meet_exists(int i, Mask d, int x) const {
    // greatest element of the fixed lower-bound set of (i, x)
    const Mask lower = d & (down[size_t(x)] | (Mask(1) << x));
    const int g = 31 - std::countl_zero(lower);  // lower always contains 0
    return (lower & ~(down[size_t(g)] | (Mask(1) << g))) == 0;
  }

  bool join_stays_unique(Mask d) const {
    for (Mask xs = d; xs; xs &= xs - 1) {
      const int x = std::countr_zero(xs);
      for (Mask ys = xs & (xs - 1); ys; ys &= ys - 1) {
        const int y = std::countr_zero(ys);
        const Mask common = up[size_t(x)] & up[size_t(y)];
        if (common && (common & d) == 0) return false;
      }
    }
    return true;
  }

  void place(int i) {
    if (i == n) {
      finish();
      return;
    }
    const Mask all_prev = Mask((std::uint64_t(1) << i) - 1);
    const Mask lo = (i == n - 1) ? all_prev : 1;  // the last element must sit above everything
    for (Mask d = lo; d <= all_prev; ++d) {
      if (!(d & 1)) continue;  // bottom lies below every later element
      bool closed = true;
      for (Mask js = d & ~Mask(1); js && closed; js &= js - 1)
        closed = (down[size_t(std::countr_zero(js))] & ~d) == 0;
      if (!closed) continue;
      bool ok = true;
      for (int x = 1; x < i && ok; ++x)
        if (!(d & (Mask(1) << x))) ok = meet_exists(i, d, x);
      if (!ok || !join_stays_unique(d)) continue;

      down[size_t(i)] = d;
      for (Mask js = d; js; js &= js - 1) up[size_t(std::countr_zero(js))] |= Mask(1) << i;
      place(i + 1);
      for (Mask js = d; js; js &= js - 1) up[size_t(std::countr_zero(js))] &= ~(Mask(1) << i);
      down[size_t(i)] = 0;
    }
  }

  void finish() {
    FiniteLattice L = FiniteLattice::from_relation(n, [&](Elem x, Elem y) {
      return x == y || (down[size_t(y)] & (Mask(1) << x)) != 0;
    });
    std::vector<int> key{L.longest_chain_length(), int(L.atoms().size()),
                         int(L.coatoms().size()), int(L.cover_pairs().size())};
    std::vector<int> degs;
    for (Elem x = 0; x < n; ++x) {
      degs.push_back(int(L.lower_covers(x).size()) * 16 + int(L.upper_covers(x).size()));
    }
    std::sort(degs.begin(), degs.end());
    key.insert(key.end(), degs.begin(), degs.end());

    auto& bucket = buckets[key];
    for (size_t r : bucket)
      if (is_isomorphic(reps[r], L)) return;
    bucket.push_back(reps.size());
    reps.push_back(std::move(L));
  }

  void run() {
    if (n == 1) {
      reps.push_back(FiniteLattice::from_covers({}, 1));
    } else {
      down[0] = 0;
      place(1);
    }
    // canonical emission order: sort by the encoded cover matrix
    std::vector<size_t> order(reps.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<std::vector<std::pair<Elem, Elem>>> enc;
    enc.reserve(reps.size());
    for (const auto& L : reps) enc.push_back(L.cover_pairs());
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return enc[a] < enc[b]; });
    for (size_t i : order) sink(reps[i]);
  }
};

}  // namespace

void enumerate_lattices(int n, const std::function<void(const FiniteLattice&)>& yield, int cap) {
  if (n < 1) throw SizeLimitError("lattices have at least one element");
  if (n > cap)
    throw SizeLimitError("enumeration of " + std::to_string(n) +
                         "-element lattices exceeds the cap of " + std::to_string(cap));
  Generator g(n, yield);
  g.run();
}

std::vector<FiniteLattice> enumerate_lattices(int n, int cap) {
  std::vector<FiniteLattice> out;
  enumerate_lattices(n, [&](const FiniteLattice& L) { out.push_back(L); }, cap);
  return out;
}

std::vector<FiniteLattice> enumerate_filtered(int n, CorpusSpec::Filter filter, int cap) {
  std::vector<FiniteLattice> out;
  enumerate_lattices(
      n,
      [&](const FiniteLattice& L) {
        switch (filter) {
          case CorpusSpec::Filter::all: break;
          case CorpusSpec::Filter::modular:
            if (!check_modular_triples(L).is_modular) return;
            break;
          case CorpusSpec::Filter::distributive:
            if (!is_distributive(L).is_distributive) return;
            break;
        }
        out.push_back(L);
      },
      cap);
  return out;
}

std::vector<FiniteLattice> corpus_upto(const CorpusSpec& spec, int cap) {
  std::vector<FiniteLattice> out;
  for (int n = 1; n <= spec.max_n; ++n) {
    auto block = enumerate_filtered(n, spec.filter, cap);
    for (auto& L : block) out.push_back(std::move(L));
  }
  return out;
}

}  // namespace lattkit
