#include "lattkit/series.hpp"

namespace lattkit {

Elem radical(const FiniteLattice& L) {
  auto cs = L.coatoms();
  return L.meet_of_set(cs);
}

Elem socle(const FiniteLattice& L) {
  auto as = L.atoms();
  return L.join_of_set(as);
}

Elem radical_below(const FiniteLattice& L, Elem h) {
  // the coatoms of [bottom, h] are exactly the lower covers of h
  Elem acc = h;
  for (Elem c : L.lower_covers(h)) acc = L.meet(acc, c);
  return acc;
}

Elem socle_above(const FiniteLattice& L, Elem h) {
  Elem acc = h;
  for (Elem a : L.upper_covers(h)) acc = L.join(acc, a);
  return acc;
}

RadicalSeries loewy_radical_series(const FiniteLattice& L) {
  RadicalSeries s;
  s.ascending = false;
  s.steps.push_back(L.top());
  for (;;) {
    const Elem cur = s.steps.back();
    const Elem next = radical_below(L, cur);
    if (next == cur) break;
    s.steps.push_back(next);
  }
  s.stabilized_at = int(s.steps.size()) - 1;
  return s;
}

RadicalSeries loewy_socle_series(const FiniteLattice& L) {
  RadicalSeries s;
  s.ascending = true;
  s.steps.push_back(L.bottom());
  for (;;) {
    const Elem cur = s.steps.back();
    const Elem next = socle_above(L, cur);
    if (next == cur) break;
    s.steps.push_back(next);
  }
  s.stabilized_at = int(s.steps.size()) - 1;
  return s;
}

Elem hyper_radical(const FiniteLattice& L) { return loewy_radical_series(L).limit(); }

Elem hyper_socle(const FiniteLattice& L) { return loewy_socle_series(L).limit(); }

int radical_length(const FiniteLattice& L) { return loewy_radical_series(L).stabilized_at; }

bool is_radical_free(const FiniteLattice& L) { return radical(L) == L.bottom(); }

bool is_hyper_radical_free(const FiniteLattice& L) { return hyper_radical(L) == L.bottom(); }

bool is_semiatomic(const FiniteLattice& L) { return socle(L) == L.top(); }

bool is_hyper_semiatomic(const FiniteLattice& L) { return hyper_socle(L) == L.top(); }

}  // namespace lattkit
