#include <algorithm>
#include <set>

#include "doctest.h"
#include "lattkit/core.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace lattkit;
using namespace testsupport;

namespace {

void check_lattice_axioms(const FiniteLattice& L) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x) {
    CHECK(L.meet(x, x) == x);
    CHECK(L.join(x, x) == x);
    CHECK(L.leq(L.bottom(), x));
    CHECK(L.leq(x, L.top()));
    for (Elem y = 0; y < n; ++y) {
      CHECK(L.meet(x, y) == L.meet(y, x));
      CHECK(L.join(x, y) == L.join(y, x));
      // absorption
      CHECK(L.meet(x, L.join(x, y)) == x);
      CHECK(L.join(x, L.meet(x, y)) == x);
      // order agrees with both operations
      CHECK(L.leq(x, y) == (L.meet(x, y) == x));
      CHECK(L.leq(x, y) == (L.join(x, y) == y));
      for (Elem z = 0; z < n; ++z) {
        CHECK(L.meet(L.meet(x, y), z) == L.meet(x, L.meet(y, z)));
        CHECK(L.join(L.join(x, y), z) == L.join(x, L.join(y, z)));
      }
    }
  }
}

void check_tables_against_scan(const FiniteLattice& L) {
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y) {
      auto g = glb_by_scan(L, x, y);
      auto l = lub_by_scan(L, x, y);
      REQUIRE(g.has_value());
      REQUIRE(l.has_value());
      CHECK(L.meet(x, y) == *g);
      CHECK(L.join(x, y) == *l);
    }
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("two-element chain is the smallest nontrivial lattice") {
  auto L = two_chain();
  CHECK(L.size() == 2);
  CHECK(L.bottom() == 0);
  CHECK(L.top() == 1);
  CHECK(L.leq(0, 1));
  CHECK_FALSE(L.leq(1, 0));
  CHECK(L.meet(0, 1) == 0);
  CHECK(L.join(0, 1) == 1);
}

TEST_CASE("b2 diamond meets and joins") {
  auto L = b2();
  CHECK(L.meet(1, 2) == 0);
  CHECK(L.join(1, 2) == 3);
  check_tables_against_scan(L);
  check_lattice_axioms(L);
}

TEST_CASE("pentagon builds and has the expected tables") {
  auto L = n5();
  CHECK(L.size() == 5);
  // a=1, b=2, c=3
  CHECK(L.meet(1, 2) == 0);
  CHECK(L.meet(3, 2) == 0);
  CHECK(L.join(1, 2) == 4);
  CHECK(L.join(3, 2) == 4);
  CHECK(L.meet(1, 3) == 1);
  CHECK(L.join(1, 3) == 3);
  check_tables_against_scan(L);
  check_lattice_axioms(L);
}

TEST_CASE("build failures carry the right error") {
  SUBCASE("cycle") {
    CHECK_THROWS_AS(FiniteLattice::from_covers({{{0, 1}, {1, 0}}}, 2), NotAPosetError);
    CHECK_THROWS_AS(FiniteLattice::from_covers({{{0, 0}}}, 1), NotAPosetError);
  }
  SUBCASE("missing join names the offending pair") {
    try {
      FiniteLattice::from_covers(bowtie_covers(), 6);
      FAIL("expected NotALatticeError");
    } catch (const NotALatticeError& e) {
      CHECK(e.code() == "not_a_lattice");
      std::set<Elem> pair{e.x, e.y};
      CHECK(pair == std::set<Elem>{1, 2});
    }
  }
  SUBCASE("two minimal elements") {
    CHECK_THROWS_AS(FiniteLattice::from_covers({{{0, 2}, {1, 2}}}, 3), NotBoundedError);
  }
  SUBCASE("two maximal elements") {
    CHECK_THROWS_AS(FiniteLattice::from_covers({{{0, 1}, {0, 2}}}, 3), NotBoundedError);
  }
  SUBCASE("out-of-range ids") {
    CHECK_THROWS_AS(FiniteLattice::from_covers({{{0, 5}}}, 2), LatticeError);
  }
  SUBCASE("size limits") {
    CHECK_THROWS_AS(FiniteLattice::from_covers({}, 0), SizeLimitError);
    CHECK_THROWS_AS(FiniteLattice::from_covers({}, FiniteLattice::kMaxElements + 1), SizeLimitError);
  }
}

TEST_CASE("meet_of_set and join_of_set conventions") {
  auto L = b2();
  CHECK(L.meet_of_set({}) == L.top());
  CHECK(L.join_of_set({}) == L.bottom());
  CHECK(L.meet_of_set({1}) == 1);
  CHECK(L.join_of_set({2}) == 2);
  CHECK(L.meet_of_set({1, 2}) == 0);
  CHECK(L.join_of_set({1, 2}) == 3);
  auto C = chain_n(3);
  CHECK(C.join_of_set({0, 1}) == 1);
}

TEST_CASE("atoms and coatoms") {
  auto L = b2();
  CHECK(L.coatoms() == std::vector<Elem>{1, 2});
  CHECK(L.atoms() == std::vector<Elem>{1, 2});
  auto C = two_chain();
  CHECK(C.coatoms() == std::vector<Elem>{0});
  CHECK(C.atoms() == std::vector<Elem>{1});
  auto D = divisor12_by_hand();
  std::vector<std::string> co, at;
  for (Elem x : D.coatoms()) co.push_back(D.label(x));
  for (Elem x : D.atoms()) at.push_back(D.label(x));
  CHECK(co == std::vector<std::string>{"4", "6"});
  CHECK(at == std::vector<std::string>{"2", "3"});
  for (const auto& L2 : {b2(), n5(), m3(), b3(), divisor12_by_hand()}) {
    CHECK(L2.coatoms() == coatoms_by_scan(L2));
    CHECK(L2.atoms() == atoms_by_scan(L2));
  }
}

TEST_CASE("intervals") {
  auto L = b2();
  SUBCASE("[0,a] is a 2-chain") {
    auto v = interval(L, 0, 1);
    CHECK(v.embedded.size() == 2);
    CHECK(is_isomorphic(v.embedded, two_chain()));
    CHECK(v.map_to_parent(v.embedded.bottom()) == 0);
    CHECK(v.map_to_parent(v.embedded.top()) == 1);
  }
  SUBCASE("[bottom,top] is the lattice itself") {
    auto v = interval(L, L.bottom(), L.top());
    CHECK(v.embedded == L);
    for (Elem e = 0; e < v.embedded.size(); ++e) CHECK(v.map_to_parent(e) == e);
  }
  SUBCASE("divisor interval [2,12] is a diamond") {
    auto D = divisor12_by_hand();
    auto v = interval(D, *D.element_by_label("2"), *D.element_by_label("12"));
    CHECK(v.embedded.size() == 4);
    CHECK(is_isomorphic(v.embedded, b2()));
  }
  SUBCASE("incomparable endpoints are rejected") {
    CHECK_THROWS_AS(interval(L, 1, 2), NotComparableError);
  }
  SUBCASE("embedded operations agree with the parent") {
    for (const auto& P : {b2(), n5(), m3(), divisor12_by_hand()}) {
      for (Elem lo = 0; lo < P.size(); ++lo)
        for (Elem hi = 0; hi < P.size(); ++hi) {
          if (!P.leq(lo, hi)) continue;
          auto v = interval(P, lo, hi);
          CHECK(v.map_to_parent(v.embedded.bottom()) == lo);
          CHECK(v.map_to_parent(v.embedded.top()) == hi);
          for (Elem a = 0; a < v.embedded.size(); ++a)
            for (Elem b = 0; b < v.embedded.size(); ++b) {
              CHECK(v.map_to_parent(v.embedded.meet(a, b)) ==
                    P.meet(v.map_to_parent(a), v.map_to_parent(b)));
              CHECK(v.map_to_parent(v.embedded.join(a, b)) ==
                    P.join(v.map_to_parent(a), v.map_to_parent(b)));
            }
        }
    }
  }
  SUBCASE("nested intervals compose") {
    auto D = divisor12_by_hand();
    auto outer = interval(D, D.bottom(), *D.element_by_label("6"));
    for (Elem lo = 0; lo < outer.embedded.size(); ++lo)
      for (Elem hi = 0; hi < outer.embedded.size(); ++hi) {
        if (!outer.embedded.leq(lo, hi)) continue;
        auto inner = interval(outer.embedded, lo, hi);
        auto direct = interval(D, outer.map_to_parent(lo), outer.map_to_parent(hi));
        REQUIRE(inner.embedded.size() == direct.embedded.size());
        for (Elem e = 0; e < inner.embedded.size(); ++e)
          CHECK(outer.map_to_parent(inner.map_to_parent(e)) == direct.map_to_parent(e));
        CHECK(is_isomorphic(inner.embedded, direct.embedded));
      }
  }
}

TEST_CASE("dual") {
  auto L = n5();
  auto d = L.dual();
  CHECK(d.bottom() == L.top());
  CHECK(d.top() == L.bottom());
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y) {
      CHECK(d.leq(x, y) == L.leq(y, x));
      CHECK(d.meet(x, y) == L.join(x, y));
      CHECK(d.join(x, y) == L.meet(x, y));
    }
  for (const auto& M : {two_chain(), b2(), n5(), m3(), b3(), divisor12_by_hand()}) {
    CHECK(M.dual().dual() == M);
    CHECK(M.dual().longest_chain_length() == M.longest_chain_length());
  }
  CHECK(is_isomorphic(two_chain().dual(), two_chain()));
  CHECK(is_isomorphic(n5().dual(), n5()));
}

TEST_CASE("longest chain length") {
  CHECK(two_chain().longest_chain_length() == 1);
  CHECK(b3().longest_chain_length() == 3);
  CHECK(n5().longest_chain_length() == 3);
  for (const auto& L : {b2(), n5(), m3(), b3(), divisor12_by_hand()})
    CHECK(L.longest_chain_length() == longest_chain_by_dfs(L, L.bottom()));
}

TEST_CASE("isomorphism search") {
  CHECK(is_isomorphic(chain_n(3), chain_n(3)));
  CHECK_FALSE(is_isomorphic(b2(), chain_n(4)));
  auto w = find_isomorphism(n5(), n5().dual());
  REQUIRE(w.has_value());
  auto L1 = n5();
  auto L2 = L1.dual();
  for (Elem x = 0; x < L1.size(); ++x)
    for (Elem y = 0; y < L1.size(); ++y)
      CHECK(L1.leq(x, y) == L2.leq((*w)[size_t(x)], (*w)[size_t(y)]));
  CHECK_FALSE(is_isomorphic(n5(), m3()));
}

TEST_CASE("cover pairs are the transitive reduction") {
  auto L = b2();
  std::vector<std::pair<Elem, Elem>> expect{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  CHECK(L.cover_pairs() == expect);
  // redundant input covers normalize away
  auto R = FiniteLattice::from_covers({{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}}}, 4,
                                      {"0", "a", "b", "1"});
  CHECK(R == b2());
  CHECK(R.cover_pairs() == expect);
}

TEST_CASE("single element lattice") {
  auto L = FiniteLattice::from_covers({}, 1);
  CHECK(L.size() == 1);
  CHECK(L.bottom() == L.top());
  CHECK(L.meet_of_set({}) == 0);
  CHECK(L.coatoms().empty());
  CHECK(L.longest_chain_length() == 0);
}

TEST_CASE("labels") {
  auto D = divisor12_by_hand();
  CHECK(D.label(D.top()) == "12");
  CHECK(D.element_by_label("6") == Elem(4));
  CHECK_FALSE(D.element_by_label("7").has_value());
  CHECK_THROWS_AS(D.set_labels({"x"}), LatticeError);
}

TEST_CASE("axioms hold on all fixtures") {
  for (const auto& L : {two_chain(), chain_n(5), b2(), n5(), m3(), b3(), divisor12_by_hand()}) {
    check_lattice_axioms(L);
    check_tables_against_scan(L);
  }
}

}  // TEST_SUITE
