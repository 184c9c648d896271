#include "lattkit/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace lattkit {

namespace {

int words_for(int n) { return (n + 63) / 64; }

struct BitRows {
  int n = 0, words = 0;
  std::vector<std::uint64_t> bits;
  BitRows(int n_) : n(n_), words(words_for(n_)), bits(size_t(n_) * words_for(n_), 0) {}
  std::uint64_t* row(int i) { return bits.data() + size_t(i) * words; }
  const std::uint64_t* row(int i) const { return bits.data() + size_t(i) * words; }
  bool get(int i, int j) const { return (row(i)[j >> 6] >> (j & 63)) & 1u; }
  void set(int i, int j) { row(i)[j >> 6] |= std::uint64_t(1) << (j & 63); }
};

int popcount_row(const std::uint64_t* row, int words) {
  int c = 0;
  for (int w = 0; w < words; ++w) c += std::popcount(row[w]);
  return c;
}

bool row_subset(const std::uint64_t* a, const std::uint64_t* b, int words) {
  for (int w = 0; w < words; ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

}  // namespace

void FiniteLattice::init_from_bits(int n, std::vector<std::uint64_t> up_bits,
                                   std::vector<std::string> labels) {
  n_ = n;
  words_ = words_for(n);
  leq_ = std::move(up_bits);

  BitRows up(n), down(n);
  up.bits = leq_;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (up.get(x, y)) down.set(y, x);

  // poset axioms
  for (int x = 0; x < n; ++x) {
    if (!up.get(x, x)) throw NotAPosetError("relation is not reflexive at element " + std::to_string(x));
    for (int y = 0; y < n; ++y) {
      if (x != y && up.get(x, y) && up.get(y, x))
        throw NotAPosetError("cycle between elements " + std::to_string(x) + " and " + std::to_string(y));
      if (up.get(x, y) && !row_subset(up.row(y), up.row(x), words_))
        throw NotAPosetError("relation is not transitive at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
    }
  }

  // unique minimum / maximum
  std::vector<Elem> minimal, maximal;
  for (int x = 0; x < n; ++x) {
    if (popcount_row(down.row(x), words_) == 1) minimal.push_back(x);
    if (popcount_row(up.row(x), words_) == 1) maximal.push_back(x);
  }
  if (minimal.size() != 1)
    throw NotBoundedError("no unique minimum: " + std::to_string(minimal.size()) + " minimal elements");
  if (maximal.size() != 1)
    throw NotBoundedError("no unique maximum: " + std::to_string(maximal.size()) + " maximal elements");
  bottom_ = minimal[0];
  top_ = maximal[0];

  // linear extension: larger up-sets come earlier
  topo_.resize(size_t(n));
  std::iota(topo_.begin(), topo_.end(), 0);
  std::vector<int> upsize(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) upsize[size_t(x)] = popcount_row(up.row(x), words_);
  std::sort(topo_.begin(), topo_.end(), [&](Elem a, Elem b) {
    if (upsize[size_t(a)] != upsize[size_t(b)]) return upsize[size_t(a)] > upsize[size_t(b)];
    return a < b;
  });
  std::vector<int> rank(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) rank[size_t(topo_[size_t(r)])] = r;

  // rank-space copies; in rank space the greatest element of a down-set is
  // its highest set bit and the least element of an up-set its lowest.
  BitRows up_r(n), down_r(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (up.get(x, y)) {
        up_r.set(rank[size_t(x)], rank[size_t(y)]);
        down_r.set(rank[size_t(y)], rank[size_t(x)]);
      }

  meet_.assign(size_t(n) * n, 0);
  join_.assign(size_t(n) * n, 0);
  std::vector<std::uint64_t> tmp(static_cast<size_t>(words_));
  auto fill = [&](Elem x, Elem y, Elem m, Elem j) {
    meet_[size_t(x) * n + y] = m;
    meet_[size_t(y) * n + x] = m;
    join_[size_t(x) * n + y] = j;
    join_[size_t(y) * n + x] = j;
  };
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      if (up.get(x, y)) { fill(x, y, x, y); continue; }
      if (up.get(y, x)) { fill(x, y, y, x); continue; }
      const int rx = rank[size_t(x)], ry = rank[size_t(y)];
      // meet: highest-ranked common lower bound, verified greatest
      int g = -1;
      for (int w = words_ - 1; w >= 0 && g < 0; --w) {
        std::uint64_t v = down_r.row(rx)[w] & down_r.row(ry)[w];
        if (v) g = w * 64 + (63 - std::countl_zero(v));
      }
      for (int w = 0; w < words_; ++w) tmp[size_t(w)] = down_r.row(rx)[w] & down_r.row(ry)[w];
      if (g < 0 || !row_subset(tmp.data(), down_r.row(g), words_))
        throw NotALatticeError(x, y, true, "elements " + std::to_string(x) + " and " + std::to_string(y) + " have no meet");
      // join: lowest-ranked common upper bound, verified least
      int l = -1;
      for (int w = 0; w < words_ && l < 0; ++w) {
        std::uint64_t v = up_r.row(rx)[w] & up_r.row(ry)[w];
        if (v) l = w * 64 + std::countr_zero(v);
      }
      for (int w = 0; w < words_; ++w) tmp[size_t(w)] = up_r.row(rx)[w] & up_r.row(ry)[w];
      if (l < 0 || !row_subset(tmp.data(), up_r.row(l), words_))
        throw NotALatticeError(x, y, false, "elements " + std::to_string(x) + " and " + std::to_string(y) + " have no join");
      fill(x, y, topo_[size_t(g)], topo_[size_t(l)]);
    }
  }

  // covers: y covers x iff nothing sits strictly between
  ucov_.assign(size_t(n), {});
  lcov_.assign(size_t(n), {});
  for (int x = 0; x < n; ++x) {
    const int rx = rank[size_t(x)];
    for (int y = 0; y < n; ++y) {
      if (x == y || !up.get(x, y)) continue;
      const int ry = rank[size_t(y)];
      bool covered = true;
      for (int w = 0; w < words_ && covered; ++w) {
        std::uint64_t between = up_r.row(rx)[w] & down_r.row(ry)[w];
        if (w == rx >> 6) between &= ~(std::uint64_t(1) << (rx & 63));
        if (w == ry >> 6) between &= ~(std::uint64_t(1) << (ry & 63));
        if (between) covered = false;
      }
      if (covered) {
        ucov_[size_t(x)].push_back(y);
        lcov_[size_t(y)].push_back(x);
      }
    }
  }
  for (auto& v : ucov_) std::sort(v.begin(), v.end());
  for (auto& v : lcov_) std::sort(v.begin(), v.end());

  if (labels.empty()) {
    labels.reserve(size_t(n));
    for (int x = 0; x < n; ++x) labels.push_back(std::to_string(x));
  }
  set_labels(std::move(labels));
}

FiniteLattice FiniteLattice::from_covers(const CoverRelation& covers, int n,
                                         std::vector<std::string> labels) {
  if (n < 1) throw SizeLimitError("a lattice needs at least one element");
  if (n > kMaxElements)
    throw SizeLimitError("element count " + std::to_string(n) + " exceeds the cap of " + std::to_string(kMaxElements));
  std::vector<std::vector<Elem>> succ(static_cast<size_t>(n));
  std::vector<int> indeg(size_t(n), 0);
  for (auto [lo, hi] : covers.pairs) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw LatticeError("invalid_element", "cover pair (" + std::to_string(lo) + ", " + std::to_string(hi) + ") out of range");
    if (lo == hi) throw NotAPosetError("reflexive cover pair at element " + std::to_string(lo));
    succ[size_t(lo)].push_back(hi);
    ++indeg[size_t(hi)];
  }

  // Kahn topological sort; leftovers mean a cycle
  std::vector<Elem> order;
  order.reserve(size_t(n));
  std::vector<int> deg = indeg;
  for (int x = 0; x < n; ++x)
    if (deg[size_t(x)] == 0) order.push_back(x);
  for (size_t head = 0; head < order.size(); ++head)
    for (Elem y : succ[size_t(order[head])])
      if (--deg[size_t(y)] == 0) order.push_back(y);
  if (int(order.size()) != n) throw NotAPosetError("cover relation contains a cycle");

  const int words = words_for(n);
  std::vector<std::uint64_t> up(size_t(n) * words, 0);
  auto row = [&](int i) { return up.data() + size_t(i) * words; };
  for (int i = n - 1; i >= 0; --i) {
    const Elem x = order[size_t(i)];
    row(x)[x >> 6] |= std::uint64_t(1) << (x & 63);
    for (Elem y : succ[size_t(x)])
      for (int w = 0; w < words; ++w) row(x)[w] |= row(y)[w];
  }

  FiniteLattice L;
  L.init_from_bits(n, std::move(up), std::move(labels));
  return L;
}

FiniteLattice FiniteLattice::from_relation(int n, const std::function<bool(Elem, Elem)>& leq,
                                           std::vector<std::string> labels) {
  if (n < 1) throw SizeLimitError("a lattice needs at least one element");
  if (n > kMaxElements)
    throw SizeLimitError("element count " + std::to_string(n) + " exceeds the cap of " + std::to_string(kMaxElements));
  const int words = words_for(n);
  std::vector<std::uint64_t> up(size_t(n) * words, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq(x, y)) up[size_t(x) * words + size_t(y >> 6)] |= std::uint64_t(1) << (y & 63);
  FiniteLattice L;
  L.init_from_bits(n, std::move(up), std::move(labels));
  return L;
}

Elem FiniteLattice::meet_of_set(std::span<const Elem> s) const {
  Elem acc = top_;
  for (Elem x : s) acc = meet(acc, x);
  return acc;
}

Elem FiniteLattice::join_of_set(std::span<const Elem> s) const {
  Elem acc = bottom_;
  for (Elem x : s) acc = join(acc, x);
  return acc;
}

std::vector<std::pair<Elem, Elem>> FiniteLattice::cover_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (int x = 0; x < n_; ++x)
    for (Elem y : ucov_[size_t(x)]) out.emplace_back(x, y);
  std::sort(out.begin(), out.end());
  return out;
}

FiniteLattice FiniteLattice::dual() const {
  FiniteLattice d;
  d.n_ = n_;
  d.words_ = words_;
  d.bottom_ = top_;
  d.top_ = bottom_;
  d.leq_.assign(size_t(n_) * words_, 0);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (leq(y, x)) d.leq_[size_t(x) * words_ + size_t(y >> 6)] |= std::uint64_t(1) << (y & 63);
  d.meet_ = join_;
  d.join_ = meet_;
  d.ucov_ = lcov_;
  d.lcov_ = ucov_;
  d.topo_.assign(topo_.rbegin(), topo_.rend());
  d.labels_ = labels_;
  return d;
}

std::vector<int> FiniteLattice::heights_from(const std::vector<std::vector<Elem>>& covers_up,
                                             Elem start) const {
  std::vector<int> h(size_t(n_), 0);
  // topo_ is a linear extension, so heights can be propagated in one pass
  // (reverse pass when walking the dual cover lists).
  if (start == bottom_) {
    for (Elem x : topo_)
      for (Elem y : covers_up[size_t(x)]) h[size_t(y)] = std::max(h[size_t(y)], h[size_t(x)] + 1);
  } else {
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it)
      for (Elem y : covers_up[size_t(*it)]) h[size_t(y)] = std::max(h[size_t(y)], h[size_t(*it)] + 1);
  }
  return h;
}

int FiniteLattice::longest_chain_length() const {
  return heights_from(ucov_, bottom_)[size_t(top_)];
}

int FiniteLattice::height(Elem x) const { return heights_from(ucov_, bottom_)[size_t(x)]; }

int FiniteLattice::depth(Elem x) const { return heights_from(lcov_, top_)[size_t(x)]; }

void FiniteLattice::set_labels(std::vector<std::string> labels) {
  if (int(labels.size()) != n_)
    throw LatticeError("invalid_labels", "expected " + std::to_string(n_) + " labels, got " + std::to_string(labels.size()));
  labels_ = std::move(labels);
}

std::optional<Elem> FiniteLattice::element_by_label(std::string_view s) const {
  for (int x = 0; x < n_; ++x)
    if (labels_[size_t(x)] == s) return x;
  return std::nullopt;
}

std::vector<Elem> FiniteLattice::elements_between(Elem lo, Elem hi) const {
  std::vector<Elem> out;
  for (int x = 0; x < n_; ++x)
    if (leq(lo, x) && leq(x, hi)) out.push_back(x);
  return out;
}

bool FiniteLattice::operator==(const FiniteLattice& o) const {
  return n_ == o.n_ && bottom_ == o.bottom_ && top_ == o.top_ && leq_ == o.leq_ &&
         meet_ == o.meet_ && join_ == o.join_ && labels_ == o.labels_;
}

IntervalView interval(const FiniteLattice& L, Elem lo, Elem hi) {
  if (!L.leq(lo, hi))
    throw NotComparableError("element " + L.label(lo) + " is not below " + L.label(hi));
  std::vector<Elem> to_parent = L.elements_between(lo, hi);
  std::vector<Elem> embedded_of_parent(size_t(L.size()), -1);
  for (size_t e = 0; e < to_parent.size(); ++e)
    embedded_of_parent[size_t(to_parent[e])] = Elem(e);
  std::vector<std::string> labels;
  labels.reserve(to_parent.size());
  for (Elem p : to_parent) labels.push_back(L.label(p));
  FiniteLattice embedded = FiniteLattice::from_relation(
      int(to_parent.size()),
      [&](Elem a, Elem b) { return L.leq(to_parent[size_t(a)], to_parent[size_t(b)]); },
      std::move(labels));
  return IntervalView{&L, lo, hi, std::move(embedded), std::move(to_parent),
                      std::move(embedded_of_parent)};
}

namespace {

struct ElemProfile {
  int down, up, lcov, ucov, height, depth;
  auto operator<=>(const ElemProfile&) const = default;
};

std::vector<ElemProfile> profiles(const FiniteLattice& L) {
  const int n = L.size();
  std::vector<ElemProfile> p(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    int down = 0, up = 0;
    for (int y = 0; y < n; ++y) {
      if (L.leq(y, x)) ++down;
      if (L.leq(x, y)) ++up;
    }
    p[size_t(x)] = {down, up, int(L.lower_covers(x).size()), int(L.upper_covers(x).size()),
                    L.height(x), L.depth(x)};
  }
  return p;
}

bool extend(const FiniteLattice& L1, const FiniteLattice& L2, const std::vector<std::vector<Elem>>& cand,
            const std::vector<Elem>& order, size_t k, std::vector<Elem>& map, std::vector<char>& used) {
  if (k == order.size()) return true;
  const Elem x = order[k];
  for (Elem y : cand[size_t(x)]) {
    if (used[size_t(y)]) continue;
    bool ok = true;
    for (size_t j = 0; j < k && ok; ++j) {
      const Elem u = order[j], v = map[size_t(u)];
      ok = L1.leq(u, x) == L2.leq(v, y) && L1.leq(x, u) == L2.leq(y, v);
    }
    if (!ok) continue;
    map[size_t(x)] = y;
    used[size_t(y)] = 1;
    if (extend(L1, L2, cand, order, k + 1, map, used)) return true;
    used[size_t(y)] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const FiniteLattice& L1, const FiniteLattice& L2) {
  const int n = L1.size();
  if (n != L2.size()) return std::nullopt;
  auto p1 = profiles(L1), p2 = profiles(L2);
  {
    auto s1 = p1, s2 = p2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  std::vector<std::vector<Elem>> cand(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p1[size_t(x)] == p2[size_t(y)]) cand[size_t(x)].push_back(y);
  std::vector<Elem> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Elem a, Elem b) { return cand[size_t(a)].size() < cand[size_t(b)].size(); });
  std::vector<Elem> map(size_t(n), -1);
  std::vector<char> used(size_t(n), 0);
  if (extend(L1, L2, cand, order, 0, map, used)) return map;
  return std::nullopt;
}

bool is_isomorphic(const FiniteLattice& L1, const FiniteLattice& L2) {
  return find_isomorphism(L1, L2).has_value();
}

}  // namespace lattkit
