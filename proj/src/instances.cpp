#include "lattkit/instances.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>

#include "lattkit/series.hpp"

namespace lattkit {

FiniteLattice chain(int k) {
  if (k < 1) throw SizeLimitError("chain needs at least one element");
  CoverRelation c;
  for (int i = 0; i + 1 < k; ++i) c.pairs.emplace_back(i, i + 1);
  return FiniteLattice::from_covers(c, k);
}

FiniteLattice boolean_lattice(int k) {
  if (k < 0 || k > 5) throw SizeLimitError("boolean lattice supports 0 <= k <= 5 atoms");
  const int n = 1 << k;
  CoverRelation c;
  for (int s = 0; s < n; ++s)
    for (int b = 0; b < k; ++b)
      if (!(s & (1 << b))) c.pairs.emplace_back(s, s | (1 << b));
  std::vector<std::string> labels;
  for (int s = 0; s < n; ++s) {
    std::string l = "{";
    for (int b = 0; b < k; ++b)
      if (s & (1 << b)) l += (l.size() > 1 ? "," : "") + std::to_string(b);
    labels.push_back(l + "}");
  }
  return FiniteLattice::from_covers(c, n, std::move(labels));
}

FiniteLattice diamond_m(int k) {
  if (k < 0 || k + 2 > FiniteLattice::kMaxElements)
    throw SizeLimitError("diamond size out of range");
  if (k == 0) return chain(2);
  const int n = k + 2;
  CoverRelation c;
  std::vector<std::string> labels{"0"};
  for (int i = 1; i <= k; ++i) {
    c.pairs.emplace_back(0, i);
    c.pairs.emplace_back(i, n - 1);
    labels.push_back(k <= 26 ? std::string(1, char('a' + i - 1)) : "a" + std::to_string(i));
  }
  labels.push_back("1");
  return FiniteLattice::from_covers(c, n, std::move(labels));
}

FiniteLattice pentagon() {
  return FiniteLattice::from_covers({{{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}}, 5,
                                    {"0", "a", "b", "c", "1"});
}

namespace {

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

FiniteLattice divisor_lattice(std::uint64_t n) {
  if (n < 1) throw SizeLimitError("divisor lattice needs n >= 1");
  auto divs = divisors_of(n);
  if (divs.size() > size_t(FiniteLattice::kMaxElements))
    throw SizeLimitError("too many divisors: " + std::to_string(divs.size()));
  std::vector<std::string> labels;
  for (auto d : divs) labels.push_back(std::to_string(d));
  return FiniteLattice::from_relation(
      int(divs.size()),
      [&](Elem a, Elem b) { return divs[size_t(b)] % divs[size_t(a)] == 0; }, std::move(labels));
}

FiniteZnModule::FiniteZnModule(std::uint64_t modulus, std::vector<int> cyclic_orders)
    : modulus_(modulus), orders_(std::move(cyclic_orders)) {
  if (modulus_ < 1) throw SizeLimitError("ring modulus must be >= 1");
  long long prod = 1;
  for (int c : orders_) {
    if (c < 1) throw LatticeError("invalid_module", "cyclic orders must be >= 1");
    if (std::uint64_t(c) != 0 && modulus_ % std::uint64_t(c) != 0)
      throw LatticeError("invalid_module",
                         "cyclic order " + std::to_string(c) + " does not divide the modulus " +
                             std::to_string(modulus_));
    prod *= c;
    if (prod > kMaxOrder)
      throw SizeLimitError("module order exceeds the cap of " + std::to_string(kMaxOrder));
  }
  order_ = int(prod);
  add_.assign(size_t(order_) * order_, 0);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) {
      int x = a, y = b, pos = 0, radix = 1;
      for (int c : orders_) {
        pos += radix * ((x % c + y % c) % c);
        radix *= c;
        x /= c;
        y /= c;
      }
      add_[size_t(a) * order_ + b] = pos;
    }
}

int FiniteZnModule::scalar(std::uint64_t r, int a) const {
  int pos = 0, radix = 1, x = a;
  for (int c : orders_) {
    pos += radix * int((r % std::uint64_t(c)) * std::uint64_t(x % c) % std::uint64_t(c));
    radix *= c;
    x /= c;
  }
  return pos;
}

std::vector<int> FiniteZnModule::components(int a) const {
  std::vector<int> comps;
  comps.reserve(orders_.size());
  for (int c : orders_) {
    comps.push_back(a % c);
    a /= c;
  }
  return comps;
}

int FiniteZnModule::element(const std::vector<int>& comps) const {
  int pos = 0, radix = 1;
  for (size_t i = 0; i < orders_.size(); ++i) {
    pos += radix * (comps[i] % orders_[i]);
    radix *= orders_[i];
  }
  return pos;
}

namespace {

// subgroup of a module of order <= 256, as an element bitmask
struct ElemMask {
  std::array<std::uint64_t, 4> w{};

  bool get(int i) const { return (w[size_t(i >> 6)] >> (i & 63)) & 1u; }
  void set(int i) { w[size_t(i >> 6)] |= std::uint64_t(1) << (i & 63); }
  int popcount() const {
    int c = 0;
    for (auto v : w) c += std::popcount(v);
    return c;
  }
  bool subset_of(const ElemMask& o) const {
    for (int i = 0; i < 4; ++i)
      if (w[size_t(i)] & ~o.w[size_t(i)]) return false;
    return true;
  }
  auto operator<=>(const ElemMask&) const = default;
};

template <typename F>
void for_each_element(const ElemMask& m, F&& f) {
  for (int word = 0; word < 4; ++word) {
    std::uint64_t v = m.w[size_t(word)];
    while (v) {
      f(word * 64 + std::countr_zero(v));
      v &= v - 1;
    }
  }
}

// H + <g> for a subgroup H
ElemMask extend_subgroup(const FiniteZnModule& M, const ElemMask& H, int g) {
  ElemMask K{};
  int kg = 0;
  do {
    for_each_element(H, [&](int h) { K.set(M.add(h, kg)); });
    kg = M.add(kg, g);
  } while (kg != 0);
  return K;
}

std::vector<ElemMask> all_subgroups(const FiniteZnModule& M, size_t cap) {
  ElemMask trivial{};
  trivial.set(0);
  std::set<ElemMask> seen{trivial};
  std::vector<ElemMask> queue{trivial};
  for (size_t head = 0; head < queue.size(); ++head) {
    const ElemMask H = queue[head];
    for (int g = 0; g < M.order(); ++g) {
      if (H.get(g)) continue;
      ElemMask K = extend_subgroup(M, H, g);
      if (seen.insert(K).second) {
        if (seen.size() > cap)
          throw SizeLimitError("subgroup count exceeds the lattice cap of " + std::to_string(cap));
        queue.push_back(K);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::string set_label(const ElemMask& m) {
  std::string l = "{";
  for_each_element(m, [&](int e) { l += (l.size() > 1 ? "," : "") + std::to_string(e); });
  return l + "}";
}

SubmoduleLattice build_submodule_lattice(const FiniteZnModule& M,
                                         std::vector<std::string> labels_override = {}) {
  auto subs = all_subgroups(M, size_t(FiniteLattice::kMaxElements));
  std::sort(subs.begin(), subs.end(), [](const ElemMask& a, const ElemMask& b) {
    if (a.popcount() != b.popcount()) return a.popcount() < b.popcount();
    return a < b;
  });
  std::vector<std::string> labels = std::move(labels_override);
  if (labels.empty()) {
    for (const auto& s : subs)
      labels.push_back(M.order() <= 16 ? set_label(s)
                                       : "S" + std::to_string(&s - subs.data()) + ":" +
                                             std::to_string(s.popcount()));
  }
  FiniteLattice L = FiniteLattice::from_relation(
      int(subs.size()),
      [&](Elem a, Elem b) { return subs[size_t(a)].subset_of(subs[size_t(b)]); },
      std::move(labels));
  std::vector<std::vector<int>> members;
  members.reserve(subs.size());
  for (const auto& s : subs) {
    std::vector<int> elems;
    for_each_element(s, [&](int e) { elems.push_back(e); });
    members.push_back(std::move(elems));
  }
  return SubmoduleLattice{M, std::move(L), std::move(members)};
}

}  // namespace

std::optional<Elem> SubmoduleLattice::find_submodule(const std::vector<int>& sorted_elems) const {
  for (Elem x = 0; x < lattice.size(); ++x)
    if (submodule_of[size_t(x)] == sorted_elems) return x;
  return std::nullopt;
}

SubmoduleLattice submodule_lattice(const FiniteZnModule& m) { return build_submodule_lattice(m); }

namespace {

bool is_prime_power(int c) {
  if (c < 2) return false;
  int p = 2;
  while (p * p <= c && c % p) ++p;
  if (c % p) p = c;  // c itself is prime
  while (c % p == 0) c /= p;
  return c == 1;
}

}  // namespace

SubmoduleLattice subgroup_lattice_abelian(const std::vector<int>& cyclic_orders) {
  std::uint64_t exponent = 1;
  for (int c : cyclic_orders) {
    if (!is_prime_power(c))
      throw LatticeError("invalid_module",
                         "cyclic order " + std::to_string(c) + " is not a prime power");
    exponent = std::lcm<std::uint64_t>(exponent, std::uint64_t(c));
  }
  return submodule_lattice(FiniteZnModule(exponent, cyclic_orders));
}

SubmoduleLattice ideal_lattice_zn(std::uint64_t n) {
  if (n < 1) throw SizeLimitError("ideal lattice needs n >= 1");
  if (n > FiniteZnModule::kMaxOrder)
    throw SizeLimitError("modulus exceeds the cap of " + std::to_string(FiniteZnModule::kMaxOrder));
  FiniteZnModule M(n, {int(n)});
  auto subs = all_subgroups(M, size_t(FiniteLattice::kMaxElements));
  std::sort(subs.begin(), subs.end(), [](const ElemMask& a, const ElemMask& b) {
    if (a.popcount() != b.popcount()) return a.popcount() < b.popcount();
    return a < b;
  });
  std::vector<std::string> labels;
  for (const auto& s : subs) {
    const std::uint64_t d = n / std::uint64_t(s.popcount());
    if (d == 1)
      labels.push_back("Z" + std::to_string(n));
    else if (d == n)
      labels.push_back("0");
    else
      labels.push_back(std::to_string(d) + "Z" + std::to_string(n));
  }
  return build_submodule_lattice(M, std::move(labels));
}

std::uint64_t squarefree_kernel(std::uint64_t n) {
  std::uint64_t out = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out *= p;
      while (n % p == 0) n /= p;
    }
  return out * n;  // leftover n is 1 or a prime
}

std::vector<int> jacobson_radical_zn(std::uint64_t n) {
  auto ideals = ideal_lattice_zn(n);
  const Elem r = radical(ideals.lattice);
  std::vector<int> members = ideals.submodule_of[size_t(r)];
  // definitional route must agree with the product of the distinct primes
  const std::uint64_t d = squarefree_kernel(n);
  const std::uint64_t expected_size = n / d;
  if (std::uint64_t(members.size()) != expected_size)
    throw LatticeError("internal_mismatch",
                       "Jacobson radical of Z_" + std::to_string(n) +
                           " disagrees with the squarefree kernel " + std::to_string(d));
  return members;
}

ModuleRadicalBoundReport verify_module_radical_bound(std::uint64_t ring_modulus,
                                                     const FiniteZnModule& module) {
  for (int c : module.cyclic_orders())
    if (ring_modulus % std::uint64_t(c) != 0)
      throw LatticeError("invalid_module", "module exponent does not divide the ring modulus");
  jacobson_radical_zn(ring_modulus);  // definitional cross-check of the generator
  const std::uint64_t d = squarefree_kernel(ring_modulus);

  ModuleRadicalBoundReport rep{submodule_lattice(module), d, 0, 0, false};
  // J*N = d*N: the image of multiplication by the radical generator
  std::set<int> jn_set;
  for (int x = 0; x < module.order(); ++x) jn_set.insert(module.scalar(d, x));
  std::vector<int> jn(jn_set.begin(), jn_set.end());
  auto jn_id = rep.submodules.find_submodule(jn);
  if (!jn_id)
    throw LatticeError("internal_mismatch", "J*N is not among the enumerated submodules");
  rep.jn_id = *jn_id;
  rep.rn_id = radical(rep.submodules.lattice);
  rep.holds = rep.submodules.lattice.leq(rep.jn_id, rep.rn_id) &&
              rep.submodules.lattice.leq(rep.rn_id, rep.submodules.lattice.top());
  return rep;
}

}  // namespace lattkit
