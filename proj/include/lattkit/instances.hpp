#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lattkit/core.hpp"

namespace lattkit {

/// k-element chain 0 < 1 < ... < k-1.
FiniteLattice chain(int k);

/// Boolean lattice on k atoms (subsets of a k-set); k <= 5.
FiniteLattice boolean_lattice(int k);

/// M_k: bottom, k incomparable atoms (= coatoms), top.
FiniteLattice diamond_m(int k);

/// The pentagon N5: 0 < a < c < 1 with b incomparable to a and c.
FiniteLattice pentagon();

/// Divisors of n ordered by divisibility; meet is gcd and join is lcm.
FiniteLattice divisor_lattice(std::uint64_t n);

/// Finite module over Z_n presented as a direct sum of cyclic groups whose
/// orders divide n. Elements are mixed-radix indices over the cyclic orders.
class FiniteZnModule {
public:
  static constexpr int kMaxOrder = 256;

  FiniteZnModule(std::uint64_t modulus, std::vector<int> cyclic_orders);

  std::uint64_t modulus() const noexcept { return modulus_; }
  const std::vector<int>& cyclic_orders() const noexcept { return orders_; }
  int order() const noexcept { return order_; }

  int add(int a, int b) const { return add_[size_t(a) * order_ + b]; }
  int scalar(std::uint64_t r, int a) const;
  std::vector<int> components(int a) const;
  int element(const std::vector<int>& comps) const;

private:
  std::uint64_t modulus_;
  std::vector<int> orders_;
  int order_;
  std::vector<int> add_;
};

/// Lattice of all submodules (= subgroups) of a FiniteZnModule, ordered by
/// inclusion. Meet is intersection; join is the subgroup sum.
struct SubmoduleLattice {
  FiniteZnModule module;
  FiniteLattice lattice;
  std::vector<std::vector<int>> submodule_of;  // element id -> sorted module elements

  /// Id of the submodule with exactly these elements, if it is one.
  std::optional<Elem> find_submodule(const std::vector<int>& sorted_elems) const;
};

/// All submodules enumerated by closing generated subsets. Throws
/// SizeLimitError when the module order exceeds kMaxOrder or the subgroup
/// count exceeds the lattice cap.
SubmoduleLattice submodule_lattice(const FiniteZnModule& m);

/// Subgroup lattice of the abelian group Z_{c1} x ... x Z_{ck}; the orders
/// must be prime powers and the group order is capped at 256.
SubmoduleLattice subgroup_lattice_abelian(const std::vector<int>& cyclic_orders);

/// Ideals of Z_n under inclusion, labeled "dZn"; dual-isomorphic to the
/// divisor lattice of n.
SubmoduleLattice ideal_lattice_zn(std::uint64_t n);

/// Product of the distinct primes dividing n (1 for n = 1). This is the
/// arithmetic route to the Jacobson radical generator of Z_n.
std::uint64_t squarefree_kernel(std::uint64_t n);

/// Jacobson radical of Z_n computed from its definition, as the meet of the
/// coatoms of the ideal lattice, cross-checked against squarefree_kernel.
/// Returns the elements of the radical ideal.
std::vector<int> jacobson_radical_zn(std::uint64_t n);

struct ModuleRadicalBoundReport {
  SubmoduleLattice submodules;
  std::uint64_t jacobson_generator = 0;  // d with J(Z_n) = dZ_n
  Elem jn_id = 0;                        // the submodule J*N
  Elem rn_id = 0;                        // the lattice radical r(N)
  bool holds = false;                    // J*N <= r(N) <= N
};

/// Checks J*N <= r(N) <= N for a module N over Z_{ring_modulus}.
ModuleRadicalBoundReport verify_module_radical_bound(std::uint64_t ring_modulus,
                                                     const FiniteZnModule& module);

}  // namespace lattkit
