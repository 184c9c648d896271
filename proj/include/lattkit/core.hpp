#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lattkit {

using Elem = int;

/// Base class for all domain errors. `code()` is a stable machine-readable
/// identifier; `what()` carries the human message.
class LatticeError : public std::runtime_error {
public:
  LatticeError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

struct NotAPosetError : LatticeError {
  explicit NotAPosetError(const std::string& msg) : LatticeError("not_a_poset", msg) {}
};

struct NotALatticeError : LatticeError {
  Elem x, y;
  bool missing_meet;  // false: missing join
  NotALatticeError(Elem x_, Elem y_, bool missing_meet_, const std::string& msg)
      : LatticeError("not_a_lattice", msg), x(x_), y(y_), missing_meet(missing_meet_) {}
};

struct NotBoundedError : LatticeError {
  explicit NotBoundedError(const std::string& msg) : LatticeError("not_bounded", msg) {}
};

struct NotComparableError : LatticeError {
  explicit NotComparableError(const std::string& msg) : LatticeError("not_comparable", msg) {}
};

struct NotACoatomError : LatticeError {
  explicit NotACoatomError(const std::string& msg) : LatticeError("not_a_coatom", msg) {}
};

struct SizeLimitError : LatticeError {
  explicit SizeLimitError(const std::string& msg) : LatticeError("size_limit", msg) {}
};

/// Hasse-diagram input: (lower, upper) pairs. Redundant (implied) pairs are
/// accepted and normalized away; `FiniteLattice::cover_pairs()` always
/// returns the transitive reduction.
struct CoverRelation {
  std::vector<std::pair<Elem, Elem>> pairs;
};

/// Immutable bounded lattice on element ids 0..n-1. The order relation is
/// kept as a bit matrix and meet/join as full n x n tables, so all queries
/// after construction are table lookups. Labels are presentation-only.
class FiniteLattice {
public:
  static constexpr int kMaxElements = 4096;

  /// Builds from a cover relation: computes the transitive closure, checks
  /// the result is a bounded lattice, and fills the meet/join tables.
  /// Throws NotAPosetError, NotBoundedError, NotALatticeError, SizeLimitError.
  static FiniteLattice from_covers(const CoverRelation& covers, int n,
                                   std::vector<std::string> labels = {});

  /// Builds from an arbitrary leq predicate over ids 0..n-1. The predicate
  /// must be a partial order; bounds and pairwise meets/joins are verified.
  static FiniteLattice from_relation(int n, const std::function<bool(Elem, Elem)>& leq,
                                     std::vector<std::string> labels = {});

  int size() const noexcept { return n_; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  bool leq(Elem x, Elem y) const { return (leq_[size_t(x) * words_ + size_t(y >> 6)] >> (y & 63)) & 1u; }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
  Elem meet(Elem x, Elem y) const { return meet_[size_t(x) * n_ + y]; }
  Elem join(Elem x, Elem y) const { return join_[size_t(x) * n_ + y]; }

  /// Greatest lower bound of a set; the empty meet is the top element.
  Elem meet_of_set(std::span<const Elem> s) const;
  /// Least upper bound of a set; the empty join is the bottom element.
  Elem join_of_set(std::span<const Elem> s) const;
  Elem meet_of_set(std::initializer_list<Elem> s) const { return meet_of_set(std::span<const Elem>(s.begin(), s.size())); }
  Elem join_of_set(std::initializer_list<Elem> s) const { return join_of_set(std::span<const Elem>(s.begin(), s.size())); }

  const std::vector<Elem>& upper_covers(Elem x) const { return ucov_[size_t(x)]; }
  const std::vector<Elem>& lower_covers(Elem x) const { return lcov_[size_t(x)]; }
  std::vector<Elem> atoms() const { return ucov_[size_t(bottom_)]; }
  std::vector<Elem> coatoms() const { return lcov_[size_t(top_)]; }

  /// Canonical transitive reduction, sorted by (lower, upper).
  std::vector<std::pair<Elem, Elem>> cover_pairs() const;

  /// Order reversed, meet/join swapped, bottom/top swapped; ids unchanged.
  FiniteLattice dual() const;

  /// Number of covers along a longest maximal chain from bottom to top.
  int longest_chain_length() const;

  /// Longest chain from bottom up to x / from x up to top.
  int height(Elem x) const;
  int depth(Elem x) const;

  const std::string& label(Elem x) const { return labels_[size_t(x)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::optional<Elem> element_by_label(std::string_view s) const;

  /// Elements x with lo <= x <= hi, ascending by id.
  std::vector<Elem> elements_between(Elem lo, Elem hi) const;

  bool operator==(const FiniteLattice& o) const;

private:
  FiniteLattice() = default;
  void init_from_bits(int n, std::vector<std::uint64_t> up_bits, std::vector<std::string> labels);
  std::vector<int> heights_from(const std::vector<std::vector<Elem>>& covers_up, Elem start) const;

  int n_ = 0;
  int words_ = 0;
  Elem bottom_ = 0, top_ = 0;
  std::vector<std::uint64_t> leq_;  // row x = up-set of x, bit-packed over ids
  std::vector<Elem> meet_, join_;
  std::vector<std::vector<Elem>> ucov_, lcov_;
  std::vector<Elem> topo_;  // a fixed linear extension, bottom first
  std::vector<std::string> labels_;
};

/// A sublattice view of the elements between lo and hi. `embedded` is a
/// standalone lattice whose meets/joins agree with the parent through
/// `to_parent`; its bottom maps to lo and its top to hi.
struct IntervalView {
  const FiniteLattice* parent = nullptr;
  Elem lo = 0, hi = 0;
  FiniteLattice embedded;
  std::vector<Elem> to_parent;           // embedded id -> parent id
  std::vector<Elem> embedded_of_parent;  // parent id -> embedded id, -1 outside

  Elem map_to_parent(Elem e) const { return to_parent[size_t(e)]; }
  std::optional<Elem> map_from_parent(Elem p) const {
    Elem e = embedded_of_parent[size_t(p)];
    return e < 0 ? std::nullopt : std::optional<Elem>(e);
  }
};

/// Throws NotComparableError when lo is not below hi.
IntervalView interval(const FiniteLattice& L, Elem lo, Elem hi);

/// Backtracking order-isomorphism search with invariant pruning.
/// Returns the witness map (L1 id -> L2 id) when the lattices are isomorphic.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteLattice& L1, const FiniteLattice& L2);
bool is_isomorphic(const FiniteLattice& L1, const FiniteLattice& L2);

}  // namespace lattkit
