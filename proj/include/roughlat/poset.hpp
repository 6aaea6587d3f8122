#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "roughlat/errors.hpp"

namespace roughlat {

/// A finite partial order on elements 0..n-1, held as bitset rows of the
/// order matrix. Payloads stay with the caller; the poset knows indices
/// only. Construction validates reflexivity, antisymmetry and transitivity.
class FinitePoset {
 public:
  FinitePoset(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const { return n_; }

  bool leq(std::size_t a, std::size_t b) const { return bit(up_, a, b); }

  /// Bitset row of { b | a <= b }.
  std::span<const std::uint64_t> up_row(std::size_t a) const {
    return {up_.data() + a * words_, words_};
  }

  /// Bitset row of { b | b <= a }.
  std::span<const std::uint64_t> down_row(std::size_t a) const {
    return {down_.data() + a * words_, words_};
  }

  std::size_t up_count(std::size_t a) const { return up_size_[a]; }
  std::size_t down_count(std::size_t a) const { return down_size_[a]; }
  std::size_t words() const { return words_; }

 private:
  bool bit(const std::vector<std::uint64_t>& rows, std::size_t a, std::size_t b) const {
    return (rows[a * words_ + (b >> 6)] >> (b & 63)) & 1;
  }

  std::size_t n_, words_;
  std::vector<std::uint64_t> up_, down_;
  std::vector<std::size_t> up_size_, down_size_;
};

/// A pair with no least upper (or greatest lower) bound.
struct LatticeWitness {
  std::size_t a = 0, b = 0;
  bool missing_join = true;
};

bool is_lattice(const FinitePoset& p, LatticeWitness* witness = nullptr);

/// A finite lattice over a validated poset: join/meet structure, bounds and
/// the cover relation. Join and meet are table-backed for small lattices and
/// computed from the order rows beyond that.
///
/// Immutable after construction; all queries are safe to run concurrently.
class FiniteLattice {
 public:
  /// Throws precondition_error naming a witness pair if p is not a lattice.
  static FiniteLattice from_poset(FinitePoset p);

  const FinitePoset& poset() const { return p_; }
  std::size_t size() const { return p_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return p_.leq(a, b); }

  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;

  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  /// Fold over the join table; the empty join is the bottom element.
  std::size_t join_all(std::span<const std::size_t> xs) const;
  /// Fold over the meet table; the empty meet is the top element.
  std::size_t meet_all(std::span<const std::size_t> xs) const;

  /// Cover pairs (lower, upper), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  const std::vector<std::size_t>& lower_covers(std::size_t x) const { return lower_covers_[x]; }
  const std::vector<std::size_t>& upper_covers(std::size_t x) const { return upper_covers_[x]; }

  /// Elements with exactly one lower cover (the bottom is excluded).
  std::vector<std::size_t> join_irreducibles() const;

  /// Elements p (except the bottom) with p not below the join of everything
  /// p is not below.
  std::vector<std::size_t> join_primes() const;

  /// Upper covers of the bottom.
  std::vector<std::size_t> atoms() const;

  struct Triple {
    std::size_t x = 0, y = 0, z = 0;
  };

  /// Binary distributive law over all triples. For a finite lattice this
  /// coincides with complete distributivity, which is why no stronger check
  /// exists here.
  bool is_distributive(Triple* witness = nullptr) const;

  /// Every element is the join of the join-irreducible elements below it.
  /// True for every finite lattice, but computed rather than assumed.
  bool is_spatial() const;

  /// Greatest y with meet(x, y) = bottom, if a greatest one exists.
  std::optional<std::size_t> pseudocomplement(std::size_t x) const;
  /// Least y with join(x, y) = top, if a least one exists.
  std::optional<std::size_t> dual_pseudocomplement(std::size_t x) const;
  /// Greatest x with meet(a, x) <= b, if a greatest one exists.
  std::optional<std::size_t> relative_pseudocomplement(std::size_t a, std::size_t b) const;

  /// A pentagon sublattice {o, a, c, b, i} with a < c, b incomparable to
  /// both. Diagnostic only; never used to decide distributivity.
  struct Pentagon {
    std::size_t o, a, c, b, i;
  };
  std::optional<Pentagon> find_pentagon() const;

 private:
  explicit FiniteLattice(FinitePoset p);

  std::size_t bound_from_rows(std::size_t a, std::size_t b, bool join_side) const;

  FinitePoset p_;
  std::size_t bottom_ = 0, top_ = 0;
  bool tabled_ = false;
  std::vector<std::uint32_t> join_table_, meet_table_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> lower_covers_, upper_covers_;
};

/// Order isomorphism by backtracking over degree/height signatures.
/// Capped at 64 elements per side; larger inputs raise capacity_error.
bool are_isomorphic(const FinitePoset& a, const FinitePoset& b);
bool are_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

/// The chain 0 < 1 < ... < k-1 (k >= 1).
FiniteLattice chain(std::size_t k);

/// Direct product under the componentwise order.
FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b);

}  // namespace roughlat
