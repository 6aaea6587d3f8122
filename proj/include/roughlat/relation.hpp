#pragma once

#include <string_view>
#include <vector>

#include "roughlat/universe.hpp"

namespace roughlat {

/// A binary relation on a finite universe, stored row-wise: entry x holds
/// the neighborhood R(x) = { y | (x,y) in R }. Neighborhoods may be empty;
/// the predicates and the core handle that case.
///
/// Immutable after construction, so concurrent reads need no locking.
class Relation {
 public:
  Relation(Universe universe, std::vector<ElementSet> neighborhoods);

  const Universe& universe() const { return u_; }
  std::size_t size() const { return u_.size(); }

  const ElementSet& neighborhood(std::size_t x) const {
    assert(x < nbhd_.size());
    return nbhd_[x];
  }

  /// Neighborhood looked up by label; throws input_error for unknown labels.
  const ElementSet& neighborhood(std::string_view label) const { return nbhd_[u_.at(label)]; }

  const ElementSet& operator[](std::size_t x) const { return neighborhood(x); }

  bool contains(std::size_t x, std::size_t y) const { return nbhd_[x].contains(y); }

  /// The inverse relation: result(y) = { x | y in R(x) }. Involution.
  Relation inverse() const;

  Relation reflexive_closure() const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_quasiorder() const { return is_reflexive() && is_transitive(); }
  bool is_equivalence() const { return is_quasiorder() && is_symmetric(); }

  /// Elements whose neighborhood has exactly one member.
  ElementSet singletons() const;

  /// Core of R(x): the members w of R(x) such that every neighborhood
  /// containing w contains all of R(x). Empty neighborhoods have empty core.
  ElementSet core(std::size_t x) const;

  bool operator==(const Relation& o) const { return u_ == o.u_ && nbhd_ == o.nbhd_; }

 private:
  Universe u_;
  std::vector<ElementSet> nbhd_;
};

}  // namespace roughlat
