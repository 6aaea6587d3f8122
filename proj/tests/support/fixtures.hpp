#pragma once

#include <initializer_list>
#include <vector>

#include "roughlat/roughsets.hpp"

namespace roughlat::testing {

/// Universe {"1",...,"n"}; members given 1-based.
inline ElementSet es(std::size_t n, std::initializer_list<int> xs) {
  ElementSet s(n);
  for (int x : xs) s.insert(static_cast<std::size_t>(x - 1));
  return s;
}

inline ApproxPair ap(std::size_t n, std::initializer_list<int> lo,
                     std::initializer_list<int> hi) {
  return {es(n, lo), es(n, hi)};
}

inline Relation make_rel(std::size_t n, const std::vector<std::vector<int>>& rows) {
  std::vector<ElementSet> nb;
  nb.reserve(n);
  for (const auto& row : rows) {
    ElementSet s(n);
    for (int x : row) s.insert(static_cast<std::size_t>(x - 1));
    nb.push_back(s);
  }
  return Relation(Universe::numbered(n), std::move(nb));
}

/// Reflexive, not symmetric, not transitive; one singleton element. The
/// completion has six elements and is a product of a 2-chain and a 3-chain.
inline Relation fixture_a() { return make_rel(3, {{1, 2, 3}, {2}, {1, 3}}); }

/// Reflexive directional similarity with one singleton; the completion has
/// twelve elements, is distributive, but is not a Nelson algebra.
inline Relation fixture_b() { return make_rel(4, {{1, 2}, {1, 2, 3}, {3}, {1, 3, 4}}); }

/// Tolerance whose upper family is nondistributive (it contains a pentagon).
inline Relation fixture_c() { return make_rel(4, {{1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4}}); }

inline Relation identity_rel(std::size_t n) {
  std::vector<ElementSet> nb;
  for (std::size_t i = 0; i < n; ++i) nb.push_back(ElementSet::single(n, i));
  return Relation(Universe::numbered(n), std::move(nb));
}

inline Relation full_rel(std::size_t n) {
  return Relation(Universe::numbered(n),
                  std::vector<ElementSet>(n, ElementSet::full(n)));
}

}  // namespace roughlat::testing
