#pragma once

#include <random>

#include "roughlat/relation.hpp"

namespace roughlat::testing {

/// Off-diagonal arcs drawn independently with the given percentage.
inline Relation random_relation(std::mt19937_64& rng, std::size_t n, bool reflexive,
                                unsigned density_pct = 35) {
  std::vector<ElementSet> nb(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) {
        if (reflexive) nb[x].insert(y);
        else if (rng() % 100 < density_pct) nb[x].insert(y);
      } else if (rng() % 100 < density_pct) {
        nb[x].insert(y);
      }
    }
  return Relation(Universe::numbered(n), std::move(nb));
}

/// Reflexive relation with a mixed density so sparse, near-identity cases
/// appear as often as dense ones.
inline Relation random_reflexive(std::mt19937_64& rng, std::size_t n) {
  static constexpr unsigned densities[] = {10, 20, 35, 50, 75};
  return random_relation(rng, n, true, densities[rng() % 5]);
}

inline Relation transitive_closure(const Relation& r) {
  std::vector<ElementSet> nb;
  nb.reserve(r.size());
  for (std::size_t x = 0; x < r.size(); ++x) nb.push_back(r[x]);
  for (std::size_t k = 0; k < r.size(); ++k)
    for (std::size_t x = 0; x < r.size(); ++x)
      if (nb[x].contains(k)) nb[x] |= nb[k];
  return Relation(r.universe(), std::move(nb));
}

inline Relation random_quasiorder(std::mt19937_64& rng, std::size_t n) {
  return transitive_closure(random_relation(rng, n, true, 10 + rng() % 30));
}

inline Relation random_equivalence(std::mt19937_64& rng, std::size_t n) {
  std::size_t k = 1 + rng() % n;
  std::vector<std::size_t> block(n);
  for (auto& b : block) b = rng() % k;
  std::vector<ElementSet> nb(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (block[x] == block[y]) nb[x].insert(y);
  return Relation(Universe::numbered(n), std::move(nb));
}

inline Relation random_tolerance(std::mt19937_64& rng, std::size_t n,
                                 unsigned density_pct = 35) {
  std::vector<ElementSet> nb(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x) {
    nb[x].insert(x);
    for (std::size_t y = x + 1; y < n; ++y)
      if (rng() % 100 < density_pct) {
        nb[x].insert(y);
        nb[y].insert(x);
      }
  }
  return Relation(Universe::numbered(n), std::move(nb));
}

/// Random subset of the same universe.
inline ElementSet random_subset(std::mt19937_64& rng, std::size_t n) {
  return ElementSet(n, rng() & low_mask(n));
}

}  // namespace roughlat::testing
