#include "roughlat/relation.hpp"

namespace roughlat {

Relation::Relation(Universe universe, std::vector<ElementSet> neighborhoods)
    : u_(std::move(universe)), nbhd_(std::move(neighborhoods)) {
  if (nbhd_.size() != u_.size())
    throw input_error("relation needs exactly one neighborhood per universe element");
  for (const auto& s : nbhd_)
    if (s.width() != u_.size())
      throw input_error("neighborhood width does not match the universe");
}

Relation Relation::inverse() const {
  const std::size_t n = size();
  std::vector<ElementSet> inv(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x)
    nbhd_[x].for_each([&](std::size_t y) { inv[y].insert(x); });
  return Relation(u_, std::move(inv));
}

Relation Relation::reflexive_closure() const {
  std::vector<ElementSet> nb = nbhd_;
  for (std::size_t x = 0; x < nb.size(); ++x) nb[x].insert(x);
  return Relation(u_, std::move(nb));
}

bool Relation::is_reflexive() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (!nbhd_[x].contains(x)) return false;
  return true;
}

bool Relation::is_symmetric() const {
  for (std::size_t x = 0; x < size(); ++x) {
    bool ok = true;
    nbhd_[x].for_each([&](std::size_t y) { ok = ok && nbhd_[y].contains(x); });
    if (!ok) return false;
  }
  return true;
}

bool Relation::is_transitive() const {
  for (std::size_t x = 0; x < size(); ++x) {
    bool ok = true;
    nbhd_[x].for_each([&](std::size_t y) { ok = ok && nbhd_[y].subset_of(nbhd_[x]); });
    if (!ok) return false;
  }
  return true;
}

ElementSet Relation::singletons() const {
  ElementSet s(size());
  for (std::size_t x = 0; x < size(); ++x)
    if (nbhd_[x].count() == 1) s.insert(x);
  return s;
}

ElementSet Relation::core(std::size_t x) const {
  // Straight from the quantifier definition; n is small enough that no
  // caching is worthwhile.
  const std::size_t n = size();
  ElementSet out(n);
  nbhd_[x].for_each([&](std::size_t w) {
    for (std::size_t y = 0; y < n; ++y)
      if (nbhd_[y].contains(w) && !nbhd_[x].subset_of(nbhd_[y])) return;
    out.insert(w);
  });
  return out;
}

}  // namespace roughlat
