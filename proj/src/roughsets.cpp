#include "roughlat/roughsets.hpp"

#include <algorithm>
#include <unordered_set>

namespace roughlat {

bool pair_less(const ApproxPair& a, const ApproxPair& b) {
  if (a.lower.count() != b.lower.count()) return a.lower.count() < b.lower.count();
  if (a.lower.bits() != b.lower.bits()) return a.lower.bits() < b.lower.bits();
  if (a.upper.count() != b.upper.count()) return a.upper.count() < b.upper.count();
  return a.upper.bits() < b.upper.bits();
}

std::string to_string(const ApproxPair& p, const Universe& u) {
  return "(" + to_string(p.lower, u) + "," + to_string(p.upper, u) + ")";
}

ApproxPair rough_pair(const Relation& r, const ElementSet& x) {
  return {lower(r, x), upper(r, x)};
}

bool rough_equal(const Relation& r, const ElementSet& x, const ElementSet& y) {
  return rough_pair(r, x) == rough_pair(r, y);
}

namespace {

void check_cap(std::size_t n, std::size_t cap, const char* stage) {
  if (n > cap)
    throw capacity_error(std::string(stage) + ": universe size " + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(cap));
}

std::uint64_t pack_pair(const ApproxPair& p, std::size_t n) {
  // Two masks of width <= 32 fit one word; wider universes use a hash.
  if (n <= 32) return (p.lower.bits() << 32) | p.upper.bits();
  std::uint64_t h = p.lower.bits() * 0x9e3779b97f4a7c15ull;
  h ^= p.upper.bits() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

std::vector<ApproxPair> enumerate_rs(const Relation& r, const RoughOptions& opts) {
  const std::size_t n = r.size();
  check_cap(n, opts.rs_cap, "rough-set enumeration");
  check_cap(n, 32, "rough-set enumeration (subset sweep hard limit)");
  std::vector<ApproxPair> out;
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    ApproxPair p = rough_pair(r, ElementSet(n, m));
    if (seen.insert(pack_pair(p, n)).second) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), pair_less);
  return out;
}

ApproxPair dm_join(const Relation& r, std::span<const ApproxPair> ps) {
  const std::size_t n = r.size();
  ElementSet a(n), b(n);
  for (const auto& p : ps) {
    a |= p.lower;
    b |= p.upper;
  }
  return {compose(r, {Op::upper_inv, Op::lower}, a), b};
}

ApproxPair dm_meet(const Relation& r, std::span<const ApproxPair> ps) {
  const std::size_t n = r.size();
  ElementSet a = ElementSet::full(n), b = ElementSet::full(n);
  for (const auto& p : ps) {
    a &= p.lower;
    b &= p.upper;
  }
  return {a, compose(r, {Op::lower_inv, Op::upper}, b)};
}

bool dm_member(const Relation& r, const SetFamily& lower_family,
               const SetFamily& upper_family, const ElementSet& singletons,
               const ApproxPair& p) {
  if (!lower_family.contains(p.lower) || !upper_family.contains(p.upper)) return false;
  if (!compose(r, {Op::upper_inv, Op::upper}, p.lower).subset_of(p.upper)) return false;
  return (p.lower & singletons) == (p.upper & singletons);
}

std::vector<ApproxPair> dmrs_pairs(const Relation& r, const RoughOptions& opts) {
  const std::size_t n = r.size();
  check_cap(n, opts.dm_cap, "completion enumeration");
  const SetFamily lo = SetFamily::of(r, Op::lower);
  const SetFamily up = SetFamily::of(r, Op::upper);
  const ElementSet s = r.singletons();

  std::vector<ApproxPair> out;
  for (const auto& a : lo.members()) {
    const ElementSet closure = compose(r, {Op::upper_inv, Op::upper}, a);
    const ElementSet a_s = a & s;
    for (const auto& b : up.members())
      if (closure.subset_of(b) && a_s == (b & s)) out.push_back({a, b});
  }
  std::sort(out.begin(), out.end(), pair_less);
  return out;
}

FinitePoset poset_from_family(std::span<const ElementSet> members) {
  std::unordered_set<std::uint64_t> seen;
  for (const auto& m : members)
    if (!seen.insert(m.bits()).second)
      throw input_error("duplicate element in family poset");
  return FinitePoset(members.size(), [&](std::size_t a, std::size_t b) {
    return members[a].subset_of(members[b]);
  });
}

FinitePoset poset_from_family(const SetFamily& f) {
  return poset_from_family(std::span<const ElementSet>(f.members()));
}

FinitePoset poset_from_pairs(std::span<const ApproxPair> pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (pairs[i] == pairs[j]) throw input_error("duplicate pair in pair poset");
  return FinitePoset(pairs.size(), [&](std::size_t a, std::size_t b) {
    return pairs[a].leq(pairs[b]);
  });
}

bool neighborhood_join_irreducible(const Relation& r, std::size_t x) {
  ElementSet acc(r.size());
  for (std::size_t y = 0; y < r.size(); ++y)
    if (r[y].proper_subset_of(r[x])) acc |= r[y];
  return acc != r[x];
}

std::uint64_t RoughStructure::pack(const ApproxPair& p) {
  return pack_pair(p, p.lower.width());
}

namespace {

FiniteLattice build_pair_lattice(std::span<const ApproxPair> pairs) {
  return FiniteLattice::from_poset(poset_from_pairs(pairs));
}

}  // namespace

RoughStructure::RoughStructure(Relation r, const RoughOptions& opts)
    : r_(std::move(r)),
      inv_(r_.inverse()),
      opts_(opts),
      singletons_(r_.singletons()),
      rs_(enumerate_rs(r_, opts)),
      dmrs_(dmrs_pairs(r_, opts)),
      lattice_(build_pair_lattice(dmrs_)) {
  families_.reserve(4);
  for (Op op : kAllOps) families_.push_back(SetFamily::of(r_, op));

  // Witnesses: first subset in sweep order realizing each rough pair.
  const std::size_t n = r_.size();
  rs_witness_.resize(rs_.size(), ElementSet(n));
  std::vector<bool> found(rs_.size(), false);
  std::unordered_map<std::uint64_t, std::size_t> rs_index;
  for (std::size_t i = 0; i < rs_.size(); ++i) rs_index.emplace(pack(rs_[i]), i);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    ElementSet x(n, m);
    std::size_t i = rs_index.at(pack(rough_pair(r_, x)));
    if (!found[i]) {
      found[i] = true;
      rs_witness_[i] = x;
    }
  }

  for (std::size_t i = 0; i < dmrs_.size(); ++i) index_.emplace(pack(dmrs_[i]), i);
}

std::optional<std::size_t> RoughStructure::index_of(const ApproxPair& p) const {
  auto [lo, hi] = index_.equal_range(pack(p));
  for (auto it = lo; it != hi; ++it)
    if (dmrs_[it->second] == p) return it->second;
  return std::nullopt;
}

Decomposition decompose(const RoughStructure& s, const ApproxPair& p) {
  if (!s.relation().is_reflexive())
    throw precondition_error("generator decomposition requires a reflexive relation");
  if (!s.member(p))
    throw precondition_error("pair " + to_string(p, s.universe()) +
                             " is not a completion element");
  const Relation& r = s.relation();
  const std::size_t n = r.size();

  Decomposition d;
  p.lower.for_each([&](std::size_t a) {
    ElementSet pt = ElementSet::single(n, a);
    d.point_generators.push_back({compose(r, {Op::upper_inv, Op::lower}, pt),
                                  compose(r, {Op::upper_inv, Op::upper}, pt)});
  });
  lower_inv(r, p.upper).for_each([&](std::size_t b) {
    d.upper_generators.push_back(rough_pair(r, ElementSet::single(n, b)));
  });

  std::vector<ApproxPair> all = d.point_generators;
  all.insert(all.end(), d.upper_generators.begin(), d.upper_generators.end());
  d.verified = dm_join(r, all) == p;
  return d;
}

namespace {

std::vector<ApproxPair> sorted_unique(std::vector<ApproxPair> v) {
  std::sort(v.begin(), v.end(), pair_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

PairSetCheck theorem_join_irreducibles(const RoughStructure& s) {
  if (!s.relation().is_reflexive())
    throw precondition_error("join-irreducible description requires a reflexive relation");
  const Relation& r = s.relation();
  const Relation& inv = s.inverse();
  const std::size_t n = r.size();
  const ElementSet singles = s.singleton_set();

  PairSetCheck c;
  for (std::size_t x = 0; x < n; ++x) {
    ElementSet pt = ElementSet::single(n, x);
    if (neighborhood_join_irreducible(r, x))
      c.formula.push_back({compose(r, {Op::upper_inv, Op::lower}, pt),
                           compose(r, {Op::upper_inv, Op::upper}, pt)});
    if (!singles.contains(x) && neighborhood_join_irreducible(inv, x))
      c.formula.push_back(rough_pair(r, pt));
  }
  c.formula = sorted_unique(std::move(c.formula));

  for (auto j : s.lattice().join_irreducibles()) c.oracle.push_back(s.pair(j));
  c.oracle = sorted_unique(std::move(c.oracle));

  c.agree = c.formula == c.oracle;
  return c;
}

PairSetCheck theorem_atoms(const RoughStructure& s) {
  if (!s.relation().is_reflexive())
    throw precondition_error("atom description requires a reflexive relation");
  const Relation& r = s.relation();
  const std::size_t n = r.size();
  const SetFamily& up_family = s.family(Op::upper);

  // Atoms of the upper family are its minimal nonempty members.
  auto family_atom = [&](const ElementSet& m) {
    if (m.empty()) return false;
    for (const auto& other : up_family.members())
      if (!other.empty() && other.proper_subset_of(m)) return false;
    return true;
  };

  PairSetCheck c;
  for (std::size_t x = 0; x < n; ++x) {
    ElementSet pt = ElementSet::single(n, x);
    if (family_atom(upper(r, pt))) c.formula.push_back(rough_pair(r, pt));
  }
  c.formula = sorted_unique(std::move(c.formula));

  for (auto a : s.lattice().atoms()) c.oracle.push_back(s.pair(a));
  c.oracle = sorted_unique(std::move(c.oracle));

  c.agree = c.formula == c.oracle;
  return c;
}

bool subdirect_check(const RoughStructure& s) {
  const Relation& r = s.relation();
  const auto& pairs = s.dmrs();

  // Closure under the pair formulas, exhaustive over two-element subsets.
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i; j < pairs.size(); ++j) {
      const ApproxPair two[] = {pairs[i], pairs[j]};
      if (!s.member(dm_join(r, two))) return false;
      if (!s.member(dm_meet(r, two))) return false;
    }

  // A deterministic sample of larger subsets.
  std::uint64_t state = 0x2545f4914f6cdd1dull ^ (pairs.size() * 0x9e3779b97f4a7c15ull);
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int trial = 0; trial < 64 && !pairs.empty(); ++trial) {
    std::vector<ApproxPair> subset;
    std::size_t k = 3 + next() % 3;
    for (std::size_t t = 0; t < k; ++t) subset.push_back(pairs[next() % pairs.size()]);
    if (!s.member(dm_join(r, subset))) return false;
    if (!s.member(dm_meet(r, subset))) return false;
  }

  // Surjectivity of the two projections.
  std::unordered_set<std::uint64_t> lowers, uppers;
  for (const auto& p : pairs) {
    lowers.insert(p.lower.bits());
    uppers.insert(p.upper.bits());
  }
  for (const auto& m : s.family(Op::lower).members())
    if (!lowers.count(m.bits())) return false;
  for (const auto& m : s.family(Op::upper).members())
    if (!uppers.count(m.bits())) return false;
  return true;
}

}  // namespace roughlat
