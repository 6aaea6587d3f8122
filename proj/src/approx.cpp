#include "roughlat/approx.hpp"

#include <algorithm>
#include <unordered_set>

namespace roughlat {

const char* op_name(Op op) {
  switch (op) {
    case Op::lower: return "lower";
    case Op::upper: return "upper";
    case Op::lower_inv: return "lower_inv";
    case Op::upper_inv: return "upper_inv";
  }
  return "?";
}

ElementSet lower(const Relation& r, const ElementSet& x) {
  ElementSet out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i].subset_of(x)) out.insert(i);
  return out;
}

ElementSet upper(const Relation& r, const ElementSet& x) {
  ElementSet out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i].intersects(x)) out.insert(i);
  return out;
}

ElementSet upper_inv(const Relation& r, const ElementSet& x) {
  // Union of the neighborhoods of the members of x.
  ElementSet out(r.size());
  x.for_each([&](std::size_t i) { out |= r[i]; });
  return out;
}

ElementSet lower_inv(const Relation& r, const ElementSet& x) {
  // x is in the result iff every neighborhood containing x lies inside x's
  // side, i.e. x avoids the neighborhoods of the non-members.
  ElementSet bad(r.size());
  x.complement().for_each([&](std::size_t i) { bad |= r[i]; });
  return bad.complement();
}

ElementSet apply(const Relation& r, Op op, const ElementSet& x) {
  switch (op) {
    case Op::lower: return lower(r, x);
    case Op::upper: return upper(r, x);
    case Op::lower_inv: return lower_inv(r, x);
    case Op::upper_inv: return upper_inv(r, x);
  }
  return x;
}

ElementSet compose(const Relation& r, std::initializer_list<Op> ops, ElementSet x) {
  for (Op op : ops) x = apply(r, op, x);
  return x;
}

SetFamily::SetFamily(Op origin, std::size_t width, std::vector<ElementSet> members)
    : origin_(origin), width_(width), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), ElementSet::family_less);
  for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i].bits(), i);
}

namespace {

// Union closure of the generators plus the empty set. Worklist fixpoint;
// the worst case of 2^n members is accepted and guarded by the caller caps.
std::vector<ElementSet> union_closure(std::size_t n, const std::vector<ElementSet>& gens) {
  std::vector<ElementSet> out;
  std::unordered_set<std::uint64_t> seen;
  auto push = [&](const ElementSet& s) {
    if (seen.insert(s.bits()).second) out.push_back(s);
  };
  push(ElementSet(n));
  for (const auto& g : gens) push(g);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const ElementSet m = out[i];
    for (const auto& g : gens) push(m | g);
  }
  return out;
}

}  // namespace

SetFamily SetFamily::of(const Relation& r, Op op) {
  const std::size_t n = r.size();
  switch (op) {
    case Op::upper_inv: {
      std::vector<ElementSet> gens;
      gens.reserve(n);
      for (std::size_t x = 0; x < n; ++x) gens.push_back(r[x]);
      return SetFamily(op, n, union_closure(n, gens));
    }
    case Op::upper: {
      const Relation inv = r.inverse();
      std::vector<ElementSet> gens;
      gens.reserve(n);
      for (std::size_t x = 0; x < n; ++x) gens.push_back(inv[x]);
      return SetFamily(op, n, union_closure(n, gens));
    }
    case Op::lower: {
      // Lower values are exactly the complements of the upper values.
      SetFamily up = of(r, Op::upper);
      std::vector<ElementSet> members;
      members.reserve(up.size());
      for (const auto& m : up.members()) members.push_back(m.complement());
      return SetFamily(op, n, std::move(members));
    }
    case Op::lower_inv: {
      SetFamily up = of(r, Op::upper_inv);
      std::vector<ElementSet> members;
      members.reserve(up.size());
      for (const auto& m : up.members()) members.push_back(m.complement());
      return SetFamily(op, n, std::move(members));
    }
  }
  throw error("unreachable");
}

}  // namespace roughlat
