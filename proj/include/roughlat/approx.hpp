#pragma once

#include <array>
#include <initializer_list>
#include <unordered_map>

#include "roughlat/relation.hpp"

namespace roughlat {

/// The four approximation operators. `lower` and `upper` read the relation
/// forwards; `lower_inv` and `upper_inv` read it through the inverse.
enum class Op : unsigned char { lower, upper, lower_inv, upper_inv };

inline constexpr std::array<Op, 4> kAllOps = {Op::lower, Op::upper, Op::lower_inv,
                                              Op::upper_inv};

const char* op_name(Op op);

/// { x | R(x) subset of X }: elements certainly in X.
ElementSet lower(const Relation& r, const ElementSet& x);

/// { x | R(x) meets X }: elements possibly in X.
ElementSet upper(const Relation& r, const ElementSet& x);

/// Same two operators taken along the inverse relation.
ElementSet lower_inv(const Relation& r, const ElementSet& x);
ElementSet upper_inv(const Relation& r, const ElementSet& x);

ElementSet apply(const Relation& r, Op op, const ElementSet& x);

/// Applies the operators left to right, so compose(r, {upper_inv, lower}, x)
/// is the lower approximation of the inverse-upper approximation of x.
ElementSet compose(const Relation& r, std::initializer_list<Op> ops, ElementSet x);

/// All values one approximation operator takes over subsets of the
/// universe, deduplicated and sorted by (cardinality, mask). The two upper
/// families are built as union closures of the point images; the two lower
/// families are their complement images, which is the same set the operator
/// reaches directly.
class SetFamily {
 public:
  static SetFamily of(const Relation& r, Op op);

  Op origin() const { return origin_; }
  std::size_t universe_size() const { return width_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<ElementSet>& members() const { return members_; }
  const ElementSet& member(std::size_t i) const { return members_[i]; }

  bool contains(const ElementSet& s) const { return index_.count(s.bits()) != 0; }

  std::optional<std::size_t> index_of(const ElementSet& s) const {
    auto it = index_.find(s.bits());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  SetFamily(Op origin, std::size_t width, std::vector<ElementSet> members);

  Op origin_;
  std::size_t width_;
  std::vector<ElementSet> members_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace roughlat
