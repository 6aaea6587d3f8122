#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "roughlat/errors.hpp"

namespace roughlat {

/// Hard limit on universe size; element sets are single 64-bit masks.
inline constexpr std::size_t kMaxUniverse = 64;

inline constexpr std::uint64_t low_mask(std::size_t k) {
  return k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
}

/// An ordered list of distinct element labels. Indices 0..n-1 follow the
/// order in which the labels were given, and every set is rendered in this
/// order, so output is deterministic for a fixed input.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw input_error("universe must contain at least one element");
    if (labels_.size() > kMaxUniverse)
      throw capacity_error("universe size " + std::to_string(labels_.size()) +
                           " exceeds the hard limit of " + std::to_string(kMaxUniverse));
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (!index_.emplace(labels_[i], i).second)
        throw input_error("duplicate universe label '" + labels_[i] + "'");
  }

  /// The universe {"1", "2", ..., "n"}.
  static Universe numbered(std::size_t n) {
    std::vector<std::string> ls;
    ls.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) ls.push_back(std::to_string(i));
    return Universe(std::move(ls));
  }

  std::size_t size() const { return labels_.size(); }

  const std::string& label(std::size_t i) const {
    assert(i < labels_.size());
    return labels_[i];
  }

  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<std::size_t> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Index of a label that must exist.
  std::size_t at(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw input_error("unknown element label '" + std::string(label) + "'");
  }

  bool operator==(const Universe& o) const { return labels_ == o.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A subset of a universe, stored as a bit mask over element indices.
/// The width travels with the set so complements stay inside the universe.
/// Equality is bitwise; sets of different widths never compare equal.
class ElementSet {
 public:
  ElementSet() = default;

  explicit ElementSet(std::size_t width, std::uint64_t bits = 0)
      : bits_(bits), width_(static_cast<std::uint32_t>(width)) {
    assert(width <= kMaxUniverse);
    assert((bits & ~low_mask(width)) == 0);
  }

  static ElementSet full(std::size_t width) { return ElementSet(width, low_mask(width)); }

  static ElementSet single(std::size_t width, std::size_t i) {
    assert(i < width);
    return ElementSet(width, std::uint64_t{1} << i);
  }

  std::size_t width() const { return width_; }
  std::uint64_t bits() const { return bits_; }

  bool contains(std::size_t i) const {
    assert(i < width_);
    return (bits_ >> i) & 1;
  }

  void insert(std::size_t i) {
    assert(i < width_);
    bits_ |= std::uint64_t{1} << i;
  }

  void erase(std::size_t i) {
    assert(i < width_);
    bits_ &= ~(std::uint64_t{1} << i);
  }

  std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }

  bool subset_of(const ElementSet& o) const {
    assert(width_ == o.width_);
    return (bits_ & ~o.bits_) == 0;
  }

  bool proper_subset_of(const ElementSet& o) const {
    return bits_ != o.bits_ && subset_of(o);
  }

  bool intersects(const ElementSet& o) const {
    assert(width_ == o.width_);
    return (bits_ & o.bits_) != 0;
  }

  ElementSet complement() const { return ElementSet(width_, ~bits_ & low_mask(width_)); }

  ElementSet& operator|=(const ElementSet& o) {
    assert(width_ == o.width_);
    bits_ |= o.bits_;
    return *this;
  }

  ElementSet& operator&=(const ElementSet& o) {
    assert(width_ == o.width_);
    bits_ &= o.bits_;
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  /// Set difference.
  friend ElementSet operator-(const ElementSet& a, const ElementSet& b) {
    assert(a.width_ == b.width_);
    return ElementSet(a.width_, a.bits_ & ~b.bits_);
  }

  bool operator==(const ElementSet&) const = default;

  /// Deterministic family order: by cardinality, then by mask value.
  static bool family_less(const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits_ < b.bits_;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::uint64_t m = bits_; m != 0; m &= m - 1)
      out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t m = bits_; m != 0; m &= m - 1)
      f(static_cast<std::size_t>(std::countr_zero(m)));
  }

 private:
  std::uint64_t bits_ = 0;
  std::uint32_t width_ = 0;
};

/// Renders "{a,b,c}" with members in label order.
inline std::string to_string(const ElementSet& s, const Universe& u) {
  assert(s.width() == u.size());
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += u.label(i);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace roughlat
