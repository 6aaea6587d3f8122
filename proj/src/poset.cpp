#include "roughlat/poset.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <string>

namespace roughlat {

namespace {

constexpr std::size_t kTableLimit = 1024;       // join/meet tables up to 8 MB
constexpr std::size_t kIsomorphismCap = 64;

std::size_t popcount_row(std::span<const std::uint64_t> row) {
  std::size_t c = 0;
  for (auto w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

template <class F>
void for_each_bit(std::span<const std::uint64_t> row, F&& f) {
  for (std::size_t wi = 0; wi < row.size(); ++wi)
    for (std::uint64_t m = row[wi]; m != 0; m &= m - 1)
      f((wi << 6) + static_cast<std::size_t>(std::countr_zero(m)));
}

}  // namespace

FinitePoset::FinitePoset(std::size_t n,
                         const std::function<bool(std::size_t, std::size_t)>& leq)
    : n_(n), words_((n + 63) / 64) {
  if (n == 0) throw input_error("poset must be nonempty");
  up_.assign(n_ * words_, 0);
  down_.assign(n_ * words_, 0);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (leq(a, b)) {
        up_[a * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
        down_[b * words_ + (a >> 6)] |= std::uint64_t{1} << (a & 63);
      }
  up_size_.resize(n_);
  down_size_.resize(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    up_size_[a] = popcount_row(up_row(a));
    down_size_[a] = popcount_row(down_row(a));
  }

  for (std::size_t a = 0; a < n_; ++a) {
    if (!this->leq(a, a)) throw input_error("order is not reflexive");
    for_each_bit(up_row(a), [&](std::size_t b) {
      if (a != b && this->leq(b, a)) throw input_error("order is not antisymmetric");
      // a <= b requires up(b) within up(a)
      auto ra = up_row(a);
      auto rb = up_row(b);
      for (std::size_t w = 0; w < words_; ++w)
        if (rb[w] & ~ra[w]) throw input_error("order is not transitive");
    });
  }
}

namespace {

// Least upper bound of a and b in p: the member of ub = up(a) & up(b) whose
// up-set is all of ub. Returns n for "none".
std::size_t lub(const FinitePoset& p, std::size_t a, std::size_t b,
                std::vector<std::uint64_t>& scratch) {
  const std::size_t words = p.words();
  auto ra = p.up_row(a);
  auto rb = p.up_row(b);
  scratch.resize(words);
  std::size_t ub_count = 0;
  for (std::size_t w = 0; w < words; ++w) {
    scratch[w] = ra[w] & rb[w];
    ub_count += static_cast<std::size_t>(std::popcount(scratch[w]));
  }
  if (ub_count == 0) return p.size();
  for (std::size_t wi = 0; wi < words; ++wi)
    for (std::uint64_t m = scratch[wi]; m != 0; m &= m - 1) {
      std::size_t c = (wi << 6) + static_cast<std::size_t>(std::countr_zero(m));
      if (p.up_count(c) == ub_count) return c;
    }
  return p.size();
}

std::size_t glb(const FinitePoset& p, std::size_t a, std::size_t b,
                std::vector<std::uint64_t>& scratch) {
  const std::size_t words = p.words();
  auto ra = p.down_row(a);
  auto rb = p.down_row(b);
  scratch.resize(words);
  std::size_t lb_count = 0;
  for (std::size_t w = 0; w < words; ++w) {
    scratch[w] = ra[w] & rb[w];
    lb_count += static_cast<std::size_t>(std::popcount(scratch[w]));
  }
  if (lb_count == 0) return p.size();
  for (std::size_t wi = 0; wi < words; ++wi)
    for (std::uint64_t m = scratch[wi]; m != 0; m &= m - 1) {
      std::size_t c = (wi << 6) + static_cast<std::size_t>(std::countr_zero(m));
      if (p.down_count(c) == lb_count) return c;
    }
  return p.size();
}

}  // namespace

bool is_lattice(const FinitePoset& p, LatticeWitness* witness) {
  std::vector<std::uint64_t> scratch;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (lub(p, a, b, scratch) == p.size()) {
        if (witness) *witness = {a, b, true};
        return false;
      }
      if (glb(p, a, b, scratch) == p.size()) {
        if (witness) *witness = {a, b, false};
        return false;
      }
    }
  return true;
}

FiniteLattice FiniteLattice::from_poset(FinitePoset p) {
  LatticeWitness w;
  if (!is_lattice(p, &w))
    throw precondition_error("poset is not a lattice: elements " + std::to_string(w.a) +
                             " and " + std::to_string(w.b) + " have no " +
                             (w.missing_join ? "least upper" : "greatest lower") + " bound");
  return FiniteLattice(std::move(p));
}

FiniteLattice::FiniteLattice(FinitePoset p) : p_(std::move(p)) {
  const std::size_t n = p_.size();

  for (std::size_t a = 0; a < n; ++a) {
    if (p_.down_count(a) == 1) bottom_ = a;
    if (p_.up_count(a) == 1) top_ = a;
  }

  tabled_ = n <= kTableLimit;
  if (tabled_) {
    join_table_.assign(n * n, 0);
    meet_table_.assign(n * n, 0);
    std::vector<std::uint64_t> scratch;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        std::size_t j = lub(p_, a, b, scratch);
        std::size_t m = glb(p_, a, b, scratch);
        join_table_[a * n + b] = join_table_[b * n + a] = static_cast<std::uint32_t>(j);
        meet_table_[a * n + b] = meet_table_[b * n + a] = static_cast<std::uint32_t>(m);
      }
  }

  // Transitive reduction: b covers a iff nothing sits strictly between.
  lower_covers_.resize(n);
  upper_covers_.resize(n);
  const std::size_t words = p_.words();
  for (std::size_t a = 0; a < n; ++a) {
    auto ua = p_.up_row(a);
    for_each_bit(ua, [&](std::size_t b) {
      if (b == a) return;
      auto db = p_.down_row(b);
      std::size_t between = 0;
      for (std::size_t w = 0; w < words; ++w)
        between += static_cast<std::size_t>(std::popcount(ua[w] & db[w]));
      if (between == 2) {  // only a and b themselves
        covers_.emplace_back(a, b);
        upper_covers_[a].push_back(b);
        lower_covers_[b].push_back(a);
      }
    });
  }
  std::sort(covers_.begin(), covers_.end());
  for (auto& v : lower_covers_) std::sort(v.begin(), v.end());
  for (auto& v : upper_covers_) std::sort(v.begin(), v.end());
}

std::size_t FiniteLattice::bound_from_rows(std::size_t a, std::size_t b,
                                           bool join_side) const {
  std::vector<std::uint64_t> scratch;
  std::size_t r = join_side ? lub(p_, a, b, scratch) : glb(p_, a, b, scratch);
  assert(r < p_.size());
  return r;
}

std::size_t FiniteLattice::join(std::size_t a, std::size_t b) const {
  if (tabled_) return join_table_[a * size() + b];
  return bound_from_rows(a, b, true);
}

std::size_t FiniteLattice::meet(std::size_t a, std::size_t b) const {
  if (tabled_) return meet_table_[a * size() + b];
  return bound_from_rows(a, b, false);
}

std::size_t FiniteLattice::join_all(std::span<const std::size_t> xs) const {
  std::size_t r = bottom_;
  for (auto x : xs) r = join(r, x);
  return r;
}

std::size_t FiniteLattice::meet_all(std::span<const std::size_t> xs) const {
  std::size_t r = top_;
  for (auto x : xs) r = meet(r, x);
  return r;
}

std::vector<std::size_t> FiniteLattice::join_irreducibles() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (lower_covers_[x].size() == 1) out.push_back(x);
  return out;
}

std::vector<std::size_t> FiniteLattice::join_primes() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < size(); ++p) {
    if (p == bottom_) continue;
    std::size_t acc = bottom_;
    for (std::size_t x = 0; x < size(); ++x)
      if (!leq(p, x)) acc = join(acc, x);
    if (!leq(p, acc)) out.push_back(p);
  }
  return out;
}

std::vector<std::size_t> FiniteLattice::atoms() const { return upper_covers_[bottom_]; }

bool FiniteLattice::is_distributive(Triple* witness) const {
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) {
          if (witness) *witness = {x, y, z};
          return false;
        }
  return true;
}

bool FiniteLattice::is_spatial() const {
  const auto ji = join_irreducibles();
  for (std::size_t x = 0; x < size(); ++x) {
    std::size_t acc = bottom_;
    for (auto j : ji)
      if (leq(j, x)) acc = join(acc, j);
    if (acc != x) return false;
  }
  return true;
}

std::optional<std::size_t> FiniteLattice::pseudocomplement(std::size_t x) const {
  std::size_t acc = bottom_;
  for (std::size_t y = 0; y < size(); ++y)
    if (meet(x, y) == bottom_) acc = join(acc, y);
  if (meet(x, acc) == bottom_) return acc;
  return std::nullopt;
}

std::optional<std::size_t> FiniteLattice::dual_pseudocomplement(std::size_t x) const {
  std::size_t acc = top_;
  for (std::size_t y = 0; y < size(); ++y)
    if (join(x, y) == top_) acc = meet(acc, y);
  if (join(x, acc) == top_) return acc;
  return std::nullopt;
}

std::optional<std::size_t> FiniteLattice::relative_pseudocomplement(std::size_t a,
                                                                    std::size_t b) const {
  std::size_t acc = bottom_;
  for (std::size_t x = 0; x < size(); ++x)
    if (leq(meet(a, x), b)) acc = join(acc, x);
  if (leq(meet(a, acc), b)) return acc;
  return std::nullopt;
}

std::optional<FiniteLattice::Pentagon> FiniteLattice::find_pentagon() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      if (a == c || !leq(a, c)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (leq(b, c) || leq(a, b)) continue;  // b incomparable to both a and c
        if (meet(a, b) == meet(c, b) && join(a, b) == join(c, b))
          return Pentagon{meet(a, b), a, c, b, join(a, b)};
      }
    }
  return std::nullopt;
}

namespace {

struct NodeSignature {
  std::size_t up, down, lower_covers, upper_covers, height, depth;
  auto operator<=>(const NodeSignature&) const = default;
};

std::vector<std::size_t> heights(const FiniteLattice& l) {
  // Longest chain from below, computed in order of down-set size.
  std::vector<std::size_t> order(l.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return l.poset().down_count(a) < l.poset().down_count(b);
  });
  std::vector<std::size_t> h(l.size(), 0);
  for (auto x : order)
    for (auto c : l.lower_covers(x)) h[x] = std::max(h[x], h[c] + 1);
  return h;
}

std::vector<NodeSignature> signatures(const FiniteLattice& l) {
  auto h = heights(l);
  std::vector<std::size_t> order(l.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return l.poset().up_count(a) < l.poset().up_count(b);
  });
  std::vector<std::size_t> d(l.size(), 0);
  for (auto x : order)
    for (auto c : l.upper_covers(x)) d[x] = std::max(d[x], d[c] + 1);

  std::vector<NodeSignature> sig(l.size());
  for (std::size_t x = 0; x < l.size(); ++x)
    sig[x] = {l.poset().up_count(x), l.poset().down_count(x), l.lower_covers(x).size(),
              l.upper_covers(x).size(), h[x], d[x]};
  return sig;
}

bool isomorphic_search(const FinitePoset& a, const FinitePoset& b,
                       const std::vector<NodeSignature>& sa,
                       const std::vector<NodeSignature>& sb) {
  const std::size_t n = a.size();
  // Candidate lists per node of a; assign most-constrained first.
  std::vector<std::vector<std::size_t>> cand(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (sa[x] == sb[y]) cand[x].push_back(y);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return cand[x].size() < cand[y].size(); });

  std::vector<std::size_t> img(n, n);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
    if (k == n) return true;
    std::size_t x = order[k];
    for (std::size_t y : cand[x]) {
      if (used[y]) continue;
      bool ok = true;
      for (std::size_t k2 = 0; k2 < k && ok; ++k2) {
        std::size_t x2 = order[k2];
        ok = (a.leq(x, x2) == b.leq(y, img[x2])) && (a.leq(x2, x) == b.leq(img[x2], y));
      }
      if (!ok) continue;
      img[x] = y;
      used[y] = true;
      if (go(k + 1)) return true;
      used[y] = false;
      img[x] = n;
    }
    return false;
  };
  return go(0);
}

}  // namespace

bool are_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > kIsomorphismCap)
    throw capacity_error("isomorphism search capped at " +
                         std::to_string(kIsomorphismCap) + " elements");
  auto sa = signatures(a);
  auto sb = signatures(b);
  auto ma = sa;
  auto mb = sb;
  std::sort(ma.begin(), ma.end());
  std::sort(mb.begin(), mb.end());
  if (ma != mb) return false;
  return isomorphic_search(a.poset(), b.poset(), sa, sb);
}

bool are_isomorphic(const FinitePoset& a, const FinitePoset& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > kIsomorphismCap)
    throw capacity_error("isomorphism search capped at " +
                         std::to_string(kIsomorphismCap) + " elements");
  // Degree signatures only; covers are a lattice notion, so keep it coarse.
  std::vector<NodeSignature> sa(a.size()), sb(b.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    sa[x] = {a.up_count(x), a.down_count(x), 0, 0, 0, 0};
  for (std::size_t y = 0; y < b.size(); ++y)
    sb[y] = {b.up_count(y), b.down_count(y), 0, 0, 0, 0};
  auto ma = sa;
  auto mb = sb;
  std::sort(ma.begin(), ma.end());
  std::sort(mb.begin(), mb.end());
  if (ma != mb) return false;
  return isomorphic_search(a, b, sa, sb);
}

FiniteLattice chain(std::size_t k) {
  if (k == 0) throw input_error("chain needs at least one element");
  return FiniteLattice::from_poset(
      FinitePoset(k, [](std::size_t a, std::size_t b) { return a <= b; }));
}

FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b) {
  const std::size_t na = a.size(), nb = b.size();
  if (na * nb > 4096) throw capacity_error("product lattice would exceed 4096 elements");
  return FiniteLattice::from_poset(
      FinitePoset(na * nb, [&](std::size_t x, std::size_t y) {
        return a.leq(x / nb, y / nb) && b.leq(x % nb, y % nb);
      }));
}

}  // namespace roughlat
