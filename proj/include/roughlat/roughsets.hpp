#pragma once

#include <span>
#include <unordered_map>

#include "roughlat/approx.hpp"
#include "roughlat/poset.hpp"

namespace roughlat {

/// A lower/upper approximation pair (A, B).
struct ApproxPair {
  ElementSet lower, upper;

  bool operator==(const ApproxPair&) const = default;

  /// Coordinatewise inclusion.
  bool leq(const ApproxPair& o) const {
    return lower.subset_of(o.lower) && upper.subset_of(o.upper);
  }
};

/// Deterministic pair order: |A|, A mask, |B|, B mask.
bool pair_less(const ApproxPair& a, const ApproxPair& b);

std::string to_string(const ApproxPair& p, const Universe& u);

struct RoughOptions {
  std::size_t rs_cap = 16;  // stages that sweep all 2^n subsets
  std::size_t dm_cap = 12;  // the family-product filter stage
};

/// (lower approximation, upper approximation) of X.
ApproxPair rough_pair(const Relation& r, const ElementSet& x);

/// Whether X and Y have the same rough pair.
bool rough_equal(const Relation& r, const ElementSet& x, const ElementSet& y);

/// All rough pairs, deduplicated, in deterministic order.
std::vector<ApproxPair> enumerate_rs(const Relation& r, const RoughOptions& opts = {});

/// Join in the completion: ((union of lowers) under upper_inv then lower,
/// union of uppers). The empty join is the bottom pair.
ApproxPair dm_join(const Relation& r, std::span<const ApproxPair> ps);

/// Meet in the completion: (intersection of lowers, (intersection of
/// uppers) under lower_inv then upper). The empty meet is the top pair.
ApproxPair dm_meet(const Relation& r, std::span<const ApproxPair> ps);

/// Membership predicate of the completion: (A,B) with A a lower value, B an
/// upper value, the upper closure of A inside B, and A, B agreeing on the
/// singleton elements.
bool dm_member(const Relation& r, const SetFamily& lower_family,
               const SetFamily& upper_family, const ElementSet& singletons,
               const ApproxPair& p);

/// The completion as a plain pair list (no lattice); deterministic order.
std::vector<ApproxPair> dmrs_pairs(const Relation& r, const RoughOptions& opts = {});

/// Order by inclusion. Throws input_error on duplicate members.
FinitePoset poset_from_family(std::span<const ElementSet> members);
FinitePoset poset_from_family(const SetFamily& f);

/// Coordinatewise order. Throws input_error on duplicate pairs.
FinitePoset poset_from_pairs(std::span<const ApproxPair> pairs);

/// Neighborhood-level join-irreducibility: R(x) differs from the union of
/// the neighborhoods strictly inside it.
bool neighborhood_join_irreducible(const Relation& r, std::size_t x);

/// RS, its Dedekind-MacNeille completion, the four approximation families
/// and the completion lattice, bundled for the downstream algebra layer.
///
/// Everything is immutable once constructed and safe to share across
/// threads.
class RoughStructure {
 public:
  explicit RoughStructure(Relation r, const RoughOptions& opts = {});

  const Relation& relation() const { return r_; }
  const Relation& inverse() const { return inv_; }
  const RoughOptions& options() const { return opts_; }
  const Universe& universe() const { return r_.universe(); }

  const SetFamily& family(Op op) const { return families_[static_cast<std::size_t>(op)]; }
  const ElementSet& singleton_set() const { return singletons_; }

  const std::vector<ApproxPair>& rs() const { return rs_; }
  /// First subset (in mask order) realizing rs()[i]; a witness, not canonical.
  const ElementSet& rs_witness(std::size_t i) const { return rs_witness_[i]; }

  const std::vector<ApproxPair>& dmrs() const { return dmrs_; }
  const ApproxPair& pair(std::size_t i) const { return dmrs_[i]; }
  const FiniteLattice& lattice() const { return lattice_; }

  std::optional<std::size_t> index_of(const ApproxPair& p) const;
  bool member(const ApproxPair& p) const { return index_of(p).has_value(); }

  std::size_t bottom() const { return lattice_.bottom(); }
  std::size_t top() const { return lattice_.top(); }

 private:
  Relation r_;
  Relation inv_;
  RoughOptions opts_;
  std::vector<SetFamily> families_;
  ElementSet singletons_;
  std::vector<ApproxPair> rs_;
  std::vector<ElementSet> rs_witness_;
  std::vector<ApproxPair> dmrs_;
  FiniteLattice lattice_;
  // Packed pair -> candidate indices; lookups re-compare the pair, so hash
  // collisions on wide universes stay harmless.
  std::unordered_multimap<std::uint64_t, std::size_t> index_;

  static std::uint64_t pack(const ApproxPair& p);
};

/// Generator decomposition of a completion element: point generators from
/// the members of A and upper generators from the members of the inverse
/// lower approximation of B. Their join must reproduce the pair.
struct Decomposition {
  std::vector<ApproxPair> point_generators;
  std::vector<ApproxPair> upper_generators;
  bool verified = false;
};

/// Requires a reflexive relation and a completion member.
Decomposition decompose(const RoughStructure& s, const ApproxPair& p);

/// A closed-form set checked against the generic lattice computation.
struct PairSetCheck {
  std::vector<ApproxPair> formula;
  std::vector<ApproxPair> oracle;
  bool agree = false;
};

/// Join-irreducibles of the completion: closed form from neighborhood-level
/// irreducibility versus unique-lower-cover elements of the lattice.
/// Requires a reflexive relation.
PairSetCheck theorem_join_irreducibles(const RoughStructure& s);

/// Atoms of the completion: closed form from the atoms of the upper family
/// versus covers of the lattice bottom. Requires a reflexive relation.
PairSetCheck theorem_atoms(const RoughStructure& s);

/// The completion is closed under the pair join/meet formulas and projects
/// onto both families.
bool subdirect_check(const RoughStructure& s);

}  // namespace roughlat
