#pragma once

#include <array>

#include "roughlat/roughsets.hpp"

namespace roughlat {

/// Structured counterexample attached to a failed law or flag. The text is
/// rendered deterministically so failing runs reproduce byte for byte.
struct Witness {
  std::string what;
  std::vector<ApproxPair> pairs;       // lattice elements involved
  std::vector<std::string> labels;     // universe elements involved
};

struct Flag {
  bool value = false;
  std::optional<Witness> witness;  // present when value is false
};

/// De Morgan negation of a completion element: swap coordinates and
/// complement both. Total on the completion; the membership of the result
/// is still verified and a failure raises defect_error.
ApproxPair negation(const RoughStructure& s, const ApproxPair& p);

/// First failing Kleene-algebra law on the completion, or nullopt when the
/// lattice is distributive and the negation satisfies involution, both
/// De Morgan laws and the Kleene inequality.
std::optional<Witness> kleene_violation(const RoughStructure& s);

Flag check_kleene(const RoughStructure& s);

/// Negation table, join-irreducibles and the g-map of a distributive
/// completion. g(j) is the least element not below the negation of j; on
/// these lattices it is again join-irreducible, an antitone involution of
/// the irreducibles, and comparable with its argument. Those three facts
/// are re-verified during construction and violations raise defect_error.
class KleeneStructure {
 public:
  /// Throws precondition_error carrying the first law violation when the
  /// completion is not a distributive Kleene algebra.
  static KleeneStructure build(const RoughStructure& s);

  std::size_t neg(std::size_t x) const { return neg_[x]; }
  const std::vector<std::size_t>& negation_table() const { return neg_; }

  const std::vector<std::size_t>& irreducibles() const { return irr_; }
  bool is_irreducible(std::size_t x) const { return irr_pos_[x] != npos; }

  /// g of a join-irreducible element (by lattice index).
  std::size_t g(std::size_t j) const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> neg_;
  std::vector<std::size_t> irr_;
  std::vector<std::size_t> irr_pos_;  // lattice index -> position in irr_, or npos
  std::vector<std::size_t> g_;        // parallel to irr_
};

/// The three-way split of the join-irreducibles by comparing j with g(j),
/// cross-checked against the closed forms built from neighborhoods and
/// singletons.
struct JPartition {
  std::vector<std::size_t> minus, zero, plus;  // lattice indices, ascending
  bool closed_form_agrees = false;
};

JPartition partition_irreducibles(const RoughStructure& s, const KleeneStructure& k);

/// For a member (empty, {x}-upper) of the minus class, a universe element z
/// in the core of the inverse neighborhood of x with g(pair) equal to the
/// pair generated by z. The connection is recomputed and any discrepancy
/// raises defect_error.
std::size_t g_core_witness(const RoughStructure& s, const KleeneStructure& k,
                           const ApproxPair& j_minus);

/// Three equivalent readings of "R(x) is completely join-prime in the
/// inverse-upper family": lattice-level primality, the non-covering test,
/// and nonemptiness of the core. Disagreement raises defect_error.
bool char_join_prime(const Relation& r, std::size_t x);
std::vector<bool> char_join_prime_all(const Relation& r);

/// Neighborhood formula for "the completion is spatial and completely
/// distributive": every neighborhood is the union of the nonempty-core
/// neighborhoods inside it, in both directions.
bool spatial_cd_criterion(const Relation& r);

struct BoolCheck {
  bool formula = false, oracle = false, agree = false;
};

/// spatial_cd_criterion against the lattice-level spatial and distributive
/// flags of the completion.
BoolCheck spatial_cd_agreement(const RoughStructure& s);

/// The dual order-isomorphism between the join-prime neighborhoods of the
/// two directions, realized through cores. Checks well-definedness, order
/// reversal and mutual inversion; failures raise defect_error.
struct DualIso {
  std::vector<std::pair<ElementSet, ElementSet>> phi;  // R(x) -> inverse nbhd, sorted
  std::vector<std::pair<ElementSet, ElementSet>> psi;
  bool dual_isomorphism = false;
};

DualIso phi_psi(const Relation& r);

/// Whenever p,q are join-irreducible with p,q <= g(p),g(q), some
/// join-irreducible k has p,q <= k <= g(p),g(q). The witness is the first
/// failing (p,q) in lattice order.
struct InterpolationResult {
  bool value = false;
  std::optional<std::pair<ApproxPair, ApproxPair>> witness;
};

InterpolationResult interpolation_property(const RoughStructure& s,
                                           const KleeneStructure& k);

/// Neighborhood-level condition equivalent to the completion being a Nelson
/// algebra: any two join-irreducible upper point images of non-singletons
/// with a common upper bound of that shape have a join-irreducible one.
/// Requires the spatial + completely distributive hypothesis and raises
/// precondition_error without it.
struct NelsonResult {
  bool value = false;
  std::optional<std::array<std::string, 3>> witness;  // labels x, y, u
};

NelsonResult nelson_characterization(const RoughStructure& s);

/// All cores in both directions nonempty; a sufficient condition for the
/// Nelson structure.
bool cores_nonempty_sufficient(const Relation& r);

/// a -> b := a => (~a v b), with => the relative pseudocomplement.
/// Requires a distributive completion.
std::size_t weak_implication(const RoughStructure& s, const KleeneStructure& k,
                             std::size_t a, std::size_t b);

/// Pseudocomplement and dual pseudocomplement diagnostics on a distributive
/// completion: both Stone identities plus the regularity inequality.
struct StoneReport {
  bool value = false;
  bool stone = false, dual_stone = false, regular = false;
  std::optional<Witness> witness;
};

StoneReport regular_double_stone(const RoughStructure& s);

/// Aggregate flags of the algebra layer.
struct AlgebraReport {
  Flag distributive, spatial, de_morgan, kleene, quasi_nelson, nelson,
      regular_double_stone;
  std::optional<StoneReport> stone_detail;
  std::optional<InterpolationResult> interpolation;
};

AlgebraReport algebra_report(const RoughStructure& s);

/// The full pipeline on a relation and its inverse. The distributive and
/// spatial flags must agree between the two directions, and when all cores
/// are nonempty both completions must be Nelson algebras.
struct InverseComparison {
  AlgebraReport forward, backward;
  bool flags_agree = false;
  bool nelson_consistent = false;
};

InverseComparison inverse_relation_report(const Relation& r, const RoughOptions& opts = {});

}  // namespace roughlat
