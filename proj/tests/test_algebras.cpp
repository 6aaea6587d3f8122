#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "roughlat/algebras.hpp"
#include "support/fixtures.hpp"
#include "support/random_relations.hpp"

using namespace roughlat;
using namespace roughlat::testing;

namespace {

std::vector<ApproxPair> pairs_at(const RoughStructure& s,
                                 const std::vector<std::size_t>& idx) {
  std::vector<ApproxPair> v;
  for (auto i : idx) v.push_back(s.pair(i));
  std::sort(v.begin(), v.end(), pair_less);
  return v;
}

std::vector<ApproxPair> sorted_pairs(std::vector<ApproxPair> v) {
  std::sort(v.begin(), v.end(), pair_less);
  return v;
}

}  // namespace

TEST_CASE("negation swaps and complements the coordinates") {
  RoughStructure sb(fixture_b());
  CHECK(negation(sb, ap(4, {}, {1, 2, 4})) == ap(4, {3}, {1, 2, 3, 4}));
  CHECK(negation(sb, ap(4, {}, {})) == ap(4, {1, 2, 3, 4}, {1, 2, 3, 4}));

  RoughStructure sa(fixture_a());
  CHECK(negation(sa, ap(3, {3}, {1, 3})) == ap(3, {2}, {1, 2}));
  CHECK_THROWS_AS(negation(sa, ap(3, {1}, {1, 2})), precondition_error);

  // Involution and totality, also on non-reflexive relations.
  std::mt19937_64 rng(7401);
  for (int t = 0; t < 60; ++t) {
    RoughStructure s(random_relation(rng, 1 + rng() % 6, rng() % 2 == 0, 10 + rng() % 70));
    for (const auto& p : s.dmrs()) CHECK(negation(s, negation(s, p)) == p);
  }
}

TEST_CASE("Kleene check on the fixtures") {
  CHECK(check_kleene(RoughStructure(fixture_a())).value);
  CHECK(check_kleene(RoughStructure(fixture_b())).value);

  Flag c = check_kleene(RoughStructure(fixture_c()));
  CHECK_FALSE(c.value);
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->pairs.size() == 3);  // a distributivity triple

  CHECK_THROWS_AS(KleeneStructure::build(RoughStructure(fixture_c())),
                  precondition_error);
}

TEST_CASE("a distributive completion of a reflexive relation is always Kleene") {
  std::mt19937_64 rng(7402);
  for (int t = 0; t < 80; ++t) {
    RoughStructure s(random_reflexive(rng, 1 + rng() % 6));
    if (s.lattice().is_distributive()) CHECK_FALSE(kleene_violation(s).has_value());
  }
}

TEST_CASE("g values on the non-Nelson fixture") {
  RoughStructure s(fixture_b());
  KleeneStructure k = KleeneStructure::build(s);

  auto g_of = [&](const ApproxPair& p) { return s.pair(k.g(*s.index_of(p))); };
  CHECK(g_of(ap(4, {}, {4})) == ap(4, {3, 4}, {1, 2, 3, 4}));
  CHECK(g_of(ap(4, {}, {1, 2})) == ap(4, {1}, {1, 2, 4}));
  CHECK(g_of(ap(4, {3}, {2, 3, 4})) == ap(4, {3}, {2, 3, 4}));

  CHECK_THROWS_AS(k.g(s.bottom()), precondition_error);
}

TEST_CASE("g is an antitone involution comparable with its argument") {
  std::mt19937_64 rng(7403);
  for (int t = 0; t < 60; ++t) {
    RoughStructure s(random_reflexive(rng, 1 + rng() % 6));
    if (!check_kleene(s).value) continue;
    KleeneStructure k = KleeneStructure::build(s);
    const FiniteLattice& l = s.lattice();
    for (auto p : k.irreducibles()) {
      CHECK(k.g(k.g(p)) == p);
      CHECK((l.leq(p, k.g(p)) || l.leq(k.g(p), p)));
      for (auto q : k.irreducibles())
        if (l.leq(p, q)) CHECK(l.leq(k.g(q), k.g(p)));
    }
  }
}

TEST_CASE("partition of the irreducibles") {
  RoughStructure sb(fixture_b());
  KleeneStructure kb = KleeneStructure::build(sb);
  JPartition pb = partition_irreducibles(sb, kb);
  CHECK(pb.closed_form_agrees);
  CHECK(pairs_at(sb, pb.minus) == sorted_pairs({ap(4, {}, {4}), ap(4, {}, {1, 2})}));
  CHECK(pairs_at(sb, pb.zero) == sorted_pairs({ap(4, {3}, {2, 3, 4})}));
  CHECK(pairs_at(sb, pb.plus) ==
        sorted_pairs({ap(4, {3, 4}, {1, 2, 3, 4}), ap(4, {1}, {1, 2, 4})}));

  RoughStructure sa(fixture_a());
  KleeneStructure ka = KleeneStructure::build(sa);
  JPartition pa = partition_irreducibles(sa, ka);
  CHECK(pa.closed_form_agrees);
  CHECK(pairs_at(sa, pa.minus) == sorted_pairs({ap(3, {}, {1, 3})}));
  CHECK(pairs_at(sa, pa.zero) == sorted_pairs({ap(3, {2}, {1, 2})}));
  CHECK(pairs_at(sa, pa.plus) == sorted_pairs({ap(3, {3}, {1, 3})}));

  RoughStructure sid(identity_rel(3));
  KleeneStructure kid = KleeneStructure::build(sid);
  JPartition pid = partition_irreducibles(sid, kid);
  CHECK(pid.closed_form_agrees);
  CHECK(pid.minus.empty());
  CHECK(pid.plus.empty());
  CHECK(pid.zero.size() == kid.irreducibles().size());
}

TEST_CASE("the minus class is exactly the self-negating irreducibles") {
  std::mt19937_64 rng(7404);
  for (int t = 0; t < 60; ++t) {
    RoughStructure s(random_reflexive(rng, 1 + rng() % 6));
    if (!check_kleene(s).value) continue;
    KleeneStructure k = KleeneStructure::build(s);
    JPartition part = partition_irreducibles(s, k);
    CHECK(part.closed_form_agrees);
    std::vector<std::size_t> below_neg;
    for (auto j : k.irreducibles())
      if (s.lattice().leq(j, k.neg(j))) below_neg.push_back(j);
    CHECK(below_neg == part.minus);
  }
}

TEST_CASE("core elements generate g on the minus class") {
  RoughStructure sb(fixture_b());
  KleeneStructure kb = KleeneStructure::build(sb);
  CHECK(g_core_witness(sb, kb, ap(4, {}, {1, 2})) == 0);  // element "1"
  CHECK(g_core_witness(sb, kb, ap(4, {}, {4})) == 3);     // element "4"
  CHECK_THROWS_AS(g_core_witness(sb, kb, ap(4, {3}, {2, 3, 4})), precondition_error);

  RoughStructure sa(fixture_a());
  KleeneStructure ka = KleeneStructure::build(sa);
  CHECK(g_core_witness(sa, ka, ap(3, {}, {1, 3})) == 2);  // element "3"

  std::mt19937_64 rng(7405);
  for (int t = 0; t < 40; ++t) {
    RoughStructure s(random_reflexive(rng, 1 + rng() % 6));
    if (!check_kleene(s).value) continue;
    KleeneStructure k = KleeneStructure::build(s);
    for (auto j : partition_irreducibles(s, k).minus)
      g_core_witness(s, k, s.pair(j));  // throws on any discrepancy
  }
}

TEST_CASE("three-way join-prime characterization") {
  const Relation b = fixture_b();
  CHECK_FALSE(char_join_prime(b, 1));  // element "2"
  CHECK(char_join_prime(b, 3));        // element "4"
  CHECK(char_join_prime(b, 0));
  CHECK(char_join_prime(b, 2));

  const Relation c = fixture_c();
  CHECK_FALSE(char_join_prime(c, 1));  // element "2"
  CHECK(char_join_prime(c, 0));

  std::mt19937_64 rng(7406);
  for (int t = 0; t < 80; ++t) {
    Relation r = random_relation(rng, 1 + rng() % 7, rng() % 2 == 0, 10 + rng() % 70);
    auto flags = char_join_prime_all(r);  // throws on any three-way mismatch
    for (std::size_t x = 0; x < r.size(); ++x)
      CHECK(flags[x] == !r.core(x).empty());
  }
}

TEST_CASE("spatial and completely distributive, by formula and by lattice") {
  CHECK(spatial_cd_criterion(fixture_a()));
  CHECK(spatial_cd_criterion(fixture_b()));
  CHECK_FALSE(spatial_cd_criterion(fixture_c()));
  CHECK(spatial_cd_criterion(identity_rel(4)));

  std::mt19937_64 rng(7407);
  for (int t = 0; t < 60; ++t) {
    RoughStructure s(random_relation(rng, 1 + rng() % 6, rng() % 2 == 0, 10 + rng() % 70));
    CHECK(spatial_cd_agreement(s).agree);
  }
}

TEST_CASE("family flags transfer to the completion") {
  std::mt19937_64 rng(7408);
  for (int t = 0; t < 50; ++t) {
    RoughStructure s(random_relation(rng, 1 + rng() % 6, rng() % 2 == 0, 10 + rng() % 70));
    const bool dm_dist = s.lattice().is_distributive();
    for (Op op : kAllOps) {
      FiniteLattice fl = FiniteLattice::from_poset(poset_from_family(s.family(op)));
      CHECK(fl.is_distributive() == dm_dist);
    }
    // Spatiality of the completion versus the two upper families.
    FiniteLattice up = FiniteLattice::from_poset(poset_from_family(s.family(Op::upper)));
    FiniteLattice upi =
        FiniteLattice::from_poset(poset_from_family(s.family(Op::upper_inv)));
    CHECK(s.lattice().is_spatial() == (up.is_spatial() && upi.is_spatial()));
  }
}

TEST_CASE("the dual isomorphism between join-prime neighborhoods") {
  DualIso iso = phi_psi(fixture_b());
  CHECK(iso.dual_isomorphism);
  auto phi_at = [&](const ElementSet& key) {
    for (const auto& [k, v] : iso.phi)
      if (k == key) return v;
    FAIL("missing domain element");
    return ElementSet();
  };
  CHECK(phi_at(es(4, {1, 2})) == es(4, {1, 2}));  // R(1) -> inverse nbhd of 2
  CHECK(phi_at(es(4, {3})) == es(4, {2, 3, 4}));  // R(3) -> inverse nbhd of 3
  CHECK(phi_at(es(4, {1, 3, 4})) == es(4, {4}));  // R(4) -> inverse nbhd of 4

  auto psi_at = [&](const ElementSet& key) {
    for (const auto& [k, v] : iso.psi)
      if (k == key) return v;
    FAIL("missing domain element");
    return ElementSet();
  };
  CHECK(psi_at(es(4, {2, 3, 4})) == es(4, {3}));

  DualIso id_iso = phi_psi(identity_rel(3));
  for (const auto& [k, v] : id_iso.phi) CHECK(k == v);

  std::mt19937_64 rng(7409);
  for (int t = 0; t < 80; ++t)
    CHECK(phi_psi(random_relation(rng, 1 + rng() % 7, rng() % 2 == 0, 10 + rng() % 70))
              .dual_isomorphism);
}

TEST_CASE("interpolation property") {
  RoughStructure sb(fixture_b());
  KleeneStructure kb = KleeneStructure::build(sb);
  InterpolationResult rb = interpolation_property(sb, kb);
  CHECK_FALSE(rb.value);
  REQUIRE(rb.witness.has_value());
  CHECK(sorted_pairs({rb.witness->first, rb.witness->second}) ==
        sorted_pairs({ap(4, {}, {4}), ap(4, {}, {1, 2})}));

  RoughStructure sa(fixture_a());
  KleeneStructure ka = KleeneStructure::build(sa);
  CHECK(interpolation_property(sa, ka).value);

  // Without a minus class the hypothesis only fires reflexively.
  RoughStructure sid(identity_rel(3));
  KleeneStructure kid = KleeneStructure::build(sid);
  CHECK(partition_irreducibles(sid, kid).minus.empty());
  CHECK(interpolation_property(sid, kid).value);
}

TEST_CASE("Nelson characterization") {
  RoughStructure sa(fixture_a());
  NelsonResult na = nelson_characterization(sa);
  CHECK(na.value);

  RoughStructure sb(fixture_b());
  NelsonResult nb = nelson_characterization(sb);
  CHECK_FALSE(nb.value);
  REQUIRE(nb.witness.has_value());
  CHECK((*nb.witness)[0] == "2");
  CHECK((*nb.witness)[1] == "4");
  CHECK((*nb.witness)[2] == "1");

  CHECK_THROWS_AS(nelson_characterization(RoughStructure(fixture_c())),
                  precondition_error);

  std::mt19937_64 rng(7410);
  for (int t = 0; t < 40; ++t) {
    RoughStructure s(random_quasiorder(rng, 2 + rng() % 6));
    CHECK(nelson_characterization(s).value);
  }
}

TEST_CASE("characterization equals interpolation under the hypothesis") {
  std::mt19937_64 rng(7411);
  int hypothesis_held = 0;
  for (int t = 0; t < 120; ++t) {
    RoughStructure s(random_reflexive(rng, 1 + rng() % 6));
    if (!spatial_cd_criterion(s.relation())) continue;
    ++hypothesis_held;
    KleeneStructure k = KleeneStructure::build(s);
    CHECK(nelson_characterization(s).value == interpolation_property(s, k).value);
  }
  CHECK(hypothesis_held > 10);
}

TEST_CASE("nonempty cores in both directions suffice for Nelson") {
  CHECK_FALSE(cores_nonempty_sufficient(fixture_a()));  // core of R(1) is empty
  CHECK_FALSE(cores_nonempty_sufficient(fixture_b()));  // core of R(2) is empty
  CHECK(cores_nonempty_sufficient(identity_rel(3)));

  std::mt19937_64 rng(7412);
  int fired = 0;
  for (int t = 0; t < 60; ++t) {
    Relation r = rng() % 2 ? random_quasiorder(rng, 2 + rng() % 6)
                           : random_reflexive(rng, 1 + rng() % 6);
    if (r.is_quasiorder()) CHECK(cores_nonempty_sufficient(r));
    if (!cores_nonempty_sufficient(r)) continue;
    ++fired;
    RoughStructure s(r);
    CHECK(nelson_characterization(s).value);
  }
  CHECK(fired > 10);
}

TEST_CASE("weak implication") {
  RoughStructure sb(fixture_b());
  KleeneStructure kb = KleeneStructure::build(sb);
  const FiniteLattice& l = sb.lattice();

  // Oracle: maximum of all z with a ^ z <= ~a v b, by table scan.
  auto oracle = [&](std::size_t a, std::size_t b) {
    const std::size_t bound = l.join(kb.neg(a), b);
    std::size_t best = l.bottom();
    for (std::size_t z = 0; z < l.size(); ++z)
      if (l.leq(l.meet(a, z), bound)) best = l.join(best, z);
    return best;
  };

  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b) {
      std::size_t w = weak_implication(sb, kb, a, b);
      CHECK(w == oracle(a, b));
      CHECK(l.leq(l.meet(a, w), l.join(kb.neg(a), b)));
      if (l.leq(a, l.join(kb.neg(a), b))) CHECK(w == l.top());
    }

  CHECK(weak_implication(sb, kb, sb.bottom(), 3) == sb.top());
  std::size_t a = *sb.index_of(ap(4, {}, {4}));
  std::size_t b = *sb.index_of(ap(4, {}, {1, 2}));
  CHECK(weak_implication(sb, kb, a, b) == oracle(a, b));
}

TEST_CASE("regular double Stone diagnostics") {
  StoneReport ra = regular_double_stone(RoughStructure(fixture_a()));
  CHECK(ra.value);
  CHECK(ra.stone);
  CHECK(ra.dual_stone);
  CHECK(ra.regular);

  StoneReport rb = regular_double_stone(RoughStructure(fixture_b()));
  CHECK_FALSE(rb.value);
  CHECK(rb.witness.has_value());

  // Boolean completion of the identity relation.
  StoneReport rid = regular_double_stone(RoughStructure(identity_rel(3)));
  CHECK(rid.value);

  CHECK_THROWS_AS(regular_double_stone(RoughStructure(fixture_c())),
                  precondition_error);
}

TEST_CASE("pseudocomplement against the scan oracle on the 2x3 completion") {
  RoughStructure sa(fixture_a());
  const FiniteLattice& l = sa.lattice();
  std::size_t x = *sa.index_of(ap(3, {}, {1, 3}));
  auto star = l.pseudocomplement(x);
  REQUIRE(star.has_value());
  CHECK(sa.pair(*star) == ap(3, {2}, {1, 2}));
  // Scan: greatest element meeting x at the bottom.
  for (std::size_t y = 0; y < l.size(); ++y)
    if (l.meet(x, y) == l.bottom()) CHECK(l.leq(y, *star));
}

TEST_CASE("algebra report flags") {
  AlgebraReport a = algebra_report(RoughStructure(fixture_a()));
  CHECK(a.distributive.value);
  CHECK(a.spatial.value);
  CHECK(a.de_morgan.value);
  CHECK(a.kleene.value);
  CHECK(a.quasi_nelson.value);
  CHECK(a.nelson.value);
  CHECK(a.regular_double_stone.value);

  AlgebraReport b = algebra_report(RoughStructure(fixture_b()));
  CHECK(b.kleene.value);
  CHECK(b.quasi_nelson.value);
  CHECK_FALSE(b.nelson.value);
  REQUIRE(b.nelson.witness.has_value());
  CHECK_FALSE(b.regular_double_stone.value);

  AlgebraReport c = algebra_report(RoughStructure(fixture_c()));
  CHECK_FALSE(c.distributive.value);
  CHECK_FALSE(c.kleene.value);
  REQUIRE(c.kleene.witness.has_value());
  CHECK(c.spatial.value);
}

TEST_CASE("the inverse relation preserves the structural flags") {
  InverseComparison b = inverse_relation_report(fixture_b());
  CHECK(b.flags_agree);
  CHECK(b.forward.distributive.value);
  CHECK(b.backward.distributive.value);
  CHECK_FALSE(b.forward.nelson.value);
  CHECK_FALSE(b.backward.nelson.value);
  CHECK(b.nelson_consistent);

  InverseComparison a = inverse_relation_report(fixture_a());
  CHECK(a.flags_agree);
  CHECK(a.forward.spatial.value);
  CHECK(a.backward.spatial.value);

  InverseComparison c = inverse_relation_report(fixture_c());
  CHECK(c.flags_agree);
  CHECK_FALSE(c.forward.distributive.value);
  CHECK_FALSE(c.backward.distributive.value);

  std::mt19937_64 rng(7413);
  for (int t = 0; t < 30; ++t) {
    InverseComparison cmp = inverse_relation_report(random_reflexive(rng, 1 + rng() % 6));
    CHECK(cmp.flags_agree);
    CHECK(cmp.nelson_consistent);
  }
}
