#include "roughlat/algebras.hpp"

#include <algorithm>
#include <map>

namespace roughlat {

namespace {

ApproxPair negate_pair(const ApproxPair& p) {
  return {p.upper.complement(), p.lower.complement()};
}

std::string render(const RoughStructure& s, const ApproxPair& p) {
  return to_string(p, s.universe());
}

// Negation table over the completion. Theory makes negation total here, so
// a miss is a library defect, not bad input.
std::vector<std::size_t> negation_table_of(const RoughStructure& s) {
  std::vector<std::size_t> neg(s.dmrs().size());
  for (std::size_t i = 0; i < s.dmrs().size(); ++i) {
    auto idx = s.index_of(negate_pair(s.pair(i)));
    if (!idx)
      throw defect_error("negation of " + render(s, s.pair(i)) +
                         " left the completion");
    neg[i] = *idx;
  }
  return neg;
}

struct LawScan {
  std::optional<Witness> distributive;
  std::optional<Witness> de_morgan;
  std::optional<Witness> kleene;
};

LawScan scan_laws(const RoughStructure& s) {
  LawScan out;
  const FiniteLattice& l = s.lattice();

  FiniteLattice::Triple t;
  if (!l.is_distributive(&t))
    out.distributive = Witness{
        "meet(x, join(y,z)) != join(meet(x,y), meet(x,z)) at x=" + render(s, s.pair(t.x)) +
            ", y=" + render(s, s.pair(t.y)) + ", z=" + render(s, s.pair(t.z)),
        {s.pair(t.x), s.pair(t.y), s.pair(t.z)},
        {}};

  const auto neg = negation_table_of(s);
  const std::size_t n = l.size();

  for (std::size_t x = 0; x < n && !out.de_morgan; ++x)
    if (neg[neg[x]] != x)
      out.de_morgan = Witness{"double negation fails at x=" + render(s, s.pair(x)),
                              {s.pair(x)},
                              {}};
  for (std::size_t x = 0; x < n && !out.de_morgan; ++x)
    for (std::size_t y = 0; y < n && !out.de_morgan; ++y) {
      if (neg[l.join(x, y)] != l.meet(neg[x], neg[y]))
        out.de_morgan = Witness{"~(x v y) != ~x ^ ~y at x=" + render(s, s.pair(x)) +
                                    ", y=" + render(s, s.pair(y)),
                                {s.pair(x), s.pair(y)},
                                {}};
      else if (neg[l.meet(x, y)] != l.join(neg[x], neg[y]))
        out.de_morgan = Witness{"~(x ^ y) != ~x v ~y at x=" + render(s, s.pair(x)) +
                                    ", y=" + render(s, s.pair(y)),
                                {s.pair(x), s.pair(y)},
                                {}};
    }

  for (std::size_t x = 0; x < n && !out.kleene; ++x)
    for (std::size_t y = 0; y < n && !out.kleene; ++y)
      if (!l.leq(l.meet(x, neg[x]), l.join(y, neg[y])))
        out.kleene = Witness{"x ^ ~x <= y v ~y fails at x=" + render(s, s.pair(x)) +
                                 ", y=" + render(s, s.pair(y)),
                             {s.pair(x), s.pair(y)},
                             {}};
  return out;
}

}  // namespace

ApproxPair negation(const RoughStructure& s, const ApproxPair& p) {
  if (!s.member(p))
    throw precondition_error("negation applies to completion elements only, got " +
                             render(s, p));
  ApproxPair np = negate_pair(p);
  if (!s.member(np))
    throw defect_error("negation of " + render(s, p) + " left the completion");
  return np;
}

std::optional<Witness> kleene_violation(const RoughStructure& s) {
  LawScan scan = scan_laws(s);
  if (scan.distributive) return scan.distributive;
  if (scan.de_morgan) return scan.de_morgan;
  return scan.kleene;
}

Flag check_kleene(const RoughStructure& s) {
  auto w = kleene_violation(s);
  return {!w.has_value(), std::move(w)};
}

KleeneStructure KleeneStructure::build(const RoughStructure& s) {
  if (auto w = kleene_violation(s))
    throw precondition_error("completion is not a distributive Kleene algebra: " + w->what);

  KleeneStructure k;
  k.neg_ = negation_table_of(s);
  const FiniteLattice& l = s.lattice();
  k.irr_ = l.join_irreducibles();
  k.irr_pos_.assign(l.size(), npos);
  for (std::size_t i = 0; i < k.irr_.size(); ++i) k.irr_pos_[k.irr_[i]] = i;

  k.g_.resize(k.irr_.size());
  for (std::size_t i = 0; i < k.irr_.size(); ++i) {
    const std::size_t j = k.irr_[i];
    std::size_t acc = l.top();
    for (std::size_t x = 0; x < l.size(); ++x)
      if (!l.leq(x, k.neg_[j])) acc = l.meet(acc, x);
    if (!k.is_irreducible(acc))
      throw defect_error("g of " + render(s, s.pair(j)) + " is not join-irreducible");
    if (!l.leq(j, acc) && !l.leq(acc, j))
      throw defect_error("g of " + render(s, s.pair(j)) + " is incomparable with it");
    k.g_[i] = acc;
  }
  for (std::size_t i = 0; i < k.irr_.size(); ++i)
    if (k.g(k.g_[i]) != k.irr_[i])
      throw defect_error("g is not an involution at " + render(s, s.pair(k.irr_[i])));
  return k;
}

std::size_t KleeneStructure::g(std::size_t j) const {
  if (j >= irr_pos_.size() || irr_pos_[j] == npos)
    throw precondition_error("g is defined on join-irreducible elements only");
  return g_[irr_pos_[j]];
}

JPartition partition_irreducibles(const RoughStructure& s, const KleeneStructure& k) {
  const FiniteLattice& l = s.lattice();
  JPartition part;
  for (std::size_t j : k.irreducibles()) {
    const std::size_t gj = k.g(j);
    if (j == gj)
      part.zero.push_back(j);
    else if (l.leq(j, gj))
      part.minus.push_back(j);
    else
      part.plus.push_back(j);
  }

  // Closed forms: the minus class from join-irreducible inverse point
  // images of non-singletons, the zero class from singletons, the plus
  // class from join-irreducible forward point images of non-singletons.
  const Relation& r = s.relation();
  const Relation& inv = s.inverse();
  const ElementSet singles = s.singleton_set();
  const std::size_t n = r.size();

  std::vector<ApproxPair> minus_f, zero_f, plus_f;
  for (std::size_t x = 0; x < n; ++x) {
    const ElementSet pt = ElementSet::single(n, x);
    if (singles.contains(x)) {
      zero_f.push_back(rough_pair(r, pt));
      continue;
    }
    if (neighborhood_join_irreducible(inv, x)) minus_f.push_back(rough_pair(r, pt));
    if (neighborhood_join_irreducible(r, x))
      plus_f.push_back({compose(r, {Op::upper_inv, Op::lower}, pt),
                        compose(r, {Op::upper_inv, Op::upper}, pt)});
  }

  auto norm = [](std::vector<ApproxPair> v) {
    std::sort(v.begin(), v.end(), pair_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  auto pairs_of = [&](const std::vector<std::size_t>& idx) {
    std::vector<ApproxPair> v;
    v.reserve(idx.size());
    for (auto i : idx) v.push_back(s.pair(i));
    return norm(std::move(v));
  };

  part.closed_form_agrees = pairs_of(part.minus) == norm(std::move(minus_f)) &&
                            pairs_of(part.zero) == norm(std::move(zero_f)) &&
                            pairs_of(part.plus) == norm(std::move(plus_f));
  return part;
}

std::size_t g_core_witness(const RoughStructure& s, const KleeneStructure& k,
                           const ApproxPair& j_minus) {
  auto idx = s.index_of(j_minus);
  if (!idx || !k.is_irreducible(*idx) || !s.lattice().leq(*idx, k.g(*idx)) ||
      *idx == k.g(*idx))
    throw precondition_error(render(s, j_minus) + " is not in the minus class");

  const Relation& r = s.relation();
  const Relation& inv = s.inverse();
  const std::size_t n = r.size();
  const ApproxPair g_pair = s.pair(k.g(*idx));

  // Any non-singleton x whose inverse neighborhood is the upper coordinate.
  std::size_t x = n;
  for (std::size_t cand = 0; cand < n; ++cand)
    if (!s.singleton_set().contains(cand) && inv[cand] == j_minus.upper) {
      x = cand;
      break;
    }
  if (x == n)
    throw precondition_error(render(s, j_minus) +
                             " has no generating non-singleton element");

  const ElementSet core = inv.core(x);
  if (core.empty())
    throw defect_error("core of the inverse neighborhood of '" + r.universe().label(x) +
                       "' is empty although g exists");

  std::size_t witness = n;
  bool ok = true;
  core.for_each([&](std::size_t z) {
    if (witness == n) witness = z;
    const ElementSet pt = ElementSet::single(n, z);
    const ApproxPair generated = {compose(r, {Op::upper_inv, Op::lower}, pt),
                                  compose(r, {Op::upper_inv, Op::upper}, pt)};
    ok = ok && generated == g_pair && !s.singleton_set().contains(z) &&
         neighborhood_join_irreducible(r, z);
  });
  if (!ok)
    throw defect_error("core elements of '" + r.universe().label(x) +
                       "' do not all generate g" + render(s, j_minus));
  return witness;
}

namespace {

bool three_way_join_prime(const Relation& r, const FiniteLattice& fam_lattice,
                          const SetFamily& fam, const std::vector<bool>& prime_flag,
                          std::size_t x) {
  const std::size_t member = *fam.index_of(r[x]);
  const bool by_lattice = prime_flag[member];

  ElementSet acc(r.size());
  for (std::size_t y = 0; y < r.size(); ++y)
    if (!r[x].subset_of(r[y])) acc |= r[y];
  const bool by_covering = !r[x].subset_of(acc);

  const bool by_core = !r.core(x).empty();

  if (by_lattice != by_covering || by_covering != by_core)
    throw defect_error("join-prime characterizations disagree at '" +
                       r.universe().label(x) + "'");
  (void)fam_lattice;
  return by_core;
}

}  // namespace

std::vector<bool> char_join_prime_all(const Relation& r) {
  const SetFamily fam = SetFamily::of(r, Op::upper_inv);
  const FiniteLattice lat = FiniteLattice::from_poset(poset_from_family(fam));
  std::vector<bool> prime_flag(lat.size(), false);
  for (auto p : lat.join_primes()) prime_flag[p] = true;

  std::vector<bool> out(r.size());
  for (std::size_t x = 0; x < r.size(); ++x)
    out[x] = three_way_join_prime(r, lat, fam, prime_flag, x);
  return out;
}

bool char_join_prime(const Relation& r, std::size_t x) {
  return char_join_prime_all(r)[x];
}

namespace {

bool covering_direction(const Relation& r) {
  std::vector<bool> core_nonempty(r.size());
  for (std::size_t x = 0; x < r.size(); ++x) core_nonempty[x] = !r.core(x).empty();
  for (std::size_t x = 0; x < r.size(); ++x) {
    ElementSet acc(r.size());
    for (std::size_t y = 0; y < r.size(); ++y)
      if (core_nonempty[y] && r[y].subset_of(r[x])) acc |= r[y];
    if (acc != r[x]) return false;
  }
  return true;
}

}  // namespace

bool spatial_cd_criterion(const Relation& r) {
  return covering_direction(r) && covering_direction(r.inverse());
}

BoolCheck spatial_cd_agreement(const RoughStructure& s) {
  BoolCheck c;
  c.formula = spatial_cd_criterion(s.relation());
  c.oracle = s.lattice().is_spatial() && s.lattice().is_distributive();
  c.agree = c.formula == c.oracle;
  return c;
}

DualIso phi_psi(const Relation& r) {
  const Relation inv = r.inverse();
  const Universe& u = r.universe();

  // Distinct join-prime neighborhoods, keyed by value, with one core pick.
  auto collect = [&](const Relation& rel) {
    std::map<std::uint64_t, std::pair<ElementSet, ElementSet>> dom;  // bits -> (nbhd, core)
    for (std::size_t x = 0; x < rel.size(); ++x) {
      const ElementSet core = rel.core(x);
      if (core.empty()) continue;
      auto [it, inserted] = dom.emplace(rel[x].bits(), std::make_pair(rel[x], core));
      if (!inserted && it->second.second != core)
        throw defect_error("equal neighborhoods with different cores at '" + u.label(x) +
                           "'");
    }
    return dom;
  };

  auto dom_phi = collect(r);
  auto dom_psi = collect(inv);

  auto image = [&](const Relation& opposite,
                   const std::pair<ElementSet, ElementSet>& entry) {
    std::optional<ElementSet> img;
    entry.second.for_each([&](std::size_t w) {
      if (!img)
        img = opposite[w];
      else if (*img != opposite[w])
        throw defect_error("core choice changes the dual image");
    });
    return *img;
  };

  DualIso out;
  for (const auto& [bits, entry] : dom_phi) {
    ElementSet img = image(inv, entry);
    if (!dom_psi.count(img.bits()))
      throw defect_error("dual image is not join-prime on the inverse side");
    out.phi.emplace_back(entry.first, img);
  }
  for (const auto& [bits, entry] : dom_psi) {
    ElementSet img = image(r, entry);
    if (!dom_phi.count(img.bits()))
      throw defect_error("dual image is not join-prime on the forward side");
    out.psi.emplace_back(entry.first, img);
  }

  auto lookup = [](const std::vector<std::pair<ElementSet, ElementSet>>& m,
                   const ElementSet& key) {
    for (const auto& [k, v] : m)
      if (k == key) return v;
    throw defect_error("dual map misses a value");
  };

  for (const auto& [a, fa] : out.phi)
    if (lookup(out.psi, fa) != a) throw defect_error("psi(phi(a)) != a");
  for (const auto& [b, gb] : out.psi)
    if (lookup(out.phi, gb) != b) throw defect_error("phi(psi(b)) != b");

  for (const auto& [a1, f1] : out.phi)
    for (const auto& [a2, f2] : out.phi)
      if (a1.subset_of(a2) && !f2.subset_of(f1))
        throw defect_error("phi is not order-reversing");
  for (const auto& [b1, g1] : out.psi)
    for (const auto& [b2, g2] : out.psi)
      if (b1.subset_of(b2) && !g2.subset_of(g1))
        throw defect_error("psi is not order-reversing");

  auto by_domain = [](const auto& a, const auto& b) {
    return ElementSet::family_less(a.first, b.first);
  };
  std::sort(out.phi.begin(), out.phi.end(), by_domain);
  std::sort(out.psi.begin(), out.psi.end(), by_domain);
  out.dual_isomorphism = true;
  return out;
}

InterpolationResult interpolation_property(const RoughStructure& s,
                                           const KleeneStructure& k) {
  const FiniteLattice& l = s.lattice();
  const auto& irr = k.irreducibles();
  for (std::size_t i = 0; i < irr.size(); ++i)
    for (std::size_t j = i; j < irr.size(); ++j) {
      const std::size_t p = irr[i], q = irr[j];
      const std::size_t gp = k.g(p), gq = k.g(q);
      if (!(l.leq(p, gp) && l.leq(p, gq) && l.leq(q, gp) && l.leq(q, gq))) continue;
      bool found = false;
      for (std::size_t m : irr)
        if (l.leq(p, m) && l.leq(q, m) && l.leq(m, gp) && l.leq(m, gq)) {
          found = true;
          break;
        }
      if (!found) return {false, std::make_pair(s.pair(p), s.pair(q))};
    }
  return {true, std::nullopt};
}

NelsonResult nelson_characterization(const RoughStructure& s) {
  if (!s.relation().is_reflexive())
    throw precondition_error("the Nelson characterization requires a reflexive relation");
  if (!spatial_cd_criterion(s.relation()))
    throw precondition_error(
        "the Nelson characterization requires a spatial, completely distributive "
        "completion");

  const Relation& r = s.relation();
  const Relation& inv = s.inverse();
  const Universe& u = r.universe();
  const std::size_t n = r.size();
  const ElementSet singles = s.singleton_set();

  std::vector<bool> irr(n);
  for (std::size_t x = 0; x < n; ++x) irr[x] = neighborhood_join_irreducible(inv, x);

  for (std::size_t x = 0; x < n; ++x) {
    if (singles.contains(x) || !irr[x]) continue;
    for (std::size_t y = x; y < n; ++y) {
      if (singles.contains(y) || !irr[y]) continue;
      const ElementSet both = inv[x] | inv[y];
      std::size_t bound = n;
      for (std::size_t c = 0; c < n; ++c)
        if (both.subset_of(inv[c])) {
          bound = c;
          break;
        }
      if (bound == n) continue;
      bool ok = false;
      for (std::size_t z = 0; z < n && !ok; ++z) ok = irr[z] && both.subset_of(inv[z]);
      if (!ok)
        return {false, std::array<std::string, 3>{u.label(x), u.label(y), u.label(bound)}};
    }
  }
  return {true, std::nullopt};
}

bool cores_nonempty_sufficient(const Relation& r) {
  const Relation inv = r.inverse();
  for (std::size_t x = 0; x < r.size(); ++x)
    if (r.core(x).empty() || inv.core(x).empty()) return false;
  return true;
}

std::size_t weak_implication(const RoughStructure& s, const KleeneStructure& k,
                             std::size_t a, std::size_t b) {
  const FiniteLattice& l = s.lattice();
  auto rp = l.relative_pseudocomplement(a, l.join(k.neg(a), b));
  if (!rp)
    throw defect_error("relative pseudocomplement missing in a distributive lattice");
  return *rp;
}

StoneReport regular_double_stone(const RoughStructure& s) {
  const FiniteLattice& l = s.lattice();
  if (!l.is_distributive())
    throw precondition_error("double Stone diagnostics require a distributive completion");

  const std::size_t n = l.size();
  std::vector<std::size_t> star(n), plus(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto pc = l.pseudocomplement(x);
    auto dp = l.dual_pseudocomplement(x);
    if (!pc || !dp)
      throw defect_error("pseudocomplement missing in a distributive lattice");
    star[x] = *pc;
    plus[x] = *dp;
  }

  StoneReport rep;
  rep.stone = rep.dual_stone = rep.regular = true;
  for (std::size_t x = 0; x < n && rep.stone; ++x)
    if (l.join(star[x], star[star[x]]) != l.top()) {
      rep.stone = false;
      rep.witness = Witness{"x* v x** != top at x=" + render(s, s.pair(x)), {s.pair(x)}, {}};
    }
  for (std::size_t x = 0; x < n && rep.dual_stone; ++x)
    if (l.meet(plus[x], plus[plus[x]]) != l.bottom()) {
      rep.dual_stone = false;
      if (!rep.witness)
        rep.witness =
            Witness{"x+ ^ x++ != bottom at x=" + render(s, s.pair(x)), {s.pair(x)}, {}};
    }
  for (std::size_t x = 0; x < n && rep.regular; ++x)
    for (std::size_t y = 0; y < n && rep.regular; ++y)
      if (!l.leq(l.meet(x, plus[x]), l.join(y, star[y]))) {
        rep.regular = false;
        if (!rep.witness)
          rep.witness = Witness{"x ^ x+ <= y v y* fails at x=" + render(s, s.pair(x)) +
                                    ", y=" + render(s, s.pair(y)),
                                {s.pair(x), s.pair(y)},
                                {}};
      }
  rep.value = rep.stone && rep.dual_stone && rep.regular;
  return rep;
}

AlgebraReport algebra_report(const RoughStructure& s) {
  AlgebraReport rep;
  const FiniteLattice& l = s.lattice();

  LawScan laws = scan_laws(s);
  rep.distributive = {!laws.distributive.has_value(), laws.distributive};

  rep.spatial.value = l.is_spatial();
  if (!rep.spatial.value) {
    for (std::size_t x = 0; x < l.size(); ++x) {
      std::vector<std::size_t> below;
      for (auto j : l.join_irreducibles())
        if (l.leq(j, x)) below.push_back(j);
      if (l.join_all(below) != x) {
        rep.spatial.witness = Witness{
            render(s, s.pair(x)) + " is not the join of the irreducibles below it",
            {s.pair(x)},
            {}};
        break;
      }
    }
  }

  auto hypothesis = [&](const char* need) {
    Witness w = laws.distributive ? *laws.distributive : Witness{};
    w.what = std::string(need) + " needs a distributive completion; " +
             (laws.distributive ? laws.distributive->what : std::string());
    return w;
  };

  if (!rep.distributive.value) {
    rep.de_morgan = {false, hypothesis("a De Morgan algebra")};
    rep.kleene = {false, hypothesis("a Kleene algebra")};
    rep.quasi_nelson = {false, hypothesis("a quasi-Nelson algebra")};
    rep.nelson = {false, hypothesis("a Nelson algebra")};
    rep.regular_double_stone = {false, hypothesis("a regular double Stone algebra")};
    return rep;
  }

  rep.de_morgan = {!laws.de_morgan.has_value(), laws.de_morgan};
  rep.kleene = {rep.de_morgan.value && !laws.kleene.has_value(),
                rep.de_morgan.value ? laws.kleene : rep.de_morgan.witness};

  if (!rep.kleene.value) {
    Witness w = *rep.kleene.witness;
    rep.quasi_nelson = {false, w};
    rep.nelson = {false, w};
  } else {
    rep.quasi_nelson.value = true;
    for (std::size_t a = 0; a < l.size() && rep.quasi_nelson.value; ++a)
      for (std::size_t b = 0; b < l.size() && rep.quasi_nelson.value; ++b)
        if (!l.relative_pseudocomplement(a, b)) {
          rep.quasi_nelson = {false,
                              Witness{"no relative pseudocomplement for a=" +
                                          render(s, s.pair(a)) + ", b=" + render(s, s.pair(b)),
                                      {s.pair(a), s.pair(b)},
                                      {}}};
        }

    const KleeneStructure k = KleeneStructure::build(s);
    rep.interpolation = interpolation_property(s, k);
    rep.nelson.value = rep.interpolation->value;
    if (!rep.nelson.value) {
      const auto& [p, q] = *rep.interpolation->witness;
      rep.nelson.witness = Witness{"interpolation fails between p=" + render(s, p) +
                                       " and q=" + render(s, q),
                                   {p, q},
                                   {}};
    }
  }

  StoneReport stone = regular_double_stone(s);
  rep.regular_double_stone = {stone.value, stone.witness};
  rep.stone_detail = std::move(stone);
  return rep;
}

InverseComparison inverse_relation_report(const Relation& r, const RoughOptions& opts) {
  InverseComparison cmp{algebra_report(RoughStructure(r, opts)),
                        algebra_report(RoughStructure(r.inverse(), opts)), false, false};
  cmp.flags_agree = cmp.forward.distributive.value == cmp.backward.distributive.value &&
                    cmp.forward.spatial.value == cmp.backward.spatial.value;
  cmp.nelson_consistent = !cores_nonempty_sufficient(r) ||
                          (cmp.forward.nelson.value && cmp.backward.nelson.value);
  return cmp;
}

}  // namespace roughlat
