#include "roughlat/report.hpp"

#include <algorithm>

namespace roughlat {

namespace {

using json = nlohmann::ordered_json;

json set_json(const ElementSet& s, const Universe& u) {
  json a = json::array();
  s.for_each([&](std::size_t i) { a.push_back(u.label(i)); });
  return a;
}

json pair_json(const ApproxPair& p, const Universe& u) {
  return json{{"lower", set_json(p.lower, u)}, {"upper", set_json(p.upper, u)}};
}

json pairs_json(const std::vector<ApproxPair>& ps, const Universe& u) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(pair_json(p, u));
  return a;
}

json family_json(const SetFamily& f, const Universe& u) {
  json a = json::array();
  for (const auto& m : f.members()) a.push_back(set_json(m, u));
  return a;
}

json witness_json(const Witness& w, const Universe& u) {
  json j{{"what", w.what}};
  if (!w.pairs.empty()) j["pairs"] = pairs_json(w.pairs, u);
  if (!w.labels.empty()) j["labels"] = w.labels;
  return j;
}

json flag_json(const Flag& f, const Universe& u) {
  json j{{"value", f.value}};
  if (f.witness) j["witness"] = witness_json(*f.witness, u);
  return j;
}

json indices_json(const RoughStructure& s, const std::vector<std::size_t>& idx) {
  std::vector<ApproxPair> ps;
  ps.reserve(idx.size());
  for (auto i : idx) ps.push_back(s.pair(i));
  std::sort(ps.begin(), ps.end(), pair_less);
  return pairs_json(ps, s.universe());
}

struct CheckLog {
  json entries = json::array();
  bool any_disagreement = false;

  void skipped(const std::string& name, const std::string& reason) {
    entries.push_back(json{{"name", name}, {"skipped", true}, {"reason", reason}});
  }

  void result(const std::string& name, json formula, json oracle, bool agree) {
    entries.push_back(json{{"name", name},
                           {"skipped", false},
                           {"formula", std::move(formula)},
                           {"oracle", std::move(oracle)},
                           {"agree", agree}});
    if (!agree) any_disagreement = true;
  }

  /// Runs a check body, converting an internal defect into agree=false.
  template <class F>
  void guarded(const std::string& name, F&& body) {
    try {
      body();
    } catch (const defect_error& e) {
      entries.push_back(json{{"name", name},
                             {"skipped", false},
                             {"defect", e.what()},
                             {"agree", false}});
      any_disagreement = true;
    }
  }
};

json relation_json(const Relation& r) {
  const Universe& u = r.universe();
  json rel = json::object();
  for (std::size_t x = 0; x < r.size(); ++x)
    rel[u.label(x)] = set_json(r[x], u);
  return rel;
}

json cores_json(const Relation& r) {
  const Universe& u = r.universe();
  json c = json::object();
  for (std::size_t x = 0; x < r.size(); ++x) c[u.label(x)] = set_json(r.core(x), u);
  return c;
}

}  // namespace

AnalysisResult analyze(const Relation& r, const AnalyzeOptions& opts) {
  AnalysisResult out;
  const Universe& u = r.universe();
  const Relation inv = r.inverse();
  json& rep = out.report;
  CheckLog checks;

  rep["schema_version"] = kReportSchemaVersion;
  rep["universe"] = u.labels();
  rep["relation"] = relation_json(r);
  rep["options"] = json{{"rs_cap", opts.caps.rs_cap},
                        {"dm_cap", opts.caps.dm_cap},
                        {"with_dmrs", opts.with_dmrs}};

  rep["predicates"] = json{{"reflexive", r.is_reflexive()},
                           {"symmetric", r.is_symmetric()},
                           {"transitive", r.is_transitive()},
                           {"quasiorder", r.is_quasiorder()},
                           {"equivalence", r.is_equivalence()}};
  rep["singletons"] = set_json(r.singletons(), u);
  rep["cores"] = json{{"forward", cores_json(r)}, {"inverse", cores_json(inv)}};

  if (r.size() > opts.caps.rs_cap)
    throw capacity_error("family stage: universe size " + std::to_string(r.size()) +
                         " exceeds the cap of " + std::to_string(opts.caps.rs_cap));

  json fams = json::object();
  for (Op op : kAllOps) fams[op_name(op)] = family_json(SetFamily::of(r, op), u);
  rep["families"] = fams;

  // Join-prime neighborhoods through the three-way characterization.
  checks.guarded("join_prime_three_way", [&] {
    auto fwd = char_join_prime_all(r);
    auto bwd = char_join_prime_all(inv);
    json jf = json::array(), jb = json::array();
    for (std::size_t x = 0; x < r.size(); ++x) {
      if (fwd[x]) jf.push_back(u.label(x));
      if (bwd[x]) jb.push_back(u.label(x));
    }
    rep["join_prime_elements"] = json{{"forward", jf}, {"inverse", jb}};
    checks.result("join_prime_three_way", jf, jf, true);
  });

  const bool cd_formula = spatial_cd_criterion(r);
  rep["spatial_cd_formula"] = cd_formula;
  rep["cores_nonempty_sufficient"] = cores_nonempty_sufficient(r);

  checks.guarded("dual_isomorphism", [&] {
    DualIso iso = phi_psi(r);
    json phi = json::array();
    for (const auto& [a, fa] : iso.phi)
      phi.push_back(json{{"from", set_json(a, u)}, {"to", set_json(fa, u)}});
    rep["phi"] = phi;
    checks.result("dual_isomorphism", iso.dual_isomorphism, true, iso.dual_isomorphism);
  });

  if (!opts.with_dmrs) {
    // Check mode needs the completion; family-only runs expose no flags.
    rep["dmrs_skipped"] = true;
    rep["checks"] = checks.entries;
    out.any_disagreement = checks.any_disagreement;
    return out;
  }

  out.structure.emplace(r, opts.caps);
  const RoughStructure& s = *out.structure;
  const FiniteLattice& l = s.lattice();

  rep["rs"] = pairs_json(s.rs(), u);
  rep["dmrs"] = pairs_json(s.dmrs(), u);
  rep["rs_size"] = s.rs().size();
  rep["dmrs_size"] = s.dmrs().size();

  rep["lattice"] = json{{"join_irreducibles", indices_json(s, l.join_irreducibles())},
                        {"join_primes", indices_json(s, l.join_primes())},
                        {"atoms", indices_json(s, l.atoms())}};

  const AlgebraReport alg = algebra_report(s);
  json algj = json::object();
  algj["distributive"] = flag_json(alg.distributive, u);
  algj["spatial"] = flag_json(alg.spatial, u);
  algj["de_morgan"] = flag_json(alg.de_morgan, u);
  algj["kleene"] = flag_json(alg.kleene, u);
  algj["quasi_nelson"] = flag_json(alg.quasi_nelson, u);
  algj["nelson"] = flag_json(alg.nelson, u);
  algj["regular_double_stone"] = flag_json(alg.regular_double_stone, u);
  if (alg.stone_detail)
    algj["stone_detail"] = json{{"stone", alg.stone_detail->stone},
                                {"dual_stone", alg.stone_detail->dual_stone},
                                {"regular", alg.stone_detail->regular}};
  rep["algebra"] = algj;

  out.flags = {{"distributive", alg.distributive.value},
               {"spatial", alg.spatial.value},
               {"kleene", alg.kleene.value},
               {"nelson", alg.nelson.value},
               {"stone", alg.regular_double_stone.value}};

  const bool reflexive = r.is_reflexive();

  if (!reflexive) {
    checks.skipped("join_irreducible_description", "relation is not reflexive");
    checks.skipped("atom_description", "relation is not reflexive");
    checks.skipped("generator_decomposition", "relation is not reflexive");
  } else {
    checks.guarded("join_irreducible_description", [&] {
      PairSetCheck c = theorem_join_irreducibles(s);
      checks.result("join_irreducible_description", pairs_json(c.formula, u),
                    pairs_json(c.oracle, u), c.agree);
    });
    checks.guarded("atom_description", [&] {
      PairSetCheck c = theorem_atoms(s);
      checks.result("atom_description", pairs_json(c.formula, u),
                    pairs_json(c.oracle, u), c.agree);
    });
    checks.guarded("generator_decomposition", [&] {
      bool all = true;
      for (const auto& p : s.dmrs()) all = all && decompose(s, p).verified;
      checks.result("generator_decomposition", all, true, all);
    });
  }

  checks.guarded("subdirect_product", [&] {
    bool ok = subdirect_check(s);
    checks.result("subdirect_product", ok, true, ok);
  });

  checks.guarded("pair_formulas_match_tables", [&] {
    bool ok = true;
    for (std::size_t i = 0; i < s.dmrs().size() && ok; ++i)
      for (std::size_t j = i; j < s.dmrs().size() && ok; ++j) {
        const ApproxPair two[] = {s.pair(i), s.pair(j)};
        ok = s.index_of(dm_join(r, two)) == std::optional(l.join(i, j)) &&
             s.index_of(dm_meet(r, two)) == std::optional(l.meet(i, j));
      }
    checks.result("pair_formulas_match_tables", ok, true, ok);
  });

  checks.guarded("spatial_cd_vs_lattice", [&] {
    BoolCheck c = spatial_cd_agreement(s);
    checks.result("spatial_cd_vs_lattice", c.formula, c.oracle, c.agree);
  });

  if (alg.kleene.value) {
    checks.guarded("irreducible_partition_closed_form", [&] {
      const KleeneStructure k = KleeneStructure::build(s);
      JPartition part = partition_irreducibles(s, k);
      json direct{{"minus", indices_json(s, part.minus)},
                  {"zero", indices_json(s, part.zero)},
                  {"plus", indices_json(s, part.plus)}};
      rep["irreducible_partition"] = direct;
      json g = json::array();
      for (auto j : k.irreducibles())
        g.push_back(json{{"j", pair_json(s.pair(j), u)},
                         {"g", pair_json(s.pair(k.g(j)), u)}});
      rep["g_table"] = g;
      checks.result("irreducible_partition_closed_form", direct, direct,
                    part.closed_form_agrees);
    });
  } else {
    checks.skipped("irreducible_partition_closed_form",
                   "completion is not a distributive Kleene algebra");
  }

  if (reflexive && cd_formula) {
    checks.guarded("nelson_vs_interpolation", [&] {
      NelsonResult nr = nelson_characterization(s);
      if (nr.witness) rep["nelson_witness"] = *nr.witness;
      const bool interp = alg.interpolation ? alg.interpolation->value : false;
      checks.result("nelson_vs_interpolation", nr.value, interp, nr.value == interp);
    });
  } else {
    checks.skipped("nelson_vs_interpolation",
                   reflexive ? "completion is not spatial and completely distributive"
                             : "relation is not reflexive");
  }

  rep["checks"] = checks.entries;
  out.any_disagreement = checks.any_disagreement;
  return out;
}

nlohmann::ordered_json oracle_report(const Relation& r, const AnalyzeOptions& opts) {
  const Universe& u = r.universe();
  json rep;
  rep["schema_version"] = kReportSchemaVersion;
  rep["universe"] = u.labels();
  rep["mode"] = "oracle";

  if (r.size() > 20 || r.size() > opts.caps.rs_cap)
    throw capacity_error("oracle sweep: universe size " + std::to_string(r.size()) +
                         " exceeds the cap of " +
                         std::to_string(std::min<std::size_t>(20, opts.caps.rs_cap)));

  // Families by plain subset sweep, no union closure.
  json fams = json::object();
  for (Op op : kAllOps) {
    std::vector<ElementSet> vals;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << r.size()); ++m)
      vals.push_back(apply(r, op, ElementSet(r.size(), m)));
    std::sort(vals.begin(), vals.end(), ElementSet::family_less);
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    json a = json::array();
    for (const auto& v : vals) a.push_back(set_json(v, u));
    fams[op_name(op)] = a;
  }
  rep["families"] = fams;

  if (opts.with_dmrs && r.size() <= opts.caps.dm_cap) {
    RoughStructure s(r, opts.caps);
    const FiniteLattice& l = s.lattice();
    rep["dmrs"] = pairs_json(s.dmrs(), u);
    rep["lattice"] = json{{"join_irreducibles", indices_json(s, l.join_irreducibles())},
                          {"join_primes", indices_json(s, l.join_primes())},
                          {"atoms", indices_json(s, l.atoms())},
                          {"distributive", l.is_distributive()},
                          {"spatial", l.is_spatial()}};
  }
  return rep;
}

std::string summary_text(const AnalysisResult& a) {
  const json& r = a.report;
  std::string out;
  out += "universe size: " + std::to_string(r["universe"].size()) + "\n";
  out += "predicates:";
  for (auto& [k, v] : r["predicates"].items())
    if (v.get<bool>()) out += " " + k;
  out += "\n";
  if (r.contains("rs_size"))
    out += "|RS| = " + std::to_string(r["rs_size"].get<std::size_t>()) +
           ", |DM(RS)| = " + std::to_string(r["dmrs_size"].get<std::size_t>()) + "\n";
  if (r.contains("algebra")) {
    out += "algebra:";
    for (auto& [k, v] : r["algebra"].items())
      if (v.is_object() && v.contains("value"))
        out += " " + k + "=" + (v["value"].get<bool>() ? "true" : "false");
    out += "\n";
  }
  std::size_t ran = 0, agreed = 0, skipped = 0;
  for (const auto& c : r["checks"]) {
    if (c["skipped"].get<bool>()) {
      ++skipped;
      continue;
    }
    ++ran;
    if (c["agree"].get<bool>()) ++agreed;
  }
  out += "checks: " + std::to_string(agreed) + "/" + std::to_string(ran) +
         " agree, " + std::to_string(skipped) + " skipped\n";
  return out;
}

}  // namespace roughlat
