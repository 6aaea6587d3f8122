#include "roughlat/dot.hpp"

namespace roughlat {

std::string render_dot(const DotGraph& g) {
  std::string out = "digraph " + g.name + " {\n";
  out += "  rankdir=BT;\n";
  out += "  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < g.node_labels.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + g.node_labels[i] + "\"";
    if (i < g.filled.size() && g.filled[i]) out += ", style=filled";
    out += "];\n";
  }
  for (const auto& [lo, hi] : g.edges)
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

DotGraph dot_of(const RoughStructure& s) {
  DotGraph g;
  g.name = "dmrs";
  const Universe& u = s.universe();
  g.node_labels.reserve(s.dmrs().size());
  for (const auto& p : s.dmrs()) g.node_labels.push_back(to_string(p, u));
  g.filled.assign(s.dmrs().size(), false);
  for (auto j : s.lattice().join_irreducibles()) g.filled[j] = true;
  g.edges = s.lattice().covers();
  return g;
}

DotGraph dot_of(const SetFamily& f, const Universe& u) {
  DotGraph g;
  g.name = std::string("family_") + op_name(f.origin());
  FiniteLattice l = FiniteLattice::from_poset(poset_from_family(f));
  for (const auto& m : f.members()) g.node_labels.push_back(to_string(m, u));
  g.filled.assign(f.size(), false);
  for (auto j : l.join_irreducibles()) g.filled[j] = true;
  g.edges = l.covers();
  return g;
}

}  // namespace roughlat
