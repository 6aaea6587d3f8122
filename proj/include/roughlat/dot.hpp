#pragma once

#include <string>
#include <vector>

#include "roughlat/roughsets.hpp"

namespace roughlat {

/// Node labels plus cover edges of a finite lattice, ready for rendering.
struct DotGraph {
  std::string name = "lattice";
  std::vector<std::string> node_labels;
  std::vector<bool> filled;  // join-irreducible marks
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // lower -> upper, sorted
};

/// Graphviz text, byte-deterministic: nodes in element order, one edge per
/// cover pair oriented lower to upper, ranked bottom to top.
std::string render_dot(const DotGraph& g);

/// The completion lattice with join-irreducibles filled.
DotGraph dot_of(const RoughStructure& s);

/// An approximation family under inclusion.
DotGraph dot_of(const SetFamily& f, const Universe& u);

}  // namespace roughlat
