#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "roughlat/relation.hpp"

namespace roughlat {

/// Canonical form of a relation file: subjects in universe order, targets
/// sorted by universe index. parse_document(serialize(d)) == d.
///
/// Grammar, line oriented:
///   # comment to end of line
///   universe: <label> <label> ...
///   @reflexive            (optional; adds all loops after parsing)
///   <label>: <label> ...  (one line per universe element, targets may be empty)
struct RelationDocument {
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> targets;  // parallel to universe
  bool reflexive_close = false;

  bool operator==(const RelationDocument&) const = default;
};

/// Throws input_error with a 1-based line number on malformed input.
RelationDocument parse_document(std::string_view text);

std::string serialize(const RelationDocument& d);

Relation to_relation(const RelationDocument& d);

inline Relation parse_relation(std::string_view text) {
  return to_relation(parse_document(text));
}

}  // namespace roughlat
