#pragma once

#include <map>

#include <json.hpp>

#include "roughlat/algebras.hpp"
#include "roughlat/dot.hpp"

namespace roughlat {

inline constexpr int kReportSchemaVersion = 1;

struct AnalyzeOptions {
  RoughOptions caps;
  bool with_dmrs = true;
};

/// Everything the command line needs from one analysis run: the JSON
/// document, the lattice for DOT output, quick flag access for check mode,
/// and whether any formula/oracle comparison disagreed.
struct AnalysisResult {
  nlohmann::ordered_json report;
  std::optional<RoughStructure> structure;  // absent when dmrs was skipped
  std::map<std::string, bool> flags;
  bool any_disagreement = false;
};

/// Deterministic: two runs over the same input produce identical bytes.
AnalysisResult analyze(const Relation& r, const AnalyzeOptions& opts = {});

/// Only the generic lattice computations (families by subset sweep,
/// irreducibles, atoms and flags from the order tables), for differential
/// runs against the closed forms in `analyze`.
nlohmann::ordered_json oracle_report(const Relation& r, const AnalyzeOptions& opts = {});

std::string summary_text(const AnalysisResult& a);

}  // namespace roughlat
