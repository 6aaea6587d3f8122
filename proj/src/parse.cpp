#include "roughlat/parse.hpp"

#include <algorithm>
#include <sstream>

namespace roughlat {

namespace {

std::string strip(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  std::size_t b = line.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = line.find_last_not_of(" \t\r");
  return std::string(line.substr(b, e - b + 1));
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw input_error("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

RelationDocument parse_document(std::string_view text) {
  RelationDocument d;
  bool saw_universe = false;
  std::vector<bool> seen_subject;
  std::vector<std::vector<std::string>> raw_targets;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    std::string line = strip(raw);
    if (line.empty()) continue;

    if (line == "@reflexive") {
      d.reflexive_close = true;
      continue;
    }

    std::size_t colon = line.find(':');
    if (colon == std::string::npos) fail(line_no, "expected '<label>: targets...'");
    std::string subject = strip(line.substr(0, colon));
    if (subject.empty()) fail(line_no, "missing subject before ':'");
    std::vector<std::string> ts = tokens(line.substr(colon + 1));

    if (subject == "universe") {
      if (saw_universe) fail(line_no, "duplicate universe line");
      if (ts.empty()) fail(line_no, "empty universe");
      saw_universe = true;
      d.universe = ts;
      for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j)
          if (ts[i] == ts[j]) fail(line_no, "duplicate universe label '" + ts[i] + "'");
      seen_subject.assign(ts.size(), false);
      raw_targets.assign(ts.size(), {});
      continue;
    }

    if (!saw_universe) fail(line_no, "the universe line must come first");
    auto find = [&](const std::string& l) -> std::size_t {
      auto it = std::find(d.universe.begin(), d.universe.end(), l);
      return it == d.universe.end() ? d.universe.size()
                                    : static_cast<std::size_t>(it - d.universe.begin());
    };
    std::size_t si = find(subject);
    if (si == d.universe.size()) fail(line_no, "unknown element label '" + subject + "'");
    if (seen_subject[si]) fail(line_no, "duplicate adjacency line for '" + subject + "'");
    seen_subject[si] = true;
    for (const auto& t : ts)
      if (find(t) == d.universe.size())
        fail(line_no, "unknown element label '" + t + "'");
    raw_targets[si] = ts;
  }

  if (!saw_universe) fail(line_no, "missing universe line");
  for (std::size_t i = 0; i < seen_subject.size(); ++i)
    if (!seen_subject[i])
      fail(line_no, "missing adjacency line for '" + d.universe[i] + "'");

  // Canonicalize target order to universe order, dropping duplicates.
  d.targets.resize(d.universe.size());
  for (std::size_t i = 0; i < raw_targets.size(); ++i) {
    std::vector<bool> has(d.universe.size(), false);
    for (const auto& t : raw_targets[i]) {
      auto it = std::find(d.universe.begin(), d.universe.end(), t);
      has[static_cast<std::size_t>(it - d.universe.begin())] = true;
    }
    for (std::size_t j = 0; j < has.size(); ++j)
      if (has[j]) d.targets[i].push_back(d.universe[j]);
  }
  return d;
}

std::string serialize(const RelationDocument& d) {
  std::string out = "universe:";
  for (const auto& l : d.universe) out += " " + l;
  out += "\n";
  if (d.reflexive_close) out += "@reflexive\n";
  for (std::size_t i = 0; i < d.universe.size(); ++i) {
    out += d.universe[i] + ":";
    for (const auto& t : d.targets[i]) out += " " + t;
    out += "\n";
  }
  return out;
}

Relation to_relation(const RelationDocument& d) {
  Universe u(d.universe);
  std::vector<ElementSet> nb(u.size(), ElementSet(u.size()));
  for (std::size_t i = 0; i < d.targets.size(); ++i)
    for (const auto& t : d.targets[i]) nb[i].insert(u.at(t));
  Relation r(std::move(u), std::move(nb));
  return d.reflexive_close ? r.reflexive_closure() : r;
}

}  // namespace roughlat
