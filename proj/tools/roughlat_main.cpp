#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "roughlat/parse.hpp"
#include "roughlat/report.hpp"

namespace {

// Exit codes: 0 ok, 1 property false (check mode), 2 input error,
// 3 capacity, 4 internal theorem violation.
enum ExitCode { kOk = 0, kPropertyFalse = 1, kInputError = 2, kCapacity = 3, kDefect = 4 };

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw roughlat::input_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw roughlat::input_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rough set lattice analyzer"};
  app.require_subcommand(1);

  std::string file, json_path, dot_path, property;
  std::size_t max_n = 0;
  bool no_dmrs = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "full analysis of a relation file");
  analyze_cmd->add_option("file", file, "relation file, '-' for stdin")->required();
  analyze_cmd->add_option("--json", json_path, "write the JSON report here ('-' = stdout)");
  analyze_cmd->add_option("--dot", dot_path, "write the completion Hasse diagram here");
  analyze_cmd->add_option("--max-n", max_n, "raise or lower both size caps");
  analyze_cmd->add_flag("--no-dmrs", no_dmrs, "skip the completion stages");

  auto* check_cmd = app.add_subcommand("check", "evaluate one property; exit code is the verdict");
  check_cmd->add_option("file", file, "relation file, '-' for stdin")->required();
  check_cmd->add_option("--property", property, "nelson|kleene|stone|distributive|spatial")
      ->required();
  check_cmd->add_option("--max-n", max_n, "raise or lower both size caps");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force sides only, for differential runs");
  oracle_cmd->add_option("file", file, "relation file, '-' for stdin")->required();
  oracle_cmd->add_option("--max-n", max_n, "raise or lower both size caps");

  CLI11_PARSE(app, argc, argv);

  try {
    roughlat::AnalyzeOptions opts;
    if (max_n != 0) {
      opts.caps.rs_cap = max_n;
      opts.caps.dm_cap = max_n;
    }
    opts.with_dmrs = !no_dmrs;

    const roughlat::Relation r = roughlat::parse_relation(read_input(file));

    if (oracle_cmd->parsed()) {
      std::cout << roughlat::oracle_report(r, opts).dump(2) << "\n";
      return kOk;
    }

    if (check_cmd->parsed()) {
      roughlat::AnalysisResult a = roughlat::analyze(r, opts);
      if (a.any_disagreement) {
        std::cerr << "internal check disagreement; see the JSON report\n";
        return kDefect;
      }
      auto it = a.flags.find(property);
      if (it == a.flags.end()) {
        std::cerr << "unknown property '" << property
                  << "' (expected nelson|kleene|stone|distributive|spatial)\n";
        return kInputError;
      }
      std::cout << property << ": " << (it->second ? "true" : "false") << "\n";
      return it->second ? kOk : kPropertyFalse;
    }

    roughlat::AnalysisResult a = roughlat::analyze(r, opts);
    if (!json_path.empty()) write_output(json_path, a.report.dump(2) + "\n");
    if (!dot_path.empty()) {
      if (!a.structure) throw roughlat::input_error("--dot needs the completion; drop --no-dmrs");
      write_output(dot_path, roughlat::render_dot(roughlat::dot_of(*a.structure)));
    }
    std::cout << roughlat::summary_text(a);
    if (a.any_disagreement) {
      std::cerr << "internal check disagreement; see the JSON report\n";
      return kDefect;
    }
    return kOk;
  } catch (const roughlat::defect_error& e) {
    std::cerr << "defect: " << e.what() << "\n";
    return kDefect;
  } catch (const roughlat::capacity_error& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const roughlat::precondition_error& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kInputError;
  } catch (const roughlat::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
