#pragma once

// Command-line front end.  Exit codes: 0 all entries pass, 1 some entry
// fails, 2 input or validation error.

#include "qgw/io.hpp"
#include "qgw/relations.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace qgw {

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::string example;  // one of example or input
  std::string input;
  std::vector<std::string> suite;  // empty = all
  double tol = kDefaultTol;
  std::vector<double> t_samples = default_t_samples();
  OutputFormat format = OutputFormat::Text;
  std::string out;  // empty = stdout
};

// "all" or a comma separated list of relation ids.
inline std::vector<std::string> parse_suite(const std::string& text) {
  if (text == "all" || text.empty()) return {};
  std::vector<std::string> ids;
  std::stringstream ss(text);
  std::string item;
  const auto known = relation_ids();
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    if (std::find(known.begin(), known.end(), item) == known.end())
      throw Error(ErrorKind::InvalidInput, "unknown relation id " + item);
    ids.push_back(item);
  }
  if (ids.empty()) throw Error(ErrorKind::InvalidInput, "empty suite selection");
  return ids;
}

inline std::string format_text(const VerificationReport& r, const std::vector<RelationCatalogEntry>& cat) {
  std::ostringstream os;
  os << "example   " << r.example << "\n";
  os << "dim M     " << r.dim << "\n";
  os << "dim M^    " << r.dual_dim << "\n";
  os << "tol       " << r.tol << "\n";
  os << "t samples";
  for (double t : r.t_samples) os << " " << t;
  os << "\n";
  size_t passed = 0;
  for (const auto& e : r.entries) passed += e.pass ? 1 : 0;
  os << "entries   " << passed << "/" << r.entries.size() << " pass\n\n";

  std::vector<const EntryReport*> order;
  for (const auto& e : r.entries) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(),
                   [](const EntryReport* a, const EntryReport* b) { return a->residual > b->residual; });
  os << "worst residuals\n";
  for (size_t i = 0; i < std::min<size_t>(5, order.size()); ++i)
    os << "  " << std::left << std::setw(12) << order[i]->id << std::scientific << std::setprecision(3)
       << order[i]->residual << std::defaultfloat << (order[i]->pass ? "" : "  FAIL") << "\n";

  bool header = false;
  for (const auto& e : r.entries) {
    if (e.pass) continue;
    if (!header) os << "\nfailing entries\n";
    header = true;
    std::string desc;
    for (const auto& c : cat)
      if (c.id == e.id) desc = c.description;
    os << "  " << e.id << "  " << desc << "\n    " << e.paper_ref << "\n    residual " << e.residual << "\n";
  }
  bool notes = false;
  for (const auto& e : r.entries) {
    if (e.note.empty()) continue;
    if (!notes) os << "\nnotes\n";
    notes = true;
    os << "  " << std::left << std::setw(12) << e.id << e.note << "\n";
  }
  return os.str();
}

inline Specimen specimen_for(const RunConfig& cfg) {
  if (!cfg.example.empty()) return build_example(cfg.example);
  LoadedSpec l = load_spec(cfg.input);
  if (!l.delta) throw Error(ErrorKind::InvalidInput, cfg.input + ": no coproduct given");
  return {l.name.empty() ? cfg.input : l.name, l.alg, *l.delta};
}

inline int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.example.empty() == cfg.input.empty()) {
    err << "error: give exactly one of --example and --input\n";
    return 2;
  }
  if (!(cfg.tol > 0.0)) {
    err << "error: tol must be positive\n";
    return 2;
  }
  VerificationReport report;
  try {
    Specimen s = specimen_for(cfg);
    auto q = QuantumGroupData::build(s.alg, s.delta, s.name, std::nullopt, cfg.tol);
    auto d = dual_quantum_group(q);
    report = run_suite(q, d, cfg.tol, cfg.t_samples, cfg.suite);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  std::string text = cfg.format == OutputFormat::Json ? to_json(report).dump(2) + "\n"
                                                      : format_text(report, relation_catalog());
  if (cfg.out.empty()) {
    out << text;
  } else {
    try {
      write_text_file(cfg.out, text);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return report.all_pass() ? 0 : 1;
}

inline int cmd_export(const std::string& example, const std::string& path, std::ostream& err) {
  try {
    write_text_file(path, specimen_to_json(build_example(example)).dump(2) + "\n");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"finite quantum group relation checker"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string suite = "all";
  std::string format = "text";
  auto* check = app.add_subcommand("check", "run the pipeline and the relation suite");
  auto* ex = check->add_option("--example", cfg.example, "shipped example name");
  auto* in = check->add_option("--input", cfg.input, "algebra JSON file");
  ex->excludes(in);
  check->add_option("--suite", suite, "all or comma separated relation ids");
  check->add_option("--tol", cfg.tol, "residual tolerance")->check(CLI::PositiveNumber);
  check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  check->add_option("--out", cfg.out, "write the report here");

  std::string exp_name, exp_path;
  auto* exp = app.add_subcommand("export", "write a shipped example as algebra JSON");
  exp->add_option("example", exp_name, "example name")->required();
  exp->add_option("path", exp_path, "output file")->required();

  auto* list = app.add_subcommand("list", "list examples and relation ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  if (*check) {
    try {
      cfg.suite = parse_suite(suite);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
    return cmd_check(cfg, out, err);
  }
  if (*exp) return cmd_export(exp_name, exp_path, err);
  if (*list) {
    out << "examples:\n";
    for (const auto& e : example_catalog()) out << "  " << e.name << (e.positive ? "" : "  (negative specimen)") << "\n";
    out << "relations:\n";
    for (const auto& e : relation_catalog()) out << "  " << std::left << std::setw(12) << e.id << e.description << "\n";
    return 0;
  }
  return 2;
}

}  // namespace qgw
