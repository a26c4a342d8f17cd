// Command-line surface: compute graphs and emit text/JSON/DOT, generate the
// family tables, verify them against the embedded gold data, and run the
// named property suites.
//
// Exit codes: 0 success, 1 data mismatch or property failure, 2 usage error,
// 3 resource budget exceeded, 4 internal invariant violation.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "xigraph/checks.hpp"
#include "xigraph/families.hpp"
#include "xigraph/gold.hpp"
#include "xigraph/groups.hpp"
#include "xigraph/modgraph.hpp"
#include "xigraph/serialize.hpp"
#include "xigraph/tables.hpp"
#include "xigraph/xicore.hpp"

using namespace xigraph;

namespace {

struct ComputeArgs {
  std::string family = "gamma0";
  uint32_t level = 0;
  std::string conjugation = "std";
  std::string group_file;
  std::string format = "text";
};

struct TableArgs {
  std::string family = "x0";
  uint32_t min_n = 1;
  uint32_t max_n = 0;
  std::string format = "csv";
  unsigned threads = 0;
};

struct VerifyArgs {
  std::string family = "all";
  uint32_t max_n = 0;
  unsigned threads = 0;
};

struct CheckArgs {
  std::string suite;
  uint32_t max_n = 0;
};

std::string normalize_table_family(const std::string& f) {
  if (f == "gamma0" || f == "x0") return "x0";
  if (f == "gamma1" || f == "x1") return "x1";
  if (f == "gamma" || f == "gamma-minus" || f == "xpm") return "xpm";
  if (f == "split" || f == "xsplit") return "xsplit";
  throw CLI::ValidationError("--family", "unknown table family: " + f);
}

int run_compute(const ComputeArgs& args) {
  uint32_t level = args.level;
  std::string conj_name = args.conjugation;
  nlohmann::json custom_echo = nullptr;

  if (args.family == "gamma-minus") conj_name = "inv";

  nlohmann::json group_json = nullptr;
  if (args.family == "custom") {
    if (args.group_file.empty())
      throw CLI::ValidationError("--group-file", "required for --family custom");
    std::ifstream in(args.group_file);
    if (!in) throw CLI::ValidationError("--group-file", "cannot open " + args.group_file);
    in >> group_json;
    custom_echo = group_json;
    uint32_t file_level = group_json.at("level").get<uint32_t>();
    if (level != 0 && level != file_level)
      throw CLI::ValidationError("--level", "conflicts with the group file's level");
    level = file_level;
  }
  if (level == 0) throw CLI::ValidationError("--level", "a positive level is required");

  RingCtx R(level);

  nlohmann::json conj_doc = conj_name;
  Conjugation conj = std_conjugation(R);
  if (args.family == "custom" && group_json.contains("conjugation")) {
    const auto& cj = group_json.at("conjugation");
    if (cj.is_string()) {
      conj_name = cj.get<std::string>();
      conj_doc = conj_name;
      conj = conj_name == "inv" ? inv_conjugation(R) : std_conjugation(R);
    } else {
      conj = Conjugation(Mat2(cj.at(0).at(0).get<int64_t>(), cj.at(0).at(1).get<int64_t>(),
                              cj.at(1).at(0).get<int64_t>(), cj.at(1).at(1).get<int64_t>(), R));
      conj_doc = cj;
    }
  } else if (conj_name == "inv") {
    conj = inv_conjugation(R);
  } else if (conj_name != "std") {
    throw CLI::ValidationError("--conjugation", "expected std or inv");
  }

  SubgroupSpec spec = [&]() -> SubgroupSpec {
    if (args.family == "custom") {
      std::vector<Mat2> gens;
      for (const auto& g : group_json.at("generators"))
        gens.push_back(Mat2(g.at(0).at(0).get<int64_t>(), g.at(0).at(1).get<int64_t>(),
                            g.at(1).at(0).get<int64_t>(), g.at(1).at(1).get<int64_t>(), R));
      return custom_group(R, gens, conj);
    }
    if (args.family == "full") return family_group(Family::full, R);
    if (args.family == "gamma" || args.family == "gamma-minus")
      return family_group(Family::gamma, R);
    if (args.family == "gamma1") return family_group(Family::gamma1, R);
    if (args.family == "gamma0") return family_group(Family::gamma0, R);
    if (args.family == "split") return family_group(Family::split, R);
    throw CLI::ValidationError("--family", "unknown family: " + args.family);
  }();

  ModularGraph xi = build_xi(spec, conj);
  verify_cyclic(xi);
  GraphDocument doc =
      make_document(xi, level, args.family == "gamma-minus" ? "gamma" : args.family, conj_doc,
                    custom_echo);

  if (args.format == "json")
    std::cout << to_json(doc).dump(2) << "\n";
  else if (args.format == "dot")
    std::cout << to_dot(doc, "xi_" + doc.family + "_" + std::to_string(level));
  else if (args.format == "text")
    std::cout << to_text(doc);
  else
    throw CLI::ValidationError("--format", "expected text, json or dot");
  return 0;
}

// Column layout mirrors the embedded gold CSV schema: xpm carries
// p_plus/p_minus, xsplit carries e, x0/x1 neither.
int run_table(const TableArgs& args) {
  std::string family = normalize_table_family(args.family);
  uint32_t max_n = args.max_n == 0 ? default_gold_max(family) : args.max_n;
  std::vector<TableRow> rows = compute_table(family, args.min_n, max_n, true, args.threads);
  bool pm = family == "xpm";
  bool with_e = family == "xsplit";
  if (args.format == "csv") {
    std::cout << "family,N,g,pi0," << (pm ? "p_plus,p_minus" : with_e ? "p,e" : "p") << "\n";
    for (const TableRow& r : rows) {
      std::cout << family << "," << r.n << "," << r.g << "," << r.pi0 << "," << r.p;
      if (pm) std::cout << "," << r.p_minus;
      if (with_e) std::cout << "," << r.e;
      std::cout << "\n";
    }
  } else if (args.format == "md") {
    std::cout << "| N | g | pi0 | " << (pm ? "p+ | p- |" : with_e ? "p | e |" : "p |") << "\n";
    std::cout << (pm || with_e ? "|---|---|---|---|---|" : "|---|---|---|---|") << "\n";
    for (const TableRow& r : rows) {
      std::cout << "| " << r.n << " | " << r.g << " | " << r.pi0 << " | " << r.p << " |";
      if (pm) std::cout << " " << r.p_minus << " |";
      if (with_e) std::cout << " " << r.e << " |";
      std::cout << "\n";
    }
  } else {
    throw CLI::ValidationError("--format", "expected csv or md");
  }
  return 0;
}

int run_verify(const VerifyArgs& args) {
  std::vector<std::string> families;
  if (args.family == "all")
    families = {"x0", "x1", "xpm", "xsplit"};
  else
    families = {normalize_table_family(args.family)};
  bool ok = true;
  for (const std::string& f : families) {
    uint32_t max_n = args.max_n == 0 ? default_gold_max(f) : std::min(args.max_n, default_gold_max(f));
    auto mismatches = verify_against_gold(f, max_n, true, args.threads);
    if (mismatches.empty()) {
      std::cout << f << ": " << max_n << " rows ok\n";
    } else {
      ok = false;
      for (const GoldMismatch& m : mismatches) std::cout << "MISMATCH " << m.str() << "\n";
    }
  }
  return ok ? 0 : 1;
}

int run_check(const CheckArgs& args) {
  CheckReport rep = run_check_suite(args.suite, args.max_n);
  std::cout << rep.summary() << "\n";
  for (const std::string& f : rep.failures) std::cout << "FAIL " << f << "\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"real-component graphs of modular curves"};
  app.require_subcommand(1);

  ComputeArgs cargs;
  CLI::App* compute = app.add_subcommand("compute", "compute one graph");
  compute->add_option("--family", cargs.family,
                      "gamma|gamma-minus|gamma1|gamma0|split|full|custom");
  compute->add_option("--level", cargs.level, "level N");
  compute->add_option("--conjugation", cargs.conjugation, "std|inv");
  compute->add_option("--group-file", cargs.group_file, "custom group JSON file");
  compute->add_option("--format", cargs.format, "text|json|dot");

  TableArgs targs;
  CLI::App* table = app.add_subcommand("table", "emit a family table");
  table->add_option("--family", targs.family, "x0|x1|xpm|xsplit");
  table->add_option("--min", targs.min_n, "first level");
  table->add_option("--max", targs.max_n, "last level (default: gold range)");
  table->add_option("--format", targs.format, "csv|md");
  table->add_option("--threads", targs.threads, "worker threads (0 = auto)");

  VerifyArgs vargs;
  CLI::App* verify = app.add_subcommand("verify", "diff computed tables against gold data");
  verify->add_option("--family", vargs.family, "x0|x1|xpm|xsplit|all");
  verify->add_option("--max", vargs.max_n, "last level (default: gold range)");
  verify->add_option("--threads", vargs.threads, "worker threads (0 = auto)");

  CheckArgs kargs;
  CLI::App* check = app.add_subcommand("check", "run a property suite");
  check->add_option("--suite", kargs.suite,
                    "rho|cycles|odd-regular|oracle|crt|preimage|shortcut|count-identity")
      ->required();
  check->add_option("--max", kargs.max_n, "suite-specific bound (0 = default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*compute) return run_compute(cargs);
    if (*table) return run_table(targs);
    if (*verify) return run_verify(vargs);
    if (*check) return run_check(kargs);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const valence_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
