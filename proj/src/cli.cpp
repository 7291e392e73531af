#include "cuntz/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cuntz/errors.hpp"
#include "cuntz/expr.hpp"

namespace cuntz::cli {

namespace {

struct EvalOptions {
  int n = 2;
  bool reduce = false;
  std::string input;
};

struct CheckOptions {
  std::string name;
  int n = 2;
  int level = -1;
  std::uint64_t seed = 0;
  bool json = false;
  std::string mutation = "none";
};

// Evaluates one statement and prints its value; `let` prints `name = value`.
void run_statement(Evaluator& ev, std::string_view text, int line, bool reduce, std::ostream& out) {
  Statement st = parse_statement(text, ev.rank(), line);
  Value v = ev.run(st);
  if (reduce) {
    if (auto* e = std::get_if<Element>(&v)) v = canonical_reduce(*e);
  }
  if (st.binding) out << *st.binding << " = ";
  out << to_string(v) << "\n";
}

bool blank_or_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

int cmd_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err) {
  Evaluator ev(opt.n);
  std::error_code ec;
  const bool is_file = std::filesystem::is_regular_file(opt.input, ec);
  try {
    if (!is_file) {
      run_statement(ev, opt.input, 1, opt.reduce, out);
      return kOk;
    }
    std::ifstream file(opt.input);
    if (!file) {
      err << "error: cannot read " << opt.input << "\n";
      return kUsageError;
    }
    std::string line;
    int number = 0;
    while (std::getline(file, line)) {
      ++number;
      if (blank_or_comment(line)) continue;
      run_statement(ev, line, number, opt.reduce, out);
    }
    return kOk;
  } catch (const ParseError& e) {
    err << (is_file ? opt.input + ":" : std::string()) << "parse error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsageError;
}

std::vector<CheckReport> select_checks(const CheckOptions& opt, const Model& model) {
  if (opt.name == "all") return run_all(model, opt.level, opt.seed);
  std::vector<CheckReport> out;
  if (opt.name == "prop6") {
    out.push_back(check_prop6(model, opt.level));
  } else if (opt.name == "prop8") {
    out.push_back(check_prop8(model, opt.level));
  } else if (opt.name == "prop9") {
    for (int i = 1; i <= opt.n; ++i) out.push_back(check_prop9(opt.n, i, opt.level));
  } else if (opt.name == "prop10") {
    out.push_back(check_prop10(model, opt.level, opt.seed));
  } else if (opt.name == "lemma5") {
    for (const Matrix& u : lemma5_instances(opt.n)) out.push_back(check_lemma5(u, opt.level));
  }
  for (auto& r : out) r.params.seed = opt.seed;
  return out;
}

int cmd_check(CheckOptions opt, std::ostream& out, std::ostream& err) {
  if (opt.level < 0) opt.level = opt.n == 2 ? 2 : 1;
  auto mutation = parse_mutation(opt.mutation);
  if (!mutation) {
    err << "error: unknown mutation '" << opt.mutation << "'\n";
    return kUsageError;
  }
  std::vector<CheckReport> reports;
  try {
    reports = select_checks(opt, Model::mutated(opt.n, *mutation));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  const bool passed =
      std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });

  if (opt.json) {
    out << report_document("check " + opt.name, {opt.n, opt.level, opt.seed}, *mutation, reports)
               .dump(2)
        << "\n";
  } else {
    out << summary_table(reports);
    for (const auto& r : reports) {
      for (const auto& w : r.witnesses) {
        if (!w.holds) out << "  " << r.name << ": " << w.claim << "\n    lhs: " << w.lhs << "\n    rhs: " << w.rhs << "\n";
      }
    }
  }
  return passed ? kOk : kCheckFailed;
}

int cmd_repl(int n, std::istream& in, std::ostream& out, std::ostream& err, bool interactive) {
  Evaluator ev(n);
  std::string line;
  int number = 0;
  while (true) {
    if (interactive) out << "cuntz> " << std::flush;
    if (!std::getline(in, line)) break;
    ++number;
    if (blank_or_comment(line)) continue;
    if (line == ":quit" || line == ":q") break;
    try {
      run_statement(ev, line, number, true, out);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
    }
  }
  return kOk;
}

}  // namespace

nlohmann::json report_document(const std::string& command, const CheckParams& params,
                               Mutation mutation, const std::vector<CheckReport>& reports) {
  nlohmann::json witnesses = nlohmann::json::array();
  nlohmann::json checks = nlohmann::json::array();
  bool passed = true;
  for (const auto& r : reports) {
    passed = passed && r.passed();
    for (const auto& w : r.witnesses) {
      witnesses.push_back(
          {{"check", r.name}, {"claim", w.claim}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"holds", w.holds}});
    }
    checks.push_back({{"name", r.name},
                      {"n", r.params.n},
                      {"level", r.params.level},
                      {"verdict", r.passed() ? "pass" : "fail"},
                      {"notes", r.notes}});
  }
  return {{"command", command},
          {"params",
           {{"n", params.n},
            {"level", params.level},
            {"seed", params.seed},
            {"mutation", to_string(mutation)}}},
          {"verdict", passed ? "pass" : "fail"},
          {"witnesses", witnesses},
          {"checks", checks}};
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, bool interactive) {
  CLI::App app{"Exact computations in the dense subalgebra of the Cuntz algebra O_n", "cuntz"};
  app.require_subcommand(1);

  EvalOptions eval_opt;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression or a file of statements");
  eval_cmd->add_option("--n", eval_opt.n, "Rank of the algebra")->required()->check(CLI::Range(2, 16));
  eval_cmd->add_flag("--reduce", eval_opt.reduce, "Print elements in canonical display form");
  eval_cmd->add_option("input", eval_opt.input, "Expression text or path to a file")->required();

  CheckOptions check_opt;
  auto* check_cmd = app.add_subcommand("check", "Run theorem checks");
  check_cmd->add_option("name", check_opt.name, "prop6|prop8|prop9|prop10|lemma5|all")
      ->required()
      ->check(CLI::IsMember({"prop6", "prop8", "prop9", "prop10", "lemma5", "all"}));
  check_cmd->add_option("--n", check_opt.n, "Rank of the algebra")->required()->check(CLI::Range(2, 8));
  check_cmd->add_option("--level", check_opt.level, "Word-length bound for basis sweeps")
      ->check(CLI::Range(0, 6));
  check_cmd->add_option("--seed", check_opt.seed, "Seed for random samples");
  check_cmd->add_flag("--json", check_opt.json, "Emit a JSON report");
  check_cmd->add_option("--mutate", check_opt.mutation,
                        "Fault injection: psi-weight|psi-unit-weight|phi-drop-term");

  int repl_n = 2;
  auto* repl_cmd = app.add_subcommand("repl", "Read statements from standard input");
  repl_cmd->add_option("--n", repl_n, "Rank of the algebra")->required()->check(CLI::Range(2, 16));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  if (*eval_cmd) return cmd_eval(eval_opt, out, err);
  if (*check_cmd) return cmd_check(check_opt, out, err);
  return cmd_repl(repl_n, in, out, err, interactive);
}

}  // namespace cuntz::cli
