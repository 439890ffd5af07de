#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ampcal/born.hpp"
#include "ampcal/dsl.hpp"
#include "ampcal/error.hpp"
#include "ampcal/evaluate.hpp"
#include "ampcal/format.hpp"
#include "ampcal/hilbert.hpp"
#include "ampcal/law_check.hpp"
#include "ampcal/rules.hpp"

namespace {

using namespace ampcal;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::syntax, "cannot read file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void render_tree(const ProcessExpr& e, int indent, std::string& out) {
  out.append(indent, ' ');
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, AtomicStep>) {
          out += "Atomic " + n.from.str() + " -> " + n.to.str() + "\n";
        } else if constexpr (std::is_same_v<T, SeriesComp>) {
          out += "Series\n";
          render_tree(*n.first, indent + 2, out);
          render_tree(*n.second, indent + 2, out);
        } else {
          out += "Parallel\n";
          for (const auto& b : n.branches) render_tree(*b, indent + 2, out);
        }
      },
      e.node());
}

int cmd_parse(const std::string& diagram_path) {
  ExprPtr e = parse_diagram(read_file(diagram_path));
  std::string out = print_diagram(*e);
  out += "\n";
  render_tree(*e, 0, out);
  std::cout << out;
  return 0;
}

int cmd_eval(const std::string& diagram_path, const std::string& amps_path,
             const std::string& selector, double alpha) {
  ExprPtr e = parse_diagram(read_file(diagram_path));
  AmplitudeTable table = parse_amp_table(read_file(amps_path));
  CompositionRule rule = rule_from_selector(selector);
  Amp amp = eval_diagram(*e, table, rule);
  std::cout << "amplitude = " << format_amp(amp) << "\n";
  std::cout << "probability = "
            << format_compact(probability(amp, BornExponent(alpha))) << "\n";
  return 0;
}

int cmd_check(const std::string& selector, std::size_t samples,
              std::uint64_t seed, double tol) {
  CompositionRule rule = rule_from_selector(selector);
  CheckConfig cfg{samples, seed, tol};
  bool all_pass = true;
  for (const LawReport& report : run_full_suite(rule, cfg)) {
    std::cout << render_report(report) << "\n";
    all_pass = all_pass && report.pass;
  }
  return all_pass ? 0 : 1;
}

int cmd_exponent(const std::string& moduli_csv, double tol) {
  std::vector<double> moduli;
  std::stringstream ss(moduli_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw Error(Errc::syntax, "bad modulus '" + item + "'");
    }
    while (used < item.size() && std::isspace(
               static_cast<unsigned char>(item[used]))) {
      ++used;
    }
    if (used != item.size()) {
      throw Error(Errc::syntax, "bad modulus '" + item + "'");
    }
    moduli.push_back(value);
  }
  BornExponent alpha = solve_exponent(moduli, tol);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12f", alpha.alpha);
  std::cout << "alpha = " << buf << "\n";
  return 0;
}

int cmd_oracle_compare(const std::string& diagram_path, int dim,
                       std::uint64_t seed) {
  ExprPtr e = parse_diagram(read_file(diagram_path));
  std::vector<StateLabel> labels = collect_labels(*e);
  std::vector<std::vector<StateLabel>> groups = parallel_filter_groups(*e);
  HilbertModel model = random_model(dim, labels, groups, seed);
  AmplitudeTable table = table_from_model(model, atomic_legs(*e));
  Amp via_rule = eval_diagram(*e, table, canonical_rule());
  Amp via_oracle = oracle_eval(model, *e);
  double diff = std::abs(via_rule - via_oracle);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", diff);
  std::cout << "evaluator = " << format_amp(via_rule) << "\n";
  std::cout << "oracle = " << format_amp(via_oracle) << "\n";
  std::cout << "difference = " << buf << "\n";
  return diff <= 1e-10 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"series-parallel amplitude calculus"};
  app.require_subcommand(1);

  std::string diagram_path, amps_path, selector, moduli_csv;
  std::string rule_selector = "canonical";
  double alpha = 2.0;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  double exp_tol = 1e-10;
  int dim = 4;
  std::uint64_t oracle_seed = 42;

  auto* parse_cmd = app.add_subcommand("parse", "parse a diagram file");
  parse_cmd->add_option("diagram", diagram_path, "diagram file")->required();

  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate a diagram over an amplitude table");
  eval_cmd->add_option("diagram", diagram_path, "diagram file")->required();
  eval_cmd->add_option("amplitudes", amps_path, "amplitude table file")
      ->required();
  eval_cmd->add_option("--rule", rule_selector, "composition rule selector");
  eval_cmd->add_option("--alpha", alpha, "probability exponent");

  auto* check_cmd =
      app.add_subcommand("check", "verify the consistency laws of a rule");
  check_cmd->add_option("rule", selector, "composition rule selector")
      ->required();
  check_cmd->add_option("--samples", samples, "sample count");
  check_cmd->add_option("--seed", seed, "sampling seed");
  check_cmd->add_option("--tol", tol, "relative tolerance");

  auto* exp_cmd = app.add_subcommand(
      "exponent", "solve for the exponent in Pr = |x|^alpha");
  exp_cmd->add_option("--moduli", moduli_csv, "comma-separated moduli")
      ->required();
  exp_cmd->add_option("--tol", exp_tol, "bisection tolerance");

  auto* oracle_cmd = app.add_subcommand(
      "oracle-compare", "compare the evaluator against a random model");
  oracle_cmd->add_option("diagram", diagram_path, "diagram file")->required();
  oracle_cmd->add_option("--dim", dim, "model dimension");
  oracle_cmd->add_option("--seed", oracle_seed, "model seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(diagram_path);
    if (eval_cmd->parsed()) {
      if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw Error(Errc::domain_violation, "--alpha must be positive");
      }
      return cmd_eval(diagram_path, amps_path, rule_selector, alpha);
    }
    if (check_cmd->parsed()) {
      if (samples < 1) {
        throw Error(Errc::domain_violation, "--samples must be at least 1");
      }
      if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw Error(Errc::domain_violation, "--tol must be positive");
      }
      return cmd_check(selector, samples, seed, tol);
    }
    if (exp_cmd->parsed()) {
      if (!(exp_tol > 0.0) || !std::isfinite(exp_tol)) {
        throw Error(Errc::domain_violation, "--tol must be positive");
      }
      return cmd_exponent(moduli_csv, exp_tol);
    }
    if (oracle_cmd->parsed()) {
      if (dim < 2) {
        throw Error(Errc::domain_violation, "--dim must be at least 2");
      }
      return cmd_oracle_compare(diagram_path, dim, oracle_seed);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
