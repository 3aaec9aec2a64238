#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "dynproof/checker.hpp"
#include "dynproof/demo.hpp"
#include "dynproof/dimacs.hpp"
#include "dynproof/dsr.hpp"
#include "dynproof/oracle.hpp"
#include "dynproof/text_format.hpp"

namespace {

using namespace dynproof;

constexpr int kAccepted = 0;
constexpr int kRejected = 1;
constexpr int kError = 2;

// Raised for anything that should end the run with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class F>
auto parse_file(const std::string& path, F parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string lit_dimacs(Lit l) {
  if (l.is_top()) return "t";
  if (l.is_bot()) return "f";
  return std::to_string(l.to_dimacs());
}

// Clauses as `1 -2 0`, cubes prefixed with `&`.
std::string constraint_dimacs(const StaticConstraint& c) {
  std::string out = c.is_cube() ? "& " : "";
  for (Lit l : c.literals()) out += lit_dimacs(l) + ' ';
  return out + '0';
}

void print_leaf(std::ostream& out, const StaticLeaf& leaf) {
  out << "failing leaf (no unit-propagation conflict):\n";
  for (const auto& c : leaf.premises) out << "  " << constraint_dimacs(c) << '\n';
  out << "  => " << constraint_dimacs(leaf.conclusion) << '\n';
}

std::string path_string(const std::vector<std::size_t>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(path[i]);
  }
  return out.empty() ? "-" : out;
}

std::string_view step_name(StepKind k) {
  switch (k) {
    case StepKind::Qed: return "qed";
    case StepKind::Elim: return "elim";
    case StepKind::Lem: return "lem";
    case StepKind::Ctx: return "ctx";
  }
  return "?";
}

std::string_view dsr_kind(const DsrInstruction& step) {
  switch (step.index()) {
    case 0: return "d";
    case 1: return "rup";
    case 2: return "sr";
    default: return "wsr";
  }
}

int run_check_dsr(const std::string& cnf_path, const std::string& proof_path,
                  const std::string& variant_name, bool refutation) {
  const auto variant = parse_sr_variant(variant_name);
  if (!variant) throw UsageError("unknown sr variant '" + variant_name + "'");
  const Cnf cnf = parse_file(cnf_path, parse_dimacs);
  const DsrProof proof = parse_file(proof_path, parse_dsr);
  const DerivationReport report = check_derivation(cnf.formula, proof, *variant);
  if (!report.valid()) {
    const std::size_t i = *report.first_invalid;
    std::cout << "rejected: instruction " << i + 1 << " (" << dsr_kind(proof[i]) << ' '
              << constraint_dimacs(clause_of(proof[i])) << ") fails its side condition\n";
    return kRejected;
  }
  if (refutation && !report.refutes) {
    std::cout << "rejected: valid derivation, but the final formula has no conflict\n";
    return kRejected;
  }
  std::cout << (refutation ? "accepted: refutation (" : "accepted: derivation (") << proof.size()
            << " instructions)\n";
  return kAccepted;
}

int run_translate(const std::string& cnf_path, const std::string& proof_path,
                  const std::string& out_path) {
  const Cnf cnf = parse_file(cnf_path, parse_dimacs);
  const DsrProof proof = parse_file(proof_path, parse_dsr);
  const std::string text = to_text(translate(cnf.formula, proof));
  if (out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text)) throw UsageError("cannot write '" + out_path + "'");
  }
  return kAccepted;
}

DynamicFormula goals_from(const std::string& goal_path) {
  if (goal_path.empty()) return DynamicFormula{DynamicConstraint(StaticConstraint::bottom())};
  return parse_file(goal_path, parse_dynamic_formula);
}

int run_check(const std::string& cnf_path, const std::string& proof_path,
              const std::string& goal_path, std::size_t budget, bool trace) {
  const Cnf cnf = parse_file(cnf_path, parse_dimacs);
  const ProofTerm proof = parse_file(proof_path, parse_proof_term);
  const DynamicFormula goals = goals_from(goal_path);
  if (!well_formed(proof)) throw UsageError(proof_path + ": proof term is not well formed");

  CheckOptions options;
  options.implication.leaf_budget = budget;
  if (trace) {
    options.observer = [](const StepEvent& e) {
      std::cerr << "[" << path_string(e.path) << "] " << step_name(e.kind)
                << "  database=" << e.state.database.size() << " goals=" << e.state.goals.size()
                << '\n';
    };
  }
  const CheckResult result = check_proof(proof, lift(cnf.formula), goals, options);
  if (result.accepted()) {
    std::cout << "accepted\n";
    return kAccepted;
  }
  std::ostream& out = result.verdict == Verdict::BudgetExceeded ? std::cerr : std::cout;
  out << (result.verdict == Verdict::BudgetExceeded ? "error: " : "rejected: ") << result.message
      << "\ninstruction path: " << path_string(result.path) << '\n';
  if (result.failing_goal) out << "goal: " << to_text(*result.failing_goal) << '\n';
  if (result.failing_leaf) print_leaf(out, *result.failing_leaf);
  return result.verdict == Verdict::BudgetExceeded ? kError : kRejected;
}

int run_implies(const std::string& path, std::size_t budget, bool trace) {
  const DynamicImplication impl = parse_file(path, parse_implication);
  ImplicationOptions options;
  options.leaf_budget = budget;
  options.record_trace = trace;
  const ImplicationResult result = dyn_implies(impl.lhs, impl.rhs, options);
  if (result.trace) std::cout << to_text(*result.trace);
  std::cout << verdict_name(result.verdict) << " (" << result.leaves << " leaves)\n";
  if (result.verdict == Verdict::BudgetExceeded) return kError;
  if (!result.accepted() && result.failing_leaf) print_leaf(std::cout, *result.failing_leaf);
  return result.accepted() ? kAccepted : kRejected;
}

int run_oracle(const std::string& cnf_path, const std::string& goal_path, std::size_t max_vars) {
  const Cnf cnf = parse_file(cnf_path, parse_dimacs);
  const DynamicFormula premises = lift(cnf.formula);
  const DynamicFormula goals = goals_from(goal_path);
  try {
    const auto universe = oracle::universe_of(max_vars, premises, goals);
    const bool entailed = oracle::entails(premises, goals, universe);
    std::cout << (entailed ? "entailed" : "not entailed") << " (" << universe.size()
              << " variables)\n";
    return entailed ? kAccepted : kRejected;
  } catch (const oracle::UniverseTooLarge& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checker for interference-free proofs over dynamic constraints"};
  app.require_subcommand(1);

  std::string cnf, proof, goal, out, file, variant = "standard";
  bool refutation = false, trace = false;
  std::size_t budget = kDefaultLeafBudget;
  std::size_t max_vars = oracle::Universe::kDefaultCap;
  int k = 3;

  auto* check_dsr = app.add_subcommand("check-dsr", "Check a DSR/WSR derivation");
  check_dsr->add_option("--cnf", cnf, "DIMACS formula")->required();
  check_dsr->add_option("--proof", proof, "DSR proof")->required();
  check_dsr->add_option("--sr-variant", variant, "standard or paper")
      ->check(CLI::IsMember({"standard", "paper"}));
  check_dsr->add_flag("--refutation", refutation, "Also require a final conflict");

  auto* translate_cmd = app.add_subcommand("translate", "Translate a DSR/WSR derivation to a proof term");
  translate_cmd->add_option("--cnf", cnf, "DIMACS formula")->required();
  translate_cmd->add_option("--proof", proof, "DSR proof")->required();
  translate_cmd->add_option("-o,--output", out, "Output file, - for stdout")->required();

  auto* check = app.add_subcommand("check", "Check a proof term");
  check->add_option("--cnf", cnf, "DIMACS premises")->required();
  check->add_option("--proof", proof, "Proof term")->required();
  check->add_option("--goal", goal, "Goal constraints (default: bot)");
  check->add_option("--budget", budget, "Leaf budget per implication check");
  check->add_flag("--trace", trace, "Log each instruction to stderr");

  auto* implies = app.add_subcommand("implies", "Decide a single dynamic implication");
  implies->add_option("--file", file, "Implication (implies (...) ...)")->required();
  implies->add_option("--budget", budget, "Leaf budget");
  implies->add_flag("--trace", trace, "Print the rule tree");

  auto* oracle_cmd = app.add_subcommand("oracle", "Decide entailment by enumeration");
  oracle_cmd->add_option("--cnf", cnf, "DIMACS premises")->required();
  oracle_cmd->add_option("--goal", goal, "Goal constraints (default: bot)");
  oracle_cmd->add_option("--max-vars", max_vars, "Universe cap")
      ->check(CLI::Range(std::size_t{0}, oracle::Universe::kHardCap));

  auto* demo = app.add_subcommand("demo", "Generate example instances");
  demo->require_subcommand(1);
  auto* compose = demo->add_subcommand("compose", "Composition of symmetry-breaking refutations");
  compose->add_option("-n", k, "Number of parts")->check(CLI::Range(1, 1000));
  compose->add_option("-o,--output", out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*check_dsr) return run_check_dsr(cnf, proof, variant, refutation);
    if (*translate_cmd) return run_translate(cnf, proof, out);
    if (*check) return run_check(cnf, proof, goal, budget, trace);
    if (*implies) return run_implies(file, budget, trace);
    if (*oracle_cmd) return run_oracle(cnf, goal, max_vars);
    if (*compose) {
      write_demo(compose_demo(k), out);
      std::cout << "wrote " << out << '\n';
      return kAccepted;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
