#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dynproof/dynamic.hpp"
#include "dynproof/implication.hpp"
#include "dynproof/proof_term.hpp"

namespace dynproof {

// Database of derived constraints and the goals still to be proven.
struct CheckState {
  DynamicFormula database;
  DynamicFormula goals;
};

enum class StepKind { Qed, Elim, Lem, Ctx };

// Reported before each instruction is processed. `path` holds the index of
// the instruction in each enclosing term, outermost first.
struct StepEvent {
  const std::vector<std::size_t>& path;
  StepKind kind;
  const CheckState& state;
};

struct CheckOptions {
  ImplicationOptions implication;
  std::function<void(const StepEvent&)> observer;
};

struct CheckResult {
  Verdict verdict = Verdict::Accepted;
  std::vector<std::size_t> path;
  std::optional<DynamicConstraint> failing_goal;
  std::optional<StaticLeaf> failing_leaf;
  std::string message;

  bool accepted() const { return verdict == Verdict::Accepted; }
};

// Decides whether `proof` derives `goals` from `premises`. Throws
// std::invalid_argument if the term is not well formed.
CheckResult check_proof(const ProofTerm& proof, const DynamicFormula& premises,
                        const DynamicFormula& goals, const CheckOptions& options = {});

}  // namespace dynproof
