#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dynproof/constraint.hpp"
#include "dynproof/dynamic.hpp"

namespace dynproof {

// Γ ⇒ Φ
struct DynamicImplication {
  DynamicFormula lhs;
  DynamicConstraint rhs;
};

enum class Rule {
  NecessityAssign,
  NecessityChoice,
  NecessityTest,
  NecessityBranch,
  PossibilityAssign,
  PossibilityChoice,
  PossibilityTest,
  PossibilityBranch,
};

std::string_view rule_name(Rule r);

// Rewrites the first item of the right-hand side context. Throws
// std::invalid_argument if that context is empty.
std::vector<DynamicImplication> apply_necessity(const DynamicImplication& impl);

// Rewrites the first item of `target`'s context, where `target` is a member
// of the left-hand side. Throws std::invalid_argument if it is not a member
// or has an empty context.
std::vector<DynamicImplication> apply_possibility(const DynamicImplication& impl,
                                                  const DynamicConstraint& target);

enum class Verdict { Accepted, Rejected, BudgetExceeded };

std::string_view verdict_name(Verdict v);

// A fully reduced implication F ⇒ C, checked as conflict(F ∪ {~C}).
struct StaticLeaf {
  StaticFormula premises;
  StaticConstraint conclusion;
  bool conflict = false;
};

struct TraceNode {
  std::optional<Rule> rule;  // empty at leaves
  std::optional<DynamicConstraint> focus;
  std::vector<TraceNode> children;
  std::optional<StaticLeaf> leaf;
};

inline constexpr std::size_t kDefaultLeafBudget = 1'000'000;

struct ImplicationOptions {
  std::size_t leaf_budget = kDefaultLeafBudget;
  bool record_trace = false;
};

struct ImplicationResult {
  Verdict verdict = Verdict::Rejected;
  std::size_t leaves = 0;
  std::optional<StaticLeaf> failing_leaf;
  std::optional<TraceNode> trace;

  bool accepted() const { return verdict == Verdict::Accepted; }
};

// Γ ⊢dyn Φ. Necessity rules run until the right-hand side is static, then
// possibility rules rewrite the oldest left-hand constraint with a nonempty
// context. Stops at the first failing leaf.
ImplicationResult dyn_implies(const DynamicFormula& lhs, const DynamicConstraint& rhs,
                              const ImplicationOptions& options = {});

// Well-founded measure on contexts: (non-assignment items including nested
// ones, leading top-level assignments), compared lexicographically. Every
// rewrite strictly lowers it for the constraint it touches.
std::pair<std::size_t, std::size_t> termination_measure(const Program& p);

}  // namespace dynproof
