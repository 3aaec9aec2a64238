#include "dynproof/checker.hpp"

#include <optional>
#include <stdexcept>

namespace dynproof {

namespace {

class Checker {
 public:
  explicit Checker(const CheckOptions& options) : options_(options) {}

  CheckResult run(const ProofTerm& proof, const DynamicFormula& premises,
                  const DynamicFormula& goals) {
    CheckResult result;
    check(proof, premises, goals, result);
    return result;
  }

 private:
  // `database` is copied only once this scope first extends it.
  bool check(const ProofTerm& proof, const DynamicFormula& database, DynamicFormula goals,
             CheckResult& result) {
    std::optional<DynamicFormula> owned;
    auto db = [&]() -> const DynamicFormula& { return owned ? *owned : database; };
    auto extend = [&](const DynamicFormula& more) {
      if (!owned) owned = database;
      *owned = set_union(std::move(*owned), more);
    };

    for (std::size_t i = 0; i < proof.steps.size(); ++i) {
      path_.push_back(i);
      const auto& node = proof.steps[i].node;

      if (std::holds_alternative<Qed>(node)) {
        notify(StepKind::Qed, db(), goals);
        const bool all_static = context_size(db()) == 0;
        const DynamicFormula premises = all_static ? DynamicFormula{} : static_part(db());
        for (const auto& goal : goals) {
          if (!implies(all_static ? db() : premises, goal, "qed", result)) return false;
        }
      } else if (std::holds_alternative<Elim>(node)) {
        notify(StepKind::Elim, db(), goals);
        const DynamicFormula settled = static_part(goals);
        for (const auto& goal : settled) {
          if (!implies(db(), goal, "elim", result)) return false;
        }
        extend(settled);
        goals = set_difference(goals, settled);
      } else if (const auto* lem = std::get_if<Lem>(&node)) {
        notify(StepKind::Lem, db(), goals);
        if (!check(lem->proof, db(), lem->lemmas, result)) return false;
        extend(lem->lemmas);
        goals = set_difference(goals, lem->lemmas);
      } else {
        const auto& ctx = std::get<Ctx>(node);
        notify(StepKind::Ctx, db(), goals);
        DynamicFormula inner_goals = contextualize(goals, ctx.context);
        if (!check(ctx.proof, contextualize(db(), ctx.context), inner_goals, result)) return false;
        extend(prepend_context(ctx.context, inner_goals));
        goals = remove_under_context(goals, ctx.context);
      }
      path_.pop_back();
    }
    return true;
  }

  bool implies(const DynamicFormula& premises, const DynamicConstraint& goal, const char* step,
               CheckResult& result) {
    ImplicationResult r = dyn_implies(premises, goal, options_.implication);
    if (r.accepted()) return true;
    result.verdict = r.verdict;
    result.path = path_;
    result.failing_goal = goal;
    result.failing_leaf = std::move(r.failing_leaf);
    result.message = r.verdict == Verdict::BudgetExceeded
                         ? std::string(step) + ": leaf budget exceeded"
                         : std::string(step) + ": goal not implied";
    return false;
  }

  void notify(StepKind kind, const DynamicFormula& database, const DynamicFormula& goals) {
    if (!options_.observer) return;
    const CheckState state{database, goals};
    options_.observer(StepEvent{path_, kind, state});
  }

  const CheckOptions& options_;
  std::vector<std::size_t> path_;
};

}  // namespace

CheckResult check_proof(const ProofTerm& proof, const DynamicFormula& premises,
                        const DynamicFormula& goals, const CheckOptions& options) {
  if (!well_formed(proof)) throw std::invalid_argument("malformed proof term");
  Checker checker(options);
  return checker.run(proof, premises, goals);
}

}  // namespace dynproof
