#include "dynproof/dsr.hpp"
#include "dynproof/dynamic.hpp"

namespace dynproof {

// RUP steps become lemmas, deletions vanish, and each SR/WSR step with
// context ε = (if ~C then <σ>) becomes
//
//   lem({ε.⊥}, lem(ε.F', qed) ctx(ε, translate(F', rest)) qed) elim qed
//
// where F' is the formula after the step.
ProofTerm translate(const StaticFormula& f, std::span<const DsrInstruction> steps) {
  StaticFormula acc = f;
  ProofTerm out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const DsrInstruction& step = steps[i];
    if (const auto* rup = std::get_if<RupStep>(&step)) {
      out.steps.push_back(Lem{DynamicFormula{DynamicConstraint(rup->clause)}, ProofTerm{Qed{}}});
      acc.insert(rup->clause);
      continue;
    }
    if (std::holds_alternative<DelStep>(step)) {
      apply_step(acc, step);
      continue;
    }

    const Program eps = std::holds_alternative<SrStep>(step)
                            ? redundancy_context(std::get<SrStep>(step).clause,
                                                 std::get<SrStep>(step).witness)
                            : redundancy_context(std::get<WsrStep>(step).clause,
                                                 std::get<WsrStep>(step).witness);
    apply_step(acc, step);
    ProofTerm under_context = translate(acc, steps.subspan(i + 1));
    ProofTerm inner{
        Lem{prepend_context(eps, acc), ProofTerm{Qed{}}},
        Ctx{eps, std::move(under_context)},
        Qed{},
    };
    out.steps.push_back(
        Lem{DynamicFormula{DynamicConstraint(eps, StaticConstraint::bottom())},
            std::move(inner)});
    out.steps.push_back(Elim{});
    out.steps.push_back(Qed{});
    return out;
  }
  out.steps.push_back(Qed{});
  return out;
}

}  // namespace dynproof
