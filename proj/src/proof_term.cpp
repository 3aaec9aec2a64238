#include "dynproof/proof_term.hpp"

namespace dynproof {

ProofTerm::ProofTerm(std::vector<Instruction> steps) : steps(std::move(steps)) {}
ProofTerm::ProofTerm(std::initializer_list<Instruction> steps) : steps(steps) {}

bool operator==(const ProofTerm& a, const ProofTerm& b) { return a.steps == b.steps; }

bool operator==(const Lem& a, const Lem& b) {
  // Lemma sets compare as sets; printing keeps their insertion order.
  return a.lemmas == b.lemmas && a.proof == b.proof;
}

bool operator==(const Ctx& a, const Ctx& b) { return a.context == b.context && a.proof == b.proof; }

bool operator==(const Instruction& a, const Instruction& b) { return a.node == b.node; }

bool well_formed(const ProofTerm& term) {
  if (term.steps.empty()) return false;
  for (std::size_t i = 0; i < term.steps.size(); ++i) {
    const auto& node = term.steps[i].node;
    const bool last = i + 1 == term.steps.size();
    if (std::holds_alternative<Qed>(node) != last) return false;
    if (const auto* lem = std::get_if<Lem>(&node); lem && !well_formed(lem->proof)) return false;
    if (const auto* ctx = std::get_if<Ctx>(&node); ctx && !well_formed(ctx->proof)) return false;
  }
  return true;
}

std::size_t instruction_count(const ProofTerm& term) {
  std::size_t n = 0;
  for (const auto& step : term.steps) {
    ++n;
    if (const auto* lem = std::get_if<Lem>(&step.node)) n += instruction_count(lem->proof);
    if (const auto* ctx = std::get_if<Ctx>(&step.node)) n += instruction_count(ctx->proof);
  }
  return n;
}

}  // namespace dynproof
