#include "dynproof/dsr.hpp"

#include "dynproof/propagation.hpp"

namespace dynproof {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// conflict(F ∪ {~C, ~(D|σ)}). When D|σ is already in F, its negation
// falsifies a member of F and the check holds without propagating.
bool redundancy_check(const StaticFormula& f, const StaticConstraint& negated_c,
                      const StaticConstraint& d, const Substitution& sigma) {
  const StaticConstraint image = reduce(d, sigma);
  if (f.contains(image)) return true;
  const StaticConstraint extra[] = {negated_c, negate(image)};
  return has_conflict(f, extra);
}

}  // namespace

const StaticConstraint& clause_of(const DsrInstruction& step) {
  return std::visit([](const auto& s) -> const StaticConstraint& { return s.clause; }, step);
}

std::optional<SrVariant> parse_sr_variant(std::string_view name) {
  if (name == "standard") return SrVariant::Standard;
  if (name == "paper") return SrVariant::Paper;
  return std::nullopt;
}

void apply_step(StaticFormula& f, const DsrInstruction& step) {
  std::visit(Overloaded{
                 [&](const DelStep& s) { f.erase(s.clause); },
                 [&](const RupStep& s) { f.insert(s.clause); },
                 [&](const SrStep& s) { f.insert(s.clause); },
                 [&](const WsrStep& s) {
                   f = set_difference(f, s.excepted);
                   f.insert(s.clause);
                 },
             },
             step);
}

StaticFormula accumulated(const StaticFormula& f, std::span<const DsrInstruction> steps) {
  StaticFormula acc = f;
  for (const auto& step : steps) apply_step(acc, step);
  return acc;
}

bool check_sr(const StaticFormula& f, const StaticConstraint& c, const Substitution& sigma,
              SrVariant variant) {
  const StaticConstraint negated_c = negate(c);
  const StaticConstraint negated_image = negate(reduce(c, sigma));
  if (variant == SrVariant::Paper) {
    const StaticConstraint* alone[] = {&negated_image};
    if (!unit_propagate(alone).conflict()) return false;
  } else {
    const StaticConstraint extra[] = {negated_c, negated_image};
    if (!has_conflict(f, extra)) return false;
  }
  for (const auto& d : f) {
    if (!redundancy_check(f, negated_c, d, sigma)) return false;
  }
  return true;
}

bool check_wsr(const StaticFormula& f, const StaticConstraint& c, const Substitution& sigma,
               const StaticFormula& excepted) {
  const StaticConstraint negated_c = negate(c);
  for (const auto& d : f) {
    if (excepted.contains(d)) continue;
    if (!redundancy_check(f, negated_c, d, sigma)) return false;
  }
  const StaticConstraint extra[] = {negated_c, negate(reduce(c, sigma))};
  return has_conflict(f, extra);
}

bool check_step(const StaticFormula& f, const DsrInstruction& step, SrVariant variant) {
  return std::visit(Overloaded{
                        [](const DelStep&) { return true; },
                        [&](const RupStep& s) { return rup_check(f, s.clause); },
                        [&](const SrStep& s) { return check_sr(f, s.clause, s.witness, variant); },
                        [&](const WsrStep& s) {
                          return check_wsr(f, s.clause, s.witness, s.excepted);
                        },
                    },
                    step);
}

DerivationReport check_derivation(const StaticFormula& f, std::span<const DsrInstruction> steps,
                                  SrVariant variant) {
  DerivationReport report;
  StaticFormula acc = f;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!check_step(acc, steps[i], variant)) {
      report.first_invalid = i;
      return report;
    }
    apply_step(acc, steps[i]);
  }
  report.refutes = unit_propagate(acc).conflict();
  return report;
}

bool check_refutation(const StaticFormula& f, std::span<const DsrInstruction> steps,
                      SrVariant variant) {
  return check_derivation(f, steps, variant).refutation();
}

Program redundancy_context(const StaticConstraint& c, const Substitution& sigma) {
  return Program{branch_item(negate(c), Program{assign_item(sigma)})};
}

Program context_of(std::span<const DsrInstruction> steps) {
  Program p;
  for (const auto& step : steps) {
    if (const auto* sr = std::get_if<SrStep>(&step)) {
      p.items.push_back(redundancy_context(sr->clause, sr->witness).items.front());
    } else if (const auto* wsr = std::get_if<WsrStep>(&step)) {
      p.items.push_back(redundancy_context(wsr->clause, wsr->witness).items.front());
    }
  }
  return p;
}

}  // namespace dynproof
