#pragma once

#include <span>
#include <vector>

#include "dynproof/constraint.hpp"

namespace dynproof {

enum class Outcome { NoConflict, Conflict };

struct PropagationResult {
  Outcome outcome = Outcome::NoConflict;
  // Literals set true, in derivation order. Never contains a complementary
  // pair when the outcome is NoConflict.
  std::vector<Lit> implied;

  bool conflict() const { return outcome == Outcome::Conflict; }
};

// Unit propagation over clauses and cubes. Cubes assert all their literals;
// a clause propagates once all but one literal is false. A conflict is a
// falsified clause, a complementary pair, or an implied bot.
PropagationResult unit_propagate(const StaticFormula& f,
                                 std::span<const StaticConstraint> extra = {});

// Same, over an arbitrary list of constraints.
PropagationResult unit_propagate(std::span<const StaticConstraint* const> constraints);

inline bool has_conflict(const StaticFormula& f, std::span<const StaticConstraint> extra = {}) {
  return unit_propagate(f, extra).conflict();
}

// Reverse unit propagation: UP over F plus the negation of `c` conflicts.
bool rup_check(const StaticFormula& f, const StaticConstraint& c);

}  // namespace dynproof
