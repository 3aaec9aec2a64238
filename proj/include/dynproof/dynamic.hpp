#pragma once

#include <cstddef>

#include "dynproof/constraint.hpp"
#include "dynproof/indexed_set.hpp"
#include "dynproof/program.hpp"

namespace dynproof {

// ε.C: the property C holds after every execution of the context ε.
struct DynamicConstraint {
  Program context;
  StaticConstraint property;

  DynamicConstraint() = default;
  DynamicConstraint(Program context, StaticConstraint property)
      : context(std::move(context)), property(std::move(property)) {}
  // Empty context.
  DynamicConstraint(StaticConstraint property) : property(std::move(property)) {}

  bool is_static() const { return context.empty(); }
  std::size_t hash() const;

  friend bool operator==(const DynamicConstraint& a, const DynamicConstraint& b) {
    return a.property == b.property && a.context == b.context;
  }
};

struct DynamicConstraintHash {
  std::size_t operator()(const DynamicConstraint& c) const { return c.hash(); }
};

using DynamicFormula = IndexedSet<DynamicConstraint, DynamicConstraintHash>;

// Every constraint of `f` with empty context.
DynamicFormula lift(const StaticFormula& f);

// δ.Γ
DynamicConstraint prepend_context(const Program& delta, const DynamicConstraint& c);
DynamicFormula prepend_context(const Program& delta, const DynamicFormula& f);
DynamicFormula prepend_context(const Program& delta, const StaticFormula& f);

// Γ@ε: constraints whose context starts with ε, with that prefix stripped.
DynamicFormula contextualize(const DynamicFormula& f, const Program& eps);

// Γ minus every constraint whose context starts with ε.
DynamicFormula remove_under_context(const DynamicFormula& f, const Program& eps);

// Γ↓ as static properties.
StaticFormula static_fragment(const DynamicFormula& f);
// Γ↓ as a dynamic formula.
DynamicFormula static_part(const DynamicFormula& f);

DynamicConstraint reduce(const DynamicConstraint& c, const Substitution& tau);
DynamicFormula reduce(const DynamicFormula& f, const Substitution& tau);

// Sum of context sizes.
std::size_t context_size(const DynamicFormula& f);

}  // namespace dynproof
