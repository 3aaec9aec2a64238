#include "dynproof/constraint.hpp"

#include <algorithm>

namespace dynproof {

namespace {

std::vector<Lit> from_dimacs(std::initializer_list<int> lits) {
  std::vector<Lit> out;
  out.reserve(lits.size());
  for (int l : lits) out.push_back(Lit::from_dimacs(l));
  return out;
}

}  // namespace

StaticConstraint::StaticConstraint(ConstraintKind kind, std::vector<Lit> literals)
    : kind_(kind), lits_(std::move(literals)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

StaticConstraint StaticConstraint::clause_of(std::initializer_list<int> lits) {
  return clause(from_dimacs(lits));
}

StaticConstraint StaticConstraint::cube_of(std::initializer_list<int> lits) {
  return cube(from_dimacs(lits));
}

std::size_t StaticConstraint::hash() const {
  std::size_t h = kind_ == ConstraintKind::Clause ? 0x51ed27u : 0xc0be5u;
  for (Lit l : lits_) h = h * 1000003u ^ l.code();
  return h;
}

StaticConstraint negate(const StaticConstraint& c) {
  std::vector<Lit> lits;
  lits.reserve(c.size());
  for (Lit l : c.literals()) lits.push_back(~l);
  return {c.is_clause() ? ConstraintKind::Cube : ConstraintKind::Clause, std::move(lits)};
}

StaticConstraint reduce(const StaticConstraint& c, const Substitution& sigma) {
  std::vector<Lit> lits;
  lits.reserve(c.size());
  for (Lit l : c.literals()) lits.push_back(sigma(l));
  return {c.kind(), std::move(lits)};
}

StaticConstraint canonicalize(const StaticConstraint& c) {
  return {c.kind(), std::vector<Lit>(c.literals().begin(), c.literals().end())};
}

StaticFormula reduce(const StaticFormula& f, const Substitution& sigma) {
  StaticFormula out;
  for (const auto& c : f) out.insert(reduce(c, sigma));
  return out;
}

Var max_var(const StaticConstraint& c) {
  Var m = 0;
  for (Lit l : c.literals()) {
    if (l.is_var()) m = std::max(m, l.var());
  }
  return m;
}

Var max_var(const StaticFormula& f) {
  Var m = 0;
  for (const auto& c : f) m = std::max(m, max_var(c));
  return m;
}

}  // namespace dynproof
