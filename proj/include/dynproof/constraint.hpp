#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "dynproof/indexed_set.hpp"
#include "dynproof/literal.hpp"
#include "dynproof/substitution.hpp"

namespace dynproof {

enum class ConstraintKind : std::uint8_t { Clause, Cube };

// A clause (disjunction) or cube (conjunction) of literals, kept in canonical
// form: literals sorted by code and deduplicated. Tautologies and constants
// are kept as written; canonicalization is purely syntactic.
class StaticConstraint {
 public:
  StaticConstraint() = default;
  StaticConstraint(ConstraintKind kind, std::vector<Lit> literals);

  static StaticConstraint clause(std::vector<Lit> literals) {
    return {ConstraintKind::Clause, std::move(literals)};
  }
  static StaticConstraint cube(std::vector<Lit> literals) {
    return {ConstraintKind::Cube, std::move(literals)};
  }
  // From DIMACS integers.
  static StaticConstraint clause_of(std::initializer_list<int> lits);
  static StaticConstraint cube_of(std::initializer_list<int> lits);
  static StaticConstraint literal(Lit l) { return clause({l}); }
  // The constraint ⊥, written as the clause (bot).
  static StaticConstraint bottom() { return literal(Lit::bot()); }

  ConstraintKind kind() const { return kind_; }
  bool is_clause() const { return kind_ == ConstraintKind::Clause; }
  bool is_cube() const { return kind_ == ConstraintKind::Cube; }
  std::span<const Lit> literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }

  std::size_t hash() const;

  friend bool operator==(const StaticConstraint&, const StaticConstraint&) = default;
  friend auto operator<=>(const StaticConstraint&, const StaticConstraint&) = default;

 private:
  ConstraintKind kind_ = ConstraintKind::Clause;
  std::vector<Lit> lits_;
};

struct ConstraintHash {
  std::size_t operator()(const StaticConstraint& c) const { return c.hash(); }
};

// Clause <-> cube with every literal complemented.
StaticConstraint negate(const StaticConstraint& c);

// Literal-wise application of `sigma`, re-canonicalized.
StaticConstraint reduce(const StaticConstraint& c, const Substitution& sigma);

// Sorts and deduplicates; a no-op on constructed constraints.
StaticConstraint canonicalize(const StaticConstraint& c);

// A finite set of static constraints, insertion-ordered.
using StaticFormula = IndexedSet<StaticConstraint, ConstraintHash>;

StaticFormula reduce(const StaticFormula& f, const Substitution& sigma);

// Largest variable occurring in `c` (0 if none).
Var max_var(const StaticConstraint& c);
Var max_var(const StaticFormula& f);

}  // namespace dynproof
