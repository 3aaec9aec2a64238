#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "dynproof/assignment.hpp"
#include "dynproof/constraint.hpp"
#include "dynproof/dynamic.hpp"
#include "dynproof/program.hpp"

// Brute-force reference semantics. Everything here enumerates assignments
// and follows the relational definitions directly; none of it goes through
// propagation, reducts or the implication rules.
namespace dynproof::oracle {

class UniverseTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

class Universe {
 public:
  static constexpr std::size_t kDefaultCap = 20;
  static constexpr std::size_t kHardCap = 30;

  // Throws UniverseTooLarge if more than `cap` variables (cap ≤ kHardCap).
  explicit Universe(std::set<Var> vars, std::size_t cap = kDefaultCap);

  const std::vector<Var>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  std::uint64_t assignment_count() const { return std::uint64_t{1} << vars_.size(); }
  Assignment assignment(std::uint64_t bits) const { return Assignment(vars_, bits); }

 private:
  std::vector<Var> vars_;
};

// Variables occurring anywhere in an expression, substitution domains included.
void collect_vars(const StaticConstraint& c, std::set<Var>& out);
void collect_vars(const StaticFormula& f, std::set<Var>& out);
void collect_vars(const Substitution& s, std::set<Var>& out);
void collect_vars(const Program& p, std::set<Var>& out);
void collect_vars(const DynamicConstraint& c, std::set<Var>& out);
void collect_vars(const DynamicFormula& f, std::set<Var>& out);

template <class... Exprs>
Universe universe_of(std::size_t cap, const Exprs&... exprs) {
  std::set<Var> vars;
  (collect_vars(exprs, vars), ...);
  return Universe(std::move(vars), cap);
}

bool eval_static(const Assignment& a, const StaticConstraint& c);
bool eval_static(const Assignment& a, const StaticFormula& f);

// All J with I ⊗ J ⊨ p, sorted and deduplicated.
std::vector<Assignment> transitions(const Assignment& a, const Program& p);
std::vector<Assignment> transitions(const Assignment& a, const ProgramItem& item);

bool eval_dynamic(const Assignment& a, const DynamicConstraint& c);
bool eval_dynamic(const Assignment& a, const DynamicFormula& f);

// Every assignment over `u` satisfying the premises satisfies the conclusion.
bool entails(const DynamicFormula& premises, const DynamicFormula& conclusion, const Universe& u);
bool entails(const DynamicFormula& premises, const DynamicConstraint& conclusion, const Universe& u);
bool satisfiable(const StaticFormula& f, const Universe& u);
bool satisfiable(const DynamicFormula& f, const Universe& u);

// Same relation: I ⊗ J ⊨ a iff I ⊗ J ⊨ b for all I over `u`.
bool same_relation(const Program& a, const Program& b, const Universe& u);

}  // namespace dynproof::oracle
