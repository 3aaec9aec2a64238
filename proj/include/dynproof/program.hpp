#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "dynproof/constraint.hpp"
#include "dynproof/substitution.hpp"

namespace dynproof {

struct ProgramItem;

// A sequence of program items; the empty program is a no-op.
struct Program {
  std::vector<ProgramItem> items;

  Program() = default;
  Program(std::vector<ProgramItem> items);
  Program(std::initializer_list<ProgramItem> items);

  bool empty() const { return items.empty(); }
  // Total item count, nested programs included.
  std::size_t size() const;
  std::size_t hash() const;

  friend bool operator==(const Program&, const Program&);
};

// <sigma>
struct AssignItem {
  Substitution subst;
  friend bool operator==(const AssignItem&, const AssignItem&) = default;
};

// T?
struct TestItem {
  StaticConstraint cond;
  friend bool operator==(const TestItem&, const TestItem&) = default;
};

// e1 ⊔ e2
struct ChoiceItem {
  Program left;
  Program right;
  friend bool operator==(const ChoiceItem&, const ChoiceItem&);
};

// if T then e1 else e0
struct BranchItem {
  StaticConstraint cond;
  Program then_branch;
  Program else_branch;
  friend bool operator==(const BranchItem&, const BranchItem&);
};

struct ProgramItem {
  std::variant<AssignItem, TestItem, ChoiceItem, BranchItem> node;

  ProgramItem(AssignItem a) : node(std::move(a)) {}
  ProgramItem(TestItem t) : node(std::move(t)) {}
  ProgramItem(ChoiceItem c) : node(std::move(c)) {}
  ProgramItem(BranchItem b) : node(std::move(b)) {}

  std::size_t size() const;
  std::size_t hash() const;

  friend bool operator==(const ProgramItem&, const ProgramItem&);
};

inline ProgramItem assign_item(Substitution s) { return AssignItem{std::move(s)}; }
inline ProgramItem test_item(StaticConstraint t) { return TestItem{std::move(t)}; }
ProgramItem choice_item(Program left, Program right);
// if T then `then_branch` (else no-op unless given)
ProgramItem branch_item(StaticConstraint cond, Program then_branch, Program else_branch = {});

Program concat(const Program& a, const Program& b);
bool is_prefix(const Program& prefix, const Program& p);

// The reduct ρ = ε|τ, with I⊗J ⊨ ρ iff (I∘τ)⊗J ⊨ ε.
Program reduce(const Program& p, const Substitution& tau);

// Branch(T, e1, e0) rewritten as Choice(T? e1, ~T? e0).
ProgramItem desugar_branch(const BranchItem& b);

}  // namespace dynproof
