#include "dynproof/oracle.hpp"

#include <algorithm>
#include <string>

namespace dynproof::oracle {

Universe::Universe(std::set<Var> vars, std::size_t cap) : vars_(vars.begin(), vars.end()) {
  const std::size_t limit = std::min(cap, kHardCap);
  if (vars_.size() > limit)
    throw UniverseTooLarge("oracle universe has " + std::to_string(vars_.size()) +
                           " variables; the cap is " + std::to_string(limit));
}

void collect_vars(const StaticConstraint& c, std::set<Var>& out) {
  for (Lit l : c.literals()) {
    if (l.is_var()) out.insert(l.var());
  }
}

void collect_vars(const StaticFormula& f, std::set<Var>& out) {
  for (const auto& c : f) collect_vars(c, out);
}

void collect_vars(const Substitution& s, std::set<Var>& out) {
  for (const auto& [v, image] : s.entries()) {
    out.insert(v);
    if (image.is_var()) out.insert(image.var());
  }
}

void collect_vars(const Program& p, std::set<Var>& out) {
  for (const auto& item : p.items) {
    if (const auto* a = std::get_if<AssignItem>(&item.node)) {
      collect_vars(a->subst, out);
    } else if (const auto* t = std::get_if<TestItem>(&item.node)) {
      collect_vars(t->cond, out);
    } else if (const auto* c = std::get_if<ChoiceItem>(&item.node)) {
      collect_vars(c->left, out);
      collect_vars(c->right, out);
    } else {
      const auto& b = std::get<BranchItem>(item.node);
      collect_vars(b.cond, out);
      collect_vars(b.then_branch, out);
      collect_vars(b.else_branch, out);
    }
  }
}

void collect_vars(const DynamicConstraint& c, std::set<Var>& out) {
  collect_vars(c.context, out);
  collect_vars(c.property, out);
}

void collect_vars(const DynamicFormula& f, std::set<Var>& out) {
  for (const auto& c : f) collect_vars(c, out);
}

bool eval_static(const Assignment& a, const StaticConstraint& c) {
  const auto lits = c.literals();
  if (c.is_clause())
    return std::any_of(lits.begin(), lits.end(), [&](Lit l) { return a.satisfies(l); });
  return std::all_of(lits.begin(), lits.end(), [&](Lit l) { return a.satisfies(l); });
}

bool eval_static(const Assignment& a, const StaticFormula& f) {
  return std::all_of(f.begin(), f.end(), [&](const auto& c) { return eval_static(a, c); });
}

namespace {

void normalize(std::vector<Assignment>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Assignment> transitions(const Assignment& a, const ProgramItem& item) {
  if (const auto* assign = std::get_if<AssignItem>(&item.node)) {
    // (I∘σ)(x) = 1 iff I ⊨ σ(x)
    Assignment next = a;
    for (Var v : a.universe()) next.set(v, a.satisfies(assign->subst.image(v)));
    return {next};
  }
  if (const auto* t = std::get_if<TestItem>(&item.node)) {
    if (eval_static(a, t->cond)) return {a};
    return {};
  }
  if (const auto* c = std::get_if<ChoiceItem>(&item.node)) {
    auto out = transitions(a, c->left);
    auto right = transitions(a, c->right);
    out.insert(out.end(), right.begin(), right.end());
    normalize(out);
    return out;
  }
  const auto& b = std::get<BranchItem>(item.node);
  return transitions(a, eval_static(a, b.cond) ? b.then_branch : b.else_branch);
}

std::vector<Assignment> transitions(const Assignment& a, const Program& p) {
  std::vector<Assignment> current{a};
  for (const auto& item : p.items) {
    std::vector<Assignment> next;
    for (const auto& state : current) {
      auto step = transitions(state, item);
      next.insert(next.end(), step.begin(), step.end());
    }
    normalize(next);
    current = std::move(next);
    if (current.empty()) break;
  }
  return current;
}

bool eval_dynamic(const Assignment& a, const DynamicConstraint& c) {
  if (c.context.empty()) return eval_static(a, c.property);
  const auto finals = transitions(a, c.context);
  return std::all_of(finals.begin(), finals.end(),
                     [&](const Assignment& j) { return eval_static(j, c.property); });
}

bool eval_dynamic(const Assignment& a, const DynamicFormula& f) {
  return std::all_of(f.begin(), f.end(), [&](const auto& c) { return eval_dynamic(a, c); });
}

bool entails(const DynamicFormula& premises, const DynamicFormula& conclusion, const Universe& u) {
  for (std::uint64_t bits = 0; bits < u.assignment_count(); ++bits) {
    const Assignment a = u.assignment(bits);
    if (eval_dynamic(a, premises) && !eval_dynamic(a, conclusion)) return false;
  }
  return true;
}

bool entails(const DynamicFormula& premises, const DynamicConstraint& conclusion,
             const Universe& u) {
  return entails(premises, DynamicFormula{conclusion}, u);
}

bool satisfiable(const StaticFormula& f, const Universe& u) {
  for (std::uint64_t bits = 0; bits < u.assignment_count(); ++bits) {
    if (eval_static(u.assignment(bits), f)) return true;
  }
  return false;
}

bool satisfiable(const DynamicFormula& f, const Universe& u) {
  for (std::uint64_t bits = 0; bits < u.assignment_count(); ++bits) {
    if (eval_dynamic(u.assignment(bits), f)) return true;
  }
  return false;
}

bool same_relation(const Program& a, const Program& b, const Universe& u) {
  for (std::uint64_t bits = 0; bits < u.assignment_count(); ++bits) {
    const Assignment start = u.assignment(bits);
    if (transitions(start, a) != transitions(start, b)) return false;
  }
  return true;
}

}  // namespace dynproof::oracle
