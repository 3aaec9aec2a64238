#include "dynproof/implication.hpp"

#include <stdexcept>
#include <variant>

#include "dynproof/propagation.hpp"

namespace dynproof {

namespace {

Program tail_of(const Program& p) {
  return Program(std::vector<ProgramItem>(p.items.begin() + 1, p.items.end()));
}

DynamicConstraint with_context(Program head, const Program& rest, const StaticConstraint& property) {
  return {concat(head, rest), property};
}

DynamicFormula plus(DynamicFormula f, const StaticConstraint& c) {
  f.insert(DynamicConstraint(c));
  return f;
}

std::size_t non_assign_items(const Program& p) {
  std::size_t n = 0;
  for (const auto& item : p.items) {
    if (const auto* c = std::get_if<ChoiceItem>(&item.node)) {
      n += 1 + non_assign_items(c->left) + non_assign_items(c->right);
    } else if (const auto* b = std::get_if<BranchItem>(&item.node)) {
      n += 1 + non_assign_items(b->then_branch) + non_assign_items(b->else_branch);
    } else if (std::holds_alternative<TestItem>(item.node)) {
      n += 1;
    }
  }
  return n;
}

class Engine {
 public:
  explicit Engine(const ImplicationOptions& options) : options_(options) {}

  ImplicationResult run(const DynamicFormula& lhs, const DynamicConstraint& rhs) {
    ImplicationResult result;
    TraceNode trace;
    TraceNode* root = options_.record_trace ? &trace : nullptr;
    Status status;
    if (rhs.is_static() && context_size(lhs) == 0) {
      status = leaf(lhs, rhs, root);
    } else {
      status = expand({lhs, rhs}, root);
    }
    result.leaves = leaves_;
    switch (status) {
      case Status::Ok:
        result.verdict = Verdict::Accepted;
        break;
      case Status::Failed:
        result.verdict = Verdict::Rejected;
        result.failing_leaf = std::move(failing_);
        break;
      case Status::OutOfBudget:
        result.verdict = Verdict::BudgetExceeded;
        break;
    }
    if (options_.record_trace) result.trace = std::move(trace);
    return result;
  }

 private:
  enum class Status { Ok, Failed, OutOfBudget };

  Status expand(const DynamicImplication& impl, TraceNode* node) {
    if (!impl.rhs.is_static()) {
      const Rule rule = necessity_rule(impl.rhs.context);
      return descend(apply_necessity(impl), rule, impl.rhs, node);
    }
    for (const auto& c : impl.lhs) {
      if (c.is_static()) continue;
      const Rule rule = possibility_rule(c.context);
      return descend(apply_possibility(impl, c), rule, c, node);
    }
    return leaf(impl.lhs, impl.rhs, node);
  }

  Status descend(const std::vector<DynamicImplication>& children, Rule rule,
                 const DynamicConstraint& focus, TraceNode* node) {
    if (node) {
      node->rule = rule;
      node->focus = focus;
    }
    for (const auto& child : children) {
      TraceNode* child_node = nullptr;
      if (node) child_node = &node->children.emplace_back();
      const Status s = expand(child, child_node);
      if (s != Status::Ok) return s;
    }
    return Status::Ok;
  }

  Status leaf(const DynamicFormula& lhs, const DynamicConstraint& rhs, TraceNode* node) {
    if (++leaves_ > options_.leaf_budget) return Status::OutOfBudget;
    const StaticConstraint negated = negate(rhs.property);
    std::vector<const StaticConstraint*> constraints;
    constraints.reserve(lhs.size() + 1);
    for (const auto& c : lhs) constraints.push_back(&c.property);
    constraints.push_back(&negated);
    const bool conflict = unit_propagate(constraints).conflict();
    if (node || !conflict) {
      StaticLeaf leaf{static_fragment(lhs), rhs.property, conflict};
      if (!conflict) failing_ = leaf;
      if (node) node->leaf = std::move(leaf);
    }
    return conflict ? Status::Ok : Status::Failed;
  }

  static Rule necessity_rule(const Program& context) {
    switch (context.items.front().node.index()) {
      case 0: return Rule::NecessityAssign;
      case 1: return Rule::NecessityTest;
      case 2: return Rule::NecessityChoice;
      default: return Rule::NecessityBranch;
    }
  }

  static Rule possibility_rule(const Program& context) {
    switch (context.items.front().node.index()) {
      case 0: return Rule::PossibilityAssign;
      case 1: return Rule::PossibilityTest;
      case 2: return Rule::PossibilityChoice;
      default: return Rule::PossibilityBranch;
    }
  }

  const ImplicationOptions& options_;
  std::size_t leaves_ = 0;
  std::optional<StaticLeaf> failing_;
};

}  // namespace

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::NecessityAssign: return "necessity-assign";
    case Rule::NecessityChoice: return "necessity-choice";
    case Rule::NecessityTest: return "necessity-test";
    case Rule::NecessityBranch: return "necessity-branch";
    case Rule::PossibilityAssign: return "possibility-assign";
    case Rule::PossibilityChoice: return "possibility-choice";
    case Rule::PossibilityTest: return "possibility-test";
    case Rule::PossibilityBranch: return "possibility-branch";
  }
  return "?";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Accepted: return "accepted";
    case Verdict::Rejected: return "rejected";
    case Verdict::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

std::vector<DynamicImplication> apply_necessity(const DynamicImplication& impl) {
  const DynamicConstraint& rhs = impl.rhs;
  if (rhs.is_static())
    throw std::invalid_argument("necessity rule applied to a static right-hand side");
  const Program rest = tail_of(rhs.context);
  const ProgramItem& head = rhs.context.items.front();
  std::vector<DynamicImplication> out;

  if (const auto* a = std::get_if<AssignItem>(&head.node)) {
    out.push_back({impl.lhs, reduce(DynamicConstraint(rest, rhs.property), a->subst)});
  } else if (const auto* t = std::get_if<TestItem>(&head.node)) {
    out.push_back({plus(impl.lhs, t->cond), DynamicConstraint(rest, rhs.property)});
  } else if (const auto* c = std::get_if<ChoiceItem>(&head.node)) {
    out.push_back({impl.lhs, with_context(c->left, rest, rhs.property)});
    out.push_back({impl.lhs, with_context(c->right, rest, rhs.property)});
  } else {
    const auto& b = std::get<BranchItem>(head.node);
    out.push_back({plus(impl.lhs, b.cond), with_context(b.then_branch, rest, rhs.property)});
    out.push_back({plus(impl.lhs, negate(b.cond)), with_context(b.else_branch, rest, rhs.property)});
  }
  return out;
}

std::vector<DynamicImplication> apply_possibility(const DynamicImplication& impl,
                                                  const DynamicConstraint& target) {
  if (target.is_static())
    throw std::invalid_argument("possibility rule applied to a static constraint");
  std::size_t pos = impl.lhs.size();
  for (std::size_t i = 0; i < impl.lhs.size(); ++i) {
    if (impl.lhs[i] == target) {
      pos = i;
      break;
    }
  }
  if (pos == impl.lhs.size())
    throw std::invalid_argument("possibility target is not in the left-hand side");

  const Program rest = tail_of(target.context);
  const ProgramItem& head = target.context.items.front();
  auto replaced = [&](std::vector<DynamicConstraint> by) {
    DynamicFormula lhs = impl.lhs;
    lhs.replace_at(pos, by);
    return lhs;
  };
  std::vector<DynamicImplication> out;

  if (const auto* a = std::get_if<AssignItem>(&head.node)) {
    out.push_back({replaced({reduce(DynamicConstraint(rest, target.property), a->subst)}), impl.rhs});
  } else if (const auto* t = std::get_if<TestItem>(&head.node)) {
    out.push_back({plus(replaced({DynamicConstraint(rest, target.property)}), t->cond), impl.rhs});
    out.push_back({plus(replaced({}), negate(t->cond)), impl.rhs});
  } else if (const auto* c = std::get_if<ChoiceItem>(&head.node)) {
    out.push_back({replaced({with_context(c->left, rest, target.property),
                             with_context(c->right, rest, target.property)}),
                   impl.rhs});
  } else {
    const auto& b = std::get<BranchItem>(head.node);
    out.push_back({plus(replaced({with_context(b.then_branch, rest, target.property)}), b.cond),
                   impl.rhs});
    out.push_back(
        {plus(replaced({with_context(b.else_branch, rest, target.property)}), negate(b.cond)),
         impl.rhs});
  }
  return out;
}

ImplicationResult dyn_implies(const DynamicFormula& lhs, const DynamicConstraint& rhs,
                              const ImplicationOptions& options) {
  Engine engine(options);
  return engine.run(lhs, rhs);
}

std::pair<std::size_t, std::size_t> termination_measure(const Program& p) {
  std::size_t leading = 0;
  for (const auto& item : p.items) {
    if (!std::holds_alternative<AssignItem>(item.node)) break;
    ++leading;
  }
  return {non_assign_items(p), leading};
}

}  // namespace dynproof
