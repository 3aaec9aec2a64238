#include <gtest/gtest.h>

#include <functional>

#include "dynproof/implication.hpp"
#include "dynproof/oracle.hpp"
#include "generators.hpp"

using namespace dynproof;
using dynproof::testing::Gen;

namespace {

const Lit x = Lit::pos(1);
const Lit y = Lit::pos(2);
const Lit z = Lit::pos(3);

StaticConstraint cl(std::vector<Lit> l) { return StaticConstraint::clause(std::move(l)); }
StaticConstraint cu(std::vector<Lit> l) { return StaticConstraint::cube(std::move(l)); }

DynamicConstraint st(StaticConstraint c) { return DynamicConstraint(std::move(c)); }

Program branch_assign(const StaticConstraint& cond, const Substitution& sigma) {
  return Program{branch_item(cond, Program{assign_item(sigma)})};
}

std::vector<StaticLeaf> leaves_of(const TraceNode& node) {
  std::vector<StaticLeaf> out;
  std::function<void(const TraceNode&)> walk = [&](const TraceNode& n) {
    if (n.leaf) out.push_back(*n.leaf);
    for (const auto& c : n.children) walk(c);
  };
  walk(node);
  return out;
}

}  // namespace

TEST(Necessity, BranchWithEmptyElse) {
  const auto c = cl({~x, y});
  const auto sigma = make_subst({{1, y}, {2, x}});
  const DynamicFormula gamma{st(cl({x, y}))};
  const DynamicImplication impl{gamma, {branch_assign(negate(c), sigma), cl({z})}};
  const auto out = apply_necessity(impl);
  ASSERT_EQ(out.size(), 2u);
  auto with = [&](const StaticConstraint& extra) {
    auto g = gamma;
    g.insert(st(extra));
    return g;
  };
  EXPECT_EQ(out[0].lhs, with(negate(c)));
  EXPECT_EQ(out[0].rhs, DynamicConstraint(Program{assign_item(sigma)}, cl({z})));
  EXPECT_EQ(out[1].lhs, with(c));
  EXPECT_EQ(out[1].rhs, st(cl({z})));
}

TEST(Necessity, Assign) {
  const auto sigma = make_subst({{1, Lit::bot()}});
  const DynamicImplication impl{{}, {Program{assign_item(sigma)}, cl({x, y})}};
  const auto out = apply_necessity(impl);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].rhs, st(cl({Lit::bot(), y})));
}

TEST(Necessity, TestBotProvesBot) {
  const DynamicConstraint phi(Program{test_item(cl({Lit::bot()}))}, cl({Lit::bot()}));
  const auto out = apply_necessity({{}, phi});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_TRUE(out[0].lhs.contains(st(cl({Lit::bot()}))));
  EXPECT_TRUE(dyn_implies({}, phi).accepted());
  EXPECT_TRUE(dyn_implies(DynamicFormula{st(cl({x}))}, phi).accepted());
}

TEST(Necessity, Choice) {
  const Program left{test_item(cl({x}))};
  const Program right{assign_item(make_subst({{2, x}}))};
  const Program rest{test_item(cl({z}))};
  const DynamicImplication impl{{}, {concat(Program{choice_item(left, right)}, rest), cl({y})}};
  const auto out = apply_necessity(impl);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].rhs, DynamicConstraint(concat(left, rest), cl({y})));
  EXPECT_EQ(out[1].rhs, DynamicConstraint(concat(right, rest), cl({y})));
}

TEST(Necessity, EmptyContextIsAnError) {
  EXPECT_THROW(apply_necessity({{}, st(cl({x}))}), std::invalid_argument);
}

TEST(Possibility, BranchLeavesFromComposition) {
  const auto b = cl({~x, y});
  const auto tau = make_subst({{1, Lit::bot()}, {2, Lit::bot()}});
  const DynamicFormula gamma{DynamicConstraint(branch_assign(negate(b), tau), cl({z}))};
  ImplicationOptions opts;
  opts.record_trace = true;
  const auto r = dyn_implies(gamma, st(cl({z})), opts);
  EXPECT_TRUE(r.accepted());
  ASSERT_TRUE(r.trace);
  const auto leaves = leaves_of(*r.trace);
  ASSERT_EQ(leaves.size(), 2u);
  EXPECT_EQ(leaves[0].premises, (StaticFormula{cl({z}), negate(b)}));
  EXPECT_EQ(leaves[1].premises, (StaticFormula{cl({z}), b}));
  for (const auto& leaf : leaves) {
    EXPECT_TRUE(leaf.conflict);
    EXPECT_EQ(leaf.conclusion, cl({z}));
  }
}

TEST(Possibility, Assign) {
  const auto sigma = make_subst({{1, y}});
  const DynamicConstraint target(Program{assign_item(sigma)}, cl({x}));
  const DynamicFormula gamma{target, st(cl({z}))};
  const auto out = apply_possibility({gamma, st(cl({y}))}, target);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].lhs, (DynamicFormula{st(cl({y})), st(cl({z}))}));
}

TEST(Possibility, Test) {
  const DynamicConstraint target(Program{test_item(cl({x}))}, cl({y}));
  const auto out = apply_possibility({{target}, st(cl({z}))}, target);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].lhs, (DynamicFormula{st(cl({y})), st(cl({x}))}));
  EXPECT_EQ(out[1].lhs, (DynamicFormula{st(cu({~x}))}));
}

TEST(Possibility, Choice) {
  const Program left{test_item(cl({x}))};
  const Program right{test_item(cl({y}))};
  const DynamicConstraint target(Program{choice_item(left, right)}, cl({z}));
  const auto out = apply_possibility({{target}, st(cl({z}))}, target);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].lhs, (DynamicFormula{DynamicConstraint(left, cl({z})), DynamicConstraint(right, cl({z}))}));
}

TEST(Possibility, Preconditions) {
  const DynamicConstraint target(Program{test_item(cl({x}))}, cl({y}));
  EXPECT_THROW(apply_possibility({{}, st(cl({z}))}, target), std::invalid_argument);
  EXPECT_THROW(apply_possibility({{st(cl({x}))}, st(cl({z}))}, st(cl({x}))), std::invalid_argument);
}

TEST(DynImplies, StaticCaseIsRup) {
  EXPECT_TRUE(dyn_implies(DynamicFormula{st(cl({x}))}, st(cl({x, y}))).accepted());
  EXPECT_FALSE(dyn_implies(DynamicFormula{st(cl({x, y}))}, st(cl({x}))).accepted());
}

TEST(DynImplies, SrContextImpliesBot) {
  const auto c = cl({~x, y});
  const auto sigma = make_subst({{1, y}, {2, x}});
  DynamicFormula gamma{st(cl({x, y})), st(cl({~x, ~y}))};
  gamma.insert(DynamicConstraint(branch_assign(negate(c), sigma), StaticConstraint::bottom()));
  EXPECT_TRUE(dyn_implies(gamma, st(StaticConstraint::bottom())).accepted());
}

TEST(DynImplies, CompositionBreakerWithConstantWitness) {
  const auto b = cl({~x, y});
  const auto tau = make_subst({{1, Lit::bot()}, {2, Lit::bot()}});
  const DynamicFormula gamma{DynamicConstraint(branch_assign(negate(b), tau), cl({z}))};
  EXPECT_TRUE(dyn_implies(gamma, st(cl({z}))).accepted());
}

TEST(DynImplies, IncompletenessWitness) {
  // Entailed, but needs case analysis that unit propagation cannot do.
  const DynamicFormula gamma{st(cl({x, y})), st(cl({x, ~y})), st(cl({~x, y})), st(cl({~x, ~y}))};
  const auto r = dyn_implies(gamma, st(StaticConstraint::bottom()));
  EXPECT_EQ(r.verdict, Verdict::Rejected);
  ASSERT_TRUE(r.failing_leaf);
  EXPECT_EQ(r.failing_leaf->premises.size(), 4u);
  EXPECT_TRUE(oracle::entails(gamma, st(StaticConstraint::bottom()), oracle::universe_of(20, gamma)));
}

TEST(DynImplies, BudgetExceeded) {
  Program p;
  for (int i = 0; i < 12; ++i) p.items.push_back(choice_item(Program{}, Program{}));
  ImplicationOptions opts;
  opts.leaf_budget = 100;
  // Choices on the right split; every leaf would succeed.
  const auto r = dyn_implies({st(cl({x}))}, DynamicConstraint(p, cl({x})), opts);
  EXPECT_EQ(r.verdict, Verdict::BudgetExceeded);
  EXPECT_EQ(r.leaves, 101u);
}

TEST(DynImplies, SoundAgainstOracle) {
  Gen gen(41, 4);
  int accepted = 0;
  for (int i = 0; i < 1500; ++i) {
    const auto gamma = gen.dynamic_formula(4, 3);
    const auto phi = gen.dynamic(3);
    const auto r = dyn_implies(gamma, phi);
    if (!r.accepted()) continue;
    ++accepted;
    ASSERT_TRUE(oracle::entails(gamma, phi, oracle::universe_of(20, gamma, phi)))
        << "accepted but not entailed";
  }
  EXPECT_GT(accepted, 100);
}

TEST(DynImplies, Monotone) {
  Gen gen(42, 4);
  for (int i = 0; i < 800; ++i) {
    const auto gamma = gen.dynamic_formula(4, 2);
    const auto phi = gen.dynamic(2);
    if (!dyn_implies(gamma, phi).accepted()) continue;
    auto bigger = gamma;
    for (const auto& c : gen.dynamic_formula(3, 2)) bigger.insert(c);
    EXPECT_TRUE(dyn_implies(bigger, phi).accepted());
  }
}

TEST(DynImplies, FailingLeafHasNoConflict) {
  Gen gen(43, 4);
  for (int i = 0; i < 500; ++i) {
    const auto gamma = gen.dynamic_formula(3, 2);
    const auto phi = gen.dynamic(2);
    const auto r = dyn_implies(gamma, phi);
    if (r.verdict != Verdict::Rejected) continue;
    ASSERT_TRUE(r.failing_leaf);
    EXPECT_FALSE(r.failing_leaf->conflict);
    EXPECT_FALSE(has_conflict(r.failing_leaf->premises,
                              std::vector<StaticConstraint>{negate(r.failing_leaf->conclusion)}));
  }
}

TEST(DynImplies, TraceIsDeterministic) {
  Gen gen(44, 4);
  ImplicationOptions opts;
  opts.record_trace = true;
  for (int i = 0; i < 100; ++i) {
    const auto gamma = gen.dynamic_formula(3, 3);
    const auto phi = gen.dynamic(3);
    const auto a = dyn_implies(gamma, phi, opts);
    const auto b = dyn_implies(gamma, phi, opts);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.leaves, b.leaves);
    EXPECT_EQ(leaves_of(*a.trace).size(), leaves_of(*b.trace).size());
  }
}

TEST(Termination, EveryRewriteLowersTheMeasure) {
  Gen gen(45, 4);
  for (int i = 0; i < 1000; ++i) {
    const auto gamma = gen.dynamic_formula(3, 4);
    const auto phi = gen.dynamic(4);
    if (!phi.is_static()) {
      const auto before = termination_measure(phi.context);
      for (const auto& child : apply_necessity({gamma, phi}))
        EXPECT_LT(termination_measure(child.rhs.context), before);
    }
    for (const auto& target : gamma) {
      if (target.is_static()) continue;
      const auto before = termination_measure(target.context);
      for (const auto& child : apply_possibility({gamma, phi}, target)) {
        for (const auto& c : child.lhs) {
          if (gamma.contains(c)) continue;
          EXPECT_LT(termination_measure(c.context), before);
        }
      }
    }
  }
}

TEST(Termination, PlainContextSizeCanGrow) {
  // The assignment rule before a test keeps the item count, so plain size is
  // not a valid termination measure; the lexicographic one is.
  const auto sigma = make_subst({{1, y}});
  const DynamicConstraint phi(Program{assign_item(sigma), test_item(cl({x}))}, cl({z}));
  const auto out = apply_necessity({{}, phi});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].rhs.context.size(), phi.context.size());
  EXPECT_LT(termination_measure(out[0].rhs.context), termination_measure(phi.context));
}
