#include <gtest/gtest.h>

#include "dynproof/assignment.hpp"
#include "dynproof/constraint.hpp"
#include "dynproof/oracle.hpp"
#include "generators.hpp"

using namespace dynproof;
using dynproof::testing::Gen;
using dynproof::testing::all_assignments;

namespace {

const Lit x = Lit::pos(1);
const Lit y = Lit::pos(2);
const Lit z = Lit::pos(3);

Assignment make(std::initializer_list<std::pair<Var, bool>> values) {
  std::vector<Var> vars;
  for (auto [v, b] : values) vars.push_back(v);
  Assignment a(vars);
  for (auto [v, b] : values) a.set(v, b);
  return a;
}

}  // namespace

TEST(Literal, Complement) {
  EXPECT_EQ(complement(x), Lit::neg(1));
  EXPECT_EQ(complement(Lit::top()), Lit::bot());
  EXPECT_EQ(complement(Lit::bot()), Lit::top());
  EXPECT_EQ(complement(complement(~y)), ~y);
}

TEST(Literal, DimacsRoundTrip) {
  for (int v : {1, -1, 7, -42, 1 << 20}) EXPECT_EQ(Lit::from_dimacs(v).to_dimacs(), v);
  EXPECT_THROW(Lit::from_dimacs(0), std::invalid_argument);
  EXPECT_THROW(Lit::top().to_dimacs(), std::logic_error);
}

TEST(Literal, OrderPutsConstantsFirst) {
  EXPECT_LT(Lit::top(), Lit::bot());
  EXPECT_LT(Lit::bot(), x);
  EXPECT_LT(x, ~x);
  EXPECT_LT(~x, y);
}

TEST(Substitution, Apply) {
  EXPECT_EQ(make_subst({{1, Lit::bot()}})(~x), Lit::top());
  EXPECT_EQ(Substitution{}(y), y);
  EXPECT_EQ(make_subst({{1, y}})(x), y);
  EXPECT_EQ(make_subst({{1, y}})(Lit::top()), Lit::top());
  EXPECT_EQ(make_subst({{1, y}})(Lit::bot()), Lit::bot());
}

TEST(Substitution, DropsIdentityEntries) {
  EXPECT_TRUE(make_subst({{1, x}}).is_identity());
  EXPECT_EQ(make_subst({{1, x}, {2, z}}).entries().size(), 1u);
  EXPECT_THROW(make_subst({{1, y}, {1, z}}), std::invalid_argument);
}

TEST(Substitution, Compose) {
  EXPECT_EQ(compose(make_subst({{2, z}}), make_subst({{1, y}})), make_subst({{1, z}, {2, z}}));
  EXPECT_EQ(compose(Substitution{}, make_subst({{1, ~y}})), make_subst({{1, ~y}}));
  EXPECT_EQ(compose(make_subst({{2, Lit::bot()}}), make_subst({{1, ~y}})),
            make_subst({{1, Lit::top()}, {2, Lit::bot()}}));
}

TEST(Substitution, ComposeIsPointwise) {
  Gen gen(11, 6);
  for (int i = 0; i < 500; ++i) {
    const auto tau = gen.subst(4);
    const auto sigma = gen.subst(4);
    const auto rho = compose(tau, sigma);
    for (Var v = 1; v <= 6; ++v) {
      for (Lit l : {Lit::pos(v), Lit::neg(v)}) EXPECT_EQ(rho(l), tau(sigma(l)));
    }
  }
}

TEST(Assignment, AssignAfter) {
  EXPECT_EQ(assign_after(make({{1, false}, {2, true}}), make_subst({{1, y}})),
            make({{1, true}, {2, true}}));
  EXPECT_EQ(assign_after(make({{1, false}, {2, true}}), Substitution{}),
            make({{1, false}, {2, true}}));
  EXPECT_EQ(assign_after(make({{1, true}, {2, false}}),
                         make_subst({{1, Lit::bot()}, {2, Lit::bot()}})),
            make({{1, false}, {2, false}}));
}

TEST(Assignment, OutsideUniverseIsAnError) {
  const auto a = make({{1, true}});
  EXPECT_THROW(a.value(2), std::out_of_range);
  EXPECT_THROW(a.satisfies(~y), std::out_of_range);
  EXPECT_THROW(assign_after(a, make_subst({{1, y}})), std::out_of_range);
}

TEST(Assignment, CompositionLemma) {
  Gen gen(12, 8);
  for (int i = 0; i < 200; ++i) {
    const auto tau = gen.subst(5);
    const auto sigma = gen.subst(5);
    std::vector<Var> vars;
    for (Var v = 1; v <= 8; ++v) vars.push_back(v);
    const oracle::Universe u({vars.begin(), vars.end()});
    for (std::uint64_t bits = 0; bits < u.assignment_count(); bits += 7) {
      const auto a = u.assignment(bits);
      EXPECT_EQ(assign_after(a, compose(tau, sigma)), assign_after(assign_after(a, tau), sigma));
    }
  }
}

TEST(Constraint, CanonicalForm) {
  const auto c = StaticConstraint::clause({y, x, y, ~x, Lit::top()});
  const std::vector<Lit> expected{Lit::top(), x, ~x, y};
  EXPECT_EQ(std::vector<Lit>(c.literals().begin(), c.literals().end()), expected);
  EXPECT_EQ(canonicalize(c), c);
}

TEST(Constraint, Negate) {
  EXPECT_EQ(negate(StaticConstraint::clause({x, ~y})), StaticConstraint::cube({~x, y}));
  EXPECT_EQ(negate(StaticConstraint::cube({x})), StaticConstraint::clause({~x}));
  EXPECT_EQ(negate(StaticConstraint::clause({})), StaticConstraint::cube({}));
}

TEST(Constraint, Reduce) {
  const auto bot_both = make_subst({{1, Lit::bot()}, {2, Lit::bot()}});
  EXPECT_EQ(reduce(StaticConstraint::clause({x, y}), bot_both),
            StaticConstraint::clause({Lit::bot()}));
  EXPECT_EQ(reduce(StaticConstraint::clause({z}), bot_both), StaticConstraint::clause({z}));
  EXPECT_EQ(reduce(StaticConstraint::cube({~x}), make_subst({{1, y}})), StaticConstraint::cube({~y}));
}

TEST(Constraint, EmptyClauseIsBotEmptyCubeIsTop) {
  const Assignment a = make({{1, true}});
  EXPECT_FALSE(oracle::eval_static(a, StaticConstraint::clause({})));
  EXPECT_TRUE(oracle::eval_static(a, StaticConstraint::cube({})));
  EXPECT_FALSE(oracle::eval_static(a, StaticConstraint::bottom()));
}

TEST(Constraint, SemanticLaws) {
  Gen gen(13, 5);
  for (int i = 0; i < 400; ++i) {
    const auto c = gen.constraint(5, 0.1);
    const auto sigma = gen.subst(4);
    for (const auto& a : all_assignments(20, c, sigma)) {
      EXPECT_EQ(oracle::eval_static(a, negate(c)), !oracle::eval_static(a, c));
      EXPECT_EQ(oracle::eval_static(a, reduce(c, sigma)),
                oracle::eval_static(assign_after(a, sigma), c));
      EXPECT_EQ(oracle::eval_static(a, canonicalize(c)), oracle::eval_static(a, c));
    }
  }
}

TEST(Formula, SetSemantics) {
  StaticFormula f{StaticConstraint::clause({x, y}), StaticConstraint::clause({y, x})};
  EXPECT_EQ(f.size(), 1u);
  f.insert(StaticConstraint::cube({x, y}));
  EXPECT_EQ(f.size(), 2u);
  EXPECT_TRUE(f.contains(StaticConstraint::clause({y, x, x})));
  EXPECT_TRUE(f.erase(StaticConstraint::clause({y, x})));
  EXPECT_EQ(f, (StaticFormula{StaticConstraint::cube({y, x})}));
}
