#include "dynproof/demo.hpp"

#include <fstream>
#include <stdexcept>

#include "dynproof/dimacs.hpp"
#include "dynproof/text_format.hpp"

namespace dynproof {

namespace {

Program breaker_context(const StaticConstraint& b, const Substitution& sigma) {
  return Program{branch_item(negate(b), Program{assign_item(sigma)})};
}

// Proves z_i from G by reasoning about G_i under the breaker context only.
ProofTerm part_term(const StaticFormula& part, const StaticConstraint& breaker,
                    const Substitution& sigma, Lit z, Lit x) {
  const Program eps = breaker_context(breaker, sigma);
  StaticFormula scoped = part;
  scoped.insert(breaker);
  const auto x_or_z = StaticConstraint::clause({x, z});
  const auto z_unit = StaticConstraint::literal(z);

  ProofTerm inner{Lem{DynamicFormula{DynamicConstraint(x_or_z)}, ProofTerm{Qed{}}},
                  Lem{DynamicFormula{DynamicConstraint(z_unit)}, ProofTerm{Qed{}}}, Qed{}};
  ProofTerm under{Lem{prepend_context(eps, scoped), ProofTerm{Qed{}}},
                  Ctx{eps, std::move(inner)}, Qed{}};
  return ProofTerm{Lem{DynamicFormula{DynamicConstraint(eps, z_unit)}, std::move(under)},
                   Elim{}, Qed{}};
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

ComposeDemo compose_demo(int k) {
  if (k < 1 || k > 1000) throw std::invalid_argument("k must be between 1 and 1000");
  ComposeDemo demo;
  demo.k = k;
  demo.num_vars = static_cast<Var>(3 * k);
  auto x = [](int i) { return Lit::pos(static_cast<Var>(2 * i - 1)); };
  auto y = [](int i) { return Lit::pos(static_cast<Var>(2 * i)); };
  auto z = [k](int i) { return Lit::pos(static_cast<Var>(2 * k + i)); };

  std::vector<Lit> all_not_z;
  for (int i = 1; i <= k; ++i) {
    StaticFormula part;
    for (Lit a : {x(i), ~x(i)}) {
      for (Lit b : {y(i), ~y(i)}) part.insert(StaticConstraint::clause({a, b, z(i)}));
    }
    for (int j = 1; j <= k; ++j) {
      if (j != i) part.insert(StaticConstraint::clause({x(j), ~y(j), z(i)}));
    }
    const auto breaker = StaticConstraint::clause({~x(i), y(i)});
    const Substitution swap({{x(i).var(), y(i)}, {y(i).var(), x(i)}});

    DsrProof pi{SrStep{breaker, swap}, RupStep{StaticConstraint::clause({x(i), z(i)})},
                RupStep{StaticConstraint::literal(z(i))}};
    demo.naive.insert(demo.naive.end(), pi.begin(), pi.end());
    for (const auto& c : part) demo.g.insert(c);

    demo.parts.push_back(std::move(part));
    demo.breakers.push_back(breaker);
    demo.swaps.push_back(swap);
    demo.sub_proofs.push_back(std::move(pi));
    all_not_z.push_back(~z(i));
  }
  demo.g.insert(StaticConstraint::clause(all_not_z));
  demo.naive.push_back(RupStep{StaticConstraint::clause({})});

  // lem({z_1}, ρ_1) … lem({z_k}, ρ_k) qed
  std::vector<Instruction> steps;
  for (int i = 1; i <= k; ++i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    steps.emplace_back(Lem{DynamicFormula{DynamicConstraint(StaticConstraint::literal(z(i)))},
                           part_term(demo.parts[idx], demo.breakers[idx], demo.swaps[idx], z(i),
                                     x(i))});
  }
  steps.emplace_back(Qed{});
  demo.rho = ProofTerm(std::move(steps));
  return demo;
}

void write_demo(const ComposeDemo& demo, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_file(dir / "G.cnf", to_dimacs(demo.g, demo.num_vars));
  write_file(dir / "rho.term", to_text(demo.rho));
  write_file(dir / "naive-concat.dsr", to_dsr(demo.naive));
  for (std::size_t i = 0; i < demo.parts.size(); ++i) {
    const std::string n = std::to_string(i + 1);
    write_file(dir / ("G_" + n + ".cnf"), to_dimacs(demo.parts[i], demo.num_vars));
    write_file(dir / ("pi_" + n + ".dsr"), to_dsr(demo.sub_proofs[i]));
  }
}

}  // namespace dynproof
