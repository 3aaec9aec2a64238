// Regenerates the bundled refutation corpus:
//   corpus_gen <dir>
// Every instance is an unsatisfiable CNF with a DSR/WSR refutation and its
// translated proof term. Seeds are fixed, so the output is reproducible.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "dynproof/demo.hpp"
#include "dynproof/dimacs.hpp"
#include "dynproof/dsr.hpp"
#include "dynproof/oracle.hpp"
#include "dynproof/propagation.hpp"
#include "dynproof/text_format.hpp"

namespace fs = std::filesystem;
using namespace dynproof;

namespace {

struct Instance {
  std::string name;
  StaticFormula cnf;
  DsrProof proof;
  Var num_vars = 0;
};

// Post-order DPLL tree as RUP steps: every node contributes the negation of
// its decision path, and the two child clauses are deleted after use.
class DpllProver {
 public:
  explicit DpllProver(const StaticFormula& f) : f_(f) {}

  // False if the formula turns out satisfiable.
  bool refute(DsrProof& out) {
    out_ = &out;
    return node();
  }

 private:
  bool node() {
    std::vector<StaticConstraint> units;
    for (Lit d : decisions_) units.push_back(StaticConstraint::literal(d));
    const auto up = unit_propagate(f_, units);
    if (up.conflict()) {
      emit();
      return true;
    }
    std::set<Lit> trail(up.implied.begin(), up.implied.end());
    const auto branch = pick(trail);
    if (!branch) return false;
    StaticConstraint children[2];
    for (int side = 0; side < 2; ++side) {
      decisions_.push_back(side == 0 ? *branch : ~*branch);
      if (!node()) return false;
      children[side] = path_clause();
      decisions_.pop_back();
    }
    emit();
    out_->push_back(DelStep{children[0]});
    out_->push_back(DelStep{children[1]});
    f_.erase(children[0]);
    f_.erase(children[1]);
    return true;
  }

  // A literal of the first clause not yet satisfied.
  std::optional<Lit> pick(const std::set<Lit>& trail) const {
    for (const auto& c : f_) {
      const auto lits = c.literals();
      if (std::any_of(lits.begin(), lits.end(), [&](Lit l) { return trail.count(l) > 0; }))
        continue;
      for (Lit l : lits) {
        if (!trail.count(~l)) return l;
      }
    }
    return std::nullopt;
  }

  StaticConstraint path_clause() const {
    std::vector<Lit> lits;
    for (Lit d : decisions_) lits.push_back(~d);
    return StaticConstraint::clause(std::move(lits));
  }

  void emit() {
    const auto c = path_clause();
    if (f_.contains(c)) return;
    out_->push_back(RupStep{c});
    f_.insert(c);
  }

  StaticFormula f_;
  std::vector<Lit> decisions_;
  DsrProof* out_ = nullptr;
};

// Appends a DPLL refutation of accumulated(f, proof) to `proof`.
bool finish_with_dpll(const StaticFormula& f, DsrProof& proof) {
  const StaticFormula acc = accumulated(f, proof);
  return DpllProver(acc).refute(proof);
}

Lit var_lit(Var v, bool negative) { return negative ? Lit::neg(v) : Lit::pos(v); }

StaticFormula random_cnf(std::mt19937_64& rng, Var n, std::size_t clauses, std::size_t width) {
  std::uniform_int_distribution<Var> var(1, n);
  std::bernoulli_distribution sign(0.5);
  StaticFormula f;
  while (f.size() < clauses) {
    std::set<Var> vars;
    while (vars.size() < width) vars.insert(var(rng));
    std::vector<Lit> lits;
    for (Var v : vars) lits.push_back(var_lit(v, sign(rng)));
    f.insert(StaticConstraint::clause(std::move(lits)));
  }
  return f;
}

// Pigeon i in hole j is variable (i-1)*holes + j.
StaticFormula pigeonhole(Var pigeons, Var holes) {
  auto p = [holes](Var i, Var j) { return Lit::pos((i - 1) * holes + j); };
  StaticFormula f;
  for (Var i = 1; i <= pigeons; ++i) {
    std::vector<Lit> some;
    for (Var j = 1; j <= holes; ++j) some.push_back(p(i, j));
    f.insert(StaticConstraint::clause(std::move(some)));
  }
  for (Var j = 1; j <= holes; ++j) {
    for (Var a = 1; a <= pigeons; ++a) {
      for (Var b = a + 1; b <= pigeons; ++b) f.insert(StaticConstraint::clause({~p(a, j), ~p(b, j)}));
    }
  }
  return f;
}

Substitution pigeon_swap(Var holes, Var a, Var b) {
  std::vector<Substitution::Entry> entries;
  for (Var j = 1; j <= holes; ++j) {
    entries.emplace_back((a - 1) * holes + j, Lit::pos((b - 1) * holes + j));
    entries.emplace_back((b - 1) * holes + j, Lit::pos((a - 1) * holes + j));
  }
  return Substitution(std::move(entries));
}

// ¬x ∨ σ(x): x may only be true if its image is.
StaticConstraint swap_breaker(Var x, const Substitution& sigma) {
  return StaticConstraint::clause({Lit::neg(x), sigma.image(x)});
}

// Involution swapping `pairs` disjoint variable pairs among 1..n.
Substitution random_involution(std::mt19937_64& rng, Var n, std::size_t pairs,
                               std::vector<Var>& firsts) {
  std::vector<Var> vars(n);
  for (Var v = 1; v <= n; ++v) vars[v - 1] = v;
  std::shuffle(vars.begin(), vars.end(), rng);
  std::vector<Substitution::Entry> entries;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Var a = vars[2 * i], b = vars[2 * i + 1];
    entries.emplace_back(a, Lit::pos(b));
    entries.emplace_back(b, Lit::pos(a));
    firsts.push_back(a);
  }
  return Substitution(std::move(entries));
}

bool unsat_by_oracle(const StaticFormula& f) {
  std::set<Var> vars;
  oracle::collect_vars(f, vars);
  if (vars.size() > oracle::Universe::kDefaultCap) return true;
  return !oracle::satisfiable(f, oracle::Universe(vars));
}

std::vector<Instance> build() {
  std::vector<Instance> out;
  auto add = [&](std::string name, StaticFormula f, DsrProof proof) {
    if (!finish_with_dpll(f, proof)) throw std::runtime_error(name + ": satisfiable");
    Instance inst{std::move(name), std::move(f), std::move(proof), 0};
    inst.num_vars = max_var(inst.cnf);
    out.push_back(std::move(inst));
  };

  add("php-4-3", pigeonhole(4, 3), {});
  add("php-5-4", pigeonhole(5, 4), {});
  for (auto [pigeons, holes] : {std::pair<Var, Var>{4, 3}, {5, 4}}) {
    DsrProof proof;
    for (Var a = 1; a + 1 <= pigeons; a += 2) {
      const auto sigma = pigeon_swap(holes, a, a + 1);
      proof.push_back(SrStep{swap_breaker((a - 1) * holes + 1, sigma), sigma});
    }
    add("php-" + std::to_string(pigeons) + '-' + std::to_string(holes) + "-sr",
        pigeonhole(pigeons, holes), std::move(proof));
  }

  // Symmetric random formulas R ∪ R|σ with one breaker per swapped pair.
  for (int seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 rng(1000 + seed);
    const Var n = 10 + static_cast<Var>(seed);
    std::vector<Var> firsts;
    const auto sigma = random_involution(rng, n, 2 + seed % 2, firsts);
    StaticFormula f;
    while (true) {
      const auto r = random_cnf(rng, n, 3 * n, 3);
      f = r;
      for (const auto& c : reduce(r, sigma)) f.insert(c);
      if (!oracle::satisfiable(f, oracle::universe_of(20, f))) break;
    }
    DsrProof proof;
    for (Var x : firsts) {
      if (check_sr(accumulated(f, proof), swap_breaker(x, sigma), sigma))
        proof.push_back(SrStep{swap_breaker(x, sigma), sigma});
    }
    add("sym-sr-" + std::to_string(seed), std::move(f), std::move(proof));
  }

  // Blocks in the style of the composition demo, without the z variables.
  for (int k = 2; k <= 3; ++k) {
    const auto demo = compose_demo(k);
    StaticFormula f;
    for (const auto& c : demo.parts[0]) {
      std::vector<Lit> lits;
      for (Lit l : c.literals()) {
        if (l.var() <= static_cast<Var>(2 * k)) lits.push_back(l);
      }
      f.insert(StaticConstraint::clause(std::move(lits)));
    }
    add("block-sr-" + std::to_string(k), std::move(f),
        {SrStep{demo.breakers[0], demo.swaps[0]}});
  }

  for (int seed = 1; seed <= 6; ++seed) {
    std::mt19937_64 rng(2000 + seed);
    const Var n = 8 + 2 * static_cast<Var>(seed);
    StaticFormula f;
    do {
      f = random_cnf(rng, n, static_cast<std::size_t>(5.5 * n), 3);
    } while (!unsat_by_oracle(f));
    add("rand3-" + std::to_string(seed), std::move(f), {});
  }

  // WSR dropping clauses outside a symmetric unsatisfiable core.
  for (int seed = 1; seed <= 3; ++seed) {
    std::mt19937_64 rng(3000 + seed);
    const Var n = 12;
    std::vector<Var> firsts;
    const auto sigma = random_involution(rng, n, 2, firsts);
    StaticFormula core;
    while (true) {
      const auto r = random_cnf(rng, n, 3 * n, 3);
      core = r;
      for (const auto& c : reduce(r, sigma)) core.insert(c);
      if (!oracle::satisfiable(core, oracle::universe_of(20, core))) break;
    }
    StaticFormula asym;
    for (const auto& c : random_cnf(rng, n + 4, 6, 3)) {
      if (!core.contains(c) && !core.contains(reduce(c, sigma))) asym.insert(c);
    }
    StaticFormula f = core;
    for (const auto& c : asym) f.insert(c);
    const auto breaker = swap_breaker(firsts[0], sigma);
    if (!check_wsr(f, breaker, sigma, asym)) throw std::runtime_error("wsr-asym: invalid step");
    add("wsr-asym-" + std::to_string(seed), std::move(f), {WsrStep{breaker, sigma, asym}});
  }

  // WSR(x, x -> top) excepting every clause with ~x.
  for (int seed = 1; seed <= 2; ++seed) {
    std::mt19937_64 rng(4000 + seed);
    const Var n = 10;
    const Var x = n + 1;
    StaticFormula f;
    do {
      f = random_cnf(rng, n, 6 * n, 3);
    } while (!unsat_by_oracle(f));
    StaticFormula excepted;
    for (const auto& c : random_cnf(rng, n, 4, 2)) {
      std::vector<Lit> lits(c.literals().begin(), c.literals().end());
      lits.push_back(Lit::neg(x));
      excepted.insert(StaticConstraint::clause(lits));
      lits.back() = Lit::pos(x);
      f.insert(StaticConstraint::clause(lits));
    }
    for (const auto& c : excepted) f.insert(c);
    const Substitution sigma({{x, Lit::top()}});
    add("wsr-pure-" + std::to_string(seed), std::move(f),
        {WsrStep{StaticConstraint::literal(Lit::pos(x)), sigma, excepted}});
  }
  return out;
}

void write(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: corpus_gen <dir>\n";
    return 2;
  }
  const fs::path dir = argv[1];
  try {
    fs::create_directories(dir);
    for (const auto& inst : build()) {
      if (!check_refutation(inst.cnf, inst.proof))
        throw std::runtime_error(inst.name + ": refutation does not check");
      if (!unsat_by_oracle(inst.cnf)) throw std::runtime_error(inst.name + ": satisfiable");
      write(dir / (inst.name + ".cnf"), to_dimacs(inst.cnf, inst.num_vars));
      write(dir / (inst.name + ".dsr"), to_dsr(inst.proof));
      write(dir / (inst.name + ".term"), to_text(translate(inst.cnf, inst.proof)));
      std::cout << inst.name << ": " << inst.num_vars << " vars, " << inst.cnf.size()
                << " clauses, " << inst.proof.size() << " steps\n";
    }
    write_demo(compose_demo(3), dir / "demo");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
