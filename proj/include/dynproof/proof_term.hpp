#pragma once

#include <variant>
#include <vector>

#include "dynproof/dynamic.hpp"
#include "dynproof/program.hpp"

namespace dynproof {

struct Instruction;

// A list of qed/elim/lem/ctx instructions terminated by exactly one qed.
struct ProofTerm {
  std::vector<Instruction> steps;

  ProofTerm() = default;
  ProofTerm(std::vector<Instruction> steps);
  ProofTerm(std::initializer_list<Instruction> steps);

  friend bool operator==(const ProofTerm&, const ProofTerm&);
};

struct Qed {
  friend bool operator==(const Qed&, const Qed&) = default;
};

struct Elim {
  friend bool operator==(const Elim&, const Elim&) = default;
};

// lem(Θ, ρ): prove the lemmas Θ with ρ, then keep them.
struct Lem {
  DynamicFormula lemmas;
  ProofTerm proof;
  friend bool operator==(const Lem&, const Lem&);
};

// ctx(ε, ρ): prove the goals under ε from the premises under ε.
struct Ctx {
  Program context;
  ProofTerm proof;
  friend bool operator==(const Ctx&, const Ctx&);
};

struct Instruction {
  std::variant<Qed, Elim, Lem, Ctx> node;

  Instruction(Qed q) : node(q) {}
  Instruction(Elim e) : node(e) {}
  Instruction(Lem l) : node(std::move(l)) {}
  Instruction(Ctx c) : node(std::move(c)) {}

  friend bool operator==(const Instruction&, const Instruction&);
};

// Nonempty, qed exactly once and last, recursively.
bool well_formed(const ProofTerm& term);

// Total number of instructions, nested ones included.
std::size_t instruction_count(const ProofTerm& term);

}  // namespace dynproof
