#pragma once

#include <string>
#include <string_view>

#include "dynproof/constraint.hpp"
#include "dynproof/dynamic.hpp"
#include "dynproof/implication.hpp"
#include "dynproof/program.hpp"
#include "dynproof/proof_term.hpp"
#include "dynproof/sexpr.hpp"

// Native parenthesized syntax.
//
//   literal     1 | -2 | top | bot
//   constraint  (or <lit>...) | (and <lit>...)
//   program     (seq <item>...)
//   item        (assign (<var> <lit>)...) | (test <constraint>)
//             | (choice <program> <program>)
//             | (branch <constraint> <program> <program>)
//   dynamic     (dyn <program> <constraint>)   ; a bare constraint means (dyn (seq) ...)
//   proof term  (qed) | (elim <term>)
//             | (lem (<dynamic>...) <term> <term>)
//             | (ctx <program> <term> <term>)
//   implication (implies (<dynamic>...) <dynamic>)
namespace dynproof {

std::string to_text(const StaticConstraint& c);
std::string to_text(const Program& p);
std::string to_text(const DynamicConstraint& c);
// One constraint per line.
std::string to_text(const DynamicFormula& f);
// Multi-line, two-space indentation per nested sub-proof.
std::string to_text(const ProofTerm& term);
std::string to_text(const DynamicImplication& impl);
// `F => C` with each premise on its own line.
std::string to_text(const StaticLeaf& leaf);
// Indented rule tree.
std::string to_text(const TraceNode& trace);

StaticConstraint constraint_from(const Sexpr& node);
Program program_from(const Sexpr& node);
DynamicConstraint dynamic_from(const Sexpr& node);
ProofTerm proof_term_from(const Sexpr& node);

StaticConstraint parse_constraint(std::string_view text);
Program parse_program(std::string_view text);
DynamicConstraint parse_dynamic_constraint(std::string_view text);
// Zero or more dynamic constraints.
DynamicFormula parse_dynamic_formula(std::string_view text);
ProofTerm parse_proof_term(std::string_view text);
DynamicImplication parse_implication(std::string_view text);

}  // namespace dynproof
