#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dynproof/constraint.hpp"
#include "dynproof/program.hpp"
#include "dynproof/proof_term.hpp"
#include "dynproof/substitution.hpp"

namespace dynproof {

struct DelStep {
  StaticConstraint clause;
  friend bool operator==(const DelStep&, const DelStep&) = default;
};
struct RupStep {
  StaticConstraint clause;
  friend bool operator==(const RupStep&, const RupStep&) = default;
};
struct SrStep {
  StaticConstraint clause;
  Substitution witness;
  friend bool operator==(const SrStep&, const SrStep&) = default;
};
struct WsrStep {
  StaticConstraint clause;
  Substitution witness;
  StaticFormula excepted;
  friend bool operator==(const WsrStep& a, const WsrStep& b) {
    return a.clause == b.clause && a.witness == b.witness && a.excepted.items() == b.excepted.items();
  }
};

using DsrInstruction = std::variant<DelStep, RupStep, SrStep, WsrStep>;
using DsrProof = std::vector<DsrInstruction>;

const StaticConstraint& clause_of(const DsrInstruction& step);

// How the first SR side condition is read.
//   Standard: conflict(F ∪ {~C, ~(C|σ)})
//   Paper:    conflict({~(C|σ)})
// The per-clause conditions are identical.
enum class SrVariant { Standard, Paper };

std::optional<SrVariant> parse_sr_variant(std::string_view name);

// The accumulated formula after applying `steps` to `f` in order.
StaticFormula accumulated(const StaticFormula& f, std::span<const DsrInstruction> steps);
void apply_step(StaticFormula& f, const DsrInstruction& step);

bool check_sr(const StaticFormula& f, const StaticConstraint& c, const Substitution& sigma,
              SrVariant variant = SrVariant::Standard);
bool check_wsr(const StaticFormula& f, const StaticConstraint& c, const Substitution& sigma,
               const StaticFormula& excepted);
// Validity of a single step against the accumulated formula `f`.
bool check_step(const StaticFormula& f, const DsrInstruction& step,
                SrVariant variant = SrVariant::Standard);

struct DerivationReport {
  // Index of the first step whose side condition fails.
  std::optional<std::size_t> first_invalid;
  // UP conflict on the final accumulated formula (only computed when valid).
  bool refutes = false;

  bool valid() const { return !first_invalid.has_value(); }
  bool refutation() const { return valid() && refutes; }
};

DerivationReport check_derivation(const StaticFormula& f, std::span<const DsrInstruction> steps,
                                  SrVariant variant = SrVariant::Standard);
bool check_refutation(const StaticFormula& f, std::span<const DsrInstruction> steps,
                      SrVariant variant = SrVariant::Standard);

// if ~C then <σ>
Program redundancy_context(const StaticConstraint& c, const Substitution& sigma);

// The program whose necessity captures a derivation: one branch per SR/WSR step.
Program context_of(std::span<const DsrInstruction> steps);

// Interference-free proof term for a DSR/WSR derivation.
ProofTerm translate(const StaticFormula& f, std::span<const DsrInstruction> steps);

// One instruction per line:
//   d <lits> 0                          deletion
//   <lits> 0                            RUP
//   <lits> 0 w (<var> <image>)* 0       SR, image is a nonzero integer, t or f
//   <lits> 0 w ... 0 g (<lits> 0)* 0    WSR
// Blank lines and lines starting with `c` are skipped. Throws ParseError.
DsrProof parse_dsr(std::string_view text);
std::string to_dsr(std::span<const DsrInstruction> steps);

}  // namespace dynproof
