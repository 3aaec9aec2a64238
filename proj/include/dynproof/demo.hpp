#pragma once

#include <filesystem>
#include <vector>

#include "dynproof/constraint.hpp"
#include "dynproof/dsr.hpp"
#include "dynproof/proof_term.hpp"

namespace dynproof {

// Composition of k independent symmetry-breaking refutations.
//
// Pair i uses x_i = 2i-1, y_i = 2i; z_i = 2k+i is fresh. F_i is the
// unsatisfiable block {x∨y, x∨¬y, ¬x∨y, ¬x∨¬y} on pair i, padded with x_j∨¬y_j
// for every other pair j, so F_i is symmetric under the swap σ_i of pair i
// and no other. G_i is F_i with z_i added to every clause, C = ¬z_1∨…∨¬z_k
// and G = G_1 ∪ … ∪ G_k ∪ {C}.
struct ComposeDemo {
  int k = 0;
  Var num_vars = 0;
  StaticFormula g;
  std::vector<StaticFormula> parts;                 // G_i
  std::vector<StaticConstraint> breakers;           // B_i = ¬x_i ∨ y_i
  std::vector<Substitution> swaps;                  // σ_i
  std::vector<DsrProof> sub_proofs;                 // derive z_i from G_i
  DsrProof naive;                                   // π_1 … π_k, then the empty clause
  ProofTerm rho;                                    // refutes G without interference
};

// Throws std::invalid_argument unless 1 <= k <= 1000.
ComposeDemo compose_demo(int k);

// G.cnf, rho.term, naive-concat.dsr, and G_i.cnf / pi_i.dsr per part.
void write_demo(const ComposeDemo& demo, const std::filesystem::path& dir);

}  // namespace dynproof
