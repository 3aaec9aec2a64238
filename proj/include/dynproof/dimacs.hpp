#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "dynproof/constraint.hpp"
#include "dynproof/sexpr.hpp"

namespace dynproof {

struct Cnf {
  Var declared_vars = 0;
  std::size_t declared_clauses = 0;
  // Duplicate clauses collapse; the header count refers to clauses as written.
  StaticFormula formula;
};

// `p cnf V C` header, `c` comment lines, 0-terminated clauses that may span
// lines. Throws ParseError with the offending line.
Cnf parse_dimacs(std::string_view text);

// Header uses max(num_vars, max_var(f)). Throws std::invalid_argument on cubes
// or constant literals.
std::string to_dimacs(const StaticFormula& f, Var num_vars = 0);

}  // namespace dynproof
