#include "dynproof/literal.hpp"

#include <stdexcept>

namespace dynproof {

namespace {

void check_var(Var v) {
  if (v == 0 || v > kMaxVar)
    throw std::out_of_range("variable id out of range: " + std::to_string(v));
}

}  // namespace

Lit Lit::pos(Var v) {
  check_var(v);
  return Lit(2 * v);
}

Lit Lit::neg(Var v) {
  check_var(v);
  return Lit(2 * v + 1);
}

Lit Lit::from_dimacs(int value) {
  if (value == 0) throw std::invalid_argument("literal 0 is a terminator, not a literal");
  // Avoids overflow on INT_MIN.
  const long long magnitude = value < 0 ? -static_cast<long long>(value) : value;
  if (magnitude > kMaxVar)
    throw std::out_of_range("variable id out of range: " + std::to_string(magnitude));
  return value > 0 ? pos(static_cast<Var>(magnitude)) : neg(static_cast<Var>(magnitude));
}

int Lit::to_dimacs() const {
  if (is_constant()) throw std::logic_error("constant literal has no DIMACS form");
  const int v = static_cast<int>(var());
  return negative() ? -v : v;
}

std::string to_string(Lit l) {
  if (l.is_top()) return "top";
  if (l.is_bot()) return "bot";
  return std::to_string(l.to_dimacs());
}

}  // namespace dynproof
