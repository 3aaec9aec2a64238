#include "dynproof/assignment.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dynproof {

Assignment::Assignment(std::vector<Var> universe) : vars_(std::move(universe)) {
  std::sort(vars_.begin(), vars_.end());
  if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end())
    throw std::invalid_argument("assignment universe contains a duplicate variable");
  values_.assign(vars_.size(), 0);
}

Assignment::Assignment(std::vector<Var> universe, std::uint64_t bits)
    : Assignment(std::move(universe)) {
  for (std::size_t i = 0; i < vars_.size() && i < 64; ++i) values_[i] = (bits >> i) & 1u;
}

bool Assignment::contains(Var v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

std::size_t Assignment::index_of(Var v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v)
    throw std::out_of_range("variable " + std::to_string(v) + " is outside the universe");
  return static_cast<std::size_t>(it - vars_.begin());
}

bool Assignment::value(Var v) const { return values_[index_of(v)] != 0; }

void Assignment::set(Var v, bool value) { values_[index_of(v)] = value ? 1 : 0; }

bool Assignment::satisfies(Lit l) const {
  if (l.is_top()) return true;
  if (l.is_bot()) return false;
  return value(l.var()) != l.negative();
}

Assignment assign_after(const Assignment& assignment, const Substitution& sigma) {
  Assignment result = assignment;
  for (Var v : assignment.universe()) result.set(v, assignment.satisfies(sigma.image(v)));
  return result;
}

}  // namespace dynproof
