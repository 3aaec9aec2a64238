#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "dynproof/literal.hpp"
#include "dynproof/substitution.hpp"

namespace dynproof {

// A total assignment over a declared finite universe of variables. Reading a
// variable outside the universe throws std::out_of_range.
class Assignment {
 public:
  Assignment() = default;
  // `universe` need not be sorted; duplicates are rejected. All values start at 0.
  explicit Assignment(std::vector<Var> universe);
  // Bit i of `bits` is the value of the i-th smallest universe variable.
  Assignment(std::vector<Var> universe, std::uint64_t bits);

  std::span<const Var> universe() const { return vars_; }
  bool contains(Var v) const;

  bool value(Var v) const;
  void set(Var v, bool value);
  bool satisfies(Lit l) const;

  friend auto operator<=>(const Assignment&, const Assignment&) = default;
  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::size_t index_of(Var v) const;

  std::vector<Var> vars_;
  std::vector<std::uint8_t> values_;
};

// I∘σ: (I∘σ)(x) = 1 iff I satisfies σ(x), for every x in I's universe.
Assignment assign_after(const Assignment& assignment, const Substitution& sigma);

}  // namespace dynproof
