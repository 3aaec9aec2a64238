#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dynproof/literal.hpp"

namespace dynproof {

// A finite substitution. Only non-identity images of positive variables are
// stored, sorted by variable; the image of a negative literal is derived
// through the complement law and constants are fixed.
class Substitution {
 public:
  using Entry = std::pair<Var, Lit>;

  Substitution() = default;

  // Identity pairs are dropped. Throws std::invalid_argument if a variable is
  // mapped twice.
  explicit Substitution(std::vector<Entry> entries);

  Lit apply(Lit l) const;
  Lit operator()(Lit l) const { return apply(l); }
  Lit image(Var v) const;

  std::span<const Entry> entries() const { return entries_; }
  bool is_identity() const { return entries_.empty(); }
  std::size_t hash() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::vector<Entry> entries_;
};

inline Lit apply_subst(const Substitution& sigma, Lit l) { return sigma.apply(l); }

// The substitution l -> outer(inner(l)).
Substitution compose(const Substitution& outer, const Substitution& inner);

// Builds {v1 -> l1, v2 -> l2, ...} from DIMACS-style pairs; test helper.
Substitution make_subst(std::initializer_list<std::pair<int, Lit>> pairs);

}  // namespace dynproof
