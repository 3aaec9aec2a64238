#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace dynproof {

using Var = std::uint32_t;

// Largest variable id; keeps DIMACS conversion inside `int`.
inline constexpr Var kMaxVar = (1u << 30) - 1;

// A propositional literal: a variable with polarity, or one of the constants
// top/bot. Encoded as `2 * var + negative`, with top = 0 and bot = 1, so that
// complementation is a single xor and the natural order is
// (constants first, variable id, positive before negative).
class Lit {
 public:
  constexpr Lit() = default;

  static constexpr Lit top() { return Lit(0); }
  static constexpr Lit bot() { return Lit(1); }
  static Lit pos(Var v);
  static Lit neg(Var v);
  // Signed DIMACS integer; 0 is rejected.
  static Lit from_dimacs(int value);
  static constexpr Lit from_code(std::uint32_t code) { return Lit(code); }

  constexpr bool is_constant() const { return code_ < 2; }
  constexpr bool is_top() const { return code_ == 0; }
  constexpr bool is_bot() const { return code_ == 1; }
  constexpr bool is_var() const { return code_ >= 2; }
  constexpr Var var() const { return code_ >> 1; }
  constexpr bool negative() const { return code_ & 1u; }
  constexpr std::uint32_t code() const { return code_; }

  constexpr Lit operator~() const { return Lit(code_ ^ 1u); }

  // Throws std::logic_error for constants.
  int to_dimacs() const;

  constexpr auto operator<=>(const Lit&) const = default;

 private:
  constexpr explicit Lit(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

inline Lit complement(Lit l) { return ~l; }

// "1", "-3", "top", "bot".
std::string to_string(Lit l);

}  // namespace dynproof

template <>
struct std::hash<dynproof::Lit> {
  std::size_t operator()(dynproof::Lit l) const noexcept {
    return std::hash<std::uint32_t>{}(l.code());
  }
};
