#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dynproof {

// Parse failure with a 1-based source location (0 when not applicable).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column = 0);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Sexpr {
  bool is_atom = false;
  std::string atom;
  std::vector<Sexpr> list;
  int line = 0;
  int column = 0;

  Sexpr() = default;
  Sexpr(const Sexpr&) = default;
  Sexpr(Sexpr&&) noexcept = default;
  Sexpr& operator=(const Sexpr&) = default;
  Sexpr& operator=(Sexpr&&) noexcept = default;
  // Iterative, so deeply nested proof chains do not exhaust the stack.
  ~Sexpr();

  bool is_list() const { return !is_atom; }
  // True for a list whose first element is the atom `head`.
  bool headed(std::string_view head) const;
};

// All top-level forms. `;` starts a comment running to the end of the line.
std::vector<Sexpr> parse_sexprs(std::string_view text);

[[noreturn]] void fail_at(const Sexpr& node, const std::string& message);

}  // namespace dynproof
