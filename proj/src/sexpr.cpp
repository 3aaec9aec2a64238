#include "dynproof/sexpr.hpp"

#include <cctype>

namespace dynproof {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(column > 0 ? "line " + std::to_string(line) + ", column " +
                                          std::to_string(column) + ": " + message
                                    : "line " + std::to_string(line) + ": " + message),
      line_(line),
      column_(column) {}

Sexpr::~Sexpr() {
  if (list.empty()) return;
  std::vector<Sexpr> pending = std::move(list);
  while (!pending.empty()) {
    Sexpr last = std::move(pending.back());
    pending.pop_back();
    for (auto& child : last.list) pending.push_back(std::move(child));
    last.list.clear();
  }
}

bool Sexpr::headed(std::string_view head) const {
  return is_list() && !list.empty() && list.front().is_atom && list.front().atom == head;
}

void fail_at(const Sexpr& node, const std::string& message) {
  throw ParseError(message, node.line, node.column);
}

std::vector<Sexpr> parse_sexprs(std::string_view text) {
  // Explicit stack: proof terms nest once per instruction.
  std::vector<Sexpr> stack(1);
  int line = 1;
  int column = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    ++column;
    if (ch == '\n') {
      ++line;
      column = 0;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == ';') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (ch == '(') {
      Sexpr open;
      open.line = line;
      open.column = column;
      stack.push_back(std::move(open));
      ++i;
    } else if (ch == ')') {
      if (stack.size() == 1) throw ParseError("unbalanced ')'", line, column);
      Sexpr done = std::move(stack.back());
      stack.pop_back();
      stack.back().list.push_back(std::move(done));
      ++i;
    } else {
      Sexpr atom;
      atom.is_atom = true;
      atom.line = line;
      atom.column = column;
      const std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '(' && text[i] != ')' && text[i] != ';')
        ++i;
      atom.atom = std::string(text.substr(start, i - start));
      column += static_cast<int>(i - start) - 1;
      stack.back().list.push_back(std::move(atom));
    }
  }
  if (stack.size() != 1) {
    const Sexpr& open = stack.back();
    throw ParseError("unterminated '('", open.line, open.column);
  }
  return std::move(stack.front().list);
}

}  // namespace dynproof
