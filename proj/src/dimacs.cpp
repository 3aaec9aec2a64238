#include "dynproof/dimacs.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace dynproof {

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

long long to_int(const Token& t, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError("expected an integer, got '" + std::string(t.text) + "'", line, t.column);
  return value;
}

}  // namespace

Cnf parse_dimacs(std::string_view text) {
  Cnf cnf;
  bool have_header = false;
  std::size_t clauses_read = 0;
  std::vector<Lit> pending;
  int pending_line = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = split(line);
    if (tokens.empty() || tokens.front().text.front() == 'c' || tokens.front().text == "%") continue;
    if (tokens.front().text == "p") {
      if (have_header) throw ParseError("duplicate header", line_no, 1);
      if (tokens.size() != 4 || tokens[1].text != "cnf")
        throw ParseError("malformed header, expected 'p cnf <vars> <clauses>'", line_no, 1);
      const long long vars = to_int(tokens[2], line_no);
      const long long clauses = to_int(tokens[3], line_no);
      if (vars < 0 || vars > static_cast<long long>(kMaxVar) || clauses < 0)
        throw ParseError("header counts out of range", line_no, tokens[2].column);
      cnf.declared_vars = static_cast<Var>(vars);
      cnf.declared_clauses = static_cast<std::size_t>(clauses);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause before 'p cnf' header", line_no, 1);
    for (const auto& t : tokens) {
      const long long value = to_int(t, line_no);
      if (value == 0) {
        cnf.formula.insert(StaticConstraint::clause(std::move(pending)));
        pending.clear();
        ++clauses_read;
        continue;
      }
      const long long magnitude = value < 0 ? -value : value;
      if (magnitude > static_cast<long long>(cnf.declared_vars))
        throw ParseError("variable " + std::to_string(magnitude) + " exceeds declared count " +
                             std::to_string(cnf.declared_vars),
                         line_no, t.column);
      if (pending.empty()) pending_line = line_no;
      pending.push_back(Lit::from_dimacs(static_cast<int>(value)));
    }
  }
  if (!have_header) throw ParseError("missing 'p cnf' header", line_no);
  if (!pending.empty()) throw ParseError("clause not terminated by 0", pending_line);
  if (clauses_read != cnf.declared_clauses)
    throw ParseError("header declares " + std::to_string(cnf.declared_clauses) +
                         " clauses, found " + std::to_string(clauses_read),
                     line_no);
  return cnf;
}

std::string to_dimacs(const StaticFormula& f, Var num_vars) {
  std::string out = "p cnf " + std::to_string(std::max(num_vars, max_var(f))) + ' ' +
                    std::to_string(f.size()) + '\n';
  for (const auto& c : f) {
    if (!c.is_clause()) throw std::invalid_argument("DIMACS output holds clauses only");
    for (Lit l : c.literals()) out += std::to_string(l.to_dimacs()) + ' ';
    out += "0\n";
  }
  return out;
}

}  // namespace dynproof
