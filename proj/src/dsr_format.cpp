#include <charconv>
#include <stdexcept>

#include "dynproof/dsr.hpp"
#include "dynproof/sexpr.hpp"

namespace dynproof {

namespace {

class LineReader {
 public:
  LineReader(std::string_view line, int line_no) : line_(line), line_no_(line_no) {}

  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }

  std::string_view next() {
    skip_space();
    if (pos_ >= line_.size()) throw ParseError("unterminated line", line_no_, column());
    const std::size_t start = pos_;
    while (pos_ < line_.size() && !is_space(line_[pos_])) ++pos_;
    last_column_ = static_cast<int>(start) + 1;
    return line_.substr(start, pos_ - start);
  }

  std::string_view peek() {
    const std::size_t saved = pos_;
    const auto token = at_end() ? std::string_view{} : next();
    pos_ = saved;
    return token;
  }

  int integer(std::string_view token) const {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      fail("expected an integer, got '" + std::string(token) + "'");
    return value;
  }

  // Literals up to and including the terminating 0.
  StaticConstraint clause() {
    std::vector<Lit> lits;
    while (true) {
      const int value = integer(next());
      if (value == 0) return StaticConstraint::clause(std::move(lits));
      lits.push_back(literal(value));
    }
  }

  Lit literal(int value) const {
    try {
      return Lit::from_dimacs(value);
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_no_, last_column_);
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }
  void skip_space() {
    while (pos_ < line_.size() && is_space(line_[pos_])) ++pos_;
  }
  int column() const { return static_cast<int>(pos_) + 1; }

  std::string_view line_;
  int line_no_;
  std::size_t pos_ = 0;
  int last_column_ = 0;
};

Substitution witness(LineReader& in) {
  std::vector<Substitution::Entry> entries;
  while (true) {
    const int var = in.integer(in.next());
    if (var == 0) break;
    if (var < 0) in.fail("witness variable must be positive");
    const auto image = in.next();
    Lit lit;
    if (image == "t") {
      lit = Lit::top();
    } else if (image == "f") {
      lit = Lit::bot();
    } else {
      const int value = in.integer(image);
      if (value == 0) in.fail("witness image of variable " + std::to_string(var) + " is 0");
      lit = in.literal(value);
    }
    entries.emplace_back(in.literal(var).var(), lit);
  }
  try {
    return Substitution(std::move(entries));
  } catch (const std::invalid_argument& e) {
    in.fail(e.what());
  }
}

void append_clause(std::string& out, const StaticConstraint& c) {
  for (Lit l : c.literals()) out += std::to_string(l.to_dimacs()) + ' ';
  out += '0';
}

void append_witness(std::string& out, const Substitution& sigma) {
  out += " w";
  for (const auto& [v, image] : sigma.entries()) {
    out += ' ' + std::to_string(v) + ' ';
    if (image.is_top()) {
      out += 't';
    } else if (image.is_bot()) {
      out += 'f';
    } else {
      out += std::to_string(image.to_dimacs());
    }
  }
  out += " 0";
}

}  // namespace

DsrProof parse_dsr(std::string_view text) {
  DsrProof proof;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    LineReader in(text.substr(pos, end - pos), ++line_no);
    pos = end + 1;
    if (in.at_end() || in.peek().starts_with('c')) continue;
    if (in.peek() == "d") {
      in.next();
      proof.push_back(DelStep{in.clause()});
    } else {
      auto clause = in.clause();
      if (in.at_end()) {
        proof.push_back(RupStep{std::move(clause)});
        continue;
      }
      if (in.next() != "w") in.fail("expected 'w' or end of line after the clause");
      auto sigma = witness(in);
      if (in.at_end()) {
        proof.push_back(SrStep{std::move(clause), std::move(sigma)});
        continue;
      }
      if (in.next() != "g") in.fail("expected 'g' or end of line after the witness");
      StaticFormula excepted;
      while (in.peek() != "0") excepted.insert(in.clause());
      in.next();
      proof.push_back(WsrStep{std::move(clause), std::move(sigma), std::move(excepted)});
    }
    if (!in.at_end()) in.fail("trailing input after instruction");
  }
  return proof;
}

std::string to_dsr(std::span<const DsrInstruction> steps) {
  std::string out;
  for (const auto& step : steps) {
    if (const auto* del = std::get_if<DelStep>(&step)) {
      out += "d ";
      append_clause(out, del->clause);
    } else if (const auto* rup = std::get_if<RupStep>(&step)) {
      append_clause(out, rup->clause);
    } else if (const auto* sr = std::get_if<SrStep>(&step)) {
      append_clause(out, sr->clause);
      append_witness(out, sr->witness);
    } else {
      const auto& wsr = std::get<WsrStep>(step);
      append_clause(out, wsr.clause);
      append_witness(out, wsr.witness);
      out += " g";
      for (const auto& g : wsr.excepted) {
        out += ' ';
        append_clause(out, g);
      }
      out += " 0";
    }
    out += '\n';
  }
  return out;
}

}  // namespace dynproof
