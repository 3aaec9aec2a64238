#include "dynproof/text_format.hpp"

#include <charconv>
#include <sstream>

namespace dynproof {

namespace {

void append_lits(std::string& out, const StaticConstraint& c) {
  for (Lit l : c.literals()) {
    out += ' ';
    out += to_string(l);
  }
}

void write_program(std::string& out, const Program& p);

void write_item(std::string& out, const ProgramItem& item) {
  if (const auto* a = std::get_if<AssignItem>(&item.node)) {
    out += "(assign";
    for (const auto& [v, image] : a->subst.entries()) {
      out += " (" + std::to_string(v) + ' ' + to_string(image) + ')';
    }
    out += ')';
  } else if (const auto* t = std::get_if<TestItem>(&item.node)) {
    out += "(test " + to_text(t->cond) + ')';
  } else if (const auto* c = std::get_if<ChoiceItem>(&item.node)) {
    out += "(choice ";
    write_program(out, c->left);
    out += ' ';
    write_program(out, c->right);
    out += ')';
  } else {
    const auto& b = std::get<BranchItem>(item.node);
    out += "(branch " + to_text(b.cond) + ' ';
    write_program(out, b.then_branch);
    out += ' ';
    write_program(out, b.else_branch);
    out += ')';
  }
}

void write_program(std::string& out, const Program& p) {
  out += "(seq";
  for (const auto& item : p.items) {
    out += ' ';
    write_item(out, item);
  }
  out += ')';
}

void write_term(std::string& out, const ProofTerm& term, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::size_t open = 0;
  for (std::size_t i = 0; i < term.steps.size(); ++i) {
    if (i > 0) out += '\n';
    out += pad;
    const auto& node = term.steps[i].node;
    if (std::holds_alternative<Qed>(node)) {
      out += "(qed)";
    } else if (std::holds_alternative<Elim>(node)) {
      out += "(elim";
      ++open;
    } else if (const auto* lem = std::get_if<Lem>(&node)) {
      out += "(lem (";
      bool first = true;
      for (const auto& c : lem->lemmas) {
        if (!first) out += ' ';
        first = false;
        out += to_text(c);
      }
      out += ")\n";
      write_term(out, lem->proof, indent + 2);
      ++open;
    } else {
      const auto& ctx = std::get<Ctx>(node);
      out += "(ctx ";
      write_program(out, ctx.context);
      out += '\n';
      write_term(out, ctx.proof, indent + 2);
      ++open;
    }
  }
  out.append(open, ')');
}

Lit lit_from(const Sexpr& node) {
  if (!node.is_atom) fail_at(node, "expected a literal");
  if (node.atom == "top") return Lit::top();
  if (node.atom == "bot") return Lit::bot();
  int value = 0;
  const char* first = node.atom.data();
  const char* last = first + node.atom.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value == 0)
    fail_at(node, "expected a nonzero integer, top or bot; got '" + node.atom + "'");
  try {
    return Lit::from_dimacs(value);
  } catch (const std::exception& e) {
    fail_at(node, e.what());
  }
}

Var var_from(const Sexpr& node) {
  const Lit l = lit_from(node);
  if (!l.is_var() || l.negative()) fail_at(node, "expected a positive variable id");
  return l.var();
}

void expect_arity(const Sexpr& node, std::size_t n, const char* what) {
  if (node.list.size() != n)
    fail_at(node, std::string(what) + " takes " + std::to_string(n - 1) + " argument(s)");
}

ProgramItem item_from(const Sexpr& node) {
  if (node.headed("assign")) {
    std::vector<Substitution::Entry> entries;
    for (std::size_t i = 1; i < node.list.size(); ++i) {
      const Sexpr& pair = node.list[i];
      if (!pair.is_list() || pair.list.size() != 2) fail_at(pair, "expected (<var> <literal>)");
      entries.emplace_back(var_from(pair.list[0]), lit_from(pair.list[1]));
    }
    try {
      return assign_item(Substitution(std::move(entries)));
    } catch (const std::invalid_argument& e) {
      fail_at(node, e.what());
    }
  }
  if (node.headed("test")) {
    expect_arity(node, 2, "test");
    return test_item(constraint_from(node.list[1]));
  }
  if (node.headed("choice")) {
    expect_arity(node, 3, "choice");
    return choice_item(program_from(node.list[1]), program_from(node.list[2]));
  }
  if (node.headed("branch")) {
    expect_arity(node, 4, "branch");
    return branch_item(constraint_from(node.list[1]), program_from(node.list[2]),
                       program_from(node.list[3]));
  }
  fail_at(node, "expected a program item (assign, test, choice or branch)");
}

std::vector<Sexpr> single_form(std::string_view text) {
  auto forms = parse_sexprs(text);
  if (forms.size() != 1)
    throw ParseError("expected exactly one form, found " + std::to_string(forms.size()),
                     forms.empty() ? 1 : forms[1].line, forms.empty() ? 0 : forms[1].column);
  return forms;
}

void write_trace(std::ostringstream& out, const TraceNode& node, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (node.leaf) {
    out << pad << (node.leaf->conflict ? "leaf conflict" : "leaf NO CONFLICT") << ": ";
    bool first = true;
    for (const auto& c : node.leaf->premises) {
      out << (first ? "" : " ") << to_text(c);
      first = false;
    }
    out << " => " << to_text(node.leaf->conclusion) << '\n';
    return;
  }
  if (node.rule) {
    out << pad << rule_name(*node.rule);
    if (node.focus) out << " on " << to_text(*node.focus);
    out << '\n';
  }
  for (const auto& child : node.children) write_trace(out, child, indent + 2);
}

}  // namespace

std::string to_text(const StaticConstraint& c) {
  std::string out = c.is_clause() ? "(or" : "(and";
  append_lits(out, c);
  out += ')';
  return out;
}

std::string to_text(const Program& p) {
  std::string out;
  write_program(out, p);
  return out;
}

std::string to_text(const DynamicConstraint& c) {
  std::string out = "(dyn ";
  write_program(out, c.context);
  out += ' ' + to_text(c.property) + ')';
  return out;
}

std::string to_text(const DynamicFormula& f) {
  std::string out;
  for (const auto& c : f) out += to_text(c) + '\n';
  return out;
}

std::string to_text(const ProofTerm& term) {
  std::string out;
  write_term(out, term, 0);
  out += '\n';
  return out;
}

std::string to_text(const DynamicImplication& impl) {
  std::string out = "(implies (";
  bool first = true;
  for (const auto& c : impl.lhs) {
    if (!first) out += ' ';
    first = false;
    out += to_text(c);
  }
  out += ") " + to_text(impl.rhs) + ")\n";
  return out;
}

std::string to_text(const StaticLeaf& leaf) {
  std::string out;
  for (const auto& c : leaf.premises) out += "  " + to_text(c) + '\n';
  out += "  => " + to_text(leaf.conclusion) + '\n';
  return out;
}

std::string to_text(const TraceNode& trace) {
  std::ostringstream out;
  write_trace(out, trace, 0);
  return out.str();
}

StaticConstraint constraint_from(const Sexpr& node) {
  const bool clause = node.headed("or");
  if (!clause && !node.headed("and")) fail_at(node, "expected (or ...) or (and ...)");
  std::vector<Lit> lits;
  for (std::size_t i = 1; i < node.list.size(); ++i) lits.push_back(lit_from(node.list[i]));
  return clause ? StaticConstraint::clause(std::move(lits)) : StaticConstraint::cube(std::move(lits));
}

Program program_from(const Sexpr& node) {
  if (!node.headed("seq")) fail_at(node, "expected a program (seq ...)");
  Program p;
  for (std::size_t i = 1; i < node.list.size(); ++i) p.items.push_back(item_from(node.list[i]));
  return p;
}

DynamicConstraint dynamic_from(const Sexpr& node) {
  if (node.headed("or") || node.headed("and")) return DynamicConstraint(constraint_from(node));
  if (!node.headed("dyn")) fail_at(node, "expected (dyn <program> <constraint>)");
  expect_arity(node, 3, "dyn");
  return {program_from(node.list[1]), constraint_from(node.list[2])};
}

ProofTerm proof_term_from(const Sexpr& root) {
  ProofTerm term;
  const Sexpr* node = &root;
  // Walk the continuation chain iteratively; recurse only into sub-proofs.
  while (true) {
    if (node->headed("qed")) {
      expect_arity(*node, 1, "qed");
      term.steps.push_back(Qed{});
      return term;
    }
    if (node->headed("elim")) {
      expect_arity(*node, 2, "elim");
      term.steps.push_back(Elim{});
      node = &node->list[1];
    } else if (node->headed("lem")) {
      expect_arity(*node, 4, "lem");
      const Sexpr& lemmas = node->list[1];
      if (!lemmas.is_list()) fail_at(lemmas, "expected a list of dynamic constraints");
      DynamicFormula theta;
      for (const auto& c : lemmas.list) theta.insert(dynamic_from(c));
      term.steps.push_back(Lem{std::move(theta), proof_term_from(node->list[2])});
      node = &node->list[3];
    } else if (node->headed("ctx")) {
      expect_arity(*node, 4, "ctx");
      term.steps.push_back(Ctx{program_from(node->list[1]), proof_term_from(node->list[2])});
      node = &node->list[3];
    } else {
      fail_at(*node, "expected a proof instruction (qed, elim, lem or ctx)");
    }
  }
}

StaticConstraint parse_constraint(std::string_view text) {
  return constraint_from(single_form(text).front());
}

Program parse_program(std::string_view text) { return program_from(single_form(text).front()); }

DynamicConstraint parse_dynamic_constraint(std::string_view text) {
  return dynamic_from(single_form(text).front());
}

DynamicFormula parse_dynamic_formula(std::string_view text) {
  DynamicFormula f;
  for (const auto& form : parse_sexprs(text)) f.insert(dynamic_from(form));
  return f;
}

ProofTerm parse_proof_term(std::string_view text) {
  return proof_term_from(single_form(text).front());
}

DynamicImplication parse_implication(std::string_view text) {
  const auto forms = single_form(text);
  const Sexpr& node = forms.front();
  if (!node.headed("implies")) fail_at(node, "expected (implies (<dynamic>...) <dynamic>)");
  expect_arity(node, 3, "implies");
  if (!node.list[1].is_list()) fail_at(node.list[1], "expected a list of dynamic constraints");
  DynamicImplication impl;
  for (const auto& c : node.list[1].list) impl.lhs.insert(dynamic_from(c));
  impl.rhs = dynamic_from(node.list[2]);
  return impl;
}

}  // namespace dynproof
