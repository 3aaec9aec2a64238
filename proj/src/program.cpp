#include "dynproof/program.hpp"

#include <algorithm>

namespace dynproof {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

Program::Program(std::vector<ProgramItem> items) : items(std::move(items)) {}
Program::Program(std::initializer_list<ProgramItem> items) : items(items) {}

std::size_t Program::size() const {
  std::size_t n = 0;
  for (const auto& item : items) n += item.size();
  return n;
}

std::size_t Program::hash() const {
  std::size_t h = 0x70726f67u + items.size();
  for (const auto& item : items) h = mix(h, item.hash());
  return h;
}

bool operator==(const Program& a, const Program& b) { return a.items == b.items; }

bool operator==(const ChoiceItem& a, const ChoiceItem& b) {
  return a.left == b.left && a.right == b.right;
}

bool operator==(const BranchItem& a, const BranchItem& b) {
  return a.cond == b.cond && a.then_branch == b.then_branch && a.else_branch == b.else_branch;
}

bool operator==(const ProgramItem& a, const ProgramItem& b) { return a.node == b.node; }

std::size_t ProgramItem::size() const {
  return std::visit(Overloaded{
                        [](const AssignItem&) -> std::size_t { return 1; },
                        [](const TestItem&) -> std::size_t { return 1; },
                        [](const ChoiceItem& c) { return 1 + c.left.size() + c.right.size(); },
                        [](const BranchItem& b) {
                          return 1 + b.then_branch.size() + b.else_branch.size();
                        },
                    },
                    node);
}

std::size_t ProgramItem::hash() const {
  return std::visit(
      Overloaded{
          [](const AssignItem& a) { return mix(1, a.subst.hash()); },
          [](const TestItem& t) { return mix(2, t.cond.hash()); },
          [](const ChoiceItem& c) { return mix(mix(3, c.left.hash()), c.right.hash()); },
          [](const BranchItem& b) {
            return mix(mix(mix(4, b.cond.hash()), b.then_branch.hash()), b.else_branch.hash());
          },
      },
      node);
}

ProgramItem choice_item(Program left, Program right) {
  return ChoiceItem{std::move(left), std::move(right)};
}

ProgramItem branch_item(StaticConstraint cond, Program then_branch, Program else_branch) {
  return BranchItem{std::move(cond), std::move(then_branch), std::move(else_branch)};
}

Program concat(const Program& a, const Program& b) {
  Program out = a;
  out.items.insert(out.items.end(), b.items.begin(), b.items.end());
  return out;
}

bool is_prefix(const Program& prefix, const Program& p) {
  if (prefix.items.size() > p.items.size()) return false;
  return std::equal(prefix.items.begin(), prefix.items.end(), p.items.begin());
}

// A test is followed by <tau> so the continuation still runs on I∘τ; the
// other items absorb τ themselves.
Program reduce(const Program& p, const Substitution& tau) {
  if (p.empty()) return Program{assign_item(tau)};
  Program out;
  out.items.reserve(p.items.size() + 1);
  const ProgramItem& head = p.items.front();
  std::visit(Overloaded{
                 [&](const AssignItem& a) { out.items.push_back(assign_item(compose(tau, a.subst))); },
                 [&](const TestItem& t) {
                   out.items.push_back(test_item(reduce(t.cond, tau)));
                   out.items.push_back(assign_item(tau));
                 },
                 [&](const ChoiceItem& c) {
                   out.items.push_back(choice_item(reduce(c.left, tau), reduce(c.right, tau)));
                 },
                 [&](const BranchItem& b) {
                   out.items.push_back(branch_item(reduce(b.cond, tau), reduce(b.then_branch, tau),
                                                   reduce(b.else_branch, tau)));
                 },
             },
             head.node);
  out.items.insert(out.items.end(), p.items.begin() + 1, p.items.end());
  return out;
}

ProgramItem desugar_branch(const BranchItem& b) {
  Program left{test_item(b.cond)};
  left.items.insert(left.items.end(), b.then_branch.items.begin(), b.then_branch.items.end());
  Program right{test_item(negate(b.cond))};
  right.items.insert(right.items.end(), b.else_branch.items.begin(), b.else_branch.items.end());
  return choice_item(std::move(left), std::move(right));
}

}  // namespace dynproof
