#include "dynproof/dynamic.hpp"

namespace dynproof {

std::size_t DynamicConstraint::hash() const {
  const std::size_t h = property.hash();
  return context.empty() ? h : h ^ (context.hash() * 0x100000001b3ull);
}

DynamicFormula lift(const StaticFormula& f) {
  DynamicFormula out;
  for (const auto& c : f) out.insert(DynamicConstraint(c));
  return out;
}

DynamicConstraint prepend_context(const Program& delta, const DynamicConstraint& c) {
  return {concat(delta, c.context), c.property};
}

DynamicFormula prepend_context(const Program& delta, const DynamicFormula& f) {
  DynamicFormula out;
  for (const auto& c : f) out.insert(prepend_context(delta, c));
  return out;
}

DynamicFormula prepend_context(const Program& delta, const StaticFormula& f) {
  DynamicFormula out;
  for (const auto& c : f) out.insert(DynamicConstraint(delta, c));
  return out;
}

DynamicFormula contextualize(const DynamicFormula& f, const Program& eps) {
  DynamicFormula out;
  for (const auto& c : f) {
    if (!is_prefix(eps, c.context)) continue;
    Program rest(std::vector<ProgramItem>(c.context.items.begin() + static_cast<std::ptrdiff_t>(eps.items.size()),
                                          c.context.items.end()));
    out.insert(DynamicConstraint(std::move(rest), c.property));
  }
  return out;
}

DynamicFormula remove_under_context(const DynamicFormula& f, const Program& eps) {
  DynamicFormula out;
  for (const auto& c : f) {
    if (!is_prefix(eps, c.context)) out.insert(c);
  }
  return out;
}

StaticFormula static_fragment(const DynamicFormula& f) {
  StaticFormula out;
  for (const auto& c : f) {
    if (c.is_static()) out.insert(c.property);
  }
  return out;
}

DynamicFormula static_part(const DynamicFormula& f) {
  DynamicFormula out;
  for (const auto& c : f) {
    if (c.is_static()) out.insert(c);
  }
  return out;
}

DynamicConstraint reduce(const DynamicConstraint& c, const Substitution& tau) {
  if (c.is_static()) return DynamicConstraint(reduce(c.property, tau));
  return {reduce(c.context, tau), c.property};
}

DynamicFormula reduce(const DynamicFormula& f, const Substitution& tau) {
  DynamicFormula out;
  for (const auto& c : f) out.insert(reduce(c, tau));
  return out;
}

std::size_t context_size(const DynamicFormula& f) {
  std::size_t n = 0;
  for (const auto& c : f) n += c.context.size();
  return n;
}

}  // namespace dynproof
