#include "dynproof/substitution.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynproof {

Substitution::Substitution(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].first == entries[i - 1].first)
      throw std::invalid_argument("substitution maps variable " +
                                  std::to_string(entries[i].first) + " twice");
  }
  for (const auto& [v, image] : entries) {
    if (v == 0) throw std::invalid_argument("substitution references variable 0");
    if (image != Lit::pos(v)) entries_.emplace_back(v, image);
  }
}

Lit Substitution::image(Var v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, Var key) { return e.first < key; });
  if (it != entries_.end() && it->first == v) return it->second;
  return Lit::pos(v);
}

Lit Substitution::apply(Lit l) const {
  if (l.is_constant()) return l;
  const Lit img = image(l.var());
  return l.negative() ? ~img : img;
}

std::size_t Substitution::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& [v, image] : entries_) {
    h ^= (static_cast<std::size_t>(v) << 32 | image.code()) + 0x9e3779b9 + (h << 6) + (h >> 2);
  }
  return h;
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  std::vector<Substitution::Entry> entries;
  entries.reserve(inner.entries().size() + outer.entries().size());
  for (const auto& [v, image] : inner.entries()) entries.emplace_back(v, outer.apply(image));
  for (const auto& [v, image] : outer.entries()) {
    if (inner.image(v) == Lit::pos(v)) entries.emplace_back(v, image);
  }
  return Substitution(std::move(entries));
}

Substitution make_subst(std::initializer_list<std::pair<int, Lit>> pairs) {
  std::vector<Substitution::Entry> entries;
  for (const auto& [v, image] : pairs) entries.emplace_back(static_cast<Var>(v), image);
  return Substitution(std::move(entries));
}

}  // namespace dynproof
