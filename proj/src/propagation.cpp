#include "dynproof/propagation.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace dynproof {

namespace {

// Counting-based propagation: every registered clause keeps the number of its
// literals that are currently false; a clause is inspected only when that
// count reaches size - 1 (unit or satisfied) or size (conflict).
class Propagator {
 public:
  explicit Propagator(std::span<const StaticConstraint* const> constraints) {
    Var top_var = 0;
    std::size_t lit_count = 0;
    for (const auto* c : constraints) {
      top_var = std::max(top_var, max_var(*c));
      lit_count += c->size();
    }
    dense_ = top_var <= 4 * lit_count + 1024;
    if (dense_) {
      slots_ = top_var + 1;
    } else {
      for (const auto* c : constraints) {
        for (Lit l : c->literals()) {
          if (l.is_var()) compact_.try_emplace(l.var(), static_cast<std::uint32_t>(compact_.size() + 1));
        }
      }
      slots_ = compact_.size() + 1;
    }
    value_.assign(2 * slots_, 0);
    occurs_.assign(2 * slots_, {});

    for (const auto* c : constraints) {
      if (conflict_) return;
      if (c->is_cube()) {
        for (Lit l : c->literals()) assign(l);
      } else {
        add_clause(*c);
      }
    }
  }

  PropagationResult run() {
    while (!conflict_ && head_ < trail_.size()) {
      const Lit l = trail_[head_++];
      for (std::uint32_t ci : occurs_[slot(~l)]) {
        if (conflict_) break;
        Clause& c = clauses_[ci];
        const std::size_t size = c.end - c.begin;
        ++c.false_count;
        if (c.false_count == size) {
          conflict_ = true;
        } else if (c.false_count + 1 == size) {
          propagate_unit(c);
        }
      }
    }
    PropagationResult result;
    result.outcome = conflict_ ? Outcome::Conflict : Outcome::NoConflict;
    result.implied = std::move(trail_);
    return result;
  }

 private:
  struct Clause {
    std::size_t begin;
    std::size_t end;
    std::size_t false_count = 0;
  };

  std::size_t slot(Lit l) const {
    if (dense_) return l.code() - 2;
    return 2 * (compact_.at(l.var()) - 1) + (l.negative() ? 1 : 0);
  }

  void assign(Lit l) {
    if (l.is_top()) return;
    if (l.is_bot()) {
      conflict_ = true;
      return;
    }
    const std::size_t s = slot(l);
    if (value_[s] == 1) return;
    if (value_[s] == -1) {
      conflict_ = true;
      return;
    }
    value_[s] = 1;
    value_[s ^ 1] = -1;
    trail_.push_back(l);
  }

  void add_clause(const StaticConstraint& c) {
    const auto lits = c.literals();
    // Canonical order places x and -x next to each other.
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (lits[i].is_top()) return;
      if (i > 0 && lits[i].is_var() && lits[i] == ~lits[i - 1]) return;
    }
    const std::size_t begin = pool_.size();
    for (Lit l : lits) {
      if (!l.is_bot()) pool_.push_back(l);
    }
    const std::size_t end = pool_.size();
    if (begin == end) {
      conflict_ = true;
      return;
    }
    if (end - begin == 1) {
      const Lit unit = pool_.back();
      pool_.pop_back();
      assign(unit);
      return;
    }
    const auto index = static_cast<std::uint32_t>(clauses_.size());
    clauses_.push_back({begin, end});
    for (std::size_t i = begin; i < end; ++i) occurs_[slot(pool_[i])].push_back(index);
  }

  void propagate_unit(const Clause& c) {
    Lit open{};
    bool found = false;
    for (std::size_t i = c.begin; i < c.end; ++i) {
      const int v = value_[slot(pool_[i])];
      if (v == 1) return;
      if (v == 0) {
        open = pool_[i];
        found = true;
      }
    }
    // The literal may have been assigned true but not yet processed; it is
    // then visible as value 1 above. A missing open literal means all false.
    if (!found) {
      conflict_ = true;
      return;
    }
    assign(open);
  }

  bool dense_ = true;
  std::size_t slots_ = 0;
  std::unordered_map<Var, std::uint32_t> compact_;
  std::vector<std::int8_t> value_;
  std::vector<std::vector<std::uint32_t>> occurs_;
  std::vector<Lit> pool_;
  std::vector<Clause> clauses_;
  std::vector<Lit> trail_;
  std::size_t head_ = 0;
  bool conflict_ = false;
};

}  // namespace

PropagationResult unit_propagate(std::span<const StaticConstraint* const> constraints) {
  Propagator p(constraints);
  return p.run();
}

PropagationResult unit_propagate(const StaticFormula& f, std::span<const StaticConstraint> extra) {
  std::vector<const StaticConstraint*> all;
  all.reserve(f.size() + extra.size());
  for (const auto& c : f) all.push_back(&c);
  for (const auto& c : extra) all.push_back(&c);
  return unit_propagate(all);
}

bool rup_check(const StaticFormula& f, const StaticConstraint& c) {
  const StaticConstraint negated = negate(c);
  return has_conflict(f, std::span<const StaticConstraint>(&negated, 1));
}

}  // namespace dynproof
