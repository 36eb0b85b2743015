#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lexiplan {

using AtomId = std::uint32_t;

class State;

// Ground propositional formula over atom ids.
class Formula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or };

  Formula() = default;  // True

  static Formula truth();
  static Formula falsity();
  static Formula atom(AtomId id);
  static Formula negate(Formula f);
  static Formula conj(std::vector<Formula> fs);
  static Formula disj(std::vector<Formula> fs);
  static Formula implies(Formula a, Formula b);
  static Formula literal(AtomId id, bool positive);

  Kind kind() const { return kind_; }
  AtomId atom_id() const { return atom_; }
  const Formula& child() const { return (*children_)[0]; }
  const std::vector<Formula>& children() const { return *children_; }

  std::string text() const;  // for hashing/debug; atom ids rendered numerically

  void collect_atoms(std::vector<AtomId>& out) const;
  std::vector<AtomId> atoms() const;

 private:
  Kind kind_ = Kind::True;
  AtomId atom_ = 0;
  std::shared_ptr<std::vector<Formula>> children_;
};

bool holds(const State& s, const Formula& f);

// Negations pushed to atoms, double negations eliminated.
Formula to_nnf(const Formula& f);

// Grounded background truths (D). May be empty.
struct AxiomSet {
  std::vector<Formula> clauses;
};

inline constexpr int kDefaultEntailmentAtomCap = 24;

struct VocabularyTooLarge : std::runtime_error {
  explicit VocabularyTooLarge(std::size_t n)
      : std::runtime_error("entailment vocabulary too large: " +
                           std::to_string(n) + " atoms") {}
};

// D |= f over the atoms of D and f, by refutation: D and not-f unsatisfiable.
// Throws VocabularyTooLarge past atom_cap; callers treat that as "not
// entailed" where a conservative answer is needed.
bool entails(const AxiomSet& d, const Formula& f,
             int atom_cap = kDefaultEntailmentAtomCap);

// Complete satisfiability search by splitting with formula simplification.
bool satisfiable(const Formula& f, int atom_cap = kDefaultEntailmentAtomCap);

}  // namespace lexiplan
