#include "doctest.h"

#include "lexiplan/formula.hpp"
#include "lexiplan/model.hpp"
#include "lexiplan/rng.hpp"

using namespace lexiplan;

namespace {

// Truth-table evaluation straight off the syntax tree; the oracle that
// holds(), to_nnf() and entails() are compared against.
bool eval(const Formula& f, const std::vector<bool>& v) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Atom:
      return v[f.atom_id()];
    case Formula::Kind::Not:
      return !eval(f.child(), v);
    case Formula::Kind::And:
      for (const Formula& c : f.children())
        if (!eval(c, v)) return false;
      return true;
    case Formula::Kind::Or:
      for (const Formula& c : f.children())
        if (eval(c, v)) return true;
      return false;
  }
  return false;
}

Formula random_formula(Rng& rng, int n_atoms, int depth) {
  if (depth == 0 || rng.below(4) == 0)
    return Formula::literal(static_cast<AtomId>(rng.below(n_atoms)),
                            rng.coin());
  switch (rng.below(4)) {
    case 0:
      return Formula::negate(random_formula(rng, n_atoms, depth - 1));
    case 1: {
      std::vector<Formula> cs;
      for (int i = 0; i < 2 + static_cast<int>(rng.below(2)); ++i)
        cs.push_back(random_formula(rng, n_atoms, depth - 1));
      return Formula::conj(cs);
    }
    case 2: {
      std::vector<Formula> cs;
      for (int i = 0; i < 2 + static_cast<int>(rng.below(2)); ++i)
        cs.push_back(random_formula(rng, n_atoms, depth - 1));
      return Formula::disj(cs);
    }
    default:
      return Formula::implies(random_formula(rng, n_atoms, depth - 1),
                              random_formula(rng, n_atoms, depth - 1));
  }
}

State state_of(const std::vector<bool>& v) {
  State s(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) s.add(static_cast<AtomId>(i));
  return s;
}

bool is_nnf(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Not:
      return f.child().kind() == Formula::Kind::Atom;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      for (const Formula& c : f.children())
        if (!is_nnf(c)) return false;
      return true;
    default:
      return true;
  }
}

}  // namespace

TEST_CASE("holds agrees with truth-table evaluation") {
  Rng rng(11);
  const int n = 5;
  for (int round = 0; round < 300; ++round) {
    Formula f = random_formula(rng, n, 3);
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<bool> v(n);
      for (int i = 0; i < n; ++i) v[i] = mask & (1 << i);
      CHECK(holds(state_of(v), f) == eval(f, v));
    }
  }
}

TEST_CASE("to_nnf preserves semantics and produces NNF") {
  Rng rng(12);
  const int n = 4;
  for (int round = 0; round < 300; ++round) {
    Formula f = random_formula(rng, n, 4);
    Formula g = to_nnf(f);
    CHECK(is_nnf(g));
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<bool> v(n);
      for (int i = 0; i < n; ++i) v[i] = mask & (1 << i);
      CHECK(eval(f, v) == eval(g, v));
    }
  }
}

TEST_CASE("entails agrees with a truth-table oracle") {
  Rng rng(13);
  const int n = 6;
  for (int round = 0; round < 500; ++round) {
    AxiomSet d;
    for (int i = 0; i < static_cast<int>(rng.below(3)); ++i)
      d.clauses.push_back(random_formula(rng, n, 2));
    Formula f = random_formula(rng, n, 3);

    bool expected = true;
    for (int mask = 0; mask < (1 << n) && expected; ++mask) {
      std::vector<bool> v(n);
      for (int i = 0; i < n; ++i) v[i] = mask & (1 << i);
      bool d_holds = true;
      for (const Formula& c : d.clauses) d_holds = d_holds && eval(c, v);
      if (d_holds && !eval(f, v)) expected = false;
    }
    CHECK(entails(d, f) == expected);
  }
}

TEST_CASE("entails refuses oversized vocabularies") {
  AxiomSet d;
  std::vector<Formula> lits;
  for (AtomId i = 0; i < 30; ++i) lits.push_back(Formula::atom(i));
  CHECK_THROWS_AS(entails(d, Formula::conj(lits)), VocabularyTooLarge);
  CHECK_NOTHROW(entails(d, Formula::conj(lits), 32));
}

TEST_CASE("satisfiable basics") {
  Formula p = Formula::atom(0);
  CHECK(satisfiable(p));
  CHECK_FALSE(satisfiable(Formula::conj({p, Formula::negate(p)})));
  CHECK(satisfiable(Formula::disj({p, Formula::negate(p)})));
  CHECK_FALSE(satisfiable(Formula::falsity()));
}
