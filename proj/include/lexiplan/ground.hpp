#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "lexiplan/model.hpp"
#include "lexiplan/pddl.hpp"

namespace lexiplan {

struct GroundingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Resolves lifted formulas against a fixed atom universe. The universe F is
// every type-consistent predicate instantiation, so the constraint sampler
// can draw atoms that do not occur in the initial state.
class Grounder {
 public:
  Grounder(const pddl::LiftedDomain& domain, const pddl::LiftedProblem& problem);

  GroundProblem ground() const;

  // Quantifiers expanded over typed objects, equalities folded away.
  Formula ground_formula(const pddl::LiftedFormula& f) const;

  TrajectoryConstraint ground_constraint(const pddl::SurfaceConstraint& c) const;

  AxiomSet ground_axioms(const std::vector<pddl::LiftedFormula>& axioms) const;

  const std::vector<GroundAtom>& atoms() const { return atoms_; }
  const std::vector<pddl::TypedName>& objects() const { return objects_; }
  std::vector<std::string> objects_of_type(const std::string& type) const;

 private:
  using Env = std::unordered_map<std::string, std::string>;

  Formula ground_rec(const pddl::LiftedFormula& f, Env& env) const;
  AtomId resolve_atom(const std::string& predicate,
                      const std::vector<pddl::Term>& terms,
                      const Env& env) const;
  void collect_effects(const pddl::EffectNode& e, Env& env,
                       const Formula& cond,
                       std::vector<ConditionalEffect>& out) const;

  const pddl::LiftedDomain& domain_;
  const pddl::LiftedProblem& problem_;
  std::vector<pddl::TypedName> objects_;  // constants then problem objects
  std::vector<GroundAtom> atoms_;
  std::unordered_map<std::string, AtomId> atom_ids_;
};

inline GroundProblem ground(const pddl::LiftedDomain& d,
                            const pddl::LiftedProblem& p) {
  return Grounder(d, p).ground();
}

}  // namespace lexiplan
