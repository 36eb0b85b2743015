#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "lexiplan/model.hpp"
#include "lexiplan/pddl.hpp"

namespace lexiplan {

struct MissingTemplate : std::runtime_error {
  explicit MissingTemplate(const std::string& predicate)
      : std::runtime_error("no NL template for predicate " + predicate),
        predicate(predicate) {}
  std::string predicate;
};

// Per-predicate sentence templates with positional {0}..{n} placeholders,
// plus noun phrases for quantified types.
struct NLTemplates {
  std::map<std::string, std::string> predicates;
  std::map<std::string, std::string> type_nouns;

  // key=value lines; keys "predicate.<name>" and "type.<name>"; '#' comments.
  static NLTemplates parse(const std::string& kv_text);

  std::string render_atom(const std::string& predicate,
                          const std::vector<std::string>& args) const;
  std::string type_noun(const std::string& type) const;
};

std::string render_formula(const pddl::LiftedFormula& f, const NLTemplates& t);
std::string render_formula(const Formula& f, const GroundProblem& p,
                           const NLTemplates& t);

std::string render_constraint(const pddl::SurfaceConstraint& q,
                              const NLTemplates& t);
std::string render_constraint(const TrajectoryConstraint& q,
                              const GroundProblem& p, const NLTemplates& t);

// Full problem prompt: environment text, initial state (in :init declaration
// order), goal, constraints. Byte-identical output for identical input.
std::string render_problem(const pddl::LiftedProblem& p, const NLTemplates& t,
                           const std::string& env_nl);

std::string render_action(const GroundAction& a);

// Fixed system-role prompt used across all domains.
const std::string& system_prompt();

// Converts a ground formula back to surface syntax (for emission and NL).
pddl::LiftedFormula lift(const Formula& f, const GroundProblem& p);
pddl::SurfaceConstraint lift_constraint(const TrajectoryConstraint& q,
                                        const GroundProblem& p);

}  // namespace lexiplan
