#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexiplan/planner.hpp"
#include "lexiplan/rng.hpp"

namespace lexiplan {

struct GenerationExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class BoolOp { And, Or };

struct GenConfig {
  int constraint_count = 1;
  // indexed by ConstraintType: Always, Sometime, AtMostOnce,
  // SometimeBefore, SometimeAfter
  std::vector<double> type_weights = {1, 1, 1, 1, 1};
  std::vector<double> op_weights = {1, 1};  // {and, or}
  int literal_count_min = 1;
  int literal_count_max = 2;
  int max_attempts_per_constraint = 200;
  int max_attempts_per_problem = 50;
  bool strict_cost_increase = true;
  std::uint64_t rng_seed = 0;

  void validate() const;  // throws std::invalid_argument

  // key=value lines, '#' comments; weights as comma-separated lists.
  static GenConfig parse(const std::string& kv_text);
  std::string emit() const;
};

struct Literal {
  AtomId atom = 0;
  bool positive = true;
  Formula formula() const { return Formula::literal(atom, positive); }
};

// Per-type candidate filter over single literals. sigma is the trace of the
// unconstrained optimal plan; chosen holds literals already picked for the
// same formula under boolean operation op.
bool literal_suitable(const Literal& l, ConstraintType ctype,
                      const GroundProblem& p, const Trace& sigma, BoolOp op,
                      const std::vector<Literal>& chosen, const AxiomSet& d);

// Pairwise compatibility of a fresh constraint against the accepted set:
// rejects pairs that are jointly unsatisfiable or subsume each other.
bool compatible(const TrajectoryConstraint& q,
                const std::vector<TrajectoryConstraint>& c, const AxiomSet& d);

// One task-aware constraint of the requested type: passes the literal
// filters, is compatible with c, and is violated by sigma.
TrajectoryConstraint generate_constraint(ConstraintType ctype,
                                         const GroundProblem& p,
                                         const Plan& pi_star,
                                         const Trace& sigma,
                                         const std::vector<TrajectoryConstraint>& c,
                                         const AxiomSet& d,
                                         const GenConfig& cfg, Rng& rng);

struct ProblemBundle {
  GroundProblem constrained;
  GroundProblem base;
  int unconstrained_cost = 0;
  int constrained_cost = 0;
  Plan unconstrained_plan;
  std::uint64_t seed = 0;
  GenConfig config;
};

// Full closed loop: solve the base problem, add constraint_count constraints
// one at a time, re-solving after each addition. Additions that make the
// problem infeasible are dropped and resampled; in strict mode the finished
// set must raise the optimal cost, otherwise the latest constraint is
// swapped out and generation continues.
ProblemBundle constrain_problem(const GroundProblem& base, const AxiomSet& d,
                                const GenConfig& cfg,
                                const SearchLimits& limits = {});

}  // namespace lexiplan
