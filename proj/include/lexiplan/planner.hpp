#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lexiplan/model.hpp"

namespace lexiplan {

struct SearchLimits {
  std::uint64_t max_nodes = 5'000'000;
  double max_seconds = 300.0;
};

struct Plan {
  std::vector<GroundAction> actions;
  int cost() const { return static_cast<int>(actions.size()); }
  std::string text() const;  // one action per line
};

// States induced by a plan, including the initial state.
struct Trace {
  std::vector<State> states;
};

enum class SolveStatus { Solved, Infeasible, LimitExceeded };

struct OptimalResult {
  SolveStatus status = SolveStatus::Infeasible;
  Plan plan;          // valid when Solved
  int cost = -1;      // == plan.cost() when Solved
  std::uint64_t expanded = 0;
};

// Uniform-cost breadth-first search over (state x monitor-states) product
// nodes. Successors are generated in lexicographic ground-action-name order,
// so the returned plan is reproducible. Nodes with an absorbing constraint
// violation are never enqueued.
OptimalResult solve_optimal(const GroundProblem& p,
                            const SearchLimits& limits = {});

struct StepFailure {
  enum class Kind { Precondition, ConstraintViolated };
  std::size_t index = 0;            // failing action index (0-based)
  Kind kind = Kind::Precondition;
  std::size_t constraint_index = 0;  // ConstraintViolated only
};

struct SimulationResult {
  Trace trace;                        // full on success, partial on failure
  std::vector<MonitorState> monitors; // final monitor states per constraint
  std::optional<StepFailure> failure;
  bool ok() const { return !failure.has_value(); }
};

SimulationResult simulate(const GroundProblem& p, const Plan& plan);

}  // namespace lexiplan
