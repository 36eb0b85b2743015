#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lexiplan/planner.hpp"

namespace lexiplan {

// Character-level Levenshtein distance (unit insert/delete/substitute).
int edit_distance(const std::string& a, const std::string& b);

struct MappedLine {
  std::string raw;        // original plan line
  std::string normalized;
  int action_index = -1;  // into GroundProblem::actions; -1 when unmappable
  bool exact = false;
  int distance = 0;
};

// Maps plan text onto ground actions: normalize each action line, take the
// exact match when one exists, otherwise the ground action with minimum edit
// distance (ties broken lexicographically by canonical action text). Lines
// whose best distance exceeds max(3, 40% of the line length) stay unmapped.
std::vector<MappedLine> parse_plan(const std::string& text,
                                   const GroundProblem& p);

struct Verdict {
  enum class Kind { Optimal, Suboptimal, Invalid };
  enum class Reason {
    None,
    FailedPrecondition,
    ConstraintViolated,
    GoalNotReached,
    UnmappableAction,
    NoPlan,
  };
  Kind kind = Kind::Invalid;
  Reason reason = Reason::None;
  std::size_t step = 0;             // failing step, 0-based
  std::size_t constraint_index = 0; // ConstraintViolated only
  int length = 0;                   // mapped plan length

  bool operator==(const Verdict&) const = default;
};

// Algorithm: map plan text to ground actions, simulate on the constrained
// problem with monitors, then compare a valid plan's length against cost*.
Verdict verify(const std::string& plan_text, const GroundProblem& constrained,
               int optimal_cost);

// Machine-readable single-line record.
std::string verdict_line(const Verdict& v, int optimal_cost);

const char* reason_code(Verdict::Reason r);

}  // namespace lexiplan
