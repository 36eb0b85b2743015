#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lexiplan/formula.hpp"

namespace lexiplan {

class State;

enum class ConstraintType : std::uint8_t {
  Always,
  Sometime,
  AtMostOnce,
  SometimeBefore,
  SometimeAfter,
};

const char* constraint_type_token(ConstraintType t);  // PDDL surface token

// One of the five PDDL3 qualitative state-trajectory constraints.
// Formulas are normalized to NNF at construction.
class TrajectoryConstraint {
 public:
  static TrajectoryConstraint always(Formula phi);
  static TrajectoryConstraint sometime(Formula phi);
  static TrajectoryConstraint at_most_once(Formula phi);
  static TrajectoryConstraint sometime_before(Formula phi, Formula psi);
  static TrajectoryConstraint sometime_after(Formula phi, Formula psi);

  ConstraintType type() const { return type_; }
  const Formula& phi() const { return phi_; }
  const Formula& psi() const { return psi_; }  // binary types only
  bool binary() const {
    return type_ == ConstraintType::SometimeBefore ||
           type_ == ConstraintType::SometimeAfter;
  }
  std::string text() const;

 private:
  TrajectoryConstraint(ConstraintType t, Formula phi, Formula psi);
  ConstraintType type_;
  Formula phi_;
  Formula psi_;
};

// Incremental automaton status for one constraint along a state prefix.
// Violation flags are absorbing.
struct MonitorState {
  enum class AmoPhase : std::uint8_t { Never, Open, Closed };

  ConstraintType type = ConstraintType::Always;
  bool ok = true;           // Always
  bool seen = false;        // Sometime
  AmoPhase phase = AmoPhase::Never;  // AtMostOnce
  bool violated = false;    // AtMostOnce, SometimeBefore
  bool seen_psi = false;    // SometimeBefore: psi in a strictly earlier state
  bool pending = false;     // SometimeAfter: uncovered phi occurrence

  bool operator==(const MonitorState& o) const = default;
  std::size_t hash() const;

  // True once the monitor can never accept again on any suffix.
  bool dead() const;
};

MonitorState init_monitor(const TrajectoryConstraint& q, const State& s0);
MonitorState step_monitor(const TrajectoryConstraint& q, const MonitorState& m,
                          const State& s);
bool accepting(const MonitorState& m);

// Direct non-incremental implementation of the definitions; the oracle the
// monitors are differential-tested against. SometimeBefore/SometimeAfter use
// the for-all-occurrences reading: every phi-state needs its psi witness.
bool check_sequence(const TrajectoryConstraint& q,
                    const std::vector<State>& sigma);

}  // namespace lexiplan
