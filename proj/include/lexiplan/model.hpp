#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexiplan/constraints.hpp"
#include "lexiplan/formula.hpp"

namespace lexiplan {

// A ground atom: predicate applied to object constants.
struct GroundAtom {
  std::string predicate;
  std::vector<std::string> args;

  std::string text() const;
  bool operator==(const GroundAtom& o) const = default;
};

// Set of atoms over a fixed universe F, stored as a bitset indexed by atom id.
class State {
 public:
  State() = default;
  explicit State(std::size_t universe_size);

  bool contains(AtomId id) const;
  void add(AtomId id);
  void remove(AtomId id);
  std::size_t universe_size() const { return n_atoms_; }
  std::vector<AtomId> atoms() const;

  bool operator==(const State& o) const = default;
  std::size_t hash() const;

 private:
  std::size_t n_atoms_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct ConditionalEffect {
  Formula condition;  // evaluated against the pre-state
  std::vector<AtomId> adds;
  std::vector<AtomId> deletes;
};

struct GroundAction {
  std::string name;
  std::vector<std::string> args;
  Formula precondition;
  std::vector<ConditionalEffect> effects;

  // Canonical plan-line form: "name arg1 ... argN".
  std::string text() const;
};

// Pi / Pi^C = (F, A, I, G, C). Unconstrained when constraints is empty.
struct GroundProblem {
  std::vector<GroundAtom> atoms;          // F; index == AtomId
  std::vector<GroundAction> actions;      // A; sorted by canonical text
  State init;                             // I
  std::vector<AtomId> init_order;         // I in :init declaration order
  Formula goal;                           // G
  std::vector<TrajectoryConstraint> constraints;  // C

  AtomId atom_id(const GroundAtom& a) const;
  const GroundAtom& atom(AtomId id) const { return atoms[id]; }
};

struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& action)
      : std::runtime_error("precondition violated: " + action) {}
};

bool applicable(const State& s, const GroundAction& a);

// s[a]: collect fired effects against the original s, delete then add.
// An atom both added and deleted by distinct fired effects ends up true.
State apply(const State& s, const GroundAction& a);

}  // namespace lexiplan
