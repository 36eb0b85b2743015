#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexiplan/constraints.hpp"

namespace lexiplan::pddl {

enum class ErrorKind {
  Syntax,
  UnsupportedFeature,
  UnknownConstraintOperator,
  UndeclaredSymbol,
  TypeMismatch,
};

struct ParseError : std::runtime_error {
  ParseError(ErrorKind k, int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + msg),
        kind(k),
        line(line),
        col(col) {}
  ErrorKind kind;
  int line;
  int col;
};

struct TypedName {
  std::string name;
  std::string type = "object";
  bool operator==(const TypedName&) const = default;
};

struct Term {
  bool is_variable = false;
  std::string name;
  bool operator==(const Term&) const = default;
};

// Lifted formula tree. (imply a b) is desugared to (or (not a) b) on parse.
struct LiftedFormula {
  enum class Kind { True, False, Atom, Equals, Not, And, Or, Exists, Forall };

  Kind kind = Kind::True;
  std::string predicate;              // Atom
  std::vector<Term> terms;            // Atom (args) or Equals (two terms)
  std::vector<TypedName> params;      // Exists/Forall
  std::vector<LiftedFormula> children;

  static LiftedFormula truth();
  static LiftedFormula atom(std::string pred, std::vector<Term> args);
  bool operator==(const LiftedFormula&) const = default;
};

// Effect tree: conjunction / forall / when / literal.
struct EffectNode {
  enum class Kind { And, Forall, When, Literal };

  Kind kind = Kind::And;
  std::vector<TypedName> params;        // Forall
  LiftedFormula condition;              // When
  std::string predicate;                // Literal
  std::vector<Term> terms;              // Literal
  bool negated = false;                 // Literal
  std::vector<EffectNode> children;     // And / Forall / When body
  bool operator==(const EffectNode&) const = default;
};

struct Predicate {
  std::string name;
  std::vector<TypedName> params;
  bool operator==(const Predicate&) const = default;
};

struct ActionSchema {
  std::string name;
  std::vector<TypedName> params;
  LiftedFormula precondition;  // True when omitted
  EffectNode effect;
  bool operator==(const ActionSchema&) const = default;
};

struct LiftedDomain {
  std::string name;
  std::vector<std::string> requirements;
  std::vector<TypedName> types;      // name + supertype ("object" root)
  std::vector<TypedName> constants;
  std::vector<Predicate> predicates;
  std::vector<ActionSchema> actions;

  const Predicate* find_predicate(const std::string& name) const;
  // True if an object of type `t` may fill a parameter of type `want`.
  bool type_compatible(const std::string& t, const std::string& want) const;
};

struct SurfaceConstraint {
  ConstraintType type;
  LiftedFormula first;
  LiftedFormula second;  // binary types only
  bool operator==(const SurfaceConstraint&) const = default;
};

struct LiftedProblem {
  std::string name;
  std::string domain_name;
  std::vector<TypedName> objects;
  std::vector<LiftedFormula> init;   // ground atoms, declaration order
  LiftedFormula goal;
  std::vector<SurfaceConstraint> constraints;
};

LiftedDomain parse_domain(const std::string& text);
LiftedProblem parse_problem(const std::string& text,
                            const LiftedDomain& domain);

// One formula per s-expression; used for goal-syntax inputs such as axiom
// files. Leading (forall (?v - t) ...) wrappers are allowed.
std::vector<LiftedFormula> parse_formulas(const std::string& text,
                                          const LiftedDomain& domain);

std::string emit_domain(const LiftedDomain& d);
std::string emit_problem(const LiftedProblem& p);

}  // namespace lexiplan::pddl
