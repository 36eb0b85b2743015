#include "doctest.h"

#include "lexiplan/domains.hpp"
#include "lexiplan/ground.hpp"
#include "lexiplan/pddl.hpp"

using namespace lexiplan;

namespace {

const char* kTwoBlockProblem = R"((define (problem two)
  (:domain blocksworld)
  (:objects a b - block)
  (:init (ontable a) (ontable b) (clear a) (clear b) (handempty))
  (:goal (on a b)))
)";

pddl::LiftedDomain blocks_domain() {
  return pddl::parse_domain(builtin_blocksworld_domain());
}

}  // namespace

TEST_CASE("two-block blocksworld grounds to the expected action set") {
  pddl::LiftedDomain d = blocks_domain();
  pddl::LiftedProblem p = pddl::parse_problem(kTwoBlockProblem, d);
  GroundProblem gp = ground(d, p);

  int pickup = 0, putdown = 0, stack = 0, unstack = 0;
  for (const GroundAction& a : gp.actions) {
    if (a.name == "pickup") ++pickup;
    if (a.name == "putdown") ++putdown;
    if (a.name == "stack") ++stack;
    if (a.name == "unstack") ++unstack;
  }
  CHECK(pickup == 2);
  CHECK(putdown == 2);
  CHECK(stack == 2);    // stack a a / stack b b pruned by the equality guard
  CHECK(unstack == 2);
  CHECK(gp.actions.size() == 8);
}

TEST_CASE("actions are sorted by canonical text") {
  pddl::LiftedDomain d = blocks_domain();
  pddl::LiftedProblem p = pddl::parse_problem(kTwoBlockProblem, d);
  GroundProblem gp = ground(d, p);
  for (std::size_t i = 1; i < gp.actions.size(); ++i)
    CHECK(gp.actions[i - 1].text() < gp.actions[i].text());
}

TEST_CASE("problem emit/parse round trip") {
  pddl::LiftedDomain d = blocks_domain();
  pddl::LiftedProblem p = pddl::parse_problem(kTwoBlockProblem, d);
  p.constraints.push_back(
      {ConstraintType::Sometime,
       pddl::LiftedFormula::atom("holding", {{false, "b"}}),
       {}});
  pddl::LiftedProblem q = pddl::parse_problem(pddl::emit_problem(p), d);
  CHECK(q.objects == p.objects);
  CHECK(q.init == p.init);
  CHECK(q.goal == p.goal);
  CHECK(q.constraints == p.constraints);
  // byte-stable: emitting the reparsed problem reproduces the text
  CHECK(pddl::emit_problem(q) == pddl::emit_problem(p));
}

TEST_CASE("domain emit/parse round trip") {
  pddl::LiftedDomain d = blocks_domain();
  pddl::LiftedDomain d2 = pddl::parse_domain(pddl::emit_domain(d));
  CHECK(d2.name == d.name);
  CHECK(d2.predicates == d.predicates);
  CHECK(d2.actions == d.actions);
}

TEST_CASE("parse errors carry kind and location") {
  pddl::LiftedDomain d = blocks_domain();

  SUBCASE("unknown constraint operator") {
    std::string text = std::string(kTwoBlockProblem);
    text = text.substr(0, text.rfind(')'));
    text = text.substr(0, text.rfind(')') + 1);
    text += "\n  (:constraints (hold-after 3 (on a b))))";
    try {
      pddl::parse_problem(text, d);
      FAIL("expected ParseError");
    } catch (const pddl::ParseError& e) {
      CHECK(e.kind == pddl::ErrorKind::UnknownConstraintOperator);
      CHECK(e.line > 1);
    }
  }

  SUBCASE("undeclared predicate") {
    CHECK_THROWS_AS(pddl::parse_problem(R"((define (problem x)
      (:domain blocksworld) (:objects a - block)
      (:init (shiny a)) (:goal (ontable a))))",
                                        d),
                    pddl::ParseError);
  }

  SUBCASE("undeclared object") {
    try {
      pddl::parse_problem(R"((define (problem x)
        (:domain blocksworld) (:objects a - block)
        (:init (ontable zz)) (:goal (ontable a))))",
                          d);
      FAIL("expected ParseError");
    } catch (const pddl::ParseError& e) {
      CHECK(e.kind == pddl::ErrorKind::UndeclaredSymbol);
    }
  }

  SUBCASE("unsupported requirement") {
    try {
      pddl::parse_domain(R"((define (domain x)
        (:requirements :durative-actions)))");
      FAIL("expected ParseError");
    } catch (const pddl::ParseError& e) {
      CHECK(e.kind == pddl::ErrorKind::UnsupportedFeature);
    }
  }

  SUBCASE("cyclic type hierarchy") {
    CHECK_THROWS_AS(pddl::parse_domain(R"((define (domain x)
      (:requirements :typing)
      (:types a - b
              b - a)))"),
                    pddl::ParseError);
  }
}

TEST_CASE("imply desugars to disjunction") {
  pddl::LiftedDomain d = pddl::parse_domain(R"((define (domain t)
    (:requirements :strips :adl)
    (:predicates (p) (q))
    (:action a
      :parameters ()
      :precondition (imply (p) (q))
      :effect (q))))");
  const pddl::LiftedFormula& pre = d.actions[0].precondition;
  CHECK(pre.kind == pddl::LiftedFormula::Kind::Or);
  REQUIRE(pre.children.size() == 2);
  CHECK(pre.children[0].kind == pddl::LiftedFormula::Kind::Not);
}

TEST_CASE("quantified goal grounds over typed objects") {
  pddl::LiftedDomain d = blocks_domain();
  pddl::LiftedProblem p = pddl::parse_problem(R"((define (problem x)
    (:domain blocksworld)
    (:objects a b - block)
    (:init (ontable a) (ontable b) (clear a) (clear b) (handempty))
    (:goal (exists (?x - block) (holding ?x)))))",
                                              d);
  GroundProblem gp = ground(d, p);
  CHECK(gp.goal.kind() == Formula::Kind::Or);
  CHECK(gp.goal.children().size() == 2);
}

TEST_CASE("constraints section accepts a bare list and an and wrapper") {
  pddl::LiftedDomain d = blocks_domain();
  std::string base = R"((define (problem x)
    (:domain blocksworld)
    (:objects a b - block)
    (:init (ontable a) (ontable b) (clear a) (clear b) (handempty))
    (:goal (on a b))
    (:constraints %CONS%)))";
  std::string bare = base;
  bare.replace(bare.find("%CONS%"), 6,
               "(sometime (holding a)) (always (clear b))");
  std::string wrapped = base;
  wrapped.replace(wrapped.find("%CONS%"), 6,
                  "(and (sometime (holding a)) (always (clear b)))");
  CHECK(pddl::parse_problem(bare, d).constraints ==
        pddl::parse_problem(wrapped, d).constraints);
}
