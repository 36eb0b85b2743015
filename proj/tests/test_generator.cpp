#include "doctest.h"

#include <fstream>
#include <sstream>

#include "lexiplan/domains.hpp"
#include "lexiplan/generator.hpp"

using namespace lexiplan;

namespace {

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  REQUIRE(in);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct BabyaiFixture {
  DomainPack pack;
  GroundProblem base;
  AxiomSet axioms;
  Trace sigma;
  Plan plan;

  BabyaiFixture()
      : pack(load_domain_pack(std::string(LEXIPLAN_SOURCE_DIR) +
                              "/domains/babyai")) {
    pddl::LiftedProblem p = pddl::parse_problem(
        slurp(std::string(LEXIPLAN_SOURCE_DIR) +
              "/domains/babyai/data/data_0/1/problem.pddl"),
        pack.domain);
    Grounder g(pack.domain, p);
    base = g.ground();
    axioms = g.ground_axioms(pack.axioms);
    OptimalResult r = solve_optimal(base);
    REQUIRE(r.status == SolveStatus::Solved);
    plan = r.plan;
    sigma = simulate(base, plan).trace;
  }

  Literal lit(const std::string& text, bool positive = true) const {
    for (AtomId i = 0; i < base.atoms.size(); ++i)
      if (base.atoms[i].text() == text) return {i, positive};
    FAIL("missing atom ", text);
    return {};
  }
};

GroundProblem two_block_problem() {
  pddl::LiftedDomain d = pddl::parse_domain(builtin_blocksworld_domain());
  pddl::LiftedProblem p = pddl::parse_problem(R"((define (problem two)
    (:domain blocksworld)
    (:objects a b - block)
    (:init (ontable a) (ontable b) (clear a) (clear b) (handempty))
    (:goal (on a b))))",
                                              d);
  return ground(d, p);
}

}  // namespace

TEST_CASE("always literal filter matches the worked example") {
  static BabyaiFixture fx;

  // not true initially: can never 'always' hold
  CHECK_FALSE(literal_suitable(fx.lit("at red_ball_2"), ConstraintType::Always,
                               fx.base, fx.sigma, BoolOp::And, {}, fx.axioms));
  // true in every state of the optimal trace: no added difficulty
  CHECK_FALSE(literal_suitable(fx.lit("objectinroom red_ball_1 room_3"),
                               ConstraintType::Always, fx.base, fx.sigma,
                               BoolOp::And, {}, fx.axioms));
  // the published pick: initially true, violated by the unconstrained plan
  CHECK(literal_suitable(fx.lit("locked green_door_1"), ConstraintType::Always,
                         fx.base, fx.sigma, BoolOp::And, {}, fx.axioms));
  // duplicates rejected
  CHECK_FALSE(literal_suitable(fx.lit("locked green_door_1"),
                               ConstraintType::Always, fx.base, fx.sigma,
                               BoolOp::And, {fx.lit("locked green_door_1")},
                               fx.axioms));
  // axiom-inconsistent conjunct rejected
  CHECK_FALSE(literal_suitable(fx.lit("unlocked green_door_1"),
                               ConstraintType::Always, fx.base, fx.sigma,
                               BoolOp::And, {fx.lit("locked green_door_1")},
                               fx.axioms));
}

TEST_CASE("sometime literal filter rejects trace-satisfied literals") {
  static BabyaiFixture fx;
  // the unconstrained plan already visits this atom
  CHECK_FALSE(literal_suitable(fx.lit("unlocked green_door_1"),
                               ConstraintType::Sometime, fx.base, fx.sigma,
                               BoolOp::And, {}, fx.axioms));
  CHECK(literal_suitable(fx.lit("holding purple_box_1"),
                         ConstraintType::Sometime, fx.base, fx.sigma,
                         BoolOp::And, {}, fx.axioms));
}

TEST_CASE("compatibility matrix") {
  static BabyaiFixture fx;
  Formula locked_g = fx.lit("locked green_door_1").formula();
  Formula unlocked_g = fx.lit("unlocked green_door_1").formula();
  Formula box_r1 = fx.lit("objectinroom purple_box_1 room_1").formula();

  auto always_locked = TrajectoryConstraint::always(locked_g);

  // lock mutex axiom rules out Sometime(unlocked) next to Always(locked)
  CHECK_FALSE(compatible(TrajectoryConstraint::sometime(unlocked_g),
                         {always_locked}, fx.axioms));
  // subsumption: Always(p and q) against an existing Always(p)
  CHECK_FALSE(compatible(
      TrajectoryConstraint::always(Formula::conj({locked_g, box_r1})),
      {always_locked}, fx.axioms));
  // vacuous
  CHECK(compatible(always_locked, {}, fx.axioms));
  // unrelated pair
  CHECK(compatible(TrajectoryConstraint::sometime(box_r1),
                   {TrajectoryConstraint::at_most_once(unlocked_g)},
                   fx.axioms));
  // duplicated sometime
  CHECK_FALSE(compatible(TrajectoryConstraint::sometime(box_r1),
                         {TrajectoryConstraint::sometime(box_r1)}, fx.axioms));
}

TEST_CASE("generated constraints are violated by the unconstrained trace") {
  static BabyaiFixture fx;
  GenConfig cfg;
  Rng rng(7);
  for (ConstraintType t :
       {ConstraintType::Always, ConstraintType::Sometime,
        ConstraintType::AtMostOnce, ConstraintType::SometimeBefore,
        ConstraintType::SometimeAfter}) {
    TrajectoryConstraint q = generate_constraint(
        t, fx.base, fx.plan, fx.sigma, {}, fx.axioms, cfg, rng);
    CHECK(q.type() == t);
    CHECK_FALSE(check_sequence(q, fx.sigma.states));
  }
}

TEST_CASE("constrain_problem on the tiny blocksworld raises the cost") {
  GroundProblem base = two_block_problem();
  GenConfig cfg;
  cfg.constraint_count = 1;
  cfg.rng_seed = 5;
  ProblemBundle bundle = constrain_problem(base, {}, cfg);
  CHECK(bundle.unconstrained_cost == 2);
  CHECK(bundle.constrained_cost > 2);
  CHECK(bundle.constrained.constraints.size() == 1);

  OptimalResult check = solve_optimal(bundle.constrained);
  REQUIRE(check.status == SolveStatus::Solved);
  CHECK(check.cost == bundle.constrained_cost);
}

TEST_CASE("constrain_problem with k=0 returns the base unchanged") {
  GroundProblem base = two_block_problem();
  GenConfig cfg;
  cfg.constraint_count = 0;
  ProblemBundle bundle = constrain_problem(base, {}, cfg);
  CHECK(bundle.constrained_cost == bundle.unconstrained_cost);
  CHECK(bundle.constrained.constraints.empty());
}

TEST_CASE("identical config yields an identical constraint set") {
  GroundProblem base = two_block_problem();
  GenConfig cfg;
  cfg.constraint_count = 2;
  cfg.rng_seed = 42;
  ProblemBundle a = constrain_problem(base, {}, cfg);
  ProblemBundle b = constrain_problem(base, {}, cfg);
  REQUIRE(a.constrained.constraints.size() ==
          b.constrained.constraints.size());
  for (std::size_t i = 0; i < a.constrained.constraints.size(); ++i)
    CHECK(a.constrained.constraints[i].text() ==
          b.constrained.constraints[i].text());
}

TEST_CASE("gen config round trip and validation") {
  GenConfig cfg;
  cfg.constraint_count = 3;
  cfg.type_weights = {1, 0, 2, 0, 1};
  cfg.op_weights = {3, 1};
  cfg.literal_count_min = 2;
  cfg.literal_count_max = 3;
  cfg.strict_cost_increase = false;
  cfg.rng_seed = 77;
  GenConfig back = GenConfig::parse(cfg.emit());
  CHECK(back.emit() == cfg.emit());

  GenConfig bad = cfg;
  bad.literal_count_max = 9;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.type_weights = {0, 0, 0, 0, 0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
