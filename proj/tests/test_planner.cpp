#include "doctest.h"

#include <fstream>
#include <sstream>

#include "lexiplan/domains.hpp"
#include "lexiplan/planner.hpp"

using namespace lexiplan;

namespace {

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  REQUIRE(in);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

GroundProblem babyai_bundle(int k) {
  static DomainPack pack =
      load_domain_pack(std::string(LEXIPLAN_SOURCE_DIR) + "/domains/babyai");
  std::string path = std::string(LEXIPLAN_SOURCE_DIR) +
                     "/domains/babyai/data/data_" + std::to_string(k) +
                     "/1/problem.pddl";
  return ground(pack.domain, pddl::parse_problem(slurp(path), pack.domain));
}

}  // namespace

TEST_CASE("running example: unconstrained optimum is 4 actions") {
  OptimalResult r = solve_optimal(babyai_bundle(0));
  REQUIRE(r.status == SolveStatus::Solved);
  CHECK(r.cost == 4);
  CHECK(r.plan.cost() == 4);
  // solution is reproducible: rerunning yields the identical plan
  CHECK(solve_optimal(babyai_bundle(0)).plan.text() == r.plan.text());
}

TEST_CASE("running example: three constraints raise the optimum to 14") {
  GroundProblem p = babyai_bundle(3);
  REQUIRE(p.constraints.size() == 3);
  OptimalResult r = solve_optimal(p);
  REQUIRE(r.status == SolveStatus::Solved);
  CHECK(r.cost == 14);
  SimulationResult sim = simulate(p, r.plan);
  CHECK(sim.ok());
  for (std::size_t i = 0; i < p.constraints.size(); ++i)
    CHECK(check_sequence(p.constraints[i], sim.trace.states));
}

TEST_CASE("unsatisfiable constraint set is reported infeasible") {
  GroundProblem p = babyai_bundle(0);
  AtomId locked_green = 0;
  for (AtomId i = 0; i < p.atoms.size(); ++i)
    if (p.atoms[i].text() == "locked green_door_1") locked_green = i;
  p.constraints.push_back(
      TrajectoryConstraint::always(Formula::atom(locked_green)));
  p.constraints.push_back(TrajectoryConstraint::sometime(
      Formula::negate(Formula::atom(locked_green))));
  OptimalResult r = solve_optimal(p);
  CHECK(r.status == SolveStatus::Infeasible);
}

TEST_CASE("node limit yields LimitExceeded") {
  SearchLimits limits;
  limits.max_nodes = 1;
  OptimalResult r = solve_optimal(babyai_bundle(0), limits);
  CHECK(r.status == SolveStatus::LimitExceeded);
}

TEST_CASE("simulate reports the first failing step") {
  GroundProblem p = babyai_bundle(0);
  auto find = [&](const std::string& text) {
    for (const GroundAction& a : p.actions)
      if (a.text() == text) return a;
    FAIL("missing action ", text);
    return GroundAction{};
  };

  SUBCASE("precondition failure") {
    Plan plan;
    plan.actions.push_back(find("pick purple_box_1 room_1"));
    SimulationResult sim = simulate(p, plan);
    REQUIRE_FALSE(sim.ok());
    CHECK(sim.failure->index == 0);
    CHECK(sim.failure->kind == StepFailure::Kind::Precondition);
  }

  SUBCASE("absorbing constraint violation") {
    AtomId locked_green = 0;
    for (AtomId i = 0; i < p.atoms.size(); ++i)
      if (p.atoms[i].text() == "locked green_door_1") locked_green = i;
    p.constraints.push_back(
        TrajectoryConstraint::always(Formula::atom(locked_green)));
    Plan plan;
    plan.actions.push_back(find("gotodoor green_door_1 room_1 room_3"));
    plan.actions.push_back(find("toggle green_door_1"));  // unlocks: violation
    SimulationResult sim = simulate(p, plan);
    REQUIRE_FALSE(sim.ok());
    CHECK(sim.failure->index == 1);
    CHECK(sim.failure->kind == StepFailure::Kind::ConstraintViolated);
    CHECK(sim.failure->constraint_index == 0);
  }

  SUBCASE("valid prefix keeps the full trace") {
    Plan plan;
    plan.actions.push_back(find("gotodoor green_door_1 room_1 room_3"));
    SimulationResult sim = simulate(p, plan);
    CHECK(sim.ok());
    CHECK(sim.trace.states.size() == 2);  // s0 included
  }
}

TEST_CASE("plan text is one action per line") {
  Plan plan;
  GroundAction a;
  a.name = "pickup";
  a.args = {"b1"};
  plan.actions = {a, a};
  CHECK(plan.text() == "pickup b1\npickup b1\n");
}
