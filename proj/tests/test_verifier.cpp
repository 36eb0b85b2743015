#include "doctest.h"

#include <fstream>
#include <sstream>

#include "lexiplan/domains.hpp"
#include "lexiplan/planner.hpp"
#include "lexiplan/verifier.hpp"

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
  return ground(pack.domain,
                pddl::parse_problem(
                    slurp(std::string(LEXIPLAN_SOURCE_DIR) +
                          "/domains/babyai/data/data_" + std::to_string(k) +
                          "/1/problem.pddl"),
                    pack.domain));
}

}  // namespace

TEST_CASE("edit distance") {
  CHECK(edit_distance("", "") == 0);
  CHECK(edit_distance("abc", "abc") == 0);
  CHECK(edit_distance("abc", "") == 3);
  CHECK(edit_distance("kitten", "sitting") == 3);
  CHECK(edit_distance("pickup b1", "pick b1") == 2);
}

TEST_CASE("plan lines map through normalization") {
  GroundProblem p = babyai_bundle(0);
  std::string text =
      "1. (gotodoor green_door_1 room_1 room_3)\n"
      "  2) Toggle green_door_1\n"
      "- gotoroom room_1 room_3 green_door_1\n"
      "```\n"
      "\n"
      "* GOTOOBJECT red_ball_1, room_3\n";
  std::vector<MappedLine> lines = parse_plan(text, p);
  REQUIRE(lines.size() == 4);
  for (const MappedLine& m : lines) CHECK(m.exact);
  CHECK(p.actions[lines[0].action_index].text() ==
        "gotodoor green_door_1 room_1 room_3");
  CHECK(p.actions[3].text() != "");  // sanity: actions exist
}

TEST_CASE("near-miss lines map to the closest action") {
  GroundProblem p = babyai_bundle(0);
  std::vector<MappedLine> lines = parse_plan("togle green_door_1\n", p);
  REQUIRE(lines.size() == 1);
  CHECK_FALSE(lines[0].exact);
  CHECK(p.actions[lines[0].action_index].text() == "toggle green_door_1");
  CHECK(lines[0].distance == 1);
}

TEST_CASE("gibberish lines stay unmapped") {
  GroundProblem p = babyai_bundle(0);
  std::vector<MappedLine> lines =
      parse_plan("first i will think about the problem\n", p);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].action_index == -1);
}

TEST_CASE("verify covers the verdict trichotomy") {
  GroundProblem p0 = babyai_bundle(0);
  std::string optimal =
      "gotodoor green_door_1 room_1 room_3\n"
      "toggle green_door_1\n"
      "gotoroom room_1 room_3 green_door_1\n"
      "gotoobject red_ball_1 room_3\n";

  SUBCASE("optimal") {
    Verdict v = verify(optimal, p0, 4);
    CHECK(v.kind == Verdict::Kind::Optimal);
    CHECK(v.reason == Verdict::Reason::None);
    CHECK(v.length == 4);
    CHECK(verdict_line(v, 4) == "verdict=optimal length=4 cost=4 reason=none");
  }

  SUBCASE("suboptimal: a detour still reaches the goal") {
    std::string detour =
        "gotoempty\n" + optimal;
    Verdict v = verify(detour, p0, 4);
    CHECK(v.kind == Verdict::Kind::Suboptimal);
    CHECK(v.length == 5);
  }

  SUBCASE("precondition failure") {
    Verdict v = verify("toggle green_door_1\n", p0, 4);
    CHECK(v.kind == Verdict::Kind::Invalid);
    CHECK(v.reason == Verdict::Reason::FailedPrecondition);
    CHECK(v.step == 0);
  }

  SUBCASE("goal not reached") {
    Verdict v = verify("gotodoor green_door_1 room_1 room_3\n", p0, 4);
    CHECK(v.kind == Verdict::Kind::Invalid);
    CHECK(v.reason == Verdict::Reason::GoalNotReached);
  }

  SUBCASE("empty plan") {
    Verdict v = verify("", p0, 4);
    CHECK(v.kind == Verdict::Kind::Invalid);
    CHECK(v.reason == Verdict::Reason::NoPlan);
    CHECK(verdict_line(v, 4) ==
          "verdict=invalid length=0 cost=4 reason=no_plan");
  }

  SUBCASE("unmappable line") {
    Verdict v = verify("open sesame magic words here\n" + optimal, p0, 4);
    CHECK(v.kind == Verdict::Kind::Invalid);
    CHECK(v.reason == Verdict::Reason::UnmappableAction);
    CHECK(v.step == 0);
  }

  SUBCASE("constraint violation at plan end") {
    GroundProblem p3 = babyai_bundle(3);
    std::string unconstrained_route =
        "gotodoor purple_door_1 room_1 room_2\n"
        "toggle purple_door_1\n"
        "gotoroom room_1 room_2 purple_door_1\n"
        "gotodoor blue_door_1 room_2 room_4\n"
        "toggle blue_door_1\n"
        "gotoroom room_2 room_4 blue_door_1\n"
        "gotoobject red_ball_2 room_4\n";
    Verdict v = verify(unconstrained_route, p3, 14);
    CHECK(v.kind == Verdict::Kind::Invalid);
    CHECK(v.reason == Verdict::Reason::ConstraintViolated);
    CHECK(v.step == 7);  // acceptance happens at plan end
    CHECK(v.constraint_index == 2);
  }
}

TEST_CASE("every rendered action parses back exactly") {
  for (int k : {0, 3}) {
    GroundProblem p = babyai_bundle(k);
    for (const GroundAction& a : p.actions) {
      std::vector<MappedLine> lines = parse_plan(a.text() + "\n", p);
      REQUIRE(lines.size() == 1);
      CHECK(lines[0].exact);
      CHECK(p.actions[lines[0].action_index].text() == a.text());
    }
  }
}

TEST_CASE("a valid plan below the recorded optimum raises a diagnostic") {
  GroundProblem p0 = babyai_bundle(0);
  std::string optimal =
      "gotodoor green_door_1 room_1 room_3\n"
      "toggle green_door_1\n"
      "gotoroom room_1 room_3 green_door_1\n"
      "gotoobject red_ball_1 room_3\n";
  CHECK_THROWS_AS(verify(optimal, p0, 5), std::logic_error);
}
