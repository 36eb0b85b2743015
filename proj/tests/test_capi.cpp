#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <string>
#include <unistd.h>

#include "lexiplan/lexiplan.h"

namespace fs = std::filesystem;

namespace {

const std::string kSource = LEXIPLAN_SOURCE_DIR;

struct Engine {
  lxp_engine* e;
  explicit Engine(const std::string& root) : e(lxp_engine_new(root.c_str())) {}
  ~Engine() { lxp_engine_free(e); }
};

struct Owned {
  char* s = nullptr;
  ~Owned() { lxp_free_string(s); }
};

}  // namespace

TEST_CASE("verify through the C surface") {
  Engine eng(kSource);
  fs::path plan =
      kSource + "/domains/babyai/data/data_3/1/gpt_5_plan";

  Owned line;
  lxp_status st =
      lxp_verify(eng.e, "babyai", 3, 1, plan.c_str(), &line.s);
  REQUIRE(st == LXP_OK);
  CHECK(std::string(line.s) ==
        "verdict=optimal length=14 cost=14 reason=none");

  // invalid plans are still a successful verification
  fs::path bad =
      kSource + "/domains/babyai/data/data_3/1/deepseek_plan";
  Owned bad_line;
  st = lxp_verify(eng.e, "babyai", 3, 1, bad.c_str(), &bad_line.s);
  REQUIRE(st == LXP_OK);
  CHECK(std::string(bad_line.s).rfind("verdict=invalid", 0) == 0);
}

TEST_CASE("solve and translate through the C surface") {
  Engine eng(kSource);

  Owned plan;
  REQUIRE(lxp_solve(eng.e, "babyai", 0, 1, &plan.s) == LXP_OK);
  CHECK(std::string(plan.s) ==
        "gotodoor green_door_1 room_1 room_3\n"
        "toggle green_door_1\n"
        "gotoroom room_1 room_3 green_door_1\n"
        "gotoobject red_ball_1 room_3\n");

  Owned nl;
  REQUIRE(lxp_translate(eng.e, "babyai", 3, 1, &nl.s) == LXP_OK);
  CHECK(std::string(nl.s).find("The original state of the world is:") !=
        std::string::npos);
}

TEST_CASE("errors set a status and a message") {
  Engine eng(kSource);

  Owned out;
  lxp_status st = lxp_solve(eng.e, "no_such_domain", 0, 1, &out.s);
  CHECK(st != LXP_OK);
  CHECK(out.s == nullptr);
  CHECK(std::string(lxp_last_error(eng.e)).size() > 0);

  st = lxp_verify(eng.e, "babyai", 9, 9, "/nonexistent", &out.s);
  CHECK(st == LXP_ERR_IO);

  CHECK(lxp_solve(eng.e, nullptr, 0, 1, &out.s) == LXP_ERR_INVALID);
}

TEST_CASE("generate writes bundles under the engine data root") {
  static int counter = 0;
  fs::path root = fs::temp_directory_path() /
                  ("lexiplan_capi_" + std::to_string(::getpid()) + "_" +
                   std::to_string(counter++));
  fs::create_directories(root / "domains");
  fs::copy(kSource + "/domains/blocksworld", root / "domains/blocksworld",
           fs::copy_options::recursive);
  fs::remove_all(root / "domains/blocksworld/data");

  Engine eng(root.string());
  Owned dirs;
  REQUIRE(lxp_generate(eng.e, "blocksworld", 21, 1, 1, &dirs.s) == LXP_OK);
  std::string first(dirs.s);
  if (!first.empty() && first.back() == '\n') first.pop_back();
  CHECK(fs::exists(fs::path(first) / "problem.pddl"));
  CHECK(first.find("/domains/blocksworld/data/data_1/21") != std::string::npos);

  fs::remove_all(root);
}
