#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "lexiplan/lexiplan.h"

namespace {

// Prints an owned C string and releases it.
void print_and_free(char* s) {
  if (!s) return;
  std::fputs(s, stdout);
  std::size_t n = std::strlen(s);
  if (n == 0 || s[n - 1] != '\n') std::fputc('\n', stdout);
  lxp_free_string(s);
}

int fail(lxp_engine* engine, lxp_status status) {
  std::fprintf(stderr, "error: %s\n", lxp_last_error(engine));
  return static_cast<int>(status);
}

// A bare LLM name resolves to the packed {name}_plan file in the bundle dir.
std::string resolve_plan_path(const std::string& data_root,
                              const std::string& domain, int k,
                              unsigned long long seed,
                              const std::string& plan) {
  if (plan.find('/') != std::string::npos || plan.find('.') != std::string::npos)
    return plan;
  std::FILE* f = std::fopen(plan.c_str(), "rb");
  if (f) {
    std::fclose(f);
    return plan;
  }
  return data_root + "/domains/" + domain + "/data/data_" + std::to_string(k) +
         "/" + std::to_string(seed) + "/" + plan + "_plan";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained-planning benchmark toolkit"};
  app.require_subcommand(1);

  std::string data_root = ".";
  if (const char* env = std::getenv("LEXIPLAN_DATA_ROOT")) data_root = env;
  app.add_option("--data-root", data_root,
                 "Directory containing domains/ (env LEXIPLAN_DATA_ROOT)");

  std::string domain, plan, adapter_config;
  unsigned long long seed = 1;
  int count = 1, k = 0;

  CLI::App* generate =
      app.add_subcommand("generate", "Generate constrained problem bundles");
  generate->add_option("domain", domain, "Domain pack name")->required();
  generate->add_option("seed,--seed", seed, "Seed of the first problem");
  generate->add_option("count,--count", count, "Number of problems");
  generate->add_option("constraints,--constraints", k,
                       "Constraints per problem");

  CLI::App* solve =
      app.add_subcommand("solve", "Print an optimal plan for a bundle");
  solve->add_option("domain", domain)->required();
  solve->add_option("constraints", k)->required();
  solve->add_option("seed", seed)->required();

  CLI::App* translate =
      app.add_subcommand("translate", "Print the NL prompt for a bundle");
  translate->add_option("domain", domain)->required();
  translate->add_option("constraints", k)->required();
  translate->add_option("seed", seed)->required();

  CLI::App* verify =
      app.add_subcommand("verify", "Verify a plan against a bundle");
  verify->add_option("domain", domain)->required();
  verify->add_option("constraints", k)->required();
  verify->add_option("seed", seed)->required();
  verify
      ->add_option("plan", plan,
                   "Plan file path, or an LLM name for a packed plan")
      ->required();

  CLI::App* eval =
      app.add_subcommand("eval", "Evaluate recorded or fetched plans");
  eval->add_option("domain", domain)->required();
  eval->add_option("--adapter", adapter_config, "Adapter config file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  lxp_engine* engine = lxp_engine_new(data_root.c_str());
  int rc = 0;
  char* out = nullptr;
  lxp_status status = LXP_OK;

  if (generate->parsed()) {
    status = lxp_generate(engine, domain.c_str(), seed, count, k, &out);
  } else if (solve->parsed()) {
    status = lxp_solve(engine, domain.c_str(), k, seed, &out);
  } else if (translate->parsed()) {
    status = lxp_translate(engine, domain.c_str(), k, seed, &out);
  } else if (verify->parsed()) {
    std::string path = resolve_plan_path(data_root, domain, k, seed, plan);
    status = lxp_verify(engine, domain.c_str(), k, seed, path.c_str(), &out);
  } else if (eval->parsed()) {
    status = lxp_eval(engine, domain.c_str(), adapter_config.c_str(), &out);
  }

  if (status == LXP_OK)
    print_and_free(out);
  else
    rc = fail(engine, status);
  lxp_engine_free(engine);
  return rc;
}
