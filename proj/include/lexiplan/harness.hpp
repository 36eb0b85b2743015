#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexiplan/domains.hpp"
#include "lexiplan/generator.hpp"
#include "lexiplan/verifier.hpp"

namespace lexiplan::harness {

namespace fs = std::filesystem;

struct BundleNotFound : std::runtime_error {
  explicit BundleNotFound(const std::string& path)
      : std::runtime_error("bundle not found: " + path) {}
};

struct PlanFileNotFound : std::runtime_error {
  explicit PlanFileNotFound(const std::string& path)
      : std::runtime_error("plan file not found: " + path) {}
};

// `{data_root}/domains/{domain}/data/data_{k}/{seed}/`
fs::path pack_dir(const fs::path& data_root, const std::string& domain);
fs::path bundle_dir(const fs::path& data_root, const std::string& domain,
                    int k, std::uint64_t seed);

// A bundle directory read back from disk.
struct BundleFiles {
  pddl::LiftedProblem problem;  // constraints included
  GroundProblem constrained;
  int unconstrained_cost = 0;
  int constrained_cost = 0;
  std::string problem_nl;
  std::string system_prompt;
  std::map<std::string, std::string> meta;
  fs::path dir;
};

// Writes problem.pddl, problem_nl.txt, system_prompt.txt, meta.kv and
// gen_config.kv under the layout above; returns the bundle directory.
fs::path write_bundle(const fs::path& data_root, const DomainPack& pack,
                      const pddl::LiftedProblem& base_problem,
                      const ProblemBundle& bundle, int k, std::uint64_t seed,
                      const std::map<std::string, std::string>& extra_meta = {});

BundleFiles load_bundle(const fs::path& data_root, const DomainPack& pack,
                        int k, std::uint64_t seed);

// One line per generated bundle dir; seeds whose generation exhausts are
// reported in `failed` and skipped. Throws only when every seed fails.
std::vector<fs::path> cmd_generate(const fs::path& data_root,
                                   const DomainPack& pack, std::uint64_t seed0,
                                   int count, int k, const GenConfig& base_cfg,
                                   std::vector<std::uint64_t>* failed = nullptr);

// Verdict plus its machine-readable line for a plan file against a bundle.
Verdict cmd_verify(const fs::path& data_root, const DomainPack& pack, int k,
                   std::uint64_t seed, const fs::path& plan_path,
                   std::string* line_out = nullptr);

struct EvalRecord {
  std::string domain;
  int k = 0;
  std::uint64_t seed = 0;
  std::string model;
  std::string verdict;  // optimal | suboptimal | invalid
  std::string reason;
  int plan_length = 0;
  int unconstrained_cost = 0;
  int constrained_cost = 0;
  double wall_time_ms = 0.0;

  std::string to_json() const;
  static EvalRecord from_json(const std::string& line);
};

struct SummaryRow {
  std::string domain;
  int k = 0;
  int n = 0;  // records in the bucket
  double fraction_optimal = 0.0;
  double fraction_valid = 0.0;
  double mean_optimal_cost = 0.0;
};

// Per (domain, k) buckets, rows sorted by (domain, k).
std::vector<SummaryRow> summarize(const std::vector<EvalRecord>& records);
std::string summary_tsv(const std::vector<SummaryRow>& rows);
std::vector<SummaryRow> recompute_summary(const fs::path& results_jsonl);

// Plan source per bundle. `file` reads {model}_plan files inside the bundle
// directory; `http` posts {system_prompt, problem_nl} as JSON and treats the
// response body as plan text (code fences stripped).
struct AdapterConfig {
  std::string kind = "file";          // file | http
  std::vector<std::string> models;    // file adapter: plan-file stems
  std::string endpoint;               // http adapter, e.g. http://host:port/path
  std::string model = "http";         // http adapter record label
  double timeout_s = 30.0;
  int workers = 4;

  static AdapterConfig parse(const std::string& kv_text);
};

// Evaluates every bundle under `{problems_dir}/data_*/{seed}` with the
// configured adapter, writes results.jsonl and summary.tsv into
// problems_dir, and returns the records. Adapter failures become
// verdict=invalid reason=no_plan records rather than aborting the batch.
std::vector<EvalRecord> cmd_eval(const fs::path& problems_dir,
                                 const DomainPack& pack,
                                 const AdapterConfig& adapter);

}  // namespace lexiplan::harness
