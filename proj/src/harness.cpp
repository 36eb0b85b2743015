#include "lexiplan/harness.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"

#define CPPHTTPLIB_THREAD_POOL_COUNT 4
#include "httplib.h"

namespace lexiplan::harness {

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    out[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return out;
}

}  // namespace

fs::path pack_dir(const fs::path& data_root, const std::string& domain) {
  return data_root / "domains" / domain;
}

fs::path bundle_dir(const fs::path& data_root, const std::string& domain,
                    int k, std::uint64_t seed) {
  return pack_dir(data_root, domain) / "data" /
         ("data_" + std::to_string(k)) / std::to_string(seed);
}

fs::path write_bundle(const fs::path& data_root, const DomainPack& pack,
                      const pddl::LiftedProblem& base_problem,
                      const ProblemBundle& bundle, int k, std::uint64_t seed,
                      const std::map<std::string, std::string>& extra_meta) {
  pddl::LiftedProblem p = base_problem;
  p.constraints.clear();
  for (const TrajectoryConstraint& q : bundle.constrained.constraints)
    p.constraints.push_back(lift_constraint(q, bundle.constrained));

  fs::path dir = bundle_dir(data_root, pack.name, k, seed);
  fs::create_directories(dir);
  write_file(dir / "problem.pddl", pddl::emit_problem(p));
  write_file(dir / "problem_nl.txt",
             render_problem(p, pack.templates, pack.env_nl));
  write_file(dir / "system_prompt.txt", system_prompt());

  std::ostringstream meta;
  meta << "domain=" << pack.name << '\n'
       << "seed=" << seed << '\n'
       << "constraint_count=" << k << '\n'
       << "unconstrained_cost=" << bundle.unconstrained_cost << '\n'
       << "constrained_cost=" << bundle.constrained_cost << '\n';
  for (const auto& [key, value] : extra_meta)
    meta << key << '=' << value << '\n';
  write_file(dir / "meta.kv", meta.str());
  write_file(dir / "gen_config.kv", bundle.config.emit());
  return dir;
}

BundleFiles load_bundle(const fs::path& data_root, const DomainPack& pack,
                        int k, std::uint64_t seed) {
  fs::path dir = bundle_dir(data_root, pack.name, k, seed);
  if (!fs::exists(dir / "problem.pddl")) throw BundleNotFound(dir.string());

  BundleFiles b;
  b.dir = dir;
  b.problem = pddl::parse_problem(read_file(dir / "problem.pddl"), pack.domain);
  b.constrained = ground(pack.domain, b.problem);
  b.problem_nl = read_file(dir / "problem_nl.txt");
  b.system_prompt = read_file(dir / "system_prompt.txt");
  b.meta = parse_kv(read_file(dir / "meta.kv"));
  b.unconstrained_cost = std::stoi(b.meta.at("unconstrained_cost"));
  b.constrained_cost = std::stoi(b.meta.at("constrained_cost"));
  return b;
}

std::vector<fs::path> cmd_generate(const fs::path& data_root,
                                   const DomainPack& pack, std::uint64_t seed0,
                                   int count, int k, const GenConfig& base_cfg,
                                   std::vector<std::uint64_t>* failed) {
  if (!pack.has_generator())
    throw std::invalid_argument("pack " + pack.name + " has no generator");
  std::vector<fs::path> dirs;
  std::vector<std::uint64_t> local_failed;
  for (int i = 0; i < count; ++i) {
    std::uint64_t seed = seed0 + static_cast<std::uint64_t>(i);
    try {
      pddl::LiftedProblem lifted = pack.generate(seed);
      Grounder grounder(pack.domain, lifted);
      GroundProblem base = grounder.ground();
      AxiomSet axioms = grounder.ground_axioms(pack.axioms);

      GenConfig cfg = base_cfg;
      cfg.constraint_count = k;
      cfg.rng_seed = seed;

      auto t0 = std::chrono::steady_clock::now();
      ProblemBundle bundle = constrain_problem(base, axioms, cfg);
      auto t1 = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

      std::ostringstream ms_text;
      ms_text << ms;
      dirs.push_back(write_bundle(data_root, pack, lifted, bundle, k, seed,
                                  {{"gen_time_ms", ms_text.str()}}));
    } catch (const GenerationExhausted&) {
      local_failed.push_back(seed);
    }
  }
  if (failed) *failed = local_failed;
  if (dirs.empty() && count > 0)
    throw GenerationExhausted("all " + std::to_string(count) +
                              " seeds exhausted");
  return dirs;
}

Verdict cmd_verify(const fs::path& data_root, const DomainPack& pack, int k,
                   std::uint64_t seed, const fs::path& plan_path,
                   std::string* line_out) {
  BundleFiles b = load_bundle(data_root, pack, k, seed);
  if (!fs::exists(plan_path)) throw PlanFileNotFound(plan_path.string());
  Verdict v = verify(read_file(plan_path), b.constrained, b.constrained_cost);
  if (line_out) *line_out = verdict_line(v, b.constrained_cost);
  return v;
}

std::string EvalRecord::to_json() const {
  nlohmann::json j;
  j["domain"] = domain;
  j["constraint_count"] = k;
  j["seed"] = seed;
  j["model"] = model;
  j["verdict"] = verdict;
  j["reason"] = reason;
  j["plan_length"] = plan_length;
  j["unconstrained_cost"] = unconstrained_cost;
  j["constrained_cost"] = constrained_cost;
  j["wall_time_ms"] = wall_time_ms;
  return j.dump();
}

EvalRecord EvalRecord::from_json(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  EvalRecord r;
  r.domain = j.at("domain").get<std::string>();
  r.k = j.at("constraint_count").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.model = j.at("model").get<std::string>();
  r.verdict = j.at("verdict").get<std::string>();
  r.reason = j.at("reason").get<std::string>();
  r.plan_length = j.at("plan_length").get<int>();
  r.unconstrained_cost = j.at("unconstrained_cost").get<int>();
  r.constrained_cost = j.at("constrained_cost").get<int>();
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  return r;
}

std::vector<SummaryRow> summarize(const std::vector<EvalRecord>& records) {
  std::map<std::pair<std::string, int>, std::vector<const EvalRecord*>> buckets;
  for (const EvalRecord& r : records) buckets[{r.domain, r.k}].push_back(&r);

  std::vector<SummaryRow> rows;
  for (const auto& [key, bucket] : buckets) {
    SummaryRow row;
    row.domain = key.first;
    row.k = key.second;
    row.n = static_cast<int>(bucket.size());
    int optimal = 0, valid = 0;
    double cost_sum = 0;
    for (const EvalRecord* r : bucket) {
      if (r->verdict == "optimal") ++optimal;
      if (r->verdict == "optimal" || r->verdict == "suboptimal") ++valid;
      cost_sum += r->constrained_cost;
    }
    row.fraction_optimal = static_cast<double>(optimal) / row.n;
    row.fraction_valid = static_cast<double>(valid) / row.n;
    row.mean_optimal_cost = cost_sum / row.n;
    rows.push_back(row);
  }
  return rows;  // std::map iteration is already (domain, k) sorted
}

std::string summary_tsv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << "domain\tconstraint_count\tn\tfraction_optimal\tfraction_valid"
         "\tmean_optimal_cost\n";
  for (const SummaryRow& r : rows)
    out << r.domain << '\t' << r.k << '\t' << r.n << '\t'
        << r.fraction_optimal << '\t' << r.fraction_valid << '\t'
        << r.mean_optimal_cost << '\n';
  return out.str();
}

std::vector<SummaryRow> recompute_summary(const fs::path& results_jsonl) {
  std::ifstream in(results_jsonl);
  if (!in)
    throw std::runtime_error("cannot read " + results_jsonl.string());
  std::vector<EvalRecord> records;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) records.push_back(EvalRecord::from_json(line));
  return summarize(records);
}

AdapterConfig AdapterConfig::parse(const std::string& kv_text) {
  AdapterConfig cfg;
  for (const auto& [key, value] : parse_kv(kv_text)) {
    if (key == "kind" || key == "adapter") {
      cfg.kind = value;
    } else if (key == "models") {
      cfg.models.clear();
      std::istringstream in(value);
      std::string tok;
      while (std::getline(in, tok, ','))
        if (!tok.empty()) cfg.models.push_back(tok);
    } else if (key == "endpoint") {
      cfg.endpoint = value;
    } else if (key == "model") {
      cfg.model = value;
    } else if (key == "timeout_s") {
      cfg.timeout_s = std::stod(value);
    } else if (key == "workers") {
      cfg.workers = std::stoi(value);
    } else {
      throw std::invalid_argument("unknown adapter config key: " + key);
    }
  }
  if (cfg.kind != "file" && cfg.kind != "http")
    throw std::invalid_argument("adapter kind must be file or http");
  return cfg;
}

namespace {

std::string strip_fences(const std::string& text) {
  std::ostringstream out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = line;
    std::size_t b = t.find_first_not_of(" \t");
    if (b != std::string::npos && t.compare(b, 3, "```") == 0) continue;
    out << line << '\n';
  }
  return out.str();
}

// nullopt means "no plan obtained" (missing file, network failure, timeout).
std::optional<std::string> fetch_plan(const AdapterConfig& adapter,
                                      const std::string& model,
                                      const BundleFiles& bundle) {
  if (adapter.kind == "file") {
    fs::path plan = bundle.dir / (model + "_plan");
    std::ifstream in(plan, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  }

  std::string url = adapter.endpoint;
  std::string base = url, path = "/";
  std::size_t scheme = url.find("://");
  if (scheme != std::string::npos) {
    std::size_t slash = url.find('/', scheme + 3);
    if (slash != std::string::npos) {
      base = url.substr(0, slash);
      path = url.substr(slash);
    }
  }
  httplib::Client client(base);
  client.set_connection_timeout(std::chrono::duration<double>(adapter.timeout_s));
  client.set_read_timeout(std::chrono::duration<double>(adapter.timeout_s));

  nlohmann::json body;
  body["system_prompt"] = bundle.system_prompt;
  body["problem_nl"] = bundle.problem_nl;
  httplib::Result res = client.Post(path, body.dump(), "application/json");
  if (!res || res->status < 200 || res->status >= 300) return std::nullopt;
  return strip_fences(res->body);
}

struct EvalTask {
  int k;
  std::uint64_t seed;
  std::string model;
};

}  // namespace

std::vector<EvalRecord> cmd_eval(const fs::path& problems_dir,
                                 const DomainPack& pack,
                                 const AdapterConfig& adapter) {
  std::vector<EvalTask> tasks;
  std::vector<std::string> models =
      adapter.kind == "file" ? adapter.models
                             : std::vector<std::string>{adapter.model};
  if (fs::exists(problems_dir)) {
    std::vector<fs::path> kdirs;
    for (const auto& entry : fs::directory_iterator(problems_dir))
      if (entry.is_directory() &&
          entry.path().filename().string().rfind("data_", 0) == 0)
        kdirs.push_back(entry.path());
    std::sort(kdirs.begin(), kdirs.end());
    for (const fs::path& kdir : kdirs) {
      int k = std::stoi(kdir.filename().string().substr(5));
      std::vector<std::uint64_t> seeds;
      for (const auto& entry : fs::directory_iterator(kdir))
        if (entry.is_directory())
          seeds.push_back(std::stoull(entry.path().filename().string()));
      std::sort(seeds.begin(), seeds.end());
      for (std::uint64_t seed : seeds)
        for (const std::string& model : models)
          tasks.push_back({k, seed, model});
    }
  }

  // data root is two levels above {problems_dir} == .../domains/{d}/data
  fs::path data_root = problems_dir.parent_path().parent_path().parent_path();

  std::vector<EvalRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const EvalTask& task = tasks[i];
      EvalRecord r;
      r.domain = pack.name;
      r.k = task.k;
      r.seed = task.seed;
      r.model = task.model;
      try {
        BundleFiles bundle = load_bundle(data_root, pack, task.k, task.seed);
        r.unconstrained_cost = bundle.unconstrained_cost;
        r.constrained_cost = bundle.constrained_cost;
        std::optional<std::string> plan = fetch_plan(adapter, task.model, bundle);
        auto t0 = std::chrono::steady_clock::now();
        if (!plan) {
          r.verdict = "invalid";
          r.reason = "no_plan";
        } else {
          Verdict v = verify(*plan, bundle.constrained, bundle.constrained_cost);
          r.verdict = v.kind == Verdict::Kind::Optimal     ? "optimal"
                      : v.kind == Verdict::Kind::Suboptimal ? "suboptimal"
                                                            : "invalid";
          r.reason = reason_code(v.reason);
          r.plan_length = v.length;
        }
        auto t1 = std::chrono::steady_clock::now();
        r.wall_time_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
      } catch (const std::exception&) {
        r.verdict = "invalid";
        r.reason = "no_plan";
      }
      records[i] = r;
    }
  };
  int n_workers = std::max(1, std::min<int>(adapter.workers,
                                            static_cast<int>(tasks.size())));
  std::vector<std::thread> threads;
  for (int i = 0; i < n_workers; ++i) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();

  // single writer, task order: deterministic output for the file adapter
  fs::create_directories(problems_dir);
  std::ofstream jsonl(problems_dir / "results.jsonl", std::ios::binary);
  for (const EvalRecord& r : records) jsonl << r.to_json() << '\n';
  jsonl.close();
  write_file(problems_dir / "summary.tsv", summary_tsv(summarize(records)));
  return records;
}

}  // namespace lexiplan::harness
