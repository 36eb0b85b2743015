#include "lexiplan/lexiplan.h"

#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "lexiplan/harness.hpp"
#include "lexiplan/planner.hpp"

namespace {

using namespace lexiplan;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct lxp_engine {
  std::filesystem::path data_root;
  std::map<std::string, DomainPack> packs;
  std::string last_error;

  const DomainPack& pack(const std::string& domain) {
    auto it = packs.find(domain);
    if (it == packs.end()) {
      DomainPack p =
          load_domain_pack(harness::pack_dir(data_root, domain));
      it = packs.emplace(domain, std::move(p)).first;
    }
    return it->second;
  }
};

namespace {

// Uniform exception-to-status translation around each operation body.
template <typename Fn>
lxp_status guarded(lxp_engine* e, Fn&& fn) {
  if (!e) return LXP_ERR_INVALID;
  e->last_error.clear();
  try {
    return fn();
  } catch (const harness::BundleNotFound& ex) {
    e->last_error = ex.what();
    return LXP_ERR_IO;
  } catch (const harness::PlanFileNotFound& ex) {
    e->last_error = ex.what();
    return LXP_ERR_IO;
  } catch (const MissingFile& ex) {
    e->last_error = ex.what();
    return LXP_ERR_IO;
  } catch (const pddl::ParseError& ex) {
    e->last_error = ex.what();
    return LXP_ERR_PARSE;
  } catch (const ValidationError& ex) {
    e->last_error = ex.what();
    return LXP_ERR_PARSE;
  } catch (const GenerationExhausted& ex) {
    e->last_error = ex.what();
    return LXP_ERR_EXHAUSTED;
  } catch (const std::invalid_argument& ex) {
    e->last_error = ex.what();
    return LXP_ERR_INVALID;
  } catch (const std::exception& ex) {
    e->last_error = ex.what();
    return LXP_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

lxp_engine* lxp_engine_new(const char* data_root) {
  auto* e = new lxp_engine;
  e->data_root = data_root && *data_root ? data_root : ".";
  return e;
}

void lxp_engine_free(lxp_engine* e) { delete e; }

const char* lxp_last_error(const lxp_engine* e) {
  return e ? e->last_error.c_str() : "null engine";
}

lxp_status lxp_generate(lxp_engine* e, const char* domain,
                        unsigned long long seed0, int count, int k,
                        char** out_dirs) {
  return guarded(e, [&]() -> lxp_status {
    if (!domain) throw std::invalid_argument("domain is null");
    GenConfig cfg;
    std::vector<std::filesystem::path> dirs = harness::cmd_generate(
        e->data_root, e->pack(domain), seed0, count, k, cfg);
    if (out_dirs) {
      std::string joined;
      for (const auto& d : dirs) {
        joined += d.string();
        joined += '\n';
      }
      *out_dirs = dup_string(joined);
    }
    return LXP_OK;
  });
}

lxp_status lxp_solve(lxp_engine* e, const char* domain, int k,
                     unsigned long long seed, char** out_plan) {
  return guarded(e, [&]() -> lxp_status {
    if (!domain) throw std::invalid_argument("domain is null");
    harness::BundleFiles b =
        harness::load_bundle(e->data_root, e->pack(domain), k, seed);
    OptimalResult r = solve_optimal(b.constrained);
    if (r.status == SolveStatus::LimitExceeded) {
      e->last_error = "search limits exceeded";
      return LXP_ERR_LIMIT;
    }
    if (r.status != SolveStatus::Solved) {
      e->last_error = "problem is infeasible";
      return LXP_ERR_INTERNAL;
    }
    if (out_plan) *out_plan = dup_string(r.plan.text());
    return LXP_OK;
  });
}

lxp_status lxp_translate(lxp_engine* e, const char* domain, int k,
                         unsigned long long seed, char** out_nl) {
  return guarded(e, [&]() -> lxp_status {
    if (!domain) throw std::invalid_argument("domain is null");
    const DomainPack& pack = e->pack(domain);
    harness::BundleFiles b =
        harness::load_bundle(e->data_root, pack, k, seed);
    std::string nl = render_problem(b.problem, pack.templates, pack.env_nl);
    if (out_nl) *out_nl = dup_string(nl);
    return LXP_OK;
  });
}

lxp_status lxp_verify(lxp_engine* e, const char* domain, int k,
                      unsigned long long seed, const char* plan_path,
                      char** out_verdict_line) {
  return guarded(e, [&]() -> lxp_status {
    if (!domain || !plan_path)
      throw std::invalid_argument("domain/plan_path is null");
    std::string line;
    harness::cmd_verify(e->data_root, e->pack(domain), k, seed, plan_path,
                        &line);
    if (out_verdict_line) *out_verdict_line = dup_string(line);
    return LXP_OK;
  });
}

lxp_status lxp_eval(lxp_engine* e, const char* domain,
                    const char* adapter_config_path, char** out_summary_tsv) {
  return guarded(e, [&]() -> lxp_status {
    if (!domain || !adapter_config_path)
      throw std::invalid_argument("domain/adapter_config_path is null");
    std::ifstream in(adapter_config_path, std::ios::binary);
    if (!in) throw MissingFile(adapter_config_path);
    std::ostringstream text;
    text << in.rdbuf();
    harness::AdapterConfig adapter =
        harness::AdapterConfig::parse(text.str());
    const DomainPack& pack = e->pack(domain);
    std::filesystem::path data_dir =
        harness::pack_dir(e->data_root, domain) / "data";
    std::vector<harness::EvalRecord> records =
        harness::cmd_eval(data_dir, pack, adapter);
    if (out_summary_tsv)
      *out_summary_tsv =
          dup_string(harness::summary_tsv(harness::summarize(records)));
    return LXP_OK;
  });
}

void lxp_free_string(char* s) { std::free(s); }

}  // extern "C"
