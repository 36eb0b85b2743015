/* C surface of the lexiplan shared library. All functions are
 * thread-compatible per engine: use one engine per thread or serialize.
 * Strings returned through out parameters are heap-allocated and must be
 * released with lxp_free_string. On any non-LXP_OK status the out parameter
 * is left untouched and lxp_last_error carries a message. */

#ifndef LEXIPLAN_H
#define LEXIPLAN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lxp_engine lxp_engine;

typedef enum {
  LXP_OK = 0,
  LXP_ERR_IO = 1,         /* missing/unreadable files, bundle not found */
  LXP_ERR_PARSE = 2,      /* PDDL or config parse failure */
  LXP_ERR_EXHAUSTED = 3,  /* constraint generation gave up */
  LXP_ERR_LIMIT = 4,      /* planner search limits exceeded */
  LXP_ERR_INVALID = 5,    /* bad argument */
  LXP_ERR_INTERNAL = 6
} lxp_status;

/* data_root: directory containing domains/{name}/ packs. NULL uses ".". */
lxp_engine* lxp_engine_new(const char* data_root);
void lxp_engine_free(lxp_engine* e);

/* Message for the most recent failing call on this engine; owned by the
 * engine, valid until the next call. */
const char* lxp_last_error(const lxp_engine* e);

/* Generates `count` bundles with `k` constraints for seeds seed0..seed0+count-1
 * under {data_root}/domains/{domain}/data/data_{k}/{seed}/. out_dirs (optional)
 * receives the created directories, newline-separated. Seeds that exhaust are
 * skipped; the call fails only when every seed fails. */
lxp_status lxp_generate(lxp_engine* e, const char* domain,
                        unsigned long long seed0, int count, int k,
                        char** out_dirs);

/* Optimal plan text (one action per line) for a bundle's constrained
 * problem. */
lxp_status lxp_solve(lxp_engine* e, const char* domain, int k,
                     unsigned long long seed, char** out_plan);

/* Natural-language prompt re-rendered from a bundle's problem.pddl. */
lxp_status lxp_translate(lxp_engine* e, const char* domain, int k,
                         unsigned long long seed, char** out_nl);

/* Verdict line "verdict=... length=... cost=... reason=..." for the plan file
 * checked against the bundle. A verdict of invalid is still LXP_OK. */
lxp_status lxp_verify(lxp_engine* e, const char* domain, int k,
                      unsigned long long seed, const char* plan_path,
                      char** out_verdict_line);

/* Batch evaluation of every bundle of the domain with the adapter configured
 * at adapter_config_path (key=value; see AdapterConfig). Writes results.jsonl
 * and summary.tsv next to the data and returns the summary table text. */
lxp_status lxp_eval(lxp_engine* e, const char* domain,
                    const char* adapter_config_path, char** out_summary_tsv);

void lxp_free_string(char* s);

#ifdef __cplusplus
}
#endif

#endif /* LEXIPLAN_H */
