/* SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the superstring library.  All functions are
 * thread-compatible; error messages are thread-local.  Every char* returned
 * through an out-parameter is heap-allocated and must be released with
 * ssp_string_free; pointers returned directly (text, word, algorithm) stay
 * owned by their handle.
 */
#ifndef SSP_CAPI_H
#define SSP_CAPI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ssp_instance ssp_instance;
typedef struct ssp_solution ssp_solution;

typedef enum {
    SSP_OK = 0,
    SSP_ERR_INVALID = 1,   /* bad arguments, unknown names, parse errors */
    SSP_ERR_TOO_LARGE = 2, /* instance beyond the exact-solver node cap */
    SSP_ERR_BUDGET = 3,    /* exact solver exceeded its time budget */
    SSP_ERR_IO = 4,        /* file system failure */
    SSP_ERR_INTERNAL = 5   /* violated internal invariant */
} ssp_status;

const char* ssp_version(void);
/* Message describing this thread's most recent failure ("" if none). */
const char* ssp_last_error(void);
void ssp_string_free(char* s);

/* -- instances ---------------------------------------------------------- */

/* One word per line, printable ASCII; the list is substring-free reduced. */
ssp_status ssp_instance_from_file(const char* path, ssp_instance** out);
ssp_status ssp_instance_from_words(const char* const* words, int count,
                                   ssp_instance** out);
/* genspec_json: {"family","m","len_lo","len_hi","alphabet","k","seed"} */
ssp_status ssp_instance_generate(const char* genspec_json, ssp_instance** out);
ssp_status ssp_instance_save(const ssp_instance* inst, const char* path);
void ssp_instance_free(ssp_instance* inst);

int ssp_instance_size(const ssp_instance* inst);
long long ssp_instance_total_length(const ssp_instance* inst);
/* Borrowed pointer, NULL when idx is out of range. */
const char* ssp_instance_word(const ssp_instance* inst, int idx);
ssp_status ssp_instance_fingerprint(const ssp_instance* inst, char** out);

/* -- solving ------------------------------------------------------------ */

/* algo: greedy | mgreedy | tgreedy | pipeline-greedy | pipeline-exact |
 * exact.  max_nodes_dp and time_budget_seconds bound the exact solvers;
 * values <= 0 select the defaults. */
ssp_status ssp_solve(const ssp_instance* inst, const char* algo,
                     int max_nodes_dp, double time_budget_seconds,
                     ssp_solution** out);
void ssp_solution_free(ssp_solution* sol);
const char* ssp_solution_text(const ssp_solution* sol);
long long ssp_solution_length(const ssp_solution* sol);
const char* ssp_solution_algorithm(const ssp_solution* sol);
/* Borrow the node order; returns its length, or -1 on NULL input. */
int ssp_solution_order(const ssp_solution* sol, const int** out);

/* -- verification ------------------------------------------------------- */

/* suite: main-bound | first-bound | second-bound | culprits | lemmas |
 * transform | all.  Runs `count` instances generated from genspec_json with
 * seeds seed, seed+1, ...; writes the full JSON report document and the
 * number of failed checks. */
ssp_status ssp_verify_generated(const char* genspec_json, int count,
                                const char* suite, int max_nodes_dp,
                                double time_budget_seconds, char** json_doc,
                                long long* failures);
/* Same over one instance file. */
ssp_status ssp_verify_file(const char* path, const char* suite,
                           int max_nodes_dp, double time_budget_seconds,
                           char** json_doc, long long* failures);

/* Re-derives every recomputable verdict of a stored report from its integer
 * payload; writes a human-readable table, the mismatch count, and the
 * stored-failure count. */
ssp_status ssp_recheck_report(const char* json_text, char** table,
                              long long* mismatches, long long* failures);

#ifdef __cplusplus
}
#endif

#endif /* SSP_CAPI_H */
