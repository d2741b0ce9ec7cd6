/* C interface to the Galilean line group verification engine.
 *
 * All functions returning galine_status set a thread-local error message
 * retrievable with galine_last_error() on failure. Strings returned through
 * char** out-parameters are heap-allocated; release them with
 * galine_string_free().
 */
#ifndef GALINE_H
#define GALINE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct galine_scenario galine_scenario;

typedef enum {
    GALINE_OK = 0,
    GALINE_ERR_CONFIG = 1,  /* malformed scenario / bad arguments */
    GALINE_ERR_RUNTIME = 2, /* numeric abort or internal failure */
    GALINE_SUITE_FAILED = 3 /* suite ran, verdict is fail */
} galine_status;

const char* galine_last_error(void);
void galine_string_free(char* s);

/* ---- scenarios ---------------------------------------------------- */

galine_scenario* galine_scenario_parse(const char* json_text);
galine_scenario* galine_scenario_load(const char* path);
void galine_scenario_free(galine_scenario* scn);

/* derived inertial mass as "p/q" */
galine_status galine_scenario_mass(const galine_scenario* scn, char** out);
int galine_scenario_embeddable(const galine_scenario* scn);
/* returns a copy with beta[index] / gamma[index] replaced ("p/q" or "n") */
galine_scenario* galine_scenario_with_beta(const galine_scenario* scn, int index,
                                           const char* value);
galine_scenario* galine_scenario_with_gamma(const galine_scenario* scn, int index,
                                            const char* value);
galine_scenario* galine_scenario_with_classical_mass(const galine_scenario* scn, double mass);

/* ---- verification suites ------------------------------------------ */

/* comma-separated list of suite names (static storage) */
const char* galine_suite_names(void);

/* Runs one suite. *report_json receives the machine-readable report
 * (check/samples/violations/seed). Returns GALINE_SUITE_FAILED when the
 * verdict is fail; the report is still produced. */
galine_status galine_run_suite(const galine_scenario* scn, const char* suite_name,
                               uint64_t seed, int negative_control, double tol,
                               char** report_json);

/* ---- numeric runs -------------------------------------------------- */

galine_status galine_run_evolve(const galine_scenario* scn, char** csv, char** summary_json);
galine_status galine_run_classical(const galine_scenario* scn, char** csv,
                                   char** summary_json);
/* evolves both scenarios from the same packet and reports trajectory and
 * phase comparisons */
galine_status galine_run_ep_pair(const galine_scenario* a, const galine_scenario* b,
                                 char** summary_json);

/* ---- group algebra over the JSON wire format ----------------------- */

/* elements are {"a": [[...],[...],[...]], "b": "p/q"} with rational strings */
galine_status galine_group_compose(const char* g2_json, const char* g1_json, int budget,
                                   char** out_json);
galine_status galine_group_inverse(const char* g_json, int budget, char** out_json);
/* the two-cocycle of the scenario's coefficient family, printed as a
 * polynomial in t */
galine_status galine_cocycle_eval(const galine_scenario* scn, const char* g2_json,
                                  const char* g1_json, char** out_poly);
/* generator / regrouping comparison for the scenario's frame */
galine_status galine_hamiltonian_report(const galine_scenario* scn, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* GALINE_H */
