#ifndef SURFCOH_H
#define SURFCOH_H

/* surfcoh -- exact-arithmetic verification of configuration-space
 * cohomology on closed surfaces.
 *
 * C interface to the surfcoh core.  All objects are opaque handles owned
 * by the library; every fallible call returns a surfcoh_status and leaves
 * a human-readable message retrievable via surfcoh_last_error() on
 * failure.  Handles are not thread-safe individually, but independent
 * handles may be used from different threads.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum surfcoh_status {
  SURFCOH_OK = 0,
  SURFCOH_ERROR_INVALID_ARGUMENT = 1, /* bad handle, null pointer, bad value */
  SURFCOH_ERROR_CONFIG = 2,           /* config rejected (unknown suite, caps) */
  SURFCOH_ERROR_INTERNAL = 3          /* unexpected failure inside the core */
} surfcoh_status;

/* Library version string, e.g. "0.1.0". */
const char* surfcoh_version(void);

/* Message for the most recent failing call on this thread ("" if none). */
const char* surfcoh_last_error(void);

/* ------------------------------------------------------------------ */
/* Suite configuration                                                 */
/* ------------------------------------------------------------------ */

typedef struct surfcoh_config surfcoh_config;

/* Defaults: suite "all", genus 2..3, points 2..3, samples 200, seed 1,
 * relation sign "minus", size caps enforced (genus <= 5, points <= 6). */
surfcoh_config* surfcoh_config_new(void);
void surfcoh_config_free(surfcoh_config* cfg);

/* Suite ids: cup, crossing, push, sym, isotropic, johnson, cover, all. */
surfcoh_status surfcoh_config_set_suite(surfcoh_config* cfg, const char* suite);
surfcoh_status surfcoh_config_set_genus_range(surfcoh_config* cfg, int lo, int hi);
surfcoh_status surfcoh_config_set_points_range(surfcoh_config* cfg, int lo, int hi);
surfcoh_status surfcoh_config_set_samples(surfcoh_config* cfg, int samples);
surfcoh_status surfcoh_config_set_seed(surfcoh_config* cfg, uint64_t seed);
/* "minus" or "plus": sign convention for the tensor part of the
 * cup-product relations. */
surfcoh_status surfcoh_config_set_relation_sign(surfcoh_config* cfg, const char* sign);
/* Nonzero lifts the desk-scale caps on genus/points ranges. */
surfcoh_status surfcoh_config_set_allow_large(surfcoh_config* cfg, int allow);

/* ------------------------------------------------------------------ */
/* Running suites and reading reports                                  */
/* ------------------------------------------------------------------ */

typedef struct surfcoh_report surfcoh_report;

/* Runs the configured suite.  Deterministic: identical configs produce
 * identical reports, byte for byte in JSON form. */
surfcoh_status surfcoh_run(const surfcoh_config* cfg, surfcoh_report** out);
void surfcoh_report_free(surfcoh_report* report);

int surfcoh_report_passed(const surfcoh_report* report); /* 1 iff every check passed */
size_t surfcoh_report_check_count(const surfcoh_report* report);
size_t surfcoh_report_failure_count(const surfcoh_report* report);

/* Rendered report.  The returned string is owned by the report handle
 * and valid until surfcoh_report_free. */
const char* surfcoh_report_json(surfcoh_report* report);
const char* surfcoh_report_text(surfcoh_report* report);

/* ------------------------------------------------------------------ */
/* Rank table                                                          */
/* ------------------------------------------------------------------ */

/* Tabulates the computed rank of the degree-two cup-product image next
 * to its closed form C(n,2)(2g)^2 + n - C(n,2) over the given ranges.
 * *out receives a malloc'd string; release with surfcoh_string_free. */
surfcoh_status surfcoh_rank_table(int g_lo, int g_hi, int n_lo, int n_hi,
                                  int as_json, int allow_large, char** out);
void surfcoh_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Direct scalar entry points                                          */
/* ------------------------------------------------------------------ */

/* Rank of the cup-product image in degree two for (genus, points),
 * computed from the relation matrix (not from the closed form). */
surfcoh_status surfcoh_image_rank(int genus, int points, int allow_large,
                                  long long* out_rank);

/* Genus of a connected degree-`sheets` cover of a genus-`genus` surface:
 * sheets*(genus-1) + 1. */
surfcoh_status surfcoh_cover_genus(int genus, int sheets, long long* out_genus);

/* Whether some element of the Johnson image sends b_1 to a_1^a_2 modulo
 * the symplectic class; *out_hits receives 0 or 1. */
surfcoh_status surfcoh_tau_hits_basic(int genus, int* out_hits);

#ifdef __cplusplus
}
#endif

#endif /* SURFCOH_H */
