#ifndef PHICOVER_H
#define PHICOVER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define PC_PHI_HULL 0

#define PC_PHI_BOX 1

#define PC_PHI_MINCIRCLE 2

#define PC_ALGO_FAST 0

#define PC_ALGO_NAIVE 1

#define PC_KIND_STRIPS 0

#define PC_KIND_COMBS 1

#define PC_KIND_NESTED 2

#define PC_KIND_MINCIRCLE_GADGET 3

typedef enum PcStatus {
  PC_STATUS_OK = 0,
  PC_STATUS_NULL_ARGUMENT = 1,
  PC_STATUS_INVALID_UTF8 = 2,
  PC_STATUS_PARSE = 3,
  /**
   * The instance breaks a validation rule.
   */
  PC_STATUS_INVALID = 4,
  /**
   * Unknown constant, or no fast engine for the requested function.
   */
  PC_STATUS_UNSUPPORTED = 5,
  PC_STATUS_OUT_OF_RANGE = 6,
  /**
   * A bug inside the library; the message has the panic text.
   */
  PC_STATUS_INTERNAL = 7,
} PcStatus;

/**
 * A computed cover.
 */
typedef struct PcCover PcCover;

/**
 * A forest of trees.
 */
typedef struct PcInstance PcInstance;

typedef struct PcHullStats {
  size_t rays_shot;
  size_t merges;
  size_t initial_edges;
} PcHullStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or an empty string.
 * Valid until the next call into this library from the same thread.
 */
const char *pc_last_error(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed; null is ignored.
 */
void pc_string_free(char *s);

/**
 * Parses instance JSON. Does not validate.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` a writable pointer.
 */
enum PcStatus pc_instance_from_json(const char *json, struct PcInstance **out);

/**
 * Generates a family instance; `kind` is one of the `PC_KIND_*` constants.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum PcStatus pc_instance_generate(uint32_t kind,
                                   size_t trees,
                                   size_t size,
                                   uint64_t seed,
                                   struct PcInstance **out);

/**
 * # Safety
 * `instance` must be a live handle; `out` a writable pointer.
 */
enum PcStatus pc_instance_to_json(const struct PcInstance *instance, char **out);

/**
 * # Safety
 * `instance` must come from this library and not have been freed; null
 * is ignored.
 */
void pc_instance_free(struct PcInstance *instance);

/**
 * Number of trees; 0 for null.
 *
 * # Safety
 * `instance` must be null or a live handle.
 */
size_t pc_instance_tree_count(const struct PcInstance *instance);

/**
 * Number of vertices; 0 for null.
 *
 * # Safety
 * `instance` must be null or a live handle.
 */
size_t pc_instance_vertex_count(const struct PcInstance *instance);

/**
 * `PC_STATUS_OK` for a valid forest, `PC_STATUS_INVALID` with one
 * violation per line of the error message otherwise.
 *
 * # Safety
 * `instance` must be a live handle.
 */
enum PcStatus pc_instance_validate(const struct PcInstance *instance);

/**
 * Validates the instance and computes its cover. `algo` is
 * `PC_ALGO_FAST` (hull or box only) or `PC_ALGO_NAIVE`, which merges in
 * a random order drawn from `seed`.
 *
 * # Safety
 * `instance` must be a live handle; `out` a writable pointer.
 */
enum PcStatus pc_cover_compute(const struct PcInstance *instance,
                               uint32_t phi,
                               uint32_t algo,
                               uint64_t seed,
                               struct PcCover **out);

/**
 * Counters of the fast hull engine on a valid instance.
 *
 * # Safety
 * `instance` must be a live handle; `out` a writable pointer.
 */
enum PcStatus pc_hull_stats(const struct PcInstance *instance, struct PcHullStats *out);

/**
 * Number of regions; 0 for null.
 *
 * # Safety
 * `cover` must be null or a live handle.
 */
size_t pc_cover_region_count(const struct PcCover *cover);

/**
 * Index of the region holding tree `tree`.
 *
 * # Safety
 * `cover` must be a live handle; `out` a writable pointer.
 */
enum PcStatus pc_cover_region_of(const struct PcCover *cover, size_t tree, size_t *out);

/**
 * # Safety
 * `cover` must be a live handle; `out` a writable pointer.
 */
enum PcStatus pc_cover_to_json(const struct PcCover *cover, char **out);

/**
 * # Safety
 * `cover` must come from this library and not have been freed; null is
 * ignored.
 */
void pc_cover_free(struct PcCover *cover);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PHICOVER_H */
