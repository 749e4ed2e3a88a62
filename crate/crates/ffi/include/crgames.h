#ifndef CRGAMES_H
#define CRGAMES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CrgObjective {
  CRG_OBJECTIVE_CAPTURE = 0,
  CRG_OBJECTIVE_TRAP = 1,
  CRG_OBJECTIVE_CONFINE = 2,
} CrgObjective;

typedef enum CrgStatus {
  CRG_STATUS_OK = 0,
  CRG_STATUS_NULL_POINTER = 1,
  CRG_STATUS_INVALID_ARGUMENT = 2,
  CRG_STATUS_GRAPH6 = 3,
  CRG_STATUS_DISCONNECTED = 4,
  /**
   * A size or state-space guard refused the request.
   */
  CRG_STATUS_RESOURCE_GUARD = 5,
  CRG_STATUS_PANIC = 6,
} CrgStatus;

typedef enum CrgVariant {
  CRG_VARIANT_ALL_ACTIVE = 0,
  CRG_VARIANT_ONE_ACTIVE = 1,
} CrgVariant;

/**
 * Opaque graph handle.
 */
typedef struct CrgGraph CrgGraph;

typedef struct CrgSolveResult {
  bool cops_win;
  /**
   * Optimal cop turns from the best placement, or -1 when the robber wins.
   */
  int32_t optimal_rounds;
} CrgSolveResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses one graph6 string.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum CrgStatus crg_graph_from_graph6(const char *text, struct CrgGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in `edges`.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` values (or may be null when
 * `edge_count` is 0) and `out` must be a valid pointer.
 */
enum CrgStatus crg_graph_from_edges(uint32_t n,
                                    const uint32_t *edges,
                                    uintptr_t edge_count,
                                    struct CrgGraph **out);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not have been freed already.
 */
void crg_graph_free(struct CrgGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uint32_t crg_graph_order(const struct CrgGraph *g);

/**
 * Writes a newly allocated graph6 string to `out`; free it with [`crg_string_free`].
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum CrgStatus crg_graph_to_graph6(const struct CrgGraph *g, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void crg_string_free(char *s);

/**
 * Solves the game with `cops` cops.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum CrgStatus crg_solve(const struct CrgGraph *g,
                         uint32_t cops,
                         enum CrgObjective objective,
                         enum CrgVariant variant,
                         struct CrgSolveResult *out);

/**
 * Cop number.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum CrgStatus crg_cop_number(const struct CrgGraph *g, uint32_t *out);

/**
 * Trapping cop number.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum CrgStatus crg_trapping_cop_number(const struct CrgGraph *g, uint32_t *out);

/**
 * Confining cop number.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum CrgStatus crg_confining_cop_number(const struct CrgGraph *g, uint32_t *out);

/**
 * Message of the last failing call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *crg_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *crg_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CRGAMES_H */
