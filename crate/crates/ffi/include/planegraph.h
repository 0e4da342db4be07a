#ifndef PLANEGRAPH_H
#define PLANEGRAPH_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum PgStatus {
  PG_STATUS_OK = 0,
  PG_STATUS_NULL_POINTER = 1,
  PG_STATUS_INVALID_ARGUMENT = 2,
  PG_STATUS_IMPOSSIBLE_DEGREE = 3,
  PG_STATUS_CONSTRUCTION_FAILED = 4,
  PG_STATUS_PARSE = 5,
  PG_STATUS_VERIFICATION_FAILED = 6,
  PG_STATUS_INTERNAL = 7,
} PgStatus;

/**
 * Opaque embedding of a graph in a plane.
 */
typedef struct PgEmbedding PgEmbedding;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The caller
 * owns the returned string.
 */
char *pg_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void pg_string_free(char *s);

/**
 * A k-cycle in PG(2,q), or in AG(2,q) when `affine` is nonzero.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum PgStatus pg_cycle_new(uint64_t q, uint64_t k, int32_t affine, struct PgEmbedding **out);

/**
 * The wheel W_n in PG(2,q).
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum PgStatus pg_wheel_new(uint64_t q, uint64_t n, struct PgEmbedding **out);

/**
 * The gear G_n in PG(2,q).
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum PgStatus pg_gear_new(uint64_t q, uint64_t n, struct PgEmbedding **out);

/**
 * Parses an embedding file's contents.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` valid for writing.
 */
enum PgStatus pg_embedding_from_json(const char *json, struct PgEmbedding **out);

/**
 * Serializes an embedding; the caller frees `*out` with `pg_string_free`.
 *
 * # Safety
 * `e` must be a live handle and `out` valid for writing.
 */
enum PgStatus pg_embedding_to_json(const struct PgEmbedding *e, char **out);

/**
 * Number of graph vertices, 0 for a null handle.
 *
 * # Safety
 * `e` must be null or a live handle.
 */
size_t pg_embedding_vertex_count(const struct PgEmbedding *e);

/**
 * Point id of vertex `v`.
 *
 * # Safety
 * `e` must be a live handle and `point` valid for writing.
 */
enum PgStatus pg_embedding_vertex_point(const struct PgEmbedding *e, size_t v, uint32_t *point);

/**
 * Runs the verifier against the coordinatized plane. Returns
 * `VerificationFailed` with the violations as the error message when the
 * embedding does not pass.
 *
 * # Safety
 * `e` must be a live handle.
 */
enum PgStatus pg_embedding_verify(const struct PgEmbedding *e);

/**
 * Releases an embedding. Null is ignored.
 *
 * # Safety
 * `e` must come from this library and not be freed twice.
 */
void pg_embedding_free(struct PgEmbedding *e);

/**
 * Plane file JSON for PG(2,q), or AG(2,q) when `affine` is nonzero.
 *
 * # Safety
 * `out` must be valid for writing.
 */
enum PgStatus pg_plane_export(uint64_t q, int32_t affine, char **out);

/**
 * One Hypothesis J certificate line for q.
 *
 * # Safety
 * `out` must be valid for writing.
 */
enum PgStatus pg_hypj_certificate(uint64_t q, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PLANEGRAPH_H */
