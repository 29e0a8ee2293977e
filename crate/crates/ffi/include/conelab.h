#ifndef CONELAB_H
#define CONELAB_H

#pragma once

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum ConelabStatus {
  CONELAB_STATUS_OK = 0,
  /**
   * The checked property fails; a witness is available.
   */
  CONELAB_STATUS_VIOLATION = 1,
  CONELAB_STATUS_NULL_POINTER = 2,
  CONELAB_STATUS_INVALID_UTF8 = 3,
  CONELAB_STATUS_PARSE = 4,
  CONELAB_STATUS_DIMENSION_MISMATCH = 5,
  CONELAB_STATUS_INVALID_ARGUMENT = 6,
  CONELAB_STATUS_NOT_A_LATTICE = 7,
  CONELAB_STATUS_PANIC = 8,
} ConelabStatus;

/**
 * Opaque polyhedral cone.
 */
typedef struct ConelabCone ConelabCone;

/**
 * Opaque finite ortholattice.
 */
typedef struct ConelabLattice ConelabLattice;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *conelab_last_error(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void conelab_string_free(char *s);

/**
 * Parse a cone from JSON (`dim` plus `generators`, `halfspaces` or `al`).
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum ConelabStatus conelab_cone_from_json(const char *json, struct ConelabCone **out);

/**
 * Cone generated by `count` integer vectors stored row by row in `coords`.
 *
 * # Safety
 * `coords` must point to `dim * count` readable values and `out` must be valid.
 */
enum ConelabStatus conelab_cone_from_generators(uintptr_t dim,
                                                const int64_t *coords,
                                                uintptr_t count,
                                                struct ConelabCone **out);

/**
 * # Safety
 * `c` must come from this library and not have been freed.
 */
void conelab_cone_free(struct ConelabCone *c);

/**
 * # Safety
 * `c` must be a live cone handle.
 */
uintptr_t conelab_cone_dim(const struct ConelabCone *c);

/**
 * # Safety
 * `c` must be a live cone handle and `out` valid.
 */
enum ConelabStatus conelab_cone_polar(const struct ConelabCone *c, struct ConelabCone **out);

/**
 * # Safety
 * `a` and `b` must be live cone handles and `out` valid.
 */
enum ConelabStatus conelab_cone_meet(const struct ConelabCone *a,
                                     const struct ConelabCone *b,
                                     struct ConelabCone **out);

/**
 * # Safety
 * `a` and `b` must be live cone handles and `out` valid.
 */
enum ConelabStatus conelab_cone_join(const struct ConelabCone *a,
                                     const struct ConelabCone *b,
                                     struct ConelabCone **out);

/**
 * Writes whether `a` is contained in `b`.
 *
 * # Safety
 * `a` and `b` must be live cone handles and `out` valid.
 */
enum ConelabStatus conelab_cone_leq(const struct ConelabCone *a,
                                    const struct ConelabCone *b,
                                    bool *out);

/**
 * Canonical JSON of a cone; free with [`conelab_string_free`].
 *
 * # Safety
 * `c` must be a live cone handle.
 */
char *conelab_cone_to_json(const struct ConelabCone *c);

/**
 * Load a catalogue lattice such as `O6`, `MC8` or `boolean(3)`.
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` valid.
 */
enum ConelabStatus conelab_lattice_catalogue(const char *name, struct ConelabLattice **out);

/**
 * Parse and validate a lattice from JSON.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` valid.
 */
enum ConelabStatus conelab_lattice_from_json(const char *json, struct ConelabLattice **out);

/**
 * # Safety
 * `l` must come from this library and not have been freed.
 */
void conelab_lattice_free(struct ConelabLattice *l);

/**
 * # Safety
 * `l` must be a live lattice handle.
 */
uintptr_t conelab_lattice_size(const struct ConelabLattice *l);

/**
 * Check a law over every tuple of the lattice. Returns
 * [`ConelabStatus::Violation`] when it fails; if `witness` is non-null it
 * then receives the witness as JSON (free with [`conelab_string_free`]).
 *
 * # Safety
 * `l` must be a live lattice handle, `law` a nul-terminated string and
 * `witness` null or valid.
 */
enum ConelabStatus conelab_lattice_check_law(const struct ConelabLattice *l,
                                             const char *law,
                                             char **witness);

/**
 * Verify a named fixture: `Ok` when every claim holds, `Violation` otherwise.
 *
 * # Safety
 * `name` must be a nul-terminated string.
 */
enum ConelabStatus conelab_fixture_verify(const char *name);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CONELAB_H */
