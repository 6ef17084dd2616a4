#ifndef PROCHOOSE_H
#define PROCHOOSE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result code of every fallible call.
 */
typedef enum PcStatus {
  PC_STATUS_OK = 0,
  PC_STATUS_NULL_POINTER = 1,
  PC_STATUS_INVALID_UTF8 = 2,
  PC_STATUS_PARSE_ERROR = 3,
  PC_STATUS_INVALID_ARGUMENT = 4,
  PC_STATUS_PANIC = 5,
} PcStatus;

/*
 Outcome of a decision. Numbering matches the CLI exit codes.
 */
typedef enum PcVerdictStatus {
  PC_VERDICT_STATUS_CHOOSABLE = 0,
  PC_VERDICT_STATUS_NOT_CHOOSABLE = 1,
  PC_VERDICT_STATUS_UNKNOWN = 2,
} PcVerdictStatus;

/*
 Values accepted by the `mode` argument of [`pc_decide`].
 */
typedef enum PcMode {
  PC_MODE_LIST = 0,
  PC_MODE_EQUITABLE_LIST = 1,
  PC_MODE_PROPORTIONAL = 2,
} PcMode;

/*
 Opaque graph handle.
 */
typedef struct PcGraph PcGraph;

/*
 Opaque verdict handle; remembers the instance it was computed for.
 */
typedef struct PcVerdict PcVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the most recent failure on this thread, or NULL. Valid until
 the next failing call on the same thread.
 */
const char *pc_last_error(void);

/*
 Library version as a static NUL-terminated string.
 */
const char *pc_version(void);

/*
 Parses the text graph format ("n m" header, then "u v" lines).

 # Safety
 `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum PcStatus pc_graph_parse(const char *text, struct PcGraph **out);

/*
 Decodes a graph6 string.

 # Safety
 `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum PcStatus pc_graph_from_graph6(const char *text, struct PcGraph **out);

/*
 Builds a graph from `edge_count` pairs stored flat in `edges`
 (`u0, v0, u1, v1, ...`).

 # Safety
 `edges` must point to `2 * edge_count` readable values (it may be NULL
 when `edge_count` is 0) and `out` must be writable.
 */
enum PcStatus pc_graph_from_edges(size_t vertex_count,
                                  const uint32_t *edges,
                                  size_t edge_count,
                                  struct PcGraph **out);

/*
 # Safety
 `g` must be a live handle from this library, or NULL.
 */
size_t pc_graph_vertex_count(const struct PcGraph *g);

/*
 # Safety
 `g` must be a live handle from this library, or NULL.
 */
size_t pc_graph_edge_count(const struct PcGraph *g);

/*
 # Safety
 `g` must be a handle from this library not yet freed, or NULL.
 */
void pc_graph_free(struct PcGraph *g);

/*
 Decides whether `g` is k-choosable in the given [`PcMode`]. A `budget`
 of 0 means unlimited; `threads` of 0 is treated as 1.

 # Safety
 `g` must be a live graph handle and `out` writable.
 */
enum PcStatus pc_decide(const struct PcGraph *g,
                        uint32_t k,
                        uint32_t mode,
                        uint64_t budget,
                        uint32_t threads,
                        struct PcVerdict **out);

/*
 # Safety
 `v` must be a live verdict handle.
 */
enum PcVerdictStatus pc_verdict_status(const struct PcVerdict *v);

/*
 # Safety
 `v` must be a live verdict handle, or NULL.
 */
uint64_t pc_verdict_assignments_checked(const struct PcVerdict *v);

/*
 Color `index` (0-based, ascending) of the witness list at `vertex`, or 0
 when there is no witness or the position is out of range. Colors
 themselves start at 1.

 # Safety
 `v` must be a live verdict handle, or NULL.
 */
uint32_t pc_verdict_witness_color(const struct PcVerdict *v, size_t vertex, size_t index);

/*
 The verdict as a JSON document. Free with [`pc_string_free`].

 # Safety
 `v` must be a live verdict handle, or NULL.
 */
char *pc_verdict_to_json(const struct PcVerdict *v);

/*
 Certificate JSON for a refutation, or NULL for any other status. Free
 with [`pc_string_free`].

 # Safety
 `v` must be a live verdict handle, or NULL.
 */
char *pc_verdict_certificate_json(const struct PcVerdict *v);

/*
 # Safety
 `v` must be a handle from this library not yet freed, or NULL.
 */
void pc_verdict_free(struct PcVerdict *v);

/*
 Independently re-checks a certificate. `*valid` is set to whether the
 certificate holds; malformed JSON is a [`PcStatus::ParseError`].

 # Safety
 `json` must be a NUL-terminated string and `valid` writable.
 */
enum PcStatus pc_certificate_verify(const char *json, bool *valid);

/*
 Proportional choice number. `k_max` of 0 uses the default cap. On return
 `*lower` holds the best lower bound and `*exact` the exact value, or 0 if
 it was not settled within the cap.

 # Safety
 `g` must be a live graph handle; `lower` and `exact` writable.
 */
enum PcStatus pc_chi_pc(const struct PcGraph *g,
                        uint32_t k_max,
                        uint32_t threads,
                        uint32_t *lower,
                        uint32_t *exact);

/*
 # Safety
 `s` must be a string returned by this library not yet freed, or NULL.
 */
void pc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PROCHOOSE_H */
