#ifndef DIATOMIC_H
#define DIATOMIC_H

/*
 * C interface to the diatomic library: exact sequences (Stern's diatomic
 * sequence and its Fibonacci-flavoured analogues), bijections, singular
 * function samplers, verification suites, and conjecture sweeps.
 *
 * All functions that can fail return dt_status and record a message
 * retrievable with dt_last_error(ctx).  Strings handed back through char**
 * parameters are heap-allocated; release them with dt_string_free.
 * A context is not thread-safe; use one context per thread.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dt_ctx dt_ctx;

typedef enum dt_status {
    DT_OK = 0,
    DT_ERR_DOMAIN = 1,      /* argument outside a mathematical domain        */
    DT_ERR_INVALID_ARG = 2, /* unknown name, malformed number, null pointer  */
    DT_ERR_RANGE = 3,       /* request exceeds a supported bound             */
    DT_ERR_IO = 4,          /* file could not be read or written             */
    DT_ERR_INTERNAL = 5     /* invariant violation inside the library        */
} dt_status;

/* Library version "major.minor.patch"; static storage, do not free. */
const char* dt_version(void);

dt_ctx* dt_ctx_new(void);
void dt_ctx_free(dt_ctx* ctx);

/* Message from the most recent failing call on this context.  Owned by the
 * context; valid until the next failing call or dt_ctx_free. */
const char* dt_last_error(const dt_ctx* ctx);

/* Release a string returned through a char** out parameter. */
void dt_string_free(char* s);

/* --------------------------------------------------------------- sequences */

/* One term of "stern" (n >= 0), "b" (n >= 1), "r" (n >= 0), "sf" (n >= 0) or
 * "c" (n >= 0) as decimal text. */
dt_status dt_seq_term(dt_ctx* ctx, const char* seq, uint64_t n, char** out);

/* Inclusive listing of a sequence range.  format: "csv" (header n,value, LF
 * line endings) or "json" (object with schema_version and decimal strings).
 * Ranges are capped per sequence ("c" at 10^4, the rest at 10^7). */
dt_status dt_seq_write(dt_ctx* ctx, const char* seq, uint64_t from, uint64_t to,
                       const char* format, char** out);

/* ------------------------------------------------------------- bijections */

/* kind "stern": coprime pair (left,right) of positive integers -> index of
 * the unique n with (a(n), a(n+1)) = (left, right).
 * kind "oplus": pair with 4*left*right + 1 a perfect square -> index n with
 * (b(n), b(n+1)) = (left, right).
 * Numbers cross the boundary as decimal strings of arbitrary size. */
dt_status dt_bijection_to_index(dt_ctx* ctx, const char* kind, const char* left,
                                const char* right, char** out);

/* Inverse direction: index (decimal string, >= 1) -> "left right". */
dt_status dt_bijection_to_pair(dt_ctx* ctx, const char* kind, const char* index,
                               char** out);

/* ------------------------------------------------------------------ plots */

/* Samples of a singular function or the merged-word graph.
 * target "f", "qm", "g": dyadic grid of the given depth; format "csv"/"json".
 * target "Q": x = k/F(depth), 0 <= k < F(depth-1); format "csv"/"json".
 * target "graph": format "svg" or "json"; labels annotates SVG vertices. */
dt_status dt_plot_write(dt_ctx* ctx, const char* target, unsigned depth,
                        const char* format, int labels, char** out);

/* ----------------------------------------------------------- verification */

/* Newline-separated names of every registered verification suite. */
dt_status dt_verify_names(dt_ctx* ctx, char** out);

/* Run one suite.  bound 0 = suite default; jobs 0 = 1; seed 0 = 1.
 * format "text" (default when NULL) or "json".  On DT_OK, *failures holds
 * the number of failing instances (0 = suite passed) and *report the
 * formatted result including the first counterexamples. */
dt_status dt_verify_run(dt_ctx* ctx, const char* suite, uint64_t bound,
                        unsigned jobs, uint64_t seed, const char* format,
                        char** report, uint64_t* failures);

/* ------------------------------------------------------------ conjectures */

/* Sweep the four reported conjectures up to the bound.  format "text" or
 * "json".  *violations receives the total number of violating instances. */
dt_status dt_conjectures(dt_ctx* ctx, uint64_t bound, unsigned jobs,
                         const char* format, char** out, uint64_t* violations);

/* ------------------------------------------------------------------ cache */

/* Persisted memo tables (length-prefixed binary, versioned header). */
dt_status dt_cache_save(dt_ctx* ctx, const char* path);
dt_status dt_cache_load(dt_ctx* ctx, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* DIATOMIC_H */
