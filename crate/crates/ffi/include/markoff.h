#ifndef MARKOFF_H
#define MARKOFF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result code of every fallible call.
 */
typedef enum MkStatus {
  MK_STATUS_OK = 0,
  /*
   A required pointer argument was NULL.
   */
  MK_STATUS_NULL_POINTER = 1,
  /*
   Text argument could not be parsed (bad UTF-8, bad word, bad integer).
   */
  MK_STATUS_INVALID_ARGUMENT = 2,
  /*
   Input parsed but lies outside the operation's domain, e.g. a
   non-coprime slope, an improper word, or a non-Markoff triple.
   */
  MK_STATUS_DOMAIN_ERROR = 3,
  /*
   An internal consistency check failed.
   */
  MK_STATUS_INVARIANT_VIOLATION = 4,
  /*
   A Rust panic was caught at the boundary.
   */
  MK_STATUS_PANIC = 5,
} MkStatus;

typedef enum MkRenderFormat {
  MK_RENDER_FORMAT_ASCII = 0,
  MK_RENDER_FORMAT_SVG = 1,
} MkRenderFormat;

/*
 Opaque sorted Markoff triple.
 */
typedef struct MkTriple MkTriple;

/*
 Opaque word over {x, y}.
 */
typedef struct MkWord MkWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the most recent failure on this thread, or "" after a
 success. The pointer stays valid until the next `mk_*` call on the same
 thread; do not free it.
 */
const char *mk_last_error(void);

/*
 # Safety
 `s` must be NULL or a string returned by this library and not yet freed.
 */
void mk_string_free(char *s);

/*
 Parses a word from lowercase text over {x, y}.

 # Safety
 `text` must be a valid NUL-terminated string; `out` must be writable.
 */
enum MkStatus mk_word_parse(const char *text, struct MkWord **out);

/*
 The Christoffel word with `p` x's and `q` y's (slope q/p).

 # Safety
 `out` must be writable.
 */
enum MkStatus mk_word_christoffel(uint64_t p, uint64_t q, struct MkWord **out);

/*
 # Safety
 `word` must be NULL or a handle from this library not yet freed.
 */
void mk_word_free(struct MkWord *word);

/*
 Number of letters; 0 for NULL.

 # Safety
 `word` must be NULL or a live handle.
 */
size_t mk_word_len(const struct MkWord *word);

/*
 # Safety
 `word` must be a live handle; `out` must be writable. Free the result
 with `mk_string_free`.
 */
enum MkStatus mk_word_to_string(const struct MkWord *word, char **out);

/*
 True when `word` is a Christoffel word; its letter counts are then
 stored through `p` and `q` when those are non-NULL.

 # Safety
 `word` must be NULL or a live handle; `p`/`q` NULL or writable.
 */
bool mk_word_is_christoffel(const struct MkWord *word, uint64_t *p, uint64_t *q);

/*
 Standard factorization of a proper Christoffel word into two new handles.

 # Safety
 `word` must be a live handle; `out_w1`, `out_w2` must be writable.
 */
enum MkStatus mk_word_factor(const struct MkWord *word,
                             struct MkWord **out_w1,
                             struct MkWord **out_w2);

/*
 # Safety
 `word` must be a live handle; `out` must be writable.
 */
enum MkStatus mk_word_render(const struct MkWord *word, enum MkRenderFormat format, char **out);

/*
 μ(word) in the text form `[[e11,e12],[e21,e22]]`.

 # Safety
 `word` must be a live handle; `out` must be writable.
 */
enum MkStatus mk_word_mu(const struct MkWord *word, char **out);

/*
 ⅓Tr(μ(word)) as a decimal string. Non-Christoffel words usually fail
 with `MK_STATUS_INVARIANT_VIOLATION`.

 # Safety
 `word` must be a live handle; `out` must be writable.
 */
enum MkStatus mk_word_markoff_number(const struct MkWord *word, char **out);

/*
 Builds a triple from three decimal strings in any order.

 # Safety
 `a`, `b`, `c` must be valid NUL-terminated strings; `out` writable.
 */
enum MkStatus mk_triple_new(const char *a, const char *b, const char *c, struct MkTriple **out);

/*
 Triple of a proper Christoffel word (the word is factorized internally).

 # Safety
 `word` must be a live handle; `out` must be writable.
 */
enum MkStatus mk_triple_of_word(const struct MkWord *word, struct MkTriple **out);

/*
 The Christoffel word realizing a proper triple.

 # Safety
 `triple` must be a live handle; `out` must be writable.
 */
enum MkStatus mk_triple_word(const struct MkTriple *triple, struct MkWord **out);

/*
 # Safety
 `triple` must be a live handle; `out` must be writable.
 */
enum MkStatus mk_triple_flip_max(const struct MkTriple *triple, struct MkTriple **out);

/*
 Entry `index` (0, 1 or 2, ascending) as a decimal string.

 # Safety
 `triple` must be a live handle; `out` must be writable.
 */
enum MkStatus mk_triple_component(const struct MkTriple *triple, size_t index, char **out);

/*
 `(a, b, c)`

 # Safety
 `triple` must be a live handle; `out` must be writable.
 */
enum MkStatus mk_triple_to_string(const struct MkTriple *triple, char **out);

/*
 False for NULL.

 # Safety
 `triple` must be NULL or a live handle.
 */
bool mk_triple_is_proper(const struct MkTriple *triple);

/*
 # Safety
 `triple` must be NULL or a handle from this library not yet freed.
 */
void mk_triple_free(struct MkTriple *triple);

/*
 All Markoff triples with maximum ≤ `bound`, as a JSON array of
 three-string arrays.

 # Safety
 `bound` must be a valid NUL-terminated string; `out` writable.
 */
enum MkStatus mk_markoff_tree_json(const char *bound, char **out);

/*
 Collision report for the Christoffel tree down to `depth`, as JSON
 `{bound, words_checked, distinct_numbers, collisions}`.

 # Safety
 `out` must be writable.
 */
enum MkStatus mk_injectivity_scan_json(uint32_t depth, char **out);

/*
 # Safety
 `bound` must be a valid NUL-terminated string; `out` writable.
 */
enum MkStatus mk_cross_check(const char *bound, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MARKOFF_H */
