#ifndef NAMEMATCH_H
#define NAMEMATCH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum NmStatus {
  NM_STATUS_OK = 0,
  NM_STATUS_INVALID_ARGUMENT = 1,
  /**
   * A name has no words to match.
   */
  NM_STATUS_EMPTY_RESULT = 2,
  /**
   * Names not set yet.
   */
  NM_STATUS_STATE = 3,
  NM_STATUS_IO = 4,
  NM_STATUS_INTERNAL = 5,
  NM_STATUS_NULL_POINTER = 6,
  NM_STATUS_INVALID_UTF8 = 7,
  NM_STATUS_PANIC = 8,
} NmStatus;

typedef enum NmNumbers {
  NM_NUMBERS_SEPARATE_WORD = 0,
  NM_NUMBERS_IGNORE = 1,
  NM_NUMBERS_LEAVE = 2,
} NmNumbers;

typedef enum NmMethod {
  NM_METHOD_ORDERED = 0,
  NM_METHOD_UNORDERED = 1,
  NM_METHOD_UNEDIT = 2,
  NM_METHOD_ORDERED_WORDS = 3,
  NM_METHOD_UNORDERED_WORDS = 4,
  NM_METHOD_ORDERED_SEMANTIC = 5,
  NM_METHOD_UNORDERED_SEMANTIC = 6,
} NmMethod;

typedef enum NmBaseline {
  NM_BASELINE_LCS = 0,
  NM_BASELINE_LEVENSHTEIN = 1,
  NM_BASELINE_DAMERAU = 2,
  NM_BASELINE_NORMALIZED_LEVENSHTEIN = 3,
  NM_BASELINE_GESTALT = 4,
} NmBaseline;

/**
 * Opaque comparer handle.
 */
typedef struct NmComparer NmComparer;

/**
 * Matching parameters; start from [`nm_params_default`].
 */
typedef struct NmParams {
  size_t min_len;
  bool continuity_heavy_weight;
  double min_word_match_degree;
  bool prefer_num_of_letters;
  bool ignore_stop_words;
} NmParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Default parameters: `min_len` 2, threshold 2/3, everything else off.
 */
struct NmParams nm_params_default(void);

/**
 * Library version, a static string.
 */
const char *nm_version(void);

/**
 * Message for the last failed call on this thread, or NULL. Valid until the
 * next call into the library on the same thread.
 */
const char *nm_last_error(void);

struct NmComparer *nm_comparer_new(void);

/**
 * # Safety
 * `c` must come from [`nm_comparer_new`] and not be used afterwards. NULL is
 * ignored.
 */
void nm_comparer_free(struct NmComparer *c);

/**
 * # Safety
 * `c` must be a live handle; names must be NUL-terminated strings.
 */
enum NmStatus nm_set_names(struct NmComparer *c, const char *name_1, const char *name_2);

/**
 * # Safety
 * As [`nm_set_names`].
 */
enum NmStatus nm_set_name_1(struct NmComparer *c, const char *name);

/**
 * # Safety
 * As [`nm_set_names`].
 */
enum NmStatus nm_set_name_2(struct NmComparer *c, const char *name);

/**
 * # Safety
 * `c` must be a live handle.
 */
enum NmStatus nm_set_case_sensitivity(struct NmComparer *c, bool case_sensitive);

/**
 * Every character of `separators` becomes a word separator.
 *
 * # Safety
 * `c` must be a live handle; `separators` a NUL-terminated string.
 */
enum NmStatus nm_set_word_separators(struct NmComparer *c, const char *separators);

/**
 * # Safety
 * `c` must be a live handle.
 */
enum NmStatus nm_set_support_camel_case(struct NmComparer *c, bool enabled);

/**
 * # Safety
 * `c` must be a live handle.
 */
enum NmStatus nm_set_numbers_behavior(struct NmComparer *c, enum NmNumbers behavior);

/**
 * # Safety
 * `c` must be a live handle; `words` must point to `count` NUL-terminated
 * strings.
 */
enum NmStatus nm_set_stop_words(struct NmComparer *c, const char *const *words, size_t count);

/**
 * Loads semantic data for the semantic methods. A NULL path falls back to
 * the data directory environment variable, then to the bundled data.
 *
 * # Safety
 * `c` must be a live handle; paths NULL or NUL-terminated strings.
 */
enum NmStatus nm_load_semantic_data(struct NmComparer *c,
                                    const char *thesaurus_path,
                                    const char *plural_exceptions_path);

/**
 * Compares the two names; the ratio is written to `out_ratio`. `params` may
 * be NULL for defaults.
 *
 * # Safety
 * `c` must be a live handle; `params` NULL or valid; `out_ratio` valid.
 */
enum NmStatus nm_compare(const struct NmComparer *c,
                         enum NmMethod method,
                         const struct NmParams *params,
                         double *out_ratio);

/**
 * Like [`nm_compare`] but writes the full result as a JSON document.
 *
 * # Safety
 * As [`nm_compare`]; free the string with [`nm_string_free`].
 */
enum NmStatus nm_compare_json(const struct NmComparer *c,
                              enum NmMethod method,
                              const struct NmParams *params,
                              char **out_json);

/**
 * Classic measure on the normalized names.
 *
 * # Safety
 * `c` must be a live handle; `out_score` valid.
 */
enum NmStatus nm_baseline(const struct NmComparer *c, enum NmBaseline method, double *out_score);

/**
 * Normalized form of name 1 or 2 (`which`).
 *
 * # Safety
 * `c` must be a live handle; free the string with [`nm_string_free`].
 */
enum NmStatus nm_normalized_name(const struct NmComparer *c, uint32_t which, char **out);

/**
 * Words of name 1 or 2 (`which`) as a JSON array of strings.
 *
 * # Safety
 * As [`nm_normalized_name`].
 */
enum NmStatus nm_words_json(const struct NmComparer *c, uint32_t which, char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards. NULL is
 * ignored.
 */
void nm_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NAMEMATCH_H */
