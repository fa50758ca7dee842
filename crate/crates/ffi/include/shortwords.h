#ifndef SHORTWORDS_H
#define SHORTWORDS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SwStatus {
  SW_STATUS_OK = 0,
  SW_STATUS_NULL_POINTER = 1,
  SW_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed permutation or generator-file text.
   */
  SW_STATUS_MALFORMED = 3,
  /**
   * A precondition failed, e.g. the element is not in the group.
   */
  SW_STATUS_PRECONDITION = 4,
  /**
   * A search or enumeration limit was reached.
   */
  SW_STATUS_RESOURCE = 5,
  /**
   * The result does not fit the output type.
   */
  SW_STATUS_OVERFLOW = 6,
  /**
   * The search stopped before generating the target.
   */
  SW_STATUS_UNFINISHED = 7,
  SW_STATUS_PANIC = 8,
} SwStatus;

/**
 * A permutation group together with the named generators it was built from.
 */
typedef struct SwGroup SwGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a group from generator-file text (`degree n` followed by
 * `name = cycles` lines).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SwStatus sw_group_from_file_text(const char *text, struct SwGroup **out);

/**
 * Builds a group on `degree` points from `count` generators in cycle
 * notation.
 *
 * # Safety
 * `cycles` must point to `count` NUL-terminated strings and `out` must be a
 * valid pointer.
 */
enum SwStatus sw_group_from_cycles(size_t degree,
                                   const char *const *cycles,
                                   size_t count,
                                   struct SwGroup **out);

/**
 * Releases a group handle. Passing null is a no-op.
 *
 * # Safety
 * `group` must come from this library and not be used afterwards.
 */
void sw_group_free(struct SwGroup *group);

/**
 * Number of points the group acts on, 0 for a null handle.
 *
 * # Safety
 * `group` must be null or a live handle.
 */
size_t sw_group_degree(const struct SwGroup *group);

/**
 * Writes the group order to `out`; [`SwStatus::Overflow`] if it exceeds
 * 64 bits.
 *
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
enum SwStatus sw_group_order(const struct SwGroup *group, uint64_t *out);

/**
 * Membership test for an element in cycle notation.
 *
 * # Safety
 * `group` must be a live handle, `element` a NUL-terminated string and `out`
 * a valid pointer.
 */
enum SwStatus sw_group_contains(const struct SwGroup *group, const char *element, bool *out);

/**
 * A short word in the group's generators equal to `element`, rendered with
 * the generator names, e.g. `g1*g2^4*g1*g2^3`.
 *
 * # Safety
 * `group` must be a live handle, `element` a NUL-terminated string and
 * `out_word` a valid pointer.
 */
enum SwStatus sw_lookup_word(const struct SwGroup *group, const char *element, char **out_word);

/**
 * Short words in the generators of `group` whose values generate `target`,
 * one per line. `max_levels` bounds the word length searched (0 for no
 * bound); hitting it yields [`SwStatus::Unfinished`] together with the
 * partial list.
 *
 * # Safety
 * `group` and `target` must be live handles and `out_words` a valid pointer.
 */
enum SwStatus sw_get_short_gens(const struct SwGroup *group,
                                const struct SwGroup *target,
                                size_t max_levels,
                                char **out_words);

/**
 * Releases a string returned by this library. Passing null is a no-op.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void sw_string_free(char *s);

/**
 * Message for the last failed call on this thread, empty after a success.
 * The pointer stays valid until the next call into the library on the same
 * thread.
 */
const char *sw_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SHORTWORDS_H */
