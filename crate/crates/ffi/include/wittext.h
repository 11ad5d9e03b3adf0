#ifndef WITTEXT_H
#define WITTEXT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Error codes returned by every entry point.
 */
typedef enum WxStatus {
  WX_STATUS_OK = 0,
  WX_STATUS_NULL_ARGUMENT = 1,
  WX_STATUS_INVALID_UTF8 = 2,
  WX_STATUS_PARSE = 3,
  WX_STATUS_DEGENERATE = 4,
  WX_STATUS_WINDOW = 5,
  WX_STATUS_MISMATCH = 6,
  WX_STATUS_GLUE = 7,
  WX_STATUS_INTERNAL = 8,
} WxStatus;

/**
 * Opaque handle to a Witt or Virasoro action.
 */
typedef struct WxAction WxAction;

/**
 * Opaque handle to a truncated weight module.
 */
typedef struct WxModule WxModule;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *wx_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be NULL or a pointer obtained from this library, not yet freed.
 */
void wx_string_free(char *s);

/**
 * Builds the dense module with the given anchor and Casimir on the index
 * window `[k_min, k_max]`. Scalars use the text form `a+b*sqrt(d)`.
 *
 * # Safety
 * String arguments must be NUL-terminated; `out` must be writable.
 */
enum WxStatus wx_module_dense(const char *anchor,
                              const char *tau,
                              int64_t k_min,
                              int64_t k_max,
                              struct WxModule **out);

/**
 * Reads a module from its JSON document.
 *
 * # Safety
 * `json` must be NUL-terminated; `out` must be writable.
 */
enum WxStatus wx_module_from_json(const char *json, struct WxModule **out);

/**
 * Writes the JSON document of a module to `*out`.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum WxStatus wx_module_to_json(const struct WxModule *m, char **out);

/**
 * # Safety
 * `m` must be NULL or a live handle.
 */
void wx_module_free(struct WxModule *m);

/**
 * Extends a module to `algebra` ("gt", "lt", "full" or "vir").
 *
 * `branch` may be NULL for automatic choice, otherwise "+" or "-".
 * `generic` selects the solver path instead of the closed forms. On
 * return `*exit` holds the CLI exit code of the outcome (0 extended,
 * 3 infeasible, 4 undecided), `*report` (if not NULL) the JSON report and
 * `*out` the first surviving action or NULL.
 *
 * # Safety
 * `m` must be a live handle; pointers must be valid or NULL where allowed.
 */
enum WxStatus wx_extend(const struct WxModule *m,
                        const char *algebra,
                        const char *branch,
                        int64_t depth,
                        bool generic,
                        int32_t *exit,
                        char **report,
                        struct WxAction **out);

/**
 * Checks every bracket of the action up to `depth` (the stored depth when
 * `depth` is 0). `*pass` receives the verdict.
 *
 * # Safety
 * `a` must be a live handle; `pass` must be writable.
 */
enum WxStatus wx_action_verify(const struct WxAction *a, int64_t depth, bool *pass);

/**
 * Glues an lt half and a gt half into a Witt action, or a Virasoro action
 * when `vir` is set. A gluing obstruction returns `WX_STATUS_GLUE`.
 *
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum WxStatus wx_glue(const struct WxAction *lt,
                      const struct WxAction *gt,
                      bool vir,
                      struct WxAction **out);

/**
 * Central operator of a Virasoro action: `*zero` is set when it vanishes
 * and `*present` when the action carries one at all.
 *
 * # Safety
 * `a` must be a live handle; outputs must be writable.
 */
enum WxStatus wx_action_central_zero(const struct WxAction *a, bool *present, bool *zero);

/**
 * Reads an action from its JSON document.
 *
 * # Safety
 * `json` must be NUL-terminated; `out` must be writable.
 */
enum WxStatus wx_action_from_json(const char *json, struct WxAction **out);

/**
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum WxStatus wx_action_to_json(const struct WxAction *a, char **out);

/**
 * # Safety
 * `a` must be NULL or a live handle.
 */
void wx_action_free(struct WxAction *a);

/**
 * Decides whether relation `target` lies in the ideal generated by the
 * comma separated relations `gens`, computing up to degree `max_degree`.
 * Relations are named like "r2" or "r_{2,5}".
 *
 * # Safety
 * Strings must be NUL-terminated; `member` must be writable.
 */
enum WxStatus wx_freelie_member(const char *target,
                                const char *gens,
                                uint32_t max_degree,
                                bool *member);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* WITTEXT_H */
