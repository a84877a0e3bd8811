#ifndef FDEA_H
#define FDEA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FdeaStatus {
  FDEA_STATUS_OK = 0,
  FDEA_STATUS_NULL_POINTER = 1,
  FDEA_STATUS_INVALID_ARGUMENT = 2,
  FDEA_STATUS_PARSE_ERROR = 3,
  FDEA_STATUS_SCHEMA_ERROR = 4,
  FDEA_STATUS_VALUE_ERROR = 5,
  FDEA_STATUS_IO_ERROR = 6,
  FDEA_STATUS_SOLVER_FAILURE = 7,
  FDEA_STATUS_BUFFER_TOO_SMALL = 8,
  FDEA_STATUS_PANIC = 9,
} FdeaStatus;

typedef enum FdeaDataFormat {
  FDEA_DATA_FORMAT_JSON = 0,
  FDEA_DATA_FORMAT_CSV = 1,
} FdeaDataFormat;

typedef enum FdeaPolicy {
  FDEA_POLICY_EXCLUDE_SELF = 0,
  FDEA_POLICY_INCLUDE_SELF = 1,
} FdeaPolicy;

typedef enum FdeaAlphaMode {
  FDEA_ALPHA_MODE_TRUNCATE = 0,
  FDEA_ALPHA_MODE_CLAMP = 1,
} FdeaAlphaMode;

typedef enum FdeaModel {
  FDEA_MODEL_CCR = 0,
  FDEA_MODEL_ALPHA = 1,
  FDEA_MODEL_MO = 2,
} FdeaModel;

typedef enum FdeaReportFormat {
  FDEA_REPORT_FORMAT_MARKDOWN = 0,
  FDEA_REPORT_FORMAT_CSV = 1,
  FDEA_REPORT_FORMAT_JSON = 2,
} FdeaReportFormat;

/**
 * Opaque dataset handle.
 */
typedef struct FdeaDataset FdeaDataset;

typedef struct FdeaMoConfig {
  double alpha;
  enum FdeaPolicy policy;
  double h_tol;
  double lp_tol;
  enum FdeaAlphaMode alpha_mode;
} FdeaMoConfig;

typedef struct FdeaMoResult {
  double h_star;
  double efficiency;
  double z_star;
  uint32_t iterations;
  /**
   * 1-based; 0 when produced by `fdea_solve_mo`.
   */
  uint32_t rank;
} FdeaMoResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent failure on this thread, or NULL.
 * The pointer stays valid until the next failing call on this thread.
 */
const char *fdea_last_error(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void fdea_string_free(char *s);

/**
 * Parses a dataset from memory.
 *
 * # Safety
 * `bytes` must point to `len` readable bytes; `out` must be writable.
 */
enum FdeaStatus fdea_dataset_from_bytes(const uint8_t *bytes,
                                        size_t len,
                                        enum FdeaDataFormat format,
                                        struct FdeaDataset **out);

/**
 * Reads a dataset file (format from the extension).
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be writable.
 */
enum FdeaStatus fdea_dataset_from_path(const char *path, struct FdeaDataset **out);

/**
 * # Safety
 * `ds` must be NULL or a handle from this library not yet freed.
 */
void fdea_dataset_free(struct FdeaDataset *ds);

/**
 * Number of units; 0 for a NULL handle.
 *
 * # Safety
 * `ds` must be NULL or a live handle.
 */
size_t fdea_dataset_dmu_count(const struct FdeaDataset *ds);

/**
 * Name of unit `index`, as a new string.
 *
 * # Safety
 * `ds` must be a live handle; `out` must be writable.
 */
enum FdeaStatus fdea_dataset_dmu_name(const struct FdeaDataset *ds, size_t index, char **out);

/**
 * Index of the unit called `name`.
 *
 * # Safety
 * `ds` must be a live handle, `name` NUL-terminated, `out` writable.
 */
enum FdeaStatus fdea_dataset_dmu_index(const struct FdeaDataset *ds, const char *name, size_t *out);

/**
 * Crisp CCR score of unit `p` on modal values.
 *
 * # Safety
 * `ds` must be a live handle; `out` writable.
 */
enum FdeaStatus fdea_ccr_efficiency(const struct FdeaDataset *ds,
                                    size_t p,
                                    enum FdeaPolicy self_policy,
                                    double *out);

/**
 * Optimistic α-cut score of unit `p`.
 *
 * # Safety
 * `ds` must be a live handle; `out` writable.
 */
enum FdeaStatus fdea_alphacut_score(const struct FdeaDataset *ds,
                                    size_t p,
                                    double alpha,
                                    enum FdeaPolicy self_policy,
                                    double *out);

/**
 * Best-case score z* of unit `p` over the full supports.
 *
 * # Safety
 * `ds` must be a live handle; `out` writable.
 */
enum FdeaStatus fdea_z_star(const struct FdeaDataset *ds,
                            size_t p,
                            enum FdeaPolicy self_policy,
                            double *out);

/**
 * Default multi-objective settings: α = 0, exclude self, truncate mode.
 */
struct FdeaMoConfig fdea_mo_config_default(void);

/**
 * Solves the multi-objective model for unit `p`.
 *
 * # Safety
 * `ds` must be a live handle; `cfg` readable; `out` writable.
 */
enum FdeaStatus fdea_solve_mo(const struct FdeaDataset *ds,
                              size_t p,
                              const struct FdeaMoConfig *cfg,
                              struct FdeaMoResult *out);

/**
 * Solves and ranks every unit. `out` must hold `capacity` results; on
 * success the first `fdea_dataset_dmu_count(ds)` entries are written in
 * input order.
 *
 * # Safety
 * `ds` must be a live handle; `cfg` readable; `out` writable for
 * `capacity` elements.
 */
enum FdeaStatus fdea_evaluate_all(const struct FdeaDataset *ds,
                                  const struct FdeaMoConfig *cfg,
                                  struct FdeaMoResult *out,
                                  size_t capacity);

/**
 * Renders a full report as a new string.
 *
 * # Safety
 * `ds` must be a live handle; `alphas` readable for `alpha_count` values
 * (may be NULL when `alpha_count` is 0); `out` writable.
 */
enum FdeaStatus fdea_report(const struct FdeaDataset *ds,
                            enum FdeaModel model,
                            const double *alphas,
                            size_t alpha_count,
                            const struct FdeaMoConfig *cfg,
                            enum FdeaReportFormat format,
                            char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FDEA_H */
