#ifndef COMPACK_COMPACK_H
#define COMPACK_COMPACK_H

/* C interface to the compact two-radius disc packing library.
 *
 * Every function returns a cpk_status. On failure the message of the most
 * recent error on the calling thread is available from cpk_last_error().
 * Strings returned through char** are owned by the caller and released with
 * cpk_string_free; strings returned through const char** stay valid for the
 * lifetime of the handle they came from. */

#include <stddef.h>

#if defined(COMPACK_BUILDING_LIBRARY)
#define CPK_API __attribute__((visibility("default")))
#else
#define CPK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cpk_status {
  CPK_OK = 0,
  CPK_ERR_INVALID_ARGUMENT = 1,
  CPK_ERR_DOMAIN = 2,
  CPK_ERR_NO_SOLUTION = 3,
  CPK_ERR_INTERNAL = 4,
  CPK_ERR_UNKNOWN_CLASS = 5,
  CPK_ERR_EMPTY_WORD = 6,
  CPK_ERR_OVERLAP = 7,
  CPK_ERR_PARSE = 8,
  CPK_ERR_DESCRIPTOR_MISMATCH = 9,
  CPK_ERR_INDEPENDENT_SET = 10,
  CPK_ERR_ADJACENT_SMALL_LAYERS = 11,
  CPK_ERR_INVALID_TILING = 12,
  CPK_ERR_NON_COMPACT = 13,
  CPK_ERR_APERIODIC = 14,
  CPK_ERR_IO = 15,
  CPK_ERR_NULL_POINTER = 16,
  CPK_ERR_OUT_OF_RANGE = 17
} cpk_status;

typedef struct cpk_patch cpk_patch;
typedef struct cpk_tiling cpk_tiling;
typedef struct cpk_corona_set cpk_corona_set;

CPK_API const char* cpk_status_name(cpk_status status);
CPK_API const char* cpk_last_error(void);
CPK_API void cpk_string_free(char* s);

/* ---- radius classes --------------------------------------------------- */

typedef struct cpk_radius_info {
  char id[4];            /* "c1" .. "c9" */
  double value;
  int i, j, k;           /* alpha, beta', pi/3 counts around a small disc */
  int l, m, n;           /* alpha', beta, pi/3 counts around a large disc */
  char small_word[16];   /* canonical small-disc corona */
  double residual;       /* exact-form residual at value */
  char exact_form[128];
} cpk_radius_info;

typedef struct cpk_candidate_info {
  int i, j, k;
  double root;
  int feasible;          /* nonzero when a nontrivial large signature exists */
  int l, m, n;           /* first accepted large signature when feasible */
  double nearest_miss;   /* smallest rejected residual in the large scan */
  int annulus_hits;      /* rejected large signatures closer than 1e-4 */
} cpk_candidate_info;

CPK_API cpk_status cpk_radius_class_count(size_t* out);
CPK_API cpk_status cpk_radius_class_get(size_t index, cpk_radius_info* out);
CPK_API cpk_status cpk_radius_class_find(const char* id, cpk_radius_info* out);
CPK_API cpk_status cpk_candidate_count(size_t* out);
CPK_API cpk_status cpk_candidate_get(size_t index, cpk_candidate_info* out);

/* ---- coronas ------------------------------------------------------------ */

CPK_API cpk_status cpk_canonicalize(const char* word, char** out);

/* filtered == 0 gives the raw enumeration with an empty excluded list. */
CPK_API cpk_status cpk_corona_set_create(const char* class_id, int filtered, cpk_corona_set** out);
CPK_API void cpk_corona_set_free(cpk_corona_set* set);
/* center is '1' (large) or 'r' (small). */
CPK_API cpk_status cpk_corona_set_size(const cpk_corona_set* set, char center, size_t* out);
CPK_API cpk_status cpk_corona_set_word(const cpk_corona_set* set, char center, size_t index,
                                       const char** out);
CPK_API cpk_status cpk_corona_set_excluded_count(const cpk_corona_set* set, size_t* out);
CPK_API cpk_status cpk_corona_set_excluded_get(const cpk_corona_set* set, size_t index, char* center,
                                               const char** word, const char** reason);

/* ---- patches ------------------------------------------------------------ */

CPK_API cpk_status cpk_patch_generate(const char* class_id, const char* descriptor_json, cpk_patch** out);
CPK_API cpk_status cpk_preset_count(size_t* out);
CPK_API cpk_status cpk_preset_get(size_t index, const char** name, const char** class_id,
                                  const char** summary);
/* name may be "figure" together with a class id; class_id may be NULL
 * otherwise, and must match the preset when given. */
CPK_API cpk_status cpk_patch_preset(const char* class_id, const char* name, cpk_patch** out);

CPK_API cpk_status cpk_patch_parse(const char* text, cpk_patch** out);
CPK_API cpk_status cpk_patch_load(const char* path, cpk_patch** out);
CPK_API cpk_status cpk_patch_serialize(const cpk_patch* p, char** out);
CPK_API cpk_status cpk_patch_save(const cpk_patch* p, const char* path);
CPK_API void cpk_patch_free(cpk_patch* p);

CPK_API cpk_status cpk_patch_class(const cpk_patch* p, const char** out);
CPK_API cpk_status cpk_patch_radius(const cpk_patch* p, double* out);
CPK_API cpk_status cpk_patch_is_periodic(const cpk_patch* p, int* out);
CPK_API cpk_status cpk_patch_disc_count(const cpk_patch* p, size_t* out);
/* size receives '1' or 'r'. */
CPK_API cpk_status cpk_patch_disc_get(const cpk_patch* p, size_t index, double* x, double* y, char* size);

CPK_API cpk_status cpk_patch_density(const cpk_patch* p, double* out);

typedef struct cpk_verify_summary {
  size_t discs;
  size_t overlaps;
  size_t compact;
  size_t boundary;
  size_t violating;
  size_t membership_violations;
  int membership_checked;
  int both_sizes;
  int ok;
} cpk_verify_summary;

/* report may be NULL. */
CPK_API cpk_status cpk_patch_verify(const cpk_patch* p, cpk_verify_summary* summary, char** report);

enum { CPK_RENDER_EDGES = 1 };
CPK_API cpk_status cpk_patch_render_svg(const cpk_patch* p, unsigned flags, int repeat, char** out);

/* ---- tilings ------------------------------------------------------------ */

CPK_API cpk_status cpk_patch_to_tiling(const cpk_patch* p, cpk_tiling** out);
CPK_API cpk_status cpk_tiling_to_patch(const char* class_id, const cpk_tiling* t, cpk_patch** out);
CPK_API cpk_status cpk_tiling_parse(const char* text, cpk_tiling** out);
CPK_API cpk_status cpk_tiling_serialize(const cpk_tiling* t, char** out);
CPK_API cpk_status cpk_tiling_face_count(const cpk_tiling* t, size_t* out);
CPK_API void cpk_tiling_free(cpk_tiling* t);

#ifdef __cplusplus
}
#endif

#endif /* COMPACK_COMPACK_H */
