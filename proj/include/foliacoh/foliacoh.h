/* C interface to the foliacoh engine. All objects are opaque; every call
 * returns an fc_status and reports details through fc_last_error(). Strings
 * handed out by the library must be released with fc_string_free(). */
#ifndef FOLIACOH_H
#define FOLIACOH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(FOLIACOH_BUILDING_LIBRARY)
#define FC_API __declspec(dllexport)
#else
#define FC_API __declspec(dllimport)
#endif
#else
#define FC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fc_status {
  FC_OK = 0,
  FC_INPUT_ERROR = 1,     /* malformed or invalid input */
  FC_INVARIANT_ERROR = 2, /* internal consistency check failed */
  FC_INTERNAL_ERROR = 3
} fc_status;

typedef struct fc_product_model fc_product_model;
typedef struct fc_cover_model fc_cover_model;
typedef struct fc_leaf_map fc_leaf_map;

FC_API const char* fc_version(void);
/* Message of the last failed call on this thread; "" if none. */
FC_API const char* fc_last_error(void);
FC_API void fc_string_free(char* s);

/* Product models: { "base_points", "fiber", optional "cover" }. */
FC_API fc_status fc_product_model_from_json(const char* json, fc_product_model** out);
FC_API void fc_product_model_free(fc_product_model* m);
/* Writes up to `capacity` dims; *count receives the full length. */
FC_API fc_status fc_product_model_vertical_cohomology(const fc_product_model* m, size_t* dims,
                                                      size_t capacity, size_t* count);
/* Mayer-Vietoris comparison as JSON. cover_spec like "0,1;1,2" or NULL to
 * use the embedded cover (single chart if absent). */
FC_API fc_status fc_product_model_report(const fc_product_model* m, const char* cover_spec,
                                         char** json_out);

FC_API fc_status fc_cover_model_from_json(const char* json, fc_cover_model** out);
FC_API void fc_cover_model_free(fc_cover_model* c);
FC_API fc_status fc_cover_model_report(const fc_cover_model* c, char** json_out);

/* Dispatches on the document: cover models have "charts". */
FC_API fc_status fc_cohomology_report(const char* model_json, const char* cover_spec, char** json_out);

FC_API fc_status fc_leaf_map_from_json(const char* json, fc_leaf_map** out);
FC_API fc_status fc_leaf_map_random(uint64_t seed, fc_leaf_map** out);
FC_API void fc_leaf_map_free(fc_leaf_map* h);
FC_API fc_status fc_leaf_map_to_json(const fc_leaf_map* h, char** json_out);
/* Long exact sequence of the cone with per-node verdicts and degree bounds. */
FC_API fc_status fc_leaf_map_les_report(const fc_leaf_map* h, char** json_out);

FC_API fc_status fc_pendulum_energy(const double x[3], const double v[3], double* out);
FC_API fc_status fc_pendulum_moment(const double x[3], const double v[3], double* out);
/* alpha_range is "start:end:count". */
FC_API fc_status fc_pendulum_bifurcation_csv(const char* alpha_range, char** csv_out);
FC_API fc_status fc_pendulum_critical_json(double energy, char** json_out);
FC_API fc_status fc_pendulum_molecule_dot(double energy, char** dot_out);
FC_API fc_status fc_pendulum_h0_json(double energy, size_t nodes_per_edge, char** json_out);
FC_API fc_status fc_pendulum_discrepancy_csv(const double* energies, size_t count, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* FOLIACOH_H */
