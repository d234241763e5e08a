#ifndef DEGEN_DEGEN_H
#define DEGEN_DEGEN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define DG_API __attribute__((visibility("default")))
#else
#define DG_API
#endif

typedef struct dg_algebra dg_algebra;
typedef struct dg_witness dg_witness;
typedef struct dg_deformation dg_deformation;

/* Mirrors degen::ErrorCode, shifted by one so that DG_OK is zero. */
typedef enum {
  DG_OK = 0,
  DG_ERR_PARSE,
  DG_ERR_IO,
  DG_ERR_INVALID_ARGUMENT,
  DG_ERR_NOT_A_UNIT,
  DG_ERR_INCONSISTENT,
  DG_ERR_SINGULAR,
  DG_ERR_DEGREE_MIXING,
  DG_ERR_NEGATIVE_VALUATION,
  DG_ERR_DIMENSION_MISMATCH,
  DG_ERR_NOT_JACOBI,
  DG_ERR_NOT_ASSOCIATIVE,
  DG_ERR_NO_UNIT,
  DG_ERR_NOT_GENERATED,
  DG_ERR_CAP_EXCEEDED,
  DG_ERR_INSUFFICIENT_ORDER,
  DG_ERR_WRONG_LEADING_TERM,
  DG_ERR_TRIVIAL,
  DG_ERR_NOT_RANK2_INVERTIBLE,
  DG_ERR_NOT_A_COMPLEX,
  DG_ERR_CYCLE_FOUND,
  DG_ERR_BOUNDS_INSUFFICIENT,
  DG_ERR_WITNESS_REJECTED,
  DG_ERR_INTERNAL = 100
} dg_status;

typedef enum { DG_FORMAT_TEXT = 0, DG_FORMAT_JSON = 1 } dg_format;

typedef enum { DG_KOSZUL_UP_TO_BOUNDS = 0, DG_KOSZUL_NOT_KOSZUL = 1, DG_KOSZUL_BOUNDS_INSUFFICIENT = 2 } dg_koszul_verdict;

/* Message of the last failing call on this thread; never NULL. */
DG_API const char* dg_last_error(void);
DG_API const char* dg_status_name(dg_status status);
/* Frees any char* returned through an out parameter. */
DG_API void dg_string_free(char* s);

DG_API dg_status dg_algebra_load(const char* path, dg_algebra** out);
DG_API dg_status dg_algebra_parse(const char* text, dg_algebra** out);
DG_API dg_status dg_algebra_serialize(const dg_algebra* a, char** out);
DG_API size_t dg_algebra_dim(const dg_algebra* a);
DG_API void dg_algebra_free(dg_algebra* a);

/* *passed is 1 when the Jacobi / associativity identities hold. */
DG_API dg_status dg_check(const dg_algebra* a, dg_format format, int* passed, char** report);
DG_API dg_status dg_classify(const dg_algebra* a, dg_format format, char** report);
/* theory is "lie" or "hochschild". internal_degree may be NULL; max_dim 0
   keeps the default size cap. */
DG_API dg_status dg_cohomology(const dg_algebra* a, const char* theory, size_t degree, const int* internal_degree,
                               size_t max_dim, size_t* dim);

/* from_path / to_path receive the referenced algebra paths (NULL when
   absent); either pointer may itself be NULL. */
DG_API dg_status dg_witness_load(const char* path, dg_witness** out, char** from_path, char** to_path);
DG_API dg_witness* dg_witness_scaling(size_t n);
DG_API void dg_witness_free(dg_witness* w);

DG_API dg_status dg_verify_witness(const dg_algebra* from, const dg_algebra* to, const dg_witness* g,
                                   dg_format format, int* accepted, char** report);
DG_API dg_status dg_witness_to_deformation(const dg_algebra* from, const dg_algebra* to, const dg_witness* g,
                                           int order, dg_deformation** out);
/* *refuted is 1 when some test rules the degeneration out. */
DG_API dg_status dg_obstruction_battery(const dg_algebra* from, const dg_algebra* to, dg_format format,
                                        int* refuted, char** report);

DG_API dg_status dg_deformation_load(const char* path, dg_deformation** out);
DG_API dg_status dg_deformation_serialize(const dg_deformation* d, char** out);
DG_API void dg_deformation_free(dg_deformation* d);
/* Identities modulo t^(M+1), leading-term analysis and fiber invariants. */
DG_API dg_status dg_verify_deformation(const dg_deformation* d, dg_format format, int* passed, char** report);
DG_API dg_status dg_l2_rigidity(const dg_deformation* d, dg_format format, int* complete, char** report);

/* max_j < 0 selects n(max_i). */
DG_API dg_status dg_koszul(const dg_algebra* a, int N, int max_i, int max_j, dg_format format,
                           dg_koszul_verdict* verdict, char** report);
/* alphas: comma-separated rationals added to the default L4 samples, or NULL. */
DG_API dg_status dg_diagram(const char* alphas, dg_format format, size_t* inconclusive, char** report);

#ifdef __cplusplus
}
#endif

#endif
