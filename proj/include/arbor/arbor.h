/*
 * arbor: critical-orbit arithmetic and one-sided Galois tower certificates
 * for one-parameter quadratic families φ_a(x) = (x - γ(a))² + c(a).
 *
 * Every function returns an arbor_status. Reports come back as
 * NUL-terminated JSON (or CSV / JSON lines where noted) allocated by the
 * library; release them with arbor_string_free. Big integers are passed
 * and returned as decimal strings. On a budget error (arbor_is_budget_error)
 * the output string, when non-NULL, holds the partial result.
 */
#ifndef ARBOR_ARBOR_H
#define ARBOR_ARBOR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ARBOR_BUILDING_LIBRARY)
#    define ARBOR_API __declspec(dllexport)
#  else
#    define ARBOR_API __declspec(dllimport)
#  endif
#else
#  define ARBOR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arbor_status {
  ARBOR_OK = 0,
  ARBOR_E_INVALID_ARGUMENT = 1,
  ARBOR_E_PARSE = 2,
  ARBOR_E_ZERO_POLYNOMIAL = 3,
  ARBOR_E_ISOTRIVIAL = 4,
  ARBOR_E_DIGIT_BUDGET = 5,
  ARBOR_E_INCOMPLETE_FACTORIZATION = 6,
  ARBOR_E_POSTCRITICALLY_FINITE = 7,
  ARBOR_E_PRECONDITION = 8,
  ARBOR_E_SINGULAR_MODEL = 9,
  ARBOR_E_INVALID_CONSTANTS = 10,
  ARBOR_E_ZERO_INPUT = 11,
  ARBOR_E_INTERNAL = 12
} arbor_status;

/* Opaque handles. */
typedef struct arbor_family arbor_family;
typedef struct arbor_map arbor_map;

typedef struct arbor_budget {
  uint64_t max_bits;    /* per-value bit bound for orbits (default 2^20) */
  uint64_t trial_bound; /* trial division bound (default 10^6) */
  uint64_t rho_iters;   /* Pollard-rho iterations per cofactor (default 10^7) */
  uint64_t seed;        /* rho / Miller-Rabin seed */
} arbor_budget;

typedef struct arbor_density_options {
  uint64_t X;
  const uint64_t* checkpoints; /* NULL: powers of ten up to X, then X */
  size_t checkpoint_count;
  size_t shards;
  size_t threads;
  size_t segment_size;
  int csv; /* nonzero: CSV rows instead of JSON */
} arbor_density_options;

ARBOR_API const char* arbor_version(void);
ARBOR_API const char* arbor_status_name(arbor_status status);
/* Message of the last failure on the calling thread. */
ARBOR_API const char* arbor_last_error(void);
ARBOR_API int arbor_is_budget_error(arbor_status status);
ARBOR_API void arbor_string_free(char* s);

ARBOR_API void arbor_budget_init(arbor_budget* budget);
ARBOR_API void arbor_density_options_init(arbor_density_options* options);

/* gamma and c are comma-separated coefficient lists, low to high ("0,1" is t). */
ARBOR_API arbor_status arbor_family_create(const char* gamma, const char* c, arbor_family** out);
ARBOR_API void arbor_family_destroy(arbor_family* family);
ARBOR_API arbor_status arbor_family_specialize(const arbor_family* family, const char* a, arbor_map** out);
ARBOR_API void arbor_map_destroy(arbor_map* map);

/* Isotriviality, m_phi, exceptional polynomial and set, height constants. */
ARBOR_API arbor_status arbor_family_info(const arbor_family* family, const arbor_budget* budget, char** json_out);
ARBOR_API arbor_status arbor_nphi_bound(const arbor_family* family, double kappa1, double kappa2, double kappa3,
                                        char** json_out);
ARBOR_API arbor_status arbor_index_bound(uint64_t n, const arbor_budget* budget, char** json_out);

/* JSON lines {n, value, bits} for n = 0..depth. */
ARBOR_API arbor_status arbor_orbit(const arbor_map* map, const char* b, uint64_t depth, const arbor_budget* budget,
                                   char** jsonl_out);
ARBOR_API arbor_status arbor_critical_orbit(const arbor_map* map, uint64_t depth, const arbor_budget* budget,
                                            char** json_out);
ARBOR_API arbor_status arbor_stability_scan(const arbor_map* map, uint64_t depth, const arbor_budget* budget,
                                            char** json_out);
ARBOR_API arbor_status arbor_certify_tower(const arbor_map* map, uint64_t from, uint64_t to,
                                           const arbor_budget* budget, char** json_out);
ARBOR_API arbor_status arbor_primitive_divisors(const arbor_map* map, uint64_t level, const arbor_budget* budget,
                                                char** json_out);
ARBOR_API arbor_status arbor_discriminant(const arbor_map* map, uint64_t level, const arbor_budget* budget,
                                          char** json_out);
/* genus 1 or 2; xbound 0 skips the integral-point search. */
ARBOR_API arbor_status arbor_curve(const arbor_map* map, uint64_t level, int genus, uint64_t xbound,
                                   const arbor_budget* budget, char** json_out);
ARBOR_API arbor_status arbor_canonical_height(const arbor_map* map, const char* x, double eps, char** json_out);
ARBOR_API arbor_status arbor_density(const arbor_map* map, const char* b, const arbor_density_options* options,
                                     char** out);
ARBOR_API arbor_status arbor_factorize(const char* n, const arbor_budget* budget, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* ARBOR_ARBOR_H */
