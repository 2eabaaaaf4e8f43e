#ifndef ATLAS_ATLAS_H
#define ATLAS_ATLAS_H

/* C interface to the self-embedding toolkit.
 *
 * Every call returns an atlas_status; on failure a message for the calling
 * thread is available from atlas_last_error().  Objects are opaque handles
 * released with their *_destroy function (NULL is accepted).
 *
 * Points of the Steiner triple system are labels 1..n with n = 2^m - 1;
 * label i is alpha^(i-1).  Field elements (and permutation tables) use the
 * vector representation 0..2^m - 1 with addition as XOR.
 *
 * Variable-length results go to caller buffers: pass the capacity, receive
 * the required length.  If the buffer is too small (or NULL) the call
 * returns ATLAS_BUFFER_TOO_SMALL with the length filled in. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ATLAS_API __declspec(dllexport)
#elif defined(__GNUC__)
#define ATLAS_API __attribute__((visibility("default")))
#else
#define ATLAS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum atlas_status {
  ATLAS_OK = 0,
  ATLAS_INVALID_ARGUMENT = 1,
  ATLAS_OUT_OF_RANGE = 2,
  ATLAS_DEGREE_MISMATCH = 3,
  ATLAS_NON_PRIMITIVE_POLY = 4,
  ATLAS_NOT_COPRIME = 5,
  ATLAS_SAME_POINT = 6,
  ATLAS_INVALID_PERMUTATION = 7,
  ATLAS_DEGENERATE_EMBEDDING = 8,
  ATLAS_NOT_CLOSED_SURFACE = 9,
  ATLAS_TOO_LARGE = 10,
  ATLAS_RANK_DEFICIENT = 11,
  ATLAS_TIMEOUT = 12,
  ATLAS_BUDGET_EXCEEDED = 13,
  ATLAS_CONSISTENCY_ERROR = 14,
  ATLAS_IO_ERROR = 15,
  ATLAS_PARSE_ERROR = 16,
  ATLAS_BUFFER_TOO_SMALL = 64,
  ATLAS_INTERNAL_ERROR = 99
} atlas_status;

typedef enum atlas_convention {
  ATLAS_CONVENTION_INVERSE = 0, /* white third point F^-1(F(a) + F(b)) */
  ATLAS_CONVENTION_DIRECT = 1   /* white third point F(F^-1(a) + F^-1(b)) */
} atlas_convention;

/* CamelCase name of a status, e.g. "NotCoprime". */
ATLAS_API const char* atlas_status_name(atlas_status status);
/* Message of the last failed call on this thread ("" if none). */
ATLAS_API const char* atlas_last_error(void);

/* ---- text results ---------------------------------------------------- */

typedef struct atlas_text atlas_text;
ATLAS_API const char* atlas_text_str(const atlas_text* text);
ATLAS_API size_t atlas_text_len(const atlas_text* text);
ATLAS_API void atlas_text_destroy(atlas_text* text);

/* ---- field ------------------------------------------------------------ */

typedef struct atlas_field atlas_field;

typedef struct atlas_field_info {
  unsigned m;
  uint32_t poly;
  uint32_t order; /* 2^m - 1 */
  uint64_t checksum;
} atlas_field_info;

/* poly == 0 selects the default primitive polynomial for m. */
ATLAS_API atlas_status atlas_field_create(unsigned m, uint32_t poly, atlas_field** out);
ATLAS_API void atlas_field_destroy(atlas_field* field);
ATLAS_API atlas_status atlas_field_get_info(const atlas_field* field, atlas_field_info* out);
ATLAS_API atlas_status atlas_default_poly(unsigned m, uint32_t* out);
ATLAS_API atlas_status atlas_field_mul(const atlas_field* field, uint32_t a, uint32_t b,
                                       uint32_t* out);
ATLAS_API atlas_status atlas_field_pow(const atlas_field* field, uint32_t x, uint64_t t,
                                       uint32_t* out);
ATLAS_API atlas_status atlas_field_log(const atlas_field* field, uint32_t x, uint32_t* out);
ATLAS_API atlas_status atlas_field_inv_exponent(const atlas_field* field, uint64_t t,
                                                uint64_t* out);

/* ---- permutations ----------------------------------------------------- */

typedef struct atlas_perm atlas_perm;

ATLAS_API atlas_status atlas_perm_monomial(const atlas_field* field, uint64_t t,
                                           atlas_perm** out);
/* table[x] = F(x) for all 2^m elements, table[0] == 0. */
ATLAS_API atlas_status atlas_perm_from_table(const atlas_field* field, const uint32_t* table,
                                             size_t len, atlas_perm** out);
ATLAS_API atlas_status atlas_perm_inverse(const atlas_perm* perm, atlas_perm** out);
ATLAS_API void atlas_perm_destroy(atlas_perm* perm);
ATLAS_API atlas_status atlas_perm_apply(const atlas_perm* perm, uint32_t x, uint32_t* out);

/* ---- triple systems and rotation lines (labels) ----------------------- */

ATLAS_API atlas_status atlas_third_point(const atlas_field* field, uint32_t p, uint32_t q,
                                         uint32_t* out);
ATLAS_API atlas_status atlas_image_third(const atlas_field* field, const atlas_perm* perm,
                                         uint32_t p, uint32_t q, atlas_convention conv,
                                         uint32_t* out);
/* Pairs (q, r) with {p, q, r} a black triple, q < r, flattened q0 r0 q1 r1 ... */
ATLAS_API atlas_status atlas_triples_at(const atlas_field* field, uint32_t p, uint32_t* pairs,
                                        size_t cap, size_t* len);
ATLAS_API atlas_status atlas_successor(const atlas_field* field, const atlas_perm* perm,
                                       uint32_t a, uint32_t x, atlas_convention conv,
                                       uint32_t* out);
/* Line sizes (in points) at a, in the order the lines are discovered. */
ATLAS_API atlas_status atlas_rotation_line_sizes(const atlas_field* field,
                                                 const atlas_perm* perm, uint32_t a,
                                                 atlas_convention conv, uint64_t* sizes,
                                                 size_t cap, size_t* len);
/* One line per row, "[a1,b1;a2,b2;...]". */
ATLAS_API atlas_status atlas_rotation_lines_text(const atlas_field* field,
                                                 const atlas_perm* perm, uint32_t a,
                                                 atlas_convention conv, atlas_text** out);
/* "(s; n1, n2, ...)" with distinct sizes ascending; compact drops spaces. */
ATLAS_API atlas_status atlas_spectrum_text(const atlas_field* field, const atlas_perm* perm,
                                           uint32_t a, atlas_convention conv, int compact,
                                           atlas_text** out);
ATLAS_API atlas_status atlas_is_closed_surface(const atlas_field* field, const atlas_perm* perm,
                                               atlas_convention conv, int* out);
ATLAS_API atlas_status atlas_pinch_count(const atlas_field* field, const atlas_perm* perm,
                                         atlas_convention conv, uint64_t* out);

/* ---- invariants --------------------------------------------------------- */

ATLAS_API atlas_status atlas_v_value(const atlas_field* field, const atlas_perm* perm,
                                     uint32_t a, atlas_convention conv, uint64_t* out);
ATLAS_API atlas_status atlas_v_direct(const atlas_field* field, const atlas_perm* perm,
                                      uint32_t a, uint64_t* out);
/* Third points z_i (labels) in rotation-line order. */
ATLAS_API atlas_status atlas_v_tilde(const atlas_field* field, const atlas_perm* perm,
                                     uint32_t a, atlas_convention conv, uint32_t* points,
                                     size_t cap, size_t* len);
/* Histogram as flattened (multiplicity, count) pairs, multiplicity ascending. */
ATLAS_API atlas_status atlas_v_star(const atlas_field* field, const atlas_perm* perm,
                                    uint32_t a, atlas_convention conv, uint64_t* pairs,
                                    size_t cap, size_t* len);
/* "{1^42, 3^7}" */
ATLAS_API atlas_status atlas_v_star_text(const atlas_field* field, const atlas_perm* perm,
                                         uint32_t a, atlas_convention conv, atlas_text** out);
ATLAS_API atlas_status atlas_apn_by_v(const atlas_field* field, const atlas_perm* perm,
                                      int* out);
ATLAS_API atlas_status atlas_apn_oracle(const atlas_field* field, const atlas_perm* perm,
                                        int* out);

/* ---- cyclotomic cosets ------------------------------------------------ */

ATLAS_API atlas_status atlas_coset(uint64_t n, uint64_t i, uint64_t* members, size_t cap,
                                   size_t* len);
ATLAS_API atlas_status atlas_coset_star(uint64_t n, uint64_t t, uint64_t* rep,
                                        uint64_t* members, size_t cap, size_t* len);
/* Representatives of all C* classes except the linear one, ascending. */
ATLAS_API atlas_status atlas_class_reps(uint64_t n, uint64_t* reps, size_t cap, size_t* len);

/* ---- codes ------------------------------------------------------------ */

ATLAS_API atlas_status atlas_code_rank(const atlas_field* field, const atlas_perm* perm,
                                       unsigned* out);
/* 3, 4, or 5 meaning "at least 5". */
ATLAS_API atlas_status atlas_min_distance(const atlas_field* field, const atlas_perm* perm,
                                          int* out);

typedef struct atlas_weights atlas_weights;
ATLAS_API atlas_status atlas_weight_distribution(const atlas_field* field,
                                                 const atlas_perm* perm, int extended,
                                                 unsigned jobs, atlas_weights** out);
ATLAS_API void atlas_weights_destroy(atlas_weights* w);
/* Number of coefficients (code length + 1). */
ATLAS_API size_t atlas_weights_size(const atlas_weights* w);
/* A_i as a decimal string owned by the handle; NULL if i is out of range. */
ATLAS_API const char* atlas_weights_count(const atlas_weights* w, size_t i);

typedef struct atlas_quadruple {
  uint64_t lhs;          /* A_4 of the extended code */
  uint64_t solution_sum; /* sum over b of C(n_b / 2, 2) at point 1 */
  uint64_t rhs_times3;   /* (2^m - 1) * solution_sum */
  int agrees;
} atlas_quadruple;
ATLAS_API atlas_status atlas_quadruple_check(const atlas_field* field, const atlas_perm* perm,
                                             atlas_quadruple* out);

/* ---- surfaces ----------------------------------------------------------- */

typedef struct atlas_surface {
  uint64_t vertices, edges, faces;
  int64_t chi;
  int64_t chi_formula;
  int orientable;
  uint64_t genus_or_crosscaps;
} atlas_surface;
ATLAS_API atlas_status atlas_surface_report(const atlas_field* field, const atlas_perm* perm,
                                            atlas_convention conv, atlas_surface* out);

/* ---- isomorphism -------------------------------------------------------- */

typedef struct atlas_iso {
  int isomorphic;
  int colour_reversing;
  uint64_t nodes;
} atlas_iso;
/* witness (2^m entries, element map) may be NULL.  Returns ATLAS_TIMEOUT
 * when the node budget runs out. */
ATLAS_API atlas_status atlas_iso_search(const atlas_field* field, const atlas_perm* f1,
                                        const atlas_perm* f2, atlas_convention conv,
                                        uint64_t node_budget, atlas_iso* out, uint32_t* witness,
                                        size_t witness_cap);
ATLAS_API atlas_status atlas_is_isomorphism(const atlas_field* field, const atlas_perm* f1,
                                            const atlas_perm* f2, atlas_convention conv,
                                            const uint32_t* phi, size_t len,
                                            int colour_reversing, int* out);

/* ---- survey and reports ------------------------------------------------ */

typedef struct atlas_survey_config {
  unsigned m;
  uint32_t poly; /* 0: default */
  atlas_convention convention;
  unsigned weights_max_m;
  unsigned iso_max_m;
  uint64_t iso_nodes;
  unsigned orient_max_m;
  double time_budget_s; /* 0: unlimited */
} atlas_survey_config;

ATLAS_API void atlas_survey_config_init(atlas_survey_config* cfg, unsigned m);

typedef struct atlas_report atlas_report;

/* On ATLAS_BUDGET_EXCEEDED *out still receives the partial report. */
ATLAS_API atlas_status atlas_survey(const atlas_survey_config* cfg, unsigned jobs,
                                    atlas_report** out);
ATLAS_API void atlas_report_destroy(atlas_report* report);

typedef struct atlas_report_info {
  unsigned m;
  uint32_t poly;
  uint64_t records;
  uint64_t reps_total;
  uint64_t closed;
  uint32_t groups;
  int complete;
} atlas_report_info;
ATLAS_API atlas_status atlas_report_get_info(const atlas_report* report, atlas_report_info* out);

typedef struct atlas_class_record {
  uint64_t rep;
  uint64_t coset_size;
  int closed_surface;
  int apn;
  uint64_t v;
  uint64_t lines;
  int orientable;     /* -1 unknown */
  const char* decided_by; /* "v", "vstar", "weights", "iso", "undecided" or NULL */
  uint32_t group;     /* 0 for none */
} atlas_class_record;
ATLAS_API atlas_status atlas_report_record(const atlas_report* report, size_t index,
                                           atlas_class_record* out);

typedef enum atlas_format {
  ATLAS_FORMAT_JSONL = 0,
  ATLAS_FORMAT_MARKDOWN = 1,
  ATLAS_FORMAT_CSV_V = 2,        /* m,coset,v,apn */
  ATLAS_FORMAT_CSV_VSTAR = 3,    /* m,coset,v,vstar */
  ATLAS_FORMAT_CSV_SPECTRUM = 4, /* m,coset,rl,spectrum */
  ATLAS_FORMAT_CSV_COUNTS = 5    /* m,classes */
} atlas_format;
ATLAS_API atlas_status atlas_report_render(const atlas_report* report, atlas_format format,
                                           atlas_text** out);
ATLAS_API atlas_status atlas_report_write_jsonl(const atlas_report* report, const char* path);
ATLAS_API atlas_status atlas_report_load_jsonl(const char* path, atlas_report** out);
ATLAS_API atlas_status atlas_report_equal(const atlas_report* a, const atlas_report* b,
                                          int* out);

/* Compares against the golden CSVs in dir.  *ok is 1 on full agreement;
 * the log lists one "mismatch: ..." or "note: ..." per line. */
ATLAS_API atlas_status atlas_verify_golden(const atlas_report* report, const char* dir,
                                           int* ok, uint64_t* rows_checked, atlas_text** log);

#ifdef __cplusplus
}
#endif

#endif
