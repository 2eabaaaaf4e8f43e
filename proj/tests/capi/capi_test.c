/* Exercises the shared library through its C header only. */
#include <atlas/atlas.h>

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

#define EXPECT_OK(call) EXPECT((call) == ATLAS_OK)

static void test_field(void) {
  atlas_field* f = NULL;
  atlas_field_info info;
  uint32_t x = 0, poly = 0;
  uint64_t inv = 0;
  EXPECT_OK(atlas_field_create(5, 0, &f));
  EXPECT_OK(atlas_field_get_info(f, &info));
  EXPECT(info.m == 5 && info.poly == 0x25);
  EXPECT_OK(atlas_field_mul(f, 2, 13, &x));
  EXPECT(x == 26);
  EXPECT_OK(atlas_field_pow(f, 2, 5, &x));
  EXPECT(x == 5);
  EXPECT_OK(atlas_field_log(f, 3, &x));
  EXPECT(x == 18);
  EXPECT_OK(atlas_field_inv_exponent(f, 5, &inv));
  EXPECT(inv == 25);
  EXPECT(atlas_field_log(f, 0, &x) == ATLAS_OUT_OF_RANGE);
  EXPECT(atlas_field_inv_exponent(f, 31, &inv) == ATLAS_NOT_COPRIME);
  EXPECT_OK(atlas_default_poly(7, &poly));
  EXPECT(poly == 0x83);
  atlas_field_destroy(f);

  f = NULL;
  EXPECT(atlas_field_create(5, 0x23, &f) == ATLAS_NON_PRIMITIVE_POLY);
  EXPECT(f == NULL);
  EXPECT(strlen(atlas_last_error()) > 0);
  EXPECT(strcmp(atlas_status_name(ATLAS_NON_PRIMITIVE_POLY), "NonPrimitivePoly") == 0);
  EXPECT(atlas_field_create(23, 0, &f) == ATLAS_OUT_OF_RANGE);
  EXPECT(atlas_field_create(5, 0, NULL) == ATLAS_INVALID_ARGUMENT);
}

static void test_lines(void) {
  atlas_field* f = NULL;
  atlas_perm* p = NULL;
  atlas_perm* q = NULL;
  atlas_text* text = NULL;
  uint32_t x = 0;
  uint64_t sizes[4];
  size_t len = 0;
  int closed = 0;
  EXPECT_OK(atlas_field_create(5, 0, &f));
  EXPECT_OK(atlas_perm_monomial(f, 3, &p));
  EXPECT_OK(atlas_third_point(f, 1, 19, &x));
  EXPECT(x == 2);
  EXPECT_OK(atlas_successor(f, p, 1, 2, ATLAS_CONVENTION_INVERSE, &x));
  EXPECT(x == 5);
  EXPECT(atlas_successor(f, p, 1, 1, ATLAS_CONVENTION_INVERSE, &x) == ATLAS_SAME_POINT);
  EXPECT_OK(atlas_spectrum_text(f, p, 1, ATLAS_CONVENTION_INVERSE, 0, &text));
  EXPECT(strcmp(atlas_text_str(text), "(2; 10, 20)") == 0);
  atlas_text_destroy(text);
  EXPECT_OK(atlas_rotation_lines_text(f, p, 1, ATLAS_CONVENTION_INVERSE, &text));
  EXPECT(strncmp(atlas_text_str(text), "[2,19;5,11;17,10;3,6;9,21]", 26) == 0);
  atlas_text_destroy(text);
  /* size query, then a buffer that is too small, then the real call */
  EXPECT(atlas_rotation_line_sizes(f, p, 1, ATLAS_CONVENTION_INVERSE, NULL, 0, &len) ==
         ATLAS_BUFFER_TOO_SMALL);
  EXPECT(len == 2);
  EXPECT(atlas_rotation_line_sizes(f, p, 1, ATLAS_CONVENTION_INVERSE, sizes, 1, &len) ==
         ATLAS_BUFFER_TOO_SMALL);
  EXPECT_OK(atlas_rotation_line_sizes(f, p, 1, ATLAS_CONVENTION_INVERSE, sizes, 4, &len));
  EXPECT(len == 2 && sizes[0] + sizes[1] == 30);
  EXPECT_OK(atlas_is_closed_surface(f, p, ATLAS_CONVENTION_INVERSE, &closed));
  EXPECT(closed == 0);
  atlas_perm_destroy(p);

  EXPECT_OK(atlas_perm_monomial(f, 5, &p));
  EXPECT_OK(atlas_perm_inverse(p, &q));
  EXPECT_OK(atlas_perm_apply(q, 5, &x));
  EXPECT_OK(atlas_perm_apply(p, x, &x));
  EXPECT(x == 5);
  EXPECT_OK(atlas_is_closed_surface(f, p, ATLAS_CONVENTION_INVERSE, &closed));
  EXPECT(closed == 1);
  EXPECT(atlas_perm_monomial(f, 31, &q) != ATLAS_OK || q != NULL);
  atlas_perm_destroy(p);
  atlas_perm_destroy(q);
  atlas_field_destroy(f);
}

static void test_invariants(void) {
  atlas_field* f = NULL;
  atlas_perm* p = NULL;
  atlas_text* text = NULL;
  uint64_t v = 0;
  uint32_t z[64];
  size_t len = 0;
  int apn = -1;
  EXPECT_OK(atlas_field_create(7, 0, &f));
  EXPECT_OK(atlas_perm_monomial(f, 7, &p));
  EXPECT_OK(atlas_v_value(f, p, 1, ATLAS_CONVENTION_INVERSE, &v));
  EXPECT(v == 50);
  EXPECT_OK(atlas_v_star_text(f, p, 1, ATLAS_CONVENTION_INVERSE, &text));
  EXPECT(strcmp(atlas_text_str(text), "{1^42, 3^7}") == 0);
  atlas_text_destroy(text);
  EXPECT_OK(atlas_v_tilde(f, p, 1, ATLAS_CONVENTION_INVERSE, z, 64, &len));
  EXPECT(len == 63 && z[0] == 109 && z[1] == 43);
  EXPECT_OK(atlas_apn_by_v(f, p, &apn));
  EXPECT(apn == 0);
  atlas_perm_destroy(p);
  EXPECT_OK(atlas_perm_monomial(f, 9, &p));
  EXPECT_OK(atlas_apn_oracle(f, p, &apn));
  EXPECT(apn == 1);
  atlas_perm_destroy(p);
  atlas_field_destroy(f);
}

static void test_cosets_codes(void) {
  uint64_t members[16];
  uint64_t rep = 0;
  size_t len = 0;
  atlas_field* f = NULL;
  atlas_perm* p = NULL;
  atlas_weights* w = NULL;
  atlas_quadruple quad;
  unsigned rank = 0;
  int d = 0;
  EXPECT_OK(atlas_coset(31, 5, members, 16, &len));
  EXPECT(len == 5 && members[0] == 5 && members[4] == 20);
  EXPECT_OK(atlas_coset_star(31, 5, &rep, members, 16, &len));
  EXPECT(rep == 5 && len == 10);
  EXPECT(atlas_coset_star(63, 3, &rep, members, 16, &len) == ATLAS_NOT_COPRIME);
  EXPECT_OK(atlas_class_reps(127, members, 16, &len));
  EXPECT(len == 9 && members[0] == 3 && members[8] == 63);

  EXPECT_OK(atlas_field_create(7, 0, &f));
  EXPECT_OK(atlas_perm_monomial(f, 7, &p));
  EXPECT_OK(atlas_code_rank(f, p, &rank));
  EXPECT(rank == 14);
  EXPECT_OK(atlas_min_distance(f, p, &d));
  EXPECT(d == 4);
  EXPECT_OK(atlas_quadruple_check(f, p, &quad));
  EXPECT(quad.lhs == 889 && quad.solution_sum == 21 && quad.agrees);
  EXPECT_OK(atlas_weight_distribution(f, p, 1, 1, &w));
  EXPECT(atlas_weights_size(w) == 129);
  EXPECT(strcmp(atlas_weights_count(w, 0), "1") == 0);
  EXPECT(strcmp(atlas_weights_count(w, 4), "889") == 0);
  EXPECT(atlas_weights_count(w, 129) == NULL);
  atlas_weights_destroy(w);
  atlas_perm_destroy(p);
  EXPECT_OK(atlas_perm_monomial(f, 1, &p));
  EXPECT(atlas_weight_distribution(f, p, 0, 1, &w) == ATLAS_RANK_DEFICIENT);
  atlas_perm_destroy(p);
  atlas_field_destroy(f);
}

static void test_surface_iso(void) {
  atlas_field* f = NULL;
  atlas_perm* a = NULL;
  atlas_perm* b = NULL;
  atlas_surface s;
  atlas_iso iso;
  uint32_t phi[32];
  int ok = 0;
  EXPECT_OK(atlas_field_create(5, 0, &f));
  EXPECT_OK(atlas_perm_monomial(f, 5, &a));
  EXPECT_OK(atlas_perm_monomial(f, 25, &b));
  EXPECT_OK(atlas_surface_report(f, a, ATLAS_CONVENTION_INVERSE, &s));
  EXPECT(s.chi == -124 && !s.orientable && s.genus_or_crosscaps == 126);
  EXPECT_OK(atlas_iso_search(f, a, b, ATLAS_CONVENTION_INVERSE, 100000, &iso, phi, 32));
  EXPECT(iso.isomorphic && iso.colour_reversing);
  EXPECT_OK(atlas_is_isomorphism(f, a, b, ATLAS_CONVENTION_INVERSE, phi, 32, 1, &ok));
  EXPECT(ok == 1);
  atlas_perm_destroy(b);
  EXPECT_OK(atlas_perm_monomial(f, 3, &b));
  EXPECT(atlas_surface_report(f, b, ATLAS_CONVENTION_INVERSE, &s) == ATLAS_NOT_CLOSED_SURFACE);
  atlas_perm_destroy(a);
  atlas_perm_destroy(b);
  atlas_field_destroy(f);

  EXPECT_OK(atlas_field_create(7, 0, &f));
  EXPECT_OK(atlas_perm_monomial(f, 7, &a));
  EXPECT_OK(atlas_perm_monomial(f, 21, &b));
  EXPECT(atlas_iso_search(f, a, b, ATLAS_CONVENTION_INVERSE, 1, &iso, NULL, 0) == ATLAS_TIMEOUT);
  EXPECT_OK(atlas_iso_search(f, a, b, ATLAS_CONVENTION_INVERSE, 100000, &iso, NULL, 0));
  EXPECT(!iso.isomorphic);
  atlas_perm_destroy(a);
  atlas_perm_destroy(b);
  atlas_field_destroy(f);
}

static void test_survey(const char* tables, const char* tmp) {
  atlas_survey_config cfg;
  atlas_report* r = NULL;
  atlas_report* back = NULL;
  atlas_report_info info;
  atlas_class_record rec;
  atlas_text* text = NULL;
  uint64_t rows = 0;
  size_t i;
  int ok = 0, same = 0;
  atlas_survey_config_init(&cfg, 7);
  EXPECT_OK(atlas_survey(&cfg, 2, &r));
  EXPECT_OK(atlas_report_get_info(r, &info));
  EXPECT(info.m == 7 && info.groups == 4 && info.closed == 4 && info.complete);
  for (i = 0; i < info.records; ++i) {
    EXPECT_OK(atlas_report_record(r, i, &rec));
    if (rec.rep == 7) {
      EXPECT(rec.v == 50 && rec.closed_surface && rec.orientable == 0);
      EXPECT(strcmp(rec.decided_by, "iso") == 0);
    }
    if (!rec.closed_surface) EXPECT(rec.group == 0 && rec.decided_by == NULL);
  }
  EXPECT(atlas_report_record(r, info.records, &rec) == ATLAS_OUT_OF_RANGE);
  EXPECT_OK(atlas_report_render(r, ATLAS_FORMAT_CSV_COUNTS, &text));
  EXPECT(strcmp(atlas_text_str(text), "m,classes\n7,4\n") == 0);
  atlas_text_destroy(text);
  EXPECT_OK(atlas_verify_golden(r, tables, &ok, &rows, &text));
  EXPECT(ok == 1 && rows > 0);
  atlas_text_destroy(text);
  EXPECT_OK(atlas_report_write_jsonl(r, tmp));
  EXPECT_OK(atlas_report_load_jsonl(tmp, &back));
  EXPECT_OK(atlas_report_equal(r, back, &same));
  EXPECT(same == 1);
  remove(tmp);
  atlas_report_destroy(back);
  atlas_report_destroy(r);
  EXPECT(atlas_report_load_jsonl("/nonexistent/x.jsonl", &back) == ATLAS_IO_ERROR);

  atlas_survey_config_init(&cfg, 11);
  cfg.time_budget_s = 1e-6;
  r = NULL;
  EXPECT(atlas_survey(&cfg, 1, &r) == ATLAS_BUDGET_EXCEEDED);
  EXPECT(r != NULL);
  EXPECT_OK(atlas_report_get_info(r, &info));
  EXPECT(!info.complete);
  atlas_report_destroy(r);
}

int main(int argc, char** argv) {
  if (argc != 3) {
    fprintf(stderr, "usage: capi_test TABLES_DIR TMP_FILE\n");
    return 2;
  }
  test_field();
  test_lines();
  test_invariants();
  test_cosets_codes();
  test_surface_iso();
  test_survey(argv[1], argv[2]);
  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
